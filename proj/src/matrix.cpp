#include "hecke/matrix.hpp"

#include <cstdlib>

namespace hecke {

// integer row HNF by Euclidean column sweeps; rows of length n.
// Returns |det| of the echelonized generator matrix, 0 if rank deficient.
long lattice_index(std::vector<std::vector<long>> rows, int n) {
  size_t r = 0;
  for (int col = 0; col < n && r < rows.size(); ++col) {
    // Euclid among entries rows[r..][col] until at most one is nonzero
    while (true) {
      size_t piv = rows.size();
      for (size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (piv == rows.size() || std::labs(rows[i][col]) < std::labs(rows[piv][col]))
          piv = i;
      }
      if (piv == rows.size()) break;  // column clear
      std::swap(rows[r], rows[piv]);
      bool again = false;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        long q = rows[i][col] / rows[r][col];
        for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) again = true;
      }
      if (!again) break;
    }
    if (rows[r][col] != 0) ++r;
  }
  if ((int)r < n) return 0;
  long det = 1;
  for (int i = 0; i < n; ++i) det *= std::labs(rows[i][i]);
  return det;
}

}  // namespace hecke
