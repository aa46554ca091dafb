#ifndef HECKE_MATRIX_HPP
#define HECKE_MATRIX_HPP

/*
  Dense exact linear algebra over a field K (Rat or Cyclo here). Row-major.
  Everything is plain Gaussian elimination; sizes in this project stay small
  (module dimensions <= |W| * |W^P|, well under 100).
*/

#include <optional>
#include <stdexcept>
#include <vector>

#include "hecke/cyclotomic.hpp"
#include "hecke/rational.hpp"

namespace hecke {

inline bool k_is_zero(const Rat& a) { return a == 0; }
inline bool k_is_zero(const Cyclo& a) { return a.is_zero(); }
inline Rat k_inv(const Rat& a) { return Rat(1) / a; }
inline Cyclo k_inv(const Cyclo& a) { return a.inv(); }
template <class K>
K k_zero() { return K(Rat(0)); }
template <>
inline Rat k_zero<Rat>() { return Rat(0); }
template <class K>
K k_one() { return K(Rat(1)); }
template <>
inline Rat k_one<Rat>() { return Rat(1); }

template <class K>
struct Mat {
  int nr = 0, nc = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c) : nr(r), nc(c), a((size_t)r * c, k_zero<K>()) {}

  K& at(int i, int j) { return a[(size_t)i * nc + j]; }
  const K& at(int i, int j) const { return a[(size_t)i * nc + j]; }

  static Mat id(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = k_one<K>();
    return m;
  }

  bool operator==(const Mat& o) const { return nr == o.nr && nc == o.nc && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : a)
      if (!k_is_zero(x)) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    check_same(o);
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    check_same(o);
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (nc != o.nr) throw std::domain_error("Mat::mul: shape mismatch");
    Mat r(nr, o.nc);
    for (int i = 0; i < nr; ++i)
      for (int k = 0; k < nc; ++k) {
        const K& x = at(i, k);
        if (k_is_zero(x)) continue;
        for (int j = 0; j < o.nc; ++j) {
          if (k_is_zero(o.at(k, j))) continue;
          r.at(i, j) += x * o.at(k, j);
        }
      }
    return r;
  }
  Mat scaled(const K& s) const {
    Mat r = *this;
    for (auto& x : r.a) x *= s;
    return r;
  }
  Mat operator-() const { return scaled(k_zero<K>() - k_one<K>()); }

  Mat transpose() const {
    Mat r(nc, nr);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Mat pow(long e) const {
    if (nr != nc) throw std::domain_error("Mat::pow: not square");
    Mat acc = id(nr), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if ((int)v.size() != nc) throw std::domain_error("Mat::apply: shape mismatch");
    std::vector<K> r(nr, k_zero<K>());
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j)
        if (!k_is_zero(at(i, j))) r[i] += at(i, j) * v[j];
    return r;
  }

  // reduced row echelon form in place; returns rank, records pivot columns
  int rref(std::vector<int>* pivots = nullptr) {
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
      int piv = -1;
      for (int i = rank; i < nr; ++i)
        if (!k_is_zero(at(i, col))) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      if (piv != rank)
        for (int j = 0; j < nc; ++j) std::swap(at(piv, j), at(rank, j));
      K inv = k_inv(at(rank, col));
      for (int j = col; j < nc; ++j) at(rank, j) *= inv;
      for (int i = 0; i < nr; ++i) {
        if (i == rank || k_is_zero(at(i, col))) continue;
        K f = at(i, col);
        for (int j = col; j < nc; ++j) at(i, j) -= f * at(rank, j);
      }
      if (pivots) pivots->push_back(col);
      ++rank;
    }
    return rank;
  }

  int rank() const {
    Mat m = *this;
    return m.rref();
  }

  // columns form a basis of the right kernel
  Mat kernel() const {
    Mat m = *this;
    std::vector<int> piv;
    int rank = m.rref(&piv);
    std::vector<bool> is_piv(nc, false);
    for (int p : piv) is_piv[p] = true;
    Mat ker(nc, nc - rank);
    int kcol = 0;
    for (int j = 0; j < nc; ++j) {
      if (is_piv[j]) continue;
      ker.at(j, kcol) = k_one<K>();
      for (int i = 0; i < rank; ++i) ker.at(piv[i], kcol) = k_zero<K>() - m.at(i, j);
      ++kcol;
    }
    return ker;
  }

  std::optional<Mat> inverse() const {
    if (nr != nc) return std::nullopt;
    Mat aug(nr, 2 * nc);
    for (int i = 0; i < nr; ++i) {
      for (int j = 0; j < nc; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, nc + i) = k_one<K>();
    }
    if (aug.rref() != nr) return std::nullopt;
    Mat inv(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) inv.at(i, j) = aug.at(i, nc + j);
    return inv;
  }

  // solve A x = b for one x (b may have several columns); nullopt if inconsistent
  std::optional<Mat> solve(const Mat& b) const {
    if (b.nr != nr) throw std::domain_error("Mat::solve: shape mismatch");
    Mat aug(nr, nc + b.nc);
    for (int i = 0; i < nr; ++i) {
      for (int j = 0; j < nc; ++j) aug.at(i, j) = at(i, j);
      for (int j = 0; j < b.nc; ++j) aug.at(i, nc + j) = b.at(i, j);
    }
    std::vector<int> piv;
    int rank = aug.rref(&piv);
    for (int i = 0; i < rank; ++i)
      if (piv[i] >= nc) return std::nullopt;  // pivot in the rhs block
    Mat x(nc, b.nc);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < b.nc; ++j) x.at(piv[i], j) = aug.at(i, nc + j);
    return x;
  }

  // horizontal stack
  static Mat hcat(const Mat& l, const Mat& r) {
    if (l.nr != r.nr) throw std::domain_error("Mat::hcat: shape mismatch");
    Mat m(l.nr, l.nc + r.nc);
    for (int i = 0; i < l.nr; ++i) {
      for (int j = 0; j < l.nc; ++j) m.at(i, j) = l.at(i, j);
      for (int j = 0; j < r.nc; ++j) m.at(i, l.nc + j) = r.at(i, j);
    }
    return m;
  }
  static Mat vcat(const Mat& t, const Mat& b) {
    if (t.nc != b.nc) throw std::domain_error("Mat::vcat: shape mismatch");
    Mat m(t.nr + b.nr, t.nc);
    for (int i = 0; i < t.nr; ++i)
      for (int j = 0; j < t.nc; ++j) m.at(i, j) = t.at(i, j);
    for (int i = 0; i < b.nr; ++i)
      for (int j = 0; j < t.nc; ++j) m.at(t.nr + i, j) = b.at(i, j);
    return m;
  }

  K trace() const {
    if (nr != nc) throw std::domain_error("Mat::trace: not square");
    K s = k_zero<K>();
    for (int i = 0; i < nr; ++i) s += at(i, i);
    return s;
  }

 private:
  void check_same(const Mat& o) const {
    if (nr != o.nr || nc != o.nc) throw std::domain_error("Mat: shape mismatch");
  }
};

using QMat = Mat<Rat>;
using CMat = Mat<Cyclo>;

// integer lattice index: absolute determinant of the Hermite normal form of
// the row span of gens inside Z^n; returns 0 if the rows do not span Q^n.
// Used by the quasi-simply-connected test.
long lattice_index(std::vector<std::vector<long>> rows, int n);

}  // namespace hecke

#endif
