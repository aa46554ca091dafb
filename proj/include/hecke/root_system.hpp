#ifndef HECKE_ROOT_SYSTEM_HPP
#define HECKE_ROOT_SYSTEM_HPP

/*
  Root systems and root data in explicit rational coordinates.

  A system lives in E = Q^dim with dual side E* = Q^dim and the dot product as
  the canonical pairing. Simple roots are vectors in E, simple coroots vectors
  in E*. Named constructors realize the simply connected datum (coroot i =
  standard basis vector e_i, root j = column j of the Cartan matrix), plus the
  adjoint rank-1 datum "A1ad" (X = Z, alpha = 1, alpha^vee = 2) whose coroot
  lies in 2 X^vee.

  The Weyl group is enumerated on request as explicit matrices with reduced
  words (BFS by right multiplication, deterministic order). Enumeration is
  meant for small groups (rank <= 4 here); the big-type orbit kernels live in
  orbits.hpp and never materialize W.

  Langlands geometry (fundamental weights, the projection to the coroot span,
  rho^Delta and the subset F(sigma)) is implemented without any choice of
  W-invariant inner product: rho^Delta(sigma) = sigma(sum of fundamental
  weights) and F(sigma) is the unique F with
     pi(sigma) = sum_{a not in F} c_a whata + sum_{a in F} d_a a^vee,
  c_a > 0, d_a <= 0, where pi projects E* onto span of the simple coroots
  along the annihilator of the simple roots and whata is the dual basis of
  the simple roots inside that span. Positivity is invariant under rescaling
  each ray, which is all a choice of invariant form could change; uniqueness
  of F is asserted on every call.
*/

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/rational.hpp"

namespace hecke {

struct RootSystem {
  int dim = 0;
  std::string label;
  std::vector<QVec> simples;     // simple roots in E
  std::vector<QVec> simple_cos;  // simple coroots in E*

  // full root list, positive roots first, roots[npos + i] = -roots[i]
  std::vector<QVec> roots, coroots;
  int npos = 0;
  std::vector<std::vector<int>> perm_simple;  // perm_simple[s][ri] = index of s(roots[ri])
  std::vector<int> root_orbit;                // W-orbit id per root index

  struct Welt {
    std::vector<int> word;  // reduced
    QMat mE;                // action on E (column vectors)
    QMat mD;                // action on E*: inverse transpose of mE
  };
  std::vector<Welt> W;
  int w0_idx = -1;

  static RootSystem from_simples(std::vector<QVec> simple_roots,
                                 std::vector<QVec> simple_coroots,
                                 const std::string& label);
  static RootSystem named(const std::string& type);
  static std::vector<std::string> known_types();

  int nsimple() const { return (int)simples.size(); }
  int rank_semisimple() const { return (int)simples.size(); }

  QVec reflect_E(int s, const QVec& v) const;  // v - <v, alpha_s^vee> alpha_s
  QVec reflect_D(int s, const QVec& f) const;  // f - f(alpha_s) alpha_s^vee
  QVec act_E(int wi, const QVec& v) const;
  QVec act_D(int wi, const QVec& f) const;

  void ensure_roots();
  int nroots() const { return (int)roots.size(); }
  int root_index(const QVec& r) const;  // -1 if absent
  bool is_positive(int ri) const { return ri < npos; }
  int negative_of(int ri) const { return ri < npos ? ri + npos : ri - npos; }
  int simple_root_index(int s) const;  // index of alpha_s in roots

  void ensure_weyl(size_t cap = 4000);
  size_t weyl_order() const { return W.size(); }
  int weyl_mult(int wi, int wj) const;  // index of w_i w_j
  int weyl_inverse(int wi) const;
  int weyl_length(int wi) const { return (int)W[wi].word.size(); }
  int w0() const { return w0_idx; }
  int w0_conj_simple(int s) const;  // j with w0 s w0^{-1} = s_j
  int weyl_index_of_matrix(const QMat& mE) const;  // -1 if absent
  int simple_reflection_index(int s) const;

  // minimal length coset representatives for W / W_P, ascending by length
  std::vector<int> min_coset_reps(const std::vector<int>& P) const;
  // elements of the parabolic subgroup W_P
  std::vector<int> parabolic_elements(const std::vector<int>& P) const;

  RootSystem sub_system(const std::vector<int>& P) const;

  // Langlands geometry (form free, see header comment)
  QMat cartan() const;                  // C[i][j] = <alpha_j, alpha_i^vee>
  QVec fundamental_weight(int j) const; // e_j in span(simples)
  QVec coweight_dual_basis(int j) const;  // whata_j in span(coroots)
  QVec project_to_cospan(const QVec& sigma) const;
  bool sigma_in_cospan(const QVec& sigma) const;
  Rat rho_delta(const QVec& sigma) const;
  std::vector<int> langlands_subset(const QVec& sigma) const;  // F(sigma)
  bool weight_tempered(const QVec& sigma) const;  // sigma in nonpositive coroot cone
  bool in_a_plus(const QVec& nu, const std::vector<int>& P) const;

  // levi class line: every w in W with w(I) inside Delta satisfies w(I) = I;
  // BFS over the orbit of the root set I (given by simple indices)
  bool levi_subset_check(const std::vector<int>& I, size_t node_cap = 0,
                         size_t* visited_out = nullptr) const;
  // certified rows per split type, as in the classification table
  static std::vector<std::vector<int>> levi_table_rows(const std::string& type);

  // diagram automorphism from a permutation of simple indices; the permutation
  // must preserve the Cartan matrix. Returns action on E (= on E* for the
  // simply connected permutation realization, matrix is orthogonal).
  QMat diagram_automorphism(const std::vector<int>& perm) const;

  bool integral() const;
  bool coroot_in_2X(int ri) const;       // requires integral coroots
  bool quasi_simply_connected() const;   // X^vee generated by R^vee and halves

  std::string str() const;
};

// orbit partition of roots under simple reflections (assigned in ensure_roots)
// root_orbit[i] == root_orbit[j] iff same W-orbit; ids are 0-based, assigned
// in order of first appearance along the positive root list

}  // namespace hecke

#endif
