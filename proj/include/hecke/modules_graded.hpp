#ifndef HECKE_MODULES_GRADED_HPP
#define HECKE_MODULES_GRADED_HPP

/*
  Finite dimensional modules over a graded Hecke algebra, with exact rational
  matrices. A module stores one matrix per simple reflection and per ambient
  coordinate x_i; r acts by a scalar. Every module carries a candidate weight
  list (a finite superset of the weights that can occur, typically a Weyl
  orbit): weights are computed as joint generalized eigenspaces against the
  candidates, and it is a hard error if the multiplicities do not exhaust the
  dimension.

  Structure theory is done exactly over Q in characteristic zero: the action
  algebra is closed under products, its radical is the radical of the trace
  form, the cosocle is the quotient by rad(A) M, and semisimple pieces are
  split along rational eigenvalues (center first, then inside an isotypic
  block). If a needed eigenvalue is not rational the computation stops with
  field_extension_needed rather than guessing.

  Induction from a parabolic subalgebra is the tensor construction on minimal
  coset representatives; J(P, U, nu) is the cosocle of the induced module
  from the tempered U twisted to the strictly dominant direction nu, and is
  checked simple at the call site where that claim matters.
*/

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hecke/graded_hecke.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

struct field_extension_needed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GradedModule {
  int dim = 0;
  std::vector<QMat> t_mats;  // per simple reflection of the acting algebra
  std::vector<QMat> x_mats;  // per ambient coordinate
  Rat r_scalar = Rat(0);
  std::vector<QVec> weight_candidates;

  QMat act(const GradedHecke& G, const GHElt& e) const;
  Rat trace_of(const GradedHecke& G, const GHElt& e) const;
};

// weights with multiplicity at the module's r; throws if candidates miss mass
std::map<QVec, long> gm_weights(const GradedHecke& G, const GradedModule& M);

bool gm_check(const GradedHecke& G, const GradedModule& M, std::string* diag = nullptr);

GradedModule gm_principal_series(const GradedHecke& G, const QVec& sigma, const Rat& r);

// one dimensional module of a mu = 0 toral situation or of the trivial
// parabolic: x acts by sigma(x), every t_s by the given sign
GradedModule gm_character(const GradedHecke& G, const QVec& sigma, const Rat& r, int tsign);

GradedModule gm_twist(const GradedModule& U, const QVec& nu);  // x += nu(x)

// restriction to the parabolic subalgebra on P (GP = G.rs().sub_system(P)
// with the same mu values on P); matrices are reused, only bookkeeping moves
GradedModule gm_restrict(const GradedHecke& G, const std::vector<int>& P,
                         const GradedModule& M);

// tensor induction G (x)_{G_P} (U (x) nu)
GradedModule gm_induce(const GradedHecke& G, const GradedHecke& GP,
                       const std::vector<int>& P, const GradedModule& U_boxtimes_nu);

// module twisted through a catalog map: N(h) = M(m(h))
GradedModule gm_pullback(const GradedHecke& G, const GHMap& m, const GradedModule& M);

// smallest subspace containing the seeds and stable under all generators,
// returned as a basis matrix (dim x k)
QMat gm_submodule_closure(const GradedModule& M, const QMat& seeds);
GradedModule gm_sub(const GradedModule& M, const QMat& basis);
GradedModule gm_quotient(const GradedModule& M, const QMat& sub_basis);

// radical of the action image (trace form kernel), as a submodule basis
QMat gm_radical_submodule(const GradedHecke& G, const GradedModule& M);
GradedModule gm_head(const GradedHecke& G, const GradedModule& M);

bool gm_is_simple(const GradedHecke& G, const GradedModule& M);

// Jordan-Hoelder factors with multiplicities, grouped up to isomorphism
std::vector<std::pair<GradedModule, int>> gm_composition_factors(const GradedHecke& G,
                                                                 const GradedModule& M);

// exact isomorphism test through an explicit invertible intertwiner
bool gm_isomorphic(const GradedHecke& G, const GradedModule& A, const GradedModule& B);

// Langlands quotient J(P, U, nu): head of the induced module; U_boxtimes_nu
// is the already twisted parabolic module
GradedModule gm_langlands_J(const GradedHecke& G, const GradedHecke& GP,
                            const std::vector<int>& P, const GradedModule& U_boxtimes_nu);

}  // namespace hecke

#endif
