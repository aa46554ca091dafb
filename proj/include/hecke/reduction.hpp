#ifndef HECKE_REDUCTION_HPP
#define HECKE_REDUCTION_HPP

/*
  Weight level reduction from an affine Hecke algebra at a compact torus point
  to its derived graded Hecke algebra, transport between base points, the
  reconstruction of a module class from its weight multiset, and the
  K-group identities built on top (the parabolic alternating sum for the
  twisted Iwahori-Matsumoto twist and its graded counterpart).

  Conventions. An affine weight is a torus point y together with the scalar
  v = u^vexp carried by the module. Writing y = y_c * u^sigma with y_c the
  compact part, the reduced weight at base point z_c is (sigma, r) with
  r = vexp when y_c = z_c, and nothing otherwise. The base u plays the role
  of exp(1), so hyperbolic coordinates transfer verbatim.

  The derived algebra at z_c has roots R_z = {alpha : s_alpha(z_c) = z_c},
  unchanged ambient space, and parameter mu_z given by the three case table
  (0, or 2 lambda, or lambda + lambda* theta_{-alpha}(z_c) on the doubled
  coroot branch). The input datum must be quasi-simply connected so that the
  stabilizer of z_c is generated by the reflections it contains; this is
  verified numerically at context construction.

  Reconstruction recovers the unique nonnegative combination of simple
  classes with a given toral restriction. It walks the Langlands geometry:
  peel a rho-maximal weight sigma, form P = F(sigma), identify the parabolic
  factor through recursion in rank, induce and take the head; a full P
  triggers one pass through the sign flipped multiset, and failing that the
  weight must vanish and the principal series at the origin is peeled.
*/

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/affine_hecke.hpp"
#include "hecke/graded_hecke.hpp"
#include "hecke/modules_affine.hpp"
#include "hecke/modules_graded.hpp"
#include "hecke/torus.hpp"

namespace hecke {

// (sigma, r) -> multiplicity; signed values appear in ledgers
using GWeights = std::map<std::pair<QVec, Rat>, long>;
// torus point -> multiplicity at the fixed (u, vexp)
using AWeights = std::map<TorusPoint, long>;

std::string gw_str(const GWeights& w);
std::string aw_str(const AWeights& w);

struct DerivedGraded {
  RootSystem sys;       // (ambient E, R_z) with simple system Delta_z
  std::vector<Rat> mu;  // per simple of sys
  GradedHecke G;
};

DerivedGraded derive_graded_from_affine(const AffineHecke& H, const TorusPoint& z_c);

struct ReductionContext {
  const AffineHecke* H = nullptr;
  Rat u;
  long vexp = 1;
  TorusPoint z_base;
  std::vector<TorusPoint> orbit;  // full W-orbit of z_base, sorted
  TorusPoint z_c;
  std::vector<int> stab;  // ambient Weyl indices fixing z_c
  DerivedGraded der;
};

ReductionContext make_reduction_context(const AffineHecke& H, const TorusPoint& z,
                                        const Rat& u, long vexp,
                                        const TorusPoint& z_c);

// compact classes met by the orbit of z, deduplicated, sorted
std::vector<TorusPoint> compact_classes(const AffineHecke& H, const TorusPoint& z);

GWeights reduce_weights(const ReductionContext& ctx, const AWeights& wt);

// m(s, v) = m(w^{-1} s, v) for w minimal with w(z_c) = s_c
bool check_weight_symmetry(const ReductionContext& ctx, const AWeights& wt,
                           std::string* diag = nullptr);

// base point transport f_w between derived algebras in the same orbit
struct FwMap {
  int w = 0;                      // ambient Weyl index, minimal with w(z_c) = z_c'
  std::vector<int> simple_image;  // source simple of Delta_z -> target simple
};

FwMap fw_transport(const ReductionContext& src, const ReductionContext& dst);
GHElt fw_apply(const FwMap& f, const ReductionContext& src,
               const ReductionContext& dst, const GHElt& a);
bool fw_check_homomorphism(const FwMap& f, const ReductionContext& src,
                           const ReductionContext& dst, std::string* diag = nullptr);
GWeights fw_push_weights(const FwMap& f, const ReductionContext& src,
                         const GWeights& wt);

// one reconstructed simple factor with its multiplicity; the label is the
// serialized weight multiset, a complete isomorphism invariant here
struct ReconTerm {
  GradedModule mod;
  long coeff = 0;
  GWeights wts;
  std::string label;
};

std::vector<ReconTerm> reconstruct_modules(const GradedHecke& G, const GWeights& wt);

struct K0Expr {
  std::map<std::string, long> terms;
};

K0Expr k0_of_terms(const std::vector<ReconTerm>& ts);
K0Expr reconstruct_from_weights(const GradedHecke& G, const GWeights& wt);
void k0_accumulate(K0Expr& into, const K0Expr& e, long scale);
bool k0_equal(const K0Expr& a, const K0Expr& b);
std::string k0_str(const K0Expr& e);

struct TimAzReport {
  bool weights_equal = false;
  bool k0_equal = false;
  bool ok = false;
  std::string lhs_weights, rhs_weights, detail;
};

// reduced weights of the tIM twist against the AZ image of the reduced
// weights, then both sides reconstructed over the derived algebra
TimAzReport verify_tim_equals_az(const ReductionContext& ctx, const AffineModule& M);

struct KatoReport {
  bool weights_equal = false;
  bool k0_equal = false;
  bool ok = false;
  std::string lhs_weights, rhs_weights, detail;
  std::vector<std::string> term_lines;  // one line per parabolic subset
};

// [tIM twist of M] against the alternating sum over parabolic subsets of
// Hom induction after restriction, as signed affine weight multisets and as
// reconstructed classes at every compact class of the orbit
KatoReport kato_check(const AffineHecke& H, const AffineModule& M);

}  // namespace hecke

#endif
