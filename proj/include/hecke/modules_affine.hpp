#ifndef HECKE_MODULES_AFFINE_HPP
#define HECKE_MODULES_AFFINE_HPP

/*
  Finite dimensional modules over an affine Hecke algebra, specialized at
  v = u^vexp with u a fixed rational (u = q^{1/2}); matrices live in
  cyclotomic fields. A module stores matrices of the T_s and of the theta of
  the coordinate basis, plus a candidate list of torus points (compact part
  rational mod 1, hyperbolic part a rational u-logarithm) that bounds where
  its weights can sit. Weights are joint generalized eigenspaces of the theta
  matrices at the candidate evaluations; missing mass is a hard error.

  Induction from the parabolic subalgebra H_P (same theta lattice, T_s for s
  in P) comes in both adjunction flavors:
    - af_induce: H (x)_{H_P} V on minimal coset representatives T_c;
    - af_hom_induce: Hom_{H_P}(H, V), computed through the bullet
      anti-involution: H is free as a left H_P-module on the T_{c^{-1}}, and
      T_{c^{-1}} g = sum_{c'} (b_{c'})^bullet T_{c'^{-1}} where
      g^bullet T_c = sum_{c'} T_{c'} b_{c'} is the right-free decomposition.

  K0 level bookkeeping compares modules by weight multisets and by traces on
  a deterministic battery of algebra elements; both are additive invariants.
*/

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hecke/affine_hecke.hpp"
#include "hecke/matrix.hpp"
#include "hecke/torus.hpp"

namespace hecke {

struct AffineModule {
  int dim = 0;
  std::vector<CMat> T_mats;  // per simple of the acting (sub)algebra
  std::vector<CMat> X_mats;  // theta of each coordinate basis vector
  Rat u = Rat(2);
  long vexp = 1;
  std::vector<TorusPoint> weight_candidates;

  Rat v_value_check() const;  // u^vexp, must be evaluable
  CMat act(const AffineHecke& H, const AHElt& e) const;
  Cyclo trace_of(const AffineHecke& H, const AHElt& e) const;
};

bool af_check(const AffineHecke& H, const AffineModule& M, std::string* diag = nullptr);

// principal series H (x)_{C[X]} C_z at the given specialization
AffineModule af_principal_series(const AffineHecke& H, const TorusPoint& z, const Rat& u,
                                 long vexp = 1);

std::map<TorusPoint, long> af_weights(const AffineHecke& H, const AffineModule& M);

AffineModule af_restrict(const std::vector<int>& P, const AffineModule& M);

// act by an element supported in W_P on a module of the parabolic subalgebra
CMat af_act_parabolic(const AffineHecke& H, const std::vector<int>& P,
                      const AffineModule& V, const AHElt& e);

AffineModule af_induce(const AffineHecke& H, const std::vector<int>& P,
                       const AffineModule& V);

AffineModule af_hom_induce(const AffineHecke& H, const std::vector<int>& P,
                           const AffineModule& V);

// twist the action by an algebra map (for the involutions: pushforward)
AffineModule af_twist_by(const AffineHecke& H, const AffineModule& M,
                         const std::function<AHElt(const AHElt&)>& phi);

// deterministic battery of elements whose traces probe a K0 class
std::vector<AHElt> af_trace_battery(const AffineHecke& H, int extra, std::uint64_t seed);

}  // namespace hecke

#endif
