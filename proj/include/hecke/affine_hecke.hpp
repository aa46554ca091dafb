#ifndef HECKE_AFFINE_HECKE_HPP
#define HECKE_AFFINE_HECKE_HPP

/*
  Affine Hecke algebra H(R, lambda) in the Bernstein presentation: free over
  C[v, v^-1] with basis T_w theta_x, w in W, x in X, subject to

    (T_s + 1)(T_s - v^{2 lambda(s)}) = 0
    T_w T_w' = T_{ww'} when lengths add
    theta_x theta_x' = theta_{x+x'}
    theta_x T_s - T_s theta_{s(x)} = (theta_x - theta_{s(x)}) (G(s) - 1)

  with G(alpha) = (theta_alpha v^{2 lambda} - 1)/(theta_alpha - 1) generically
  and (theta_alpha v^{lambda+lambda*} - 1)(theta_alpha v^{lambda-lambda*} + 1)
  / (theta_{2 alpha} - 1) on simple roots whose coroot lies in 2 X^vee.

  Products are computed by moving theta across T_s with the closed telescoped
  form of the commutator (cross_correction); its correctness is certified
  against the defining relation by a cross-multiplied identity in the Laurent
  ring C[v^{+-}][X], where both sides are honest polynomials
  (cross_correction_oracle). T_w is built along reduced words, descents fall
  back to T_w T_s = (v^{2 lambda} - 1) T_w + v^{2 lambda} T_{ws}.

  The involutions: IM is the Iwahori-Matsumoto involution, tIM its twist by
  w_0-conjugation (tIM = Ad(T_{w0})^{-1} o IM), bullet the anti-involution
  fixing theta and sending T_w to T_{w^{-1}}.
*/

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hecke/laurent.hpp"
#include "hecke/root_system.hpp"

namespace hecke {

using XVec = std::vector<long>;  // element of X in coordinates on E

XVec xvec_add(const XVec& a, const XVec& b);
XVec xvec_neg(const XVec& a);
QVec xvec_to_q(const XVec& a);
XVec xvec_from_q(const QVec& a);  // entries must be integral
std::string xvec_str(const XVec& a);

struct AHKey {
  int w = 0;
  XVec x;
  bool operator<(const AHKey& o) const { return w != o.w ? w < o.w : x < o.x; }
  bool operator==(const AHKey& o) const { return w == o.w && x == o.x; }
};

struct AHElt {
  std::map<AHKey, Laurent> c;

  bool is_zero() const { return c.empty(); }
  void add(int w, const XVec& x, const Laurent& l);
  AHElt& operator+=(const AHElt& o);
  AHElt& operator-=(const AHElt& o);
  friend AHElt operator+(AHElt a, const AHElt& b) { return a += b; }
  friend AHElt operator-(AHElt a, const AHElt& b) { return a -= b; }
  AHElt scaled(const Laurent& l) const;
  bool operator==(const AHElt& o) const { return c == o.c; }
  bool operator!=(const AHElt& o) const { return !(*this == o); }
  std::string str() const;
};

// Laurent polynomials in the theta variables, the oracle ring
using ThetaPoly = std::map<XVec, Laurent>;
ThetaPoly tp_mul(const ThetaPoly& a, const ThetaPoly& b);
ThetaPoly tp_sub(const ThetaPoly& a, const ThetaPoly& b);
ThetaPoly tp_theta(const XVec& x, const Laurent& coeff);

class AffineHecke {
 public:
  // lambda, lambda_star indexed by simple root; lambda must be constant on
  // W-orbits of simples; lambda_star is read only where the simple coroot
  // lies in 2 X^vee (pass empty to take lambda_star = lambda)
  AffineHecke(RootSystem rs, std::vector<long> lambda, std::vector<long> lambda_star = {});

  const RootSystem& rs() const { return rs_; }
  RootSystem& rs_mut() { return rs_; }
  int dim() const { return rs_.dim; }
  long lambda(int s) const { return lambda_[s]; }
  long lambda_star(int s) const { return lambda_star_[s]; }
  bool star_branch(int s) const { return star_branch_[s]; }
  std::string str() const;

  AHElt one() const;
  AHElt scalar(const Laurent& l) const;
  AHElt T(int s) const;
  AHElt Tw(int wi) const;
  AHElt Ts_inv(int s) const;
  AHElt Tw_inv(int wi) const;
  AHElt theta(const XVec& x) const;

  AHElt mult(const AHElt& a, const AHElt& b) const;
  AHElt mult_Ts(const AHElt& a, int s) const;  // a * T_s

  XVec act_x(int wi, const XVec& x) const;
  XVec reflect_x(int s, const XVec& x) const;

  // theta_x T_s - T_s theta_{s(x)} as a polynomial in the theta variables
  ThetaPoly cross_correction(const XVec& x, int s) const;
  // cross-multiplied defining relation, checked exactly in C[v^+-][X]
  bool cross_correction_oracle(const XVec& x, int s) const;

  AHElt apply_IM(const AHElt& a) const;
  AHElt apply_tIM(const AHElt& a) const;
  AHElt apply_bullet(const AHElt& a) const;

  bool supported_in_parabolic(const AHElt& a, const std::vector<int>& P) const;

 private:
  RootSystem rs_;
  std::vector<long> lambda_, lambda_star_;
  std::vector<bool> star_branch_;
  mutable std::map<int, AHElt> im_tw_cache_;

  Laurent v2l(int s) const { return Laurent::v_pow(2 * lambda_[s]); }
  void add_Tw_Ts(AHElt& out, int w, int s, const XVec& x, const Laurent& coef) const;
  AHElt im_of_Tw(int wi) const;
};

struct PresReport {
  bool ok = true;
  int checks = 0;
  std::string first_failure;
};

// all four relation families plus associativity and inverse spot checks;
// deterministic in the seed
PresReport verify_presentation(const AffineHecke& H, int random_xs = 6,
                               std::uint64_t seed = 0);

// tIM(h) == T_{w0}^{-1} IM(h) T_{w0} on generators and seeded random words
bool check_conj_IM(const AffineHecke& H, int samples = 8, std::uint64_t seed = 0,
                   std::string* diag = nullptr);

}  // namespace hecke

#endif
