#ifndef HECKE_GRADED_HECKE_HPP
#define HECKE_GRADED_HECKE_HPP

/*
  Graded Hecke algebra H(R, mu) = C[W] (x) S(E) (x) C[r]: elements in normal
  form sum t_w p_w(x, r), with the single relation family

      x t_s - t_s s(x) = mu(alpha_s) <x, alpha_s^vee> r     (x in E linear)

  extended to polynomials by p t_s = t_s s(p) + mu r Delta_s(p), where Delta_s
  is the Demazure operator (p - s(p)) / alpha_s (exact division). mu is a
  W-invariant function on the simple roots, allowed to vanish.

  The map catalog lists the signed automorphisms between such algebras used
  everywhere downstream: each sends t_s to sign * t_{tau(s)} with tau identity
  or w0-conjugation, acts on E by a fixed matrix, and scales r by a sign.
  Homomorphy is never assumed: gh_check_homomorphism verifies the image of
  every defining relation inside the target algebra, and composition
  identities are checked on generators.

  rigidity_report solves, per simple s, the linear system imposed on
  phi(t_s) = sum_w c_w t_w by the cross relations when phi fixes S(E) and r
  pointwise. With mu nowhere zero the unique solution is c = delta_{t_s};
  with mu identically zero the kernel is positive dimensional (t_s -> -t_s
  generates a genuine family).
*/

#include <map>
#include <string>
#include <vector>

#include "hecke/multipoly.hpp"
#include "hecke/root_system.hpp"

namespace hecke {

struct GHElt {
  std::map<int, MPoly> c;  // Weyl index -> polynomial coefficient

  bool is_zero() const { return c.empty(); }
  void add(int w, const MPoly& p);
  GHElt& operator+=(const GHElt& o);
  GHElt& operator-=(const GHElt& o);
  friend GHElt operator+(GHElt a, const GHElt& b) { return a += b; }
  friend GHElt operator-(GHElt a, const GHElt& b) { return a -= b; }
  GHElt scaled(const Rat& a) const;
  GHElt poly_scaled(const MPoly& p) const;  // right multiplication by poly(p)
  bool operator==(const GHElt& o) const { return c == o.c; }
  bool operator!=(const GHElt& o) const { return !(*this == o); }
  std::string str() const;
};

class GradedHecke {
 public:
  GradedHecke(RootSystem rs, std::vector<Rat> mu);

  const RootSystem& rs() const { return rs_; }
  int dim() const { return rs_.dim; }
  int nvars() const { return rs_.dim; }
  const Rat& mu(int s) const { return mu_[s]; }
  Rat mu_of_root(int ri) const;  // W-invariant extension to all roots
  bool mu_everywhere_nonzero() const;
  std::string str() const;

  GHElt one() const;
  GHElt t(int s) const;
  GHElt tw(int wi) const;
  GHElt poly(const MPoly& p) const;
  GHElt x_lin(const QVec& coeffs) const;
  GHElt r_elt() const;

  MPoly act_poly(int wi, const MPoly& p) const;
  MPoly reflect_poly(int s, const MPoly& p) const;
  MPoly demazure(int s, const MPoly& p) const;

  GHElt mult(const GHElt& a, const GHElt& b) const;

 private:
  RootSystem rs_;
  std::vector<Rat> mu_;
};

// t_s -> tsign t_{tau(s)}, x -> xmat x, r -> rsign r; antilinear records that
// the map conjugates scalars (invisible over Q, kept for the catalog listing);
// musign = -1 marks maps landing in the negated-mu presentation (the positive
// system flipped wholesale, as for conjugation by w0)
struct GHMap {
  std::string name;
  enum class Tau { Id, W0 } tau = Tau::Id;
  int tsign = 1;
  QMat xmat;
  int rsign = 1;
  bool antilinear = false;
  int musign = 1;
};

GHMap gh_map_FT(const GradedHecke& G);
GHMap gh_map_C(const GradedHecke& G);
GHMap gh_map_kappa(const GradedHecke& G);
GHMap gh_map_D(const GradedHecke& G);
GHMap gh_map_AZ(const GradedHecke& G);
GHMap gh_map_iota(const GradedHecke& G);
// conjugation c_v at v = w0, the one Weyl conjugation that preserves the
// simple system (as a set with signs); other v leave the fixed presentation
GHMap gh_map_cv(const GradedHecke& G);
std::vector<GHMap> gh_map_catalog(const GradedHecke& G);

// mu profile of the target algebra of m applied to G
std::vector<Rat> gh_target_mu(const GradedHecke& G, const GHMap& m);

GHElt apply_ghmap(const GradedHecke& tgt, const GHMap& m, const GHElt& a);

// every defining relation of src maps to an identity of tgt
bool gh_check_homomorphism(const GradedHecke& src, const GradedHecke& tgt,
                           const GHMap& m, std::string* diag = nullptr);

// chain applied right-to-left agrees with direct on t_s, x_i, r and on a few
// mixed products
bool gh_check_composition(const GradedHecke& G, const GHMap& direct,
                          const std::vector<GHMap>& chain, std::string* diag = nullptr);

struct RigidityReport {
  bool id_only = true;
  std::vector<int> kernel_dims;  // per simple s
  std::string diag;
};
RigidityReport rigidity_report(const GradedHecke& G);

}  // namespace hecke

#endif
