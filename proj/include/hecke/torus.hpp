#ifndef HECKE_TORUS_HPP
#define HECKE_TORUS_HPP

/*
  Points of the dual torus T = Hom(X, C^x) in polar coordinates, restricted to
  the exactly representable family used throughout: a point is

      z(x) = exp(2 pi i <tors, x>) * u^{<hyp, x>}

  with tors, hyp rational coordinate vectors on the E* side and u a fixed
  positive rational base (u = q^{1/2}; hyperbolic positions are logarithms in
  base u, normalized log u = 1). tors is kept reduced mod 1. Compact part =
  (tors, 0), hyperbolic part = (0, hyp); theta_x evaluates into Q(zeta) when
  <x, hyp> is an integer.

  ExtElt adjoins a pinned diagram automorphism theta: elements (t, theta^k) of
  T x <theta> with the twisted product. polar_decompose factors such an
  element into commuting compact and hyperbolic pieces and is the subject of
  the randomized property suite (uniqueness equations, commutation,
  Weyl-centralizer stability), exercised with theta of order 2 and 3.
*/

#include <cstdint>
#include <string>

#include "hecke/cyclotomic.hpp"
#include "hecke/matrix.hpp"
#include "hecke/rational.hpp"
#include "hecke/root_system.hpp"

namespace hecke {

struct TorusPoint {
  QVec tors;  // mod 1
  QVec hyp;

  TorusPoint() = default;
  TorusPoint(QVec t, QVec h);

  int dim() const { return (int)tors.size(); }
  bool is_compact() const { return qvec_is_zero(hyp); }
  bool is_hyperbolic() const { return qvec_is_zero(tors); }
  TorusPoint compact_part() const { return TorusPoint(tors, qvec_zero(tors.size())); }
  TorusPoint hyperbolic_part() const { return TorusPoint(qvec_zero(tors.size()), hyp); }

  TorusPoint operator*(const TorusPoint& o) const;
  TorusPoint inverse() const;
  bool operator==(const TorusPoint& o) const { return tors == o.tors && hyp == o.hyp; }
  bool operator!=(const TorusPoint& o) const { return !(*this == o); }
  bool operator<(const TorusPoint& o) const {
    return tors != o.tors ? tors < o.tors : hyp < o.hyp;
  }

  // value of theta_x at this point; <x, hyp> must be integral
  Cyclo theta_value(const std::vector<long>& x, const Rat& u) const;

  // functional transform by a matrix acting on E* (tors re-reduced mod 1)
  TorusPoint transformed(const QMat& mD) const;

  std::string str() const;
};

struct ExtElt {
  TorusPoint t;
  int k = 0;  // power of theta
};

// model: a system plus a pinned automorphism of given order
struct ThetaModel {
  RootSystem rs;
  QMat theta;      // action on E (equals action on E* for permutation matrices)
  int order = 1;
  std::string name;

  static ThetaModel a2_flip();      // order 2
  static ThetaModel d4_triality();  // order 3

  TorusPoint apply_theta(const TorusPoint& p, int times) const;
  ExtElt mult(const ExtElt& a, const ExtElt& b) const;
  bool equal(const ExtElt& a, const ExtElt& b) const;
};

// s = s_c * s_h with s_c = (tors, theta^k) compact and s_h = (hyp, 1)
// hyperbolic; requires hyp theta^k-fixed (else the parts cannot commute)
struct PolarParts {
  ExtElt c, h;
};
PolarParts polar_decompose(const ThetaModel& m, const ExtElt& s);

struct PolarReport {
  int checked = 0;
  bool all_ok = true;
  std::string first_failure;
};
// randomized property suite: decomposition identities, uniqueness equations,
// commutation, Weyl-centralizer stability; deterministic in the seed
PolarReport run_polar_suite(const ThetaModel& m, int count, std::uint64_t seed);

}  // namespace hecke

#endif
