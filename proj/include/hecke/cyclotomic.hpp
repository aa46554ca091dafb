#ifndef HECKE_CYCLOTOMIC_HPP
#define HECKE_CYCLOTOMIC_HPP

/*
  Exact arithmetic in cyclotomic fields Q(zeta_m). An element is stored at a
  fixed conductor m as its coefficient vector on 1, zeta, ..., zeta^{phi(m)-1},
  always reduced modulo the cyclotomic polynomial Phi_m. Mixed-conductor
  arithmetic promotes both operands to the lcm. Division goes through the
  extended Euclidean algorithm against Phi_m.

  There is deliberately no operator<: values never serve as ordered container
  keys (weight data is keyed by rational coordinates upstream).
*/

#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// coefficients of Phi_m, degree phi(m), monic, cached internally
const std::vector<Rat>& cyclotomic_polynomial(long m);

long euler_phi(long m);

class Cyclo {
 public:
  Cyclo() : m_(1), c_(1, Rat(0)) {}
  explicit Cyclo(const Rat& a) : m_(1), c_(1, a) {}
  explicit Cyclo(long a) : m_(1), c_(1, Rat(a)) {}

  static Cyclo zeta(long m, long k);  // zeta_m^k

  long conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;        // all coefficients above degree 0 vanish
  Rat rational_value() const;      // requires is_rational()

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  Cyclo inv() const;  // nonzero required
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  // rewrite at conductor M (m_ must divide M)
  Cyclo promoted(long M) const;

  std::string str() const;

 private:
  long m_;
  std::vector<Rat> c_;  // size phi(m_), reduced mod Phi_{m_}

  Cyclo(long m, std::vector<Rat> c) : m_(m), c_(std::move(c)) {}
  static void match(Cyclo& a, Cyclo& b);  // promote both to lcm conductor
};

}  // namespace hecke

#endif
