#ifndef HECKE_MULTIPOLY_HPP
#define HECKE_MULTIPOLY_HPP

/*
  Multivariate polynomials over Q in toral variables x_1..x_n and the central
  variable r. These are the coefficients of graded Hecke algebra elements in
  the normal form sum t_w * p(x, r). Exponent keys store n+1 entries, the last
  one for r.

  divide_by_linear performs the exact division needed by the Demazure operator
  (p - s(p)) / alpha and aborts if the division leaves a remainder; that is an
  invariant, not an error path.
*/

#include <map>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

struct MPoly {
  int nvars = 0;                       // number of x variables (r not counted)
  std::map<std::vector<int>, Rat> c;   // exponent vector (size nvars+1) -> coeff

  MPoly() = default;
  explicit MPoly(int n) : nvars(n) {}
  static MPoly constant(int n, const Rat& a);
  static MPoly x(int n, int i);                      // x_{i+1}
  static MPoly r_var(int n);                         // r
  static MPoly linear(const QVec& coeffs);           // sum coeffs[i] * x_{i+1}

  bool is_zero() const { return c.empty(); }
  bool operator==(const MPoly& o) const { return nvars == o.nvars && c == o.c; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }
  bool operator<(const MPoly& o) const { return c < o.c; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const Rat& a) const;

  void add_term(const std::vector<int>& e, const Rat& a);

  // substitute x_i -> ximg[i] (a polynomial in the TARGET variable set) and
  // r -> rimg; images must all share one variable count
  MPoly substituted(const std::vector<MPoly>& ximg, const MPoly& rimg) const;

  // x_i -> sigma[i], r -> rval
  Rat eval(const QVec& sigma, const Rat& rval) const;

  // exact division by a nonzero linear form in the x variables
  MPoly divide_by_linear(const QVec& form) const;

  int total_degree() const;
  std::string str() const;
};

}  // namespace hecke

#endif
