#ifndef HECKE_LAURENT_HPP
#define HECKE_LAURENT_HPP

/*
  Laurent polynomials in one variable v over the rationals. These are the
  coefficients of the affine Hecke algebra in its Bernstein presentation.
  Sparse map representation; zero coefficients are never stored.
*/

#include <map>
#include <sstream>

#include "hecke/rational.hpp"

namespace hecke {

struct Laurent {
  std::map<long, Rat> c;  // exponent of v -> nonzero coefficient

  Laurent() = default;
  explicit Laurent(const Rat& a) {
    if (a != 0) c[0] = a;
  }

  static Laurent v_pow(long k, const Rat& coeff = Rat(1)) {
    Laurent l;
    if (coeff != 0) c_insert(l, k, coeff);
    return l;
  }
  static Laurent one() { return Laurent(Rat(1)); }

  bool is_zero() const { return c.empty(); }
  bool operator==(const Laurent& o) const { return c == o.c; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  bool operator<(const Laurent& o) const { return c < o.c; }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, a] : o.c) add_term(e, a);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, a] : o.c) add_term(e, -a);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [e1, c1] : a.c)
      for (const auto& [e2, c2] : b.c) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, a] : c) r.c[e] = -a;
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  void add_term(long e, const Rat& a) {
    if (a == 0) return;
    auto it = c.find(e);
    if (it == c.end()) {
      c.emplace(e, a);
    } else {
      it->second += a;
      if (it->second == 0) c.erase(it);
    }
  }

  // v -> u^vexp with integral vexp
  Rat eval_at_u_power(const Rat& u, long vexp) const {
    Rat s(0);
    for (const auto& [e, a] : c) s += a * rat_pow(u, e * vexp);
    return s;
  }

  std::string str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, a] : c) {
      if (!first) os << " + ";
      first = false;
      os << rat_to_string(a);
      if (e != 0) os << "*v^" << e;
    }
    return os.str();
  }

 private:
  static void c_insert(Laurent& l, long k, const Rat& a) { l.c[k] = a; }
};

}  // namespace hecke

#endif
