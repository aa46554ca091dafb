#ifndef HECKE_RATIONAL_HPP
#define HECKE_RATIONAL_HPP

/*
  Exact rational scalars. Thin layer over GMP's mpq_class: canonical
  construction, integer powers, parsing and printing in the "p/q" form used
  by every JSON surface of this project.
*/

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& a) { return a.get_den() == 1; }

// a must be integral and fit into a long
inline long rat_to_long(const Rat& a) {
  if (!rat_is_integer(a)) throw std::domain_error("rat_to_long: not an integer");
  if (!a.get_num().fits_slong_p()) throw std::domain_error("rat_to_long: overflow");
  return a.get_num().get_si();
}

// a^e with e possibly negative; a != 0 when e < 0
inline Rat rat_pow(const Rat& a, long e) {
  if (e == 0) return Rat(1);
  Rat base = a;
  if (e < 0) {
    if (a == 0) throw std::domain_error("rat_pow: 0^negative");
    base = Rat(1) / a;
    e = -e;
  }
  Rat acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline std::string rat_to_string(const Rat& a) {
  return a.get_str();  // "p" or "p/q", canonical
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

// x mod 1, representative in [0,1)
inline Rat rat_mod1(const Rat& a) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  Rat r = a - Rat(q);
  return r;
}

using QVec = std::vector<Rat>;

inline Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::domain_error("dot: size mismatch");
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec qvec_add(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

inline QVec qvec_sub(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

inline QVec qvec_scale(const Rat& c, const QVec& a) {
  QVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline QVec qvec_neg(const QVec& a) { return qvec_scale(Rat(-1), a); }

inline bool qvec_is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline QVec qvec_zero(size_t n) { return QVec(n, Rat(0)); }

}  // namespace hecke

#endif
