#include "hecke/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

// dense univariate helpers; vectors are coefficient lists, lowest degree first,
// trailing zeros allowed and trimmed on demand
using Poly = std::vector<Rat>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// division with remainder, b nonzero
void divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  Poly bb = b;
  trim(bb);
  if (bb.empty()) throw std::domain_error("poly divmod by zero");
  trim(a);
  q.assign(a.size() > bb.size() ? a.size() - bb.size() + 1 : 0, Rat(0));
  const Rat lead = bb.back();
  while (a.size() >= bb.size() && !a.empty()) {
    Rat f = a.back() / lead;
    size_t shift = a.size() - bb.size();
    q[shift] = f;
    for (size_t i = 0; i < bb.size(); ++i) a[shift + i] -= f * bb[i];
    trim(a);
  }
  r = a;
  trim(q);
}

// monic gcd together with Bezout coefficient for a: g = s*a + t*b, t dropped
void gcdext(Poly a, Poly b, Poly& g, Poly& s) {
  Poly s0 = {Rat(1)}, s1 = {};
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, q, r);
    Poly s2 = s0;
    Poly qs = mul(q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    a = b;
    b = r;
    s0 = s1;
    s1 = s2;
  }
  g = a;
  s = s0;
  if (!g.empty() && g.back() != 1) {
    Rat lead = g.back();
    for (auto& x : g) x /= lead;
    for (auto& x : s) x /= lead;
  }
}

std::map<long, Poly> phi_cache;
std::mutex phi_mutex;

}  // namespace

long euler_phi(long m) {
  long r = m, p = 2, n = m;
  while (p * p <= n) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
    ++p;
  }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<Rat>& cyclotomic_polynomial(long m) {
  std::lock_guard<std::mutex> lock(phi_mutex);
  auto it = phi_cache.find(m);
  if (it != phi_cache.end()) return it->second;
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed without recursion
  // by filling the cache in increasing order of divisors
  std::vector<long> divs;
  for (long d = 1; d <= m; ++d)
    if (m % d == 0) divs.push_back(d);
  for (long d : divs) {
    if (phi_cache.count(d)) continue;
    Poly num(d + 1, Rat(0));
    num[0] = Rat(-1);
    num[d] = Rat(1);
    Poly acc = {Rat(1)};
    for (long e : divs) {
      if (e < d && d % e == 0) acc = mul(acc, phi_cache.at(e));
    }
    Poly q, r;
    divmod(num, acc, q, r);
    if (!r.empty()) throw std::logic_error("cyclotomic polynomial division not exact");
    phi_cache.emplace(d, q);
  }
  return phi_cache.at(m);
}

namespace {

// reduce a dense coefficient vector mod Phi_m to length phi(m)
std::vector<Rat> reduce_mod_phi(std::vector<Rat> c, long m) {
  const Poly& phi = cyclotomic_polynomial(m);
  const size_t deg = phi.size() - 1;  // = euler_phi(m)
  while (c.size() > deg) {
    Rat top = c.back();
    size_t k = c.size() - 1;
    c.pop_back();
    if (top == 0) continue;
    // zeta^k = zeta^{k-deg} * zeta^deg and zeta^deg = -(phi minus leading)
    for (size_t i = 0; i < deg; ++i) c[k - deg + i] -= top * phi[i];
  }
  c.resize(deg, Rat(0));
  return c;
}

}  // namespace

Cyclo Cyclo::zeta(long m, long k) {
  if (m < 1) throw std::domain_error("zeta: conductor must be positive");
  k %= m;
  if (k < 0) k += m;
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = Rat(1);
  return Cyclo(m, reduce_mod_phi(std::move(c), m));
}

bool Cyclo::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclo::rational_value() const {
  if (!is_rational()) throw std::domain_error("Cyclo: not rational: " + str());
  return c_[0];
}

Cyclo Cyclo::promoted(long M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) throw std::domain_error("Cyclo::promoted: conductor mismatch");
  const long step = M / m_;  // zeta_m = zeta_M^step
  std::vector<Rat> c((c_.size() - 1) * step + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i * step] = c_[i];
  return Cyclo(M, reduce_mod_phi(std::move(c), M));
}

void Cyclo::match(Cyclo& a, Cyclo& b) {
  if (a.m_ == b.m_) return;
  long M = std::lcm(a.m_, b.m_);
  a = a.promoted(M);
  b = b.promoted(M);
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  Cyclo b = o;
  match(*this, b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  Cyclo b = o;
  match(*this, b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  Cyclo b = o;
  match(*this, b);
  std::vector<Rat> prod(c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += c_[i] * b.c_[j];
  }
  c_ = reduce_mod_phi(std::move(prod), m_);
  return *this;
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw std::domain_error("Cyclo::inv of zero");
  Poly f(c_.begin(), c_.end());
  Poly g, s;
  gcdext(f, cyclotomic_polynomial(m_), g, s);
  if (g.size() != 1) throw std::logic_error("Cyclo::inv: gcd with Phi_m not constant");
  // g == 1 after normalization, so s * f == 1 mod Phi_m
  return Cyclo(m_, reduce_mod_phi(std::move(s), m_));
}

bool Cyclo::operator==(const Cyclo& o) const {
  Cyclo a = *this, b = o;
  match(a, b);
  return a.c_ == b.c_;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c_[i]);
    if (i > 0) os << "*z" << m_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace hecke
