#include "hecke/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

MPoly MPoly::constant(int n, const Rat& a) {
  MPoly p(n);
  if (a != 0) p.c.emplace(std::vector<int>(n + 1, 0), a);
  return p;
}

MPoly MPoly::x(int n, int i) {
  if (i < 0 || i >= n) throw std::domain_error("MPoly::x: index out of range");
  MPoly p(n);
  std::vector<int> e(n + 1, 0);
  e[i] = 1;
  p.c.emplace(std::move(e), Rat(1));
  return p;
}

MPoly MPoly::r_var(int n) {
  MPoly p(n);
  std::vector<int> e(n + 1, 0);
  e[n] = 1;
  p.c.emplace(std::move(e), Rat(1));
  return p;
}

MPoly MPoly::linear(const QVec& coeffs) {
  MPoly p((int)coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::vector<int> e(coeffs.size() + 1, 0);
    e[i] = 1;
    p.c.emplace(std::move(e), coeffs[i]);
  }
  return p;
}

void MPoly::add_term(const std::vector<int>& e, const Rat& a) {
  if (a == 0) return;
  auto it = c.find(e);
  if (it == c.end()) {
    c.emplace(e, a);
  } else {
    it->second += a;
    if (it->second == 0) c.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, a] : r.c) a = -a;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars != o.nvars) throw std::domain_error("MPoly: variable count mismatch");
  for (const auto& [e, a] : o.c) add_term(e, a);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars != o.nvars) throw std::domain_error("MPoly: variable count mismatch");
  for (const auto& [e, a] : o.c) add_term(e, -a);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars != b.nvars) throw std::domain_error("MPoly: variable count mismatch");
  MPoly r(a.nvars);
  std::vector<int> e(a.nvars + 1);
  for (const auto& [e1, c1] : a.c)
    for (const auto& [e2, c2] : b.c) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MPoly MPoly::scaled(const Rat& a) const {
  MPoly r(nvars);
  if (a == 0) return r;
  for (const auto& [e, co] : c) r.c.emplace(e, co * a);
  return r;
}

MPoly MPoly::substituted(const std::vector<MPoly>& ximg, const MPoly& rimg) const {
  if ((int)ximg.size() != nvars) throw std::domain_error("MPoly::substituted: image count");
  const int tn = rimg.nvars;
  MPoly out(tn);
  for (const auto& [e, a] : c) {
    MPoly term = MPoly::constant(tn, a);
    for (int i = 0; i < nvars; ++i)
      for (int k = 0; k < e[i]; ++k) term *= ximg[i];
    for (int k = 0; k < e[nvars]; ++k) term *= rimg;
    out += term;
  }
  return out;
}

Rat MPoly::eval(const QVec& sigma, const Rat& rval) const {
  if ((int)sigma.size() != nvars) throw std::domain_error("MPoly::eval: point size");
  Rat s(0);
  for (const auto& [e, a] : c) {
    Rat t = a;
    for (int i = 0; i < nvars; ++i)
      if (e[i]) t *= rat_pow(sigma[i], e[i]);
    if (e[nvars]) t *= rat_pow(rval, e[nvars]);
    s += t;
  }
  return s;
}

MPoly MPoly::divide_by_linear(const QVec& form) const {
  if ((int)form.size() != nvars) throw std::domain_error("divide_by_linear: form size");
  int piv = -1;
  for (int i = 0; i < nvars; ++i)
    if (form[i] != 0) {
      piv = i;
      break;
    }
  if (piv < 0) throw std::domain_error("divide_by_linear: zero form");
  const Rat fp = form[piv];
  // view p as a univariate polynomial in x_piv and divide synthetically by
  // (fp * x_piv + rest); rest = form - fp * x_piv involves the other variables
  MPoly rem = *this;
  MPoly quot(nvars);
  while (!rem.is_zero()) {
    // cancel a term of maximal x_piv-degree; the multiset of pivot degrees
    // shrinks, so this terminates
    auto best = rem.c.begin();
    for (auto it = rem.c.begin(); it != rem.c.end(); ++it) {
      if (it->first[piv] > best->first[piv]) best = it;
    }
    const std::vector<int> e = best->first;
    const Rat a = best->second;
    if (e[piv] == 0) throw std::domain_error("divide_by_linear: nonzero remainder");
    std::vector<int> eq = e;
    eq[piv] -= 1;
    MPoly mono(nvars);
    mono.c.emplace(eq, a / fp);
    quot += mono;
    rem -= mono * MPoly::linear(form);
  }
  return quot;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, a] : c) {
    int t = 0;
    for (int x : e) t += x;
    if (t > d) d = t;
  }
  return d;
}

std::string MPoly::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, a] : c) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(a);
    for (int i = 0; i < nvars; ++i)
      if (e[i]) {
        os << "*x" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
      }
    if (e[nvars]) {
      os << "*r";
      if (e[nvars] > 1) os << "^" << e[nvars];
    }
  }
  return os.str();
}

}  // namespace hecke
