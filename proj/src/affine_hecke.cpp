#include "hecke/affine_hecke.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace hecke {

XVec xvec_add(const XVec& a, const XVec& b) {
  XVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

XVec xvec_neg(const XVec& a) {
  XVec r(a);
  for (auto& t : r) t = -t;
  return r;
}

QVec xvec_to_q(const XVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

XVec xvec_from_q(const QVec& a) {
  XVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = rat_to_long(a[i]);
  return r;
}

std::string xvec_str(const XVec& a) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << "]";
  return os.str();
}

void AHElt::add(int w, const XVec& x, const Laurent& l) {
  if (l.is_zero()) return;
  AHKey k{w, x};
  auto it = c.find(k);
  if (it == c.end()) {
    c.emplace(k, l);
  } else {
    it->second += l;
    if (it->second.is_zero()) c.erase(it);
  }
}

AHElt& AHElt::operator+=(const AHElt& o) {
  for (const auto& [k, l] : o.c) add(k.w, k.x, l);
  return *this;
}

AHElt& AHElt::operator-=(const AHElt& o) {
  for (const auto& [k, l] : o.c) add(k.w, k.x, -l);
  return *this;
}

AHElt AHElt::scaled(const Laurent& l) const {
  AHElt r;
  if (l.is_zero()) return r;
  for (const auto& [k, cl] : c) r.c.emplace(k, cl * l);
  return r;
}

std::string AHElt::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, l] : c) {
    if (!first) os << "  +  ";
    first = false;
    os << "(" << l.str() << ")*T[" << k.w << "]theta" << xvec_str(k.x);
  }
  return os.str();
}

ThetaPoly tp_theta(const XVec& x, const Laurent& coeff) {
  ThetaPoly p;
  if (!coeff.is_zero()) p[x] = coeff;
  return p;
}

static void tp_add_term(ThetaPoly& p, const XVec& x, const Laurent& l) {
  if (l.is_zero()) return;
  auto it = p.find(x);
  if (it == p.end()) {
    p.emplace(x, l);
  } else {
    it->second += l;
    if (it->second.is_zero()) p.erase(it);
  }
}

ThetaPoly tp_mul(const ThetaPoly& a, const ThetaPoly& b) {
  ThetaPoly r;
  for (const auto& [xa, la] : a)
    for (const auto& [xb, lb] : b) tp_add_term(r, xvec_add(xa, xb), la * lb);
  return r;
}

ThetaPoly tp_sub(const ThetaPoly& a, const ThetaPoly& b) {
  ThetaPoly r = a;
  for (const auto& [x, l] : b) tp_add_term(r, x, -l);
  return r;
}

AffineHecke::AffineHecke(RootSystem rs, std::vector<long> lambda,
                         std::vector<long> lambda_star)
    : rs_(std::move(rs)), lambda_(std::move(lambda)), lambda_star_(std::move(lambda_star)) {
  rs_.ensure_roots();
  rs_.ensure_weyl();
  int n = rs_.nsimple();
  if ((int)lambda_.size() != n) throw std::domain_error("AffineHecke: lambda size");
  if (lambda_star_.empty()) lambda_star_ = lambda_;
  if ((int)lambda_star_.size() != n) throw std::domain_error("AffineHecke: lambda* size");
  star_branch_.resize(n);
  for (int s = 0; s < n; ++s) {
    star_branch_[s] = rs_.coroot_in_2X(rs_.simple_root_index(s));
    if (!star_branch_[s]) lambda_star_[s] = lambda_[s];
  }
  // lambda is a W-invariant function on roots: constant across simple orbits
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (rs_.root_orbit[rs_.simple_root_index(s)] == rs_.root_orbit[rs_.simple_root_index(t)] &&
          (lambda_[s] != lambda_[t] || lambda_star_[s] != lambda_star_[t]))
        throw std::domain_error("AffineHecke: lambda not W-invariant");
}

std::string AffineHecke::str() const {
  std::ostringstream os;
  os << "H(" << rs_.label << "; lambda=";
  for (int s = 0; s < rs_.nsimple(); ++s) os << (s ? "," : "") << lambda_[s];
  bool any_star = false;
  for (int s = 0; s < rs_.nsimple(); ++s) any_star = any_star || star_branch_[s];
  if (any_star) {
    os << "; lambda*=";
    for (int s = 0; s < rs_.nsimple(); ++s) os << (s ? "," : "") << lambda_star_[s];
  }
  os << ")";
  return os.str();
}

AHElt AffineHecke::one() const {
  AHElt e;
  e.add(0, XVec(dim(), 0), Laurent::one());
  return e;
}

AHElt AffineHecke::scalar(const Laurent& l) const {
  AHElt e;
  e.add(0, XVec(dim(), 0), l);
  return e;
}

AHElt AffineHecke::T(int s) const {
  AHElt e;
  e.add(rs_.simple_reflection_index(s), XVec(dim(), 0), Laurent::one());
  return e;
}

AHElt AffineHecke::theta(const XVec& x) const {
  AHElt e;
  e.add(0, x, Laurent::one());
  return e;
}

AHElt AffineHecke::Tw(int wi) const {
  AHElt e;
  e.add(wi, XVec(dim(), 0), Laurent::one());
  return e;
}

AHElt AffineHecke::Ts_inv(int s) const {
  // T_s^{-1} = v^{-2 lambda} T_s + (v^{-2 lambda} - 1)
  AHElt e = T(s).scaled(Laurent::v_pow(-2 * lambda_[s]));
  e += one().scaled(Laurent::v_pow(-2 * lambda_[s]) - Laurent::one());
  return e;
}

AHElt AffineHecke::Tw_inv(int wi) const {
  AHElt acc = one();
  const auto& word = rs_.W[wi].word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = mult(acc, Ts_inv(*it));
  return acc;
}

XVec AffineHecke::act_x(int wi, const XVec& x) const {
  return xvec_from_q(rs_.act_E(wi, xvec_to_q(x)));
}

XVec AffineHecke::reflect_x(int s, const XVec& x) const {
  return xvec_from_q(rs_.reflect_E(s, xvec_to_q(x)));
}

ThetaPoly AffineHecke::cross_correction(const XVec& x, int s) const {
  const XVec alpha = xvec_from_q(rs_.simples[s]);
  long k = rat_to_long(dot(xvec_to_q(x), rs_.simple_cos[s]));
  ThetaPoly corr;
  if (!star_branch_[s]) {
    Laurent A = Laurent::v_pow(2 * lambda_[s]) - Laurent::one();
    if (k >= 0) {
      XVec cur = x;
      for (long m = 0; m < k; ++m) {
        tp_add_term(corr, cur, A);
        cur = xvec_add(cur, xvec_neg(alpha));
      }
    } else {
      XVec cur = x;
      for (long j = 1; j <= -k; ++j) {
        cur = xvec_add(cur, alpha);
        tp_add_term(corr, cur, -A);
      }
    }
    return corr;
  }
  // coroot in 2 X^vee: k = <x, alpha^vee> is even
  if (k % 2 != 0) throw std::logic_error("cross_correction: odd pairing on doubled coroot");
  long j = k / 2;
  Laurent A = Laurent::v_pow(2 * lambda_[s]) - Laurent::one();
  Laurent B = Laurent::v_pow(lambda_[s] + lambda_star_[s]) -
              Laurent::v_pow(lambda_[s] - lambda_star_[s]);
  auto shift = [&](long mult_alpha) {
    XVec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] += mult_alpha * alpha[i];
    return r;
  };
  if (j >= 0) {
    for (long i = -j + 1; i <= 0; ++i) tp_add_term(corr, shift(2 * i), A);
    for (long i = -j; i <= -1; ++i) tp_add_term(corr, shift(2 * i + 1), B);
  } else {
    for (long i = 1; i <= -j; ++i) tp_add_term(corr, shift(2 * i), -A);
    for (long i = 0; i <= -j - 1; ++i) tp_add_term(corr, shift(2 * i + 1), -B);
  }
  return corr;
}

bool AffineHecke::cross_correction_oracle(const XVec& x, int s) const {
  const XVec alpha = xvec_from_q(rs_.simples[s]);
  const XVec sx = reflect_x(s, x);
  ThetaPoly corr = cross_correction(x, s);
  ThetaPoly diff = tp_sub(tp_theta(x, Laurent::one()), tp_theta(sx, Laurent::one()));
  XVec zero(dim(), 0);
  if (!star_branch_[s]) {
    // corr (theta_alpha - 1) = (theta_x - theta_{sx}) theta_alpha (v^{2l} - 1)
    ThetaPoly lhs = tp_mul(corr, tp_sub(tp_theta(alpha, Laurent::one()),
                                        tp_theta(zero, Laurent::one())));
    ThetaPoly rhs = tp_mul(
        diff, tp_theta(alpha, Laurent::v_pow(2 * lambda_[s]) - Laurent::one()));
    return lhs == rhs;
  }
  // corr (theta_{2a} - 1) =
  //   (theta_x - theta_{sx}) [theta_{2a}(v^{2l} - 1) + theta_a(v^{l+l*} - v^{l-l*})]
  XVec alpha2 = xvec_add(alpha, alpha);
  ThetaPoly lhs = tp_mul(corr, tp_sub(tp_theta(alpha2, Laurent::one()),
                                      tp_theta(zero, Laurent::one())));
  ThetaPoly bracket = tp_theta(alpha2, Laurent::v_pow(2 * lambda_[s]) - Laurent::one());
  tp_add_term(bracket, alpha,
              Laurent::v_pow(lambda_[s] + lambda_star_[s]) -
                  Laurent::v_pow(lambda_[s] - lambda_star_[s]));
  ThetaPoly rhs = tp_mul(diff, bracket);
  return lhs == rhs;
}

void AffineHecke::add_Tw_Ts(AHElt& out, int w, int s, const XVec& x,
                            const Laurent& coef) const {
  int ws = rs_.weyl_mult(w, rs_.simple_reflection_index(s));
  if (rs_.weyl_length(ws) > rs_.weyl_length(w)) {
    out.add(ws, x, coef);
  } else {
    Laurent t = v2l(s);
    out.add(w, x, coef * (t - Laurent::one()));
    out.add(ws, x, coef * t);
  }
}

AHElt AffineHecke::mult_Ts(const AHElt& a, int s) const {
  AHElt out;
  for (const auto& [k, coef] : a.c) {
    // T_w theta_x T_s = (T_w T_s) theta_{sx} + sum_y corr_y T_w theta_y
    add_Tw_Ts(out, k.w, s, reflect_x(s, k.x), coef);
    for (const auto& [y, cy] : cross_correction(k.x, s)) out.add(k.w, y, coef * cy);
  }
  return out;
}

AHElt AffineHecke::mult(const AHElt& a, const AHElt& b) const {
  // group the right factor by Weyl part so each fold along a reduced word is
  // shared by all its theta terms
  std::map<int, std::vector<std::pair<XVec, Laurent>>> byw;
  for (const auto& [k, coef] : b.c) byw[k.w].push_back({k.x, coef});
  AHElt out;
  for (const auto& [w2, terms] : byw) {
    AHElt aw = a;
    for (int s : rs_.W[w2].word) aw = mult_Ts(aw, s);
    for (const auto& [x2, coef2] : terms)
      for (const auto& [k, coef] : aw.c) out.add(k.w, xvec_add(k.x, x2), coef * coef2);
  }
  return out;
}

AHElt AffineHecke::im_of_Tw(int wi) const {
  auto it = im_tw_cache_.find(wi);
  if (it != im_tw_cache_.end()) return it->second;
  AHElt acc = one();
  for (int s : rs_.W[wi].word) {
    // IM(T_s) = -T_s + (v^{2 lambda} - 1)
    AHElt f = T(s).scaled(Laurent::v_pow(0, Rat(-1)));
    f += one().scaled(v2l(s) - Laurent::one());
    acc = mult(acc, f);
  }
  im_tw_cache_.emplace(wi, acc);
  return acc;
}

AHElt AffineHecke::apply_IM(const AHElt& a) const {
  // IM(theta_x) = T_{w0} theta_{w0 x} T_{w0}^{-1}
  AHElt tw0 = Tw(rs_.w0());
  AHElt tw0i = Tw_inv(rs_.w0());
  AHElt out;
  for (const auto& [k, coef] : a.c) {
    AHElt part = mult(im_of_Tw(k.w), tw0);
    part = mult(part, theta(act_x(rs_.w0(), k.x)));
    part = mult(part, tw0i);
    out += part.scaled(coef);
  }
  return out;
}

AHElt AffineHecke::apply_tIM(const AHElt& a) const {
  AHElt out;
  for (const auto& [k, coef] : a.c) {
    AHElt acc = one();
    for (int s : rs_.W[k.w].word) {
      // tIM(T_s) = -T_{w0 s w0} + (v^{2 lambda} - 1)
      int sp = rs_.w0_conj_simple(s);
      AHElt f = T(sp).scaled(Laurent::v_pow(0, Rat(-1)));
      f += one().scaled(v2l(s) - Laurent::one());
      acc = mult(acc, f);
    }
    acc = mult(acc, theta(act_x(rs_.w0(), k.x)));
    out += acc.scaled(coef);
  }
  return out;
}

AHElt AffineHecke::apply_bullet(const AHElt& a) const {
  // (T_w theta_x)^bullet = theta_x T_{w^{-1}}
  AHElt out;
  for (const auto& [k, coef] : a.c) {
    AHElt part = mult(theta(k.x), Tw(rs_.weyl_inverse(k.w)));
    out += part.scaled(coef);
  }
  return out;
}

bool AffineHecke::supported_in_parabolic(const AHElt& a, const std::vector<int>& P) const {
  auto elems = rs_.parabolic_elements(P);
  std::vector<bool> in(rs_.W.size(), false);
  for (int w : elems) in[w] = true;
  for (const auto& [k, coef] : a.c)
    if (!in[k.w]) return false;
  return true;
}

namespace {

bool pres_fail(PresReport& rep, const std::string& what) {
  if (rep.ok) rep.first_failure = what;
  rep.ok = false;
  return false;
}

XVec random_xvec(std::mt19937_64& rng, int n, long amp) {
  XVec x(n);
  for (int i = 0; i < n; ++i) x[i] = (long)(rng() % (2 * amp + 1)) - amp;
  return x;
}

}  // namespace

PresReport verify_presentation(const AffineHecke& H, int random_xs, std::uint64_t seed) {
  PresReport rep;
  const RootSystem& rs = H.rs();
  int n = rs.nsimple();
  std::mt19937_64 rng(seed);

  // (1) quadratic relation
  for (int s = 0; s < n; ++s) {
    AHElt lhs = H.mult(H.T(s), H.T(s));
    AHElt rhs = H.T(s).scaled(Laurent::v_pow(2 * H.lambda(s)) - Laurent::one()) +
                H.one().scaled(Laurent::v_pow(2 * H.lambda(s)));
    ++rep.checks;
    if (lhs != rhs) pres_fail(rep, "quadratic relation fails at s=" + std::to_string(s));
    ++rep.checks;
    if (H.mult(H.T(s), H.Ts_inv(s)) != H.one())
      pres_fail(rep, "T_s T_s^{-1} != 1 at s=" + std::to_string(s));
  }

  // (2) braid relations, order m_st from the Cartan matrix
  QMat C = rs.cartan();
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      long prod = rat_to_long(C.at(s, t) * C.at(t, s));
      int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
      AHElt lhs = H.one(), rhs = H.one();
      for (int i = 0; i < m; ++i) {
        lhs = H.mult(lhs, H.T(i % 2 == 0 ? s : t));
        rhs = H.mult(rhs, H.T(i % 2 == 0 ? t : s));
      }
      ++rep.checks;
      if (lhs != rhs)
        pres_fail(rep, "braid relation fails at (" + std::to_string(s) + "," +
                           std::to_string(t) + ")");
    }

  // (3) theta additivity
  for (int i = 0; i < rs.dim; ++i)
    for (int j = 0; j < rs.dim; ++j) {
      XVec ei(rs.dim, 0), ej(rs.dim, 0);
      ei[i] = 1;
      ej[j] = -2;
      ++rep.checks;
      if (H.mult(H.theta(ei), H.theta(ej)) != H.theta(xvec_add(ei, ej)))
        pres_fail(rep, "theta additivity fails on basis");
    }
  for (int t = 0; t < random_xs; ++t) {
    XVec a = random_xvec(rng, rs.dim, 3), b = random_xvec(rng, rs.dim, 3);
    ++rep.checks;
    if (H.mult(H.theta(a), H.theta(b)) != H.theta(xvec_add(a, b)))
      pres_fail(rep, "theta additivity fails on " + xvec_str(a) + "+" + xvec_str(b));
  }

  // (4) cross relation: the telescoped commutator against the defining
  // rational form (cross-multiplied, exact), and the operational product path
  std::vector<XVec> battery;
  for (int i = 0; i < rs.dim; ++i) {
    XVec e(rs.dim, 0);
    e[i] = 1;
    battery.push_back(e);
    e[i] = -1;
    battery.push_back(e);
  }
  for (int s = 0; s < n; ++s) battery.push_back(xvec_from_q(rs.simples[s]));
  for (int t = 0; t < random_xs; ++t) battery.push_back(random_xvec(rng, rs.dim, 3));
  for (int s = 0; s < n; ++s)
    for (const XVec& x : battery) {
      ++rep.checks;
      if (!H.cross_correction_oracle(x, s))
        pres_fail(rep, "cross relation oracle fails at s=" + std::to_string(s) +
                           " x=" + xvec_str(x));
      AHElt lhs = H.mult(H.theta(x), H.T(s));
      AHElt rhs = H.mult(H.T(s), H.theta(H.reflect_x(s, x)));
      for (const auto& [y, cy] : H.cross_correction(x, s)) rhs += H.theta(y).scaled(cy);
      ++rep.checks;
      if (lhs != rhs)
        pres_fail(rep, "cross relation product fails at s=" + std::to_string(s) +
                           " x=" + xvec_str(x));
    }

  // associativity on random words in the generators
  auto random_word_elt = [&]() {
    AHElt e = H.one();
    int len = 1 + (int)(rng() % 3);
    for (int i = 0; i < len; ++i) {
      if (rng() % 2 == 0)
        e = H.mult(e, H.T((int)(rng() % n)));
      else
        e = H.mult(e, H.theta(random_xvec(rng, rs.dim, 2)));
    }
    return e;
  };
  for (int t = 0; t < random_xs; ++t) {
    AHElt a = random_word_elt(), b = random_word_elt(), cc = random_word_elt();
    ++rep.checks;
    if (H.mult(H.mult(a, b), cc) != H.mult(a, H.mult(b, cc)))
      pres_fail(rep, "associativity fails on random triple " + std::to_string(t));
  }

  return rep;
}

bool check_conj_IM(const AffineHecke& H, int samples, std::uint64_t seed,
                   std::string* diag) {
  const RootSystem& rs = H.rs();
  AHElt tw0 = H.Tw(rs.w0());
  AHElt tw0i = H.Tw_inv(rs.w0());
  std::mt19937_64 rng(seed);
  std::vector<AHElt> hs;
  for (int s = 0; s < rs.nsimple(); ++s) hs.push_back(H.T(s));
  for (int i = 0; i < rs.dim; ++i) {
    XVec e(rs.dim, 0);
    e[i] = 1;
    hs.push_back(H.theta(e));
  }
  for (int t = 0; t < samples; ++t) {
    AHElt e = H.one();
    int len = 1 + (int)(rng() % 3);
    for (int i = 0; i < len; ++i) {
      if (rng() % 2 == 0)
        e = H.mult(e, H.T((int)(rng() % rs.nsimple())));
      else
        e = H.mult(e, H.theta(random_xvec(rng, rs.dim, 2)));
    }
    hs.push_back(e);
  }
  for (size_t i = 0; i < hs.size(); ++i) {
    AHElt lhs = H.apply_tIM(hs[i]);
    AHElt rhs = H.mult(H.mult(tw0i, H.apply_IM(hs[i])), tw0);
    if (lhs != rhs) {
      if (diag) *diag = "conj-IM fails on sample " + std::to_string(i);
      return false;
    }
  }
  return true;
}

}  // namespace hecke
