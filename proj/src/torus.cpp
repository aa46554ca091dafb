#include "hecke/torus.hpp"

#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

QVec qvec_mod1(const QVec& v) {
  QVec r(v);
  for (auto& x : r) x = rat_mod1(x);
  return r;
}

std::string qvec_str(const QVec& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << rat_to_string(v[i]);
  }
  os << "]";
  return os.str();
}

}  // namespace

TorusPoint::TorusPoint(QVec t, QVec h) : tors(qvec_mod1(t)), hyp(std::move(h)) {
  if (tors.size() != hyp.size()) throw std::domain_error("TorusPoint: size mismatch");
}

TorusPoint TorusPoint::operator*(const TorusPoint& o) const {
  return TorusPoint(qvec_add(tors, o.tors), qvec_add(hyp, o.hyp));
}

TorusPoint TorusPoint::inverse() const {
  return TorusPoint(qvec_neg(tors), qvec_neg(hyp));
}

Cyclo TorusPoint::theta_value(const std::vector<long>& x, const Rat& u) const {
  if ((int)x.size() != dim()) throw std::domain_error("theta_value: size mismatch");
  Rat angle(0), hexp(0);
  for (int i = 0; i < dim(); ++i) {
    angle += tors[i] * x[i];
    hexp += hyp[i] * x[i];
  }
  if (!rat_is_integer(hexp))
    throw std::domain_error("theta_value: field extension needed, <x,hyp> = " +
                            rat_to_string(hexp) + " not integral");
  angle = rat_mod1(angle);
  long q = rat_to_long(Rat(angle.get_den()));
  long p = rat_to_long(Rat(angle.get_num()));
  return Cyclo(rat_pow(u, rat_to_long(hexp))) * Cyclo::zeta(q, p);
}

TorusPoint TorusPoint::transformed(const QMat& mD) const {
  return TorusPoint(mD.apply(tors), mD.apply(hyp));
}

std::string TorusPoint::str() const {
  return "tors=" + qvec_str(tors) + " hyp=" + qvec_str(hyp);
}

ThetaModel ThetaModel::a2_flip() {
  ThetaModel m;
  m.rs = RootSystem::named("A2");
  m.theta = m.rs.diagram_automorphism({1, 0});
  m.order = 2;
  m.name = "A2-flip";
  return m;
}

ThetaModel ThetaModel::d4_triality() {
  ThetaModel m;
  m.rs = RootSystem::named("D4");
  m.theta = m.rs.diagram_automorphism({2, 1, 3, 0});
  m.order = 3;
  m.name = "D4-triality";
  return m;
}

TorusPoint ThetaModel::apply_theta(const TorusPoint& p, int times) const {
  int k = ((times % order) + order) % order;
  TorusPoint r = p;
  for (int i = 0; i < k; ++i) r = r.transformed(theta);
  return r;
}

ExtElt ThetaModel::mult(const ExtElt& a, const ExtElt& b) const {
  ExtElt r;
  r.t = a.t * apply_theta(b.t, a.k);
  r.k = (a.k + b.k) % order;
  return r;
}

bool ThetaModel::equal(const ExtElt& a, const ExtElt& b) const {
  return a.k % order == b.k % order && a.t == b.t;
}

PolarParts polar_decompose(const ThetaModel& m, const ExtElt& s) {
  TorusPoint hyp_pt = s.t.hyperbolic_part();
  if (m.apply_theta(hyp_pt, s.k) != hyp_pt)
    throw std::domain_error("polar_decompose: hyperbolic part not theta^k fixed");
  PolarParts p;
  p.c.t = s.t.compact_part();
  p.c.k = s.k;
  p.h.t = hyp_pt;
  p.h.k = 0;
  return p;
}

namespace {

Rat random_frac(std::mt19937_64& rng, long max_den) {
  long den = 1 + (long)(rng() % (std::uint64_t)max_den);
  long num = (long)(rng() % (std::uint64_t)(4 * den + 1)) - 2 * den;
  return make_rat(num, den);
}

bool record_fail(PolarReport& rep, const std::string& what) {
  if (rep.all_ok) rep.first_failure = what;
  rep.all_ok = false;
  return false;
}

}  // namespace

PolarReport run_polar_suite(const ThetaModel& model, int count, std::uint64_t seed) {
  ThetaModel m = model;  // local copy so ensure_weyl can mutate
  m.rs.ensure_weyl();
  std::mt19937_64 rng(seed);
  PolarReport rep;

  // Weyl elements commuting with theta^k, per k
  std::vector<std::vector<int>> commuting(m.order);
  for (int k = 0; k < m.order; ++k) {
    QMat tk = m.theta.pow(k);
    for (size_t wi = 0; wi < m.rs.W.size(); ++wi)
      if (tk * m.rs.W[wi].mD == m.rs.W[wi].mD * tk) commuting[k].push_back((int)wi);
  }

  int n = m.rs.dim;
  for (int it = 0; it < count; ++it) {
    ExtElt s;
    QVec tors(n), hyp(n);
    for (int i = 0; i < n; ++i) {
      tors[i] = random_frac(rng, 12);
      hyp[i] = (it % 4 == 3) ? Rat(0) : random_frac(rng, 6);  // some compact points
    }
    s.k = (int)(rng() % (std::uint64_t)m.order);
    s.t = TorusPoint(tors, hyp);
    if (s.k != 0) {
      // theta^k orbit average makes the point exactly theta^k fixed
      int sub = m.order / std::gcd(m.order, s.k);
      QVec at = qvec_zero(n), ah = qvec_zero(n);
      TorusPoint cur = s.t;
      for (int j = 0; j < sub; ++j) {
        at = qvec_add(at, cur.tors);
        ah = qvec_add(ah, cur.hyp);
        cur = m.apply_theta(cur, s.k);
      }
      s.t = TorusPoint(qvec_scale(make_rat(1, sub), at), qvec_scale(make_rat(1, sub), ah));
    }

    std::string tag = "point " + std::to_string(it) + " (" + s.t.str() +
                      " k=" + std::to_string(s.k) + "): ";
    PolarParts pp;
    try {
      pp = polar_decompose(m, s);
    } catch (const std::exception& e) {
      record_fail(rep, tag + e.what());
      ++rep.checked;
      continue;
    }

    bool ok = true;
    if (!pp.c.t.is_compact() || pp.h.k != 0 || !pp.h.t.is_hyperbolic())
      ok = record_fail(rep, tag + "part shapes wrong");
    if (ok && !m.equal(m.mult(pp.c, pp.h), s))
      ok = record_fail(rep, tag + "c*h != s");
    if (ok && !m.equal(m.mult(pp.h, pp.c), s))
      ok = record_fail(rep, tag + "h*c != s (parts do not commute)");

    // uniqueness: a competing pair c'=((a,0),k), h'=((0,y),0) obeys
    // s = c'h'  =>  a = tors(s), y = theta^{-k} hyp(s)
    // c'h' = h'c'  =>  y = hyp(s)
    // so both equations force exactly the computed parts
    if (ok) {
      TorusPoint y_from_prod = m.apply_theta(s.t.hyperbolic_part(), -s.k);
      if (y_from_prod != pp.h.t || s.t.compact_part() != pp.c.t)
        ok = record_fail(rep, tag + "uniqueness equations disagree");
    }

    // Weyl-centralizer stability: any w commuting with theta^k and fixing s
    // fixes both parts
    if (ok) {
      for (int wi : commuting[s.k]) {
        TorusPoint wt = s.t.transformed(m.rs.W[wi].mD);
        if (wt != s.t) continue;
        if (pp.c.t.transformed(m.rs.W[wi].mD) != pp.c.t ||
            pp.h.t.transformed(m.rs.W[wi].mD) != pp.h.t) {
          ok = record_fail(rep, tag + "centralizer does not preserve parts");
          break;
        }
      }
    }
    ++rep.checked;
  }
  return rep;
}

}  // namespace hecke
