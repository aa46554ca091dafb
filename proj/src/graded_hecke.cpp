#include "hecke/graded_hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

void GHElt::add(int w, const MPoly& p) {
  if (p.is_zero()) return;
  auto it = c.find(w);
  if (it == c.end()) {
    c.emplace(w, p);
  } else {
    it->second += p;
    if (it->second.is_zero()) c.erase(it);
  }
}

GHElt& GHElt::operator+=(const GHElt& o) {
  for (const auto& [w, p] : o.c) add(w, p);
  return *this;
}

GHElt& GHElt::operator-=(const GHElt& o) {
  for (const auto& [w, p] : o.c) add(w, -p);
  return *this;
}

GHElt GHElt::scaled(const Rat& a) const {
  GHElt r;
  if (a == 0) return r;
  for (const auto& [w, p] : c) r.c.emplace(w, p.scaled(a));
  return r;
}

GHElt GHElt::poly_scaled(const MPoly& p) const {
  GHElt r;
  for (const auto& [w, q] : c) r.add(w, q * p);
  return r;
}

std::string GHElt::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, p] : c) {
    if (!first) os << "  +  ";
    first = false;
    os << "t[" << w << "]*(" << p.str() << ")";
  }
  return os.str();
}

GradedHecke::GradedHecke(RootSystem rs, std::vector<Rat> mu)
    : rs_(std::move(rs)), mu_(std::move(mu)) {
  rs_.ensure_roots();
  rs_.ensure_weyl();
  if ((int)mu_.size() != rs_.nsimple()) throw std::domain_error("GradedHecke: mu size");
  for (int s = 0; s < rs_.nsimple(); ++s)
    for (int t = 0; t < rs_.nsimple(); ++t)
      if (rs_.root_orbit[rs_.simple_root_index(s)] ==
              rs_.root_orbit[rs_.simple_root_index(t)] &&
          mu_[s] != mu_[t])
        throw std::domain_error("GradedHecke: mu not W-invariant");
}

Rat GradedHecke::mu_of_root(int ri) const {
  int orb = rs_.root_orbit[ri];
  for (int s = 0; s < rs_.nsimple(); ++s)
    if (rs_.root_orbit[rs_.simple_root_index(s)] == orb) return mu_[s];
  throw std::logic_error("mu_of_root: root orbit has no simple");
}

bool GradedHecke::mu_everywhere_nonzero() const {
  for (const auto& m : mu_)
    if (m == 0) return false;
  return !mu_.empty();
}

std::string GradedHecke::str() const {
  std::ostringstream os;
  os << "gH(" << rs_.label << "; mu=";
  for (int s = 0; s < rs_.nsimple(); ++s) os << (s ? "," : "") << rat_to_string(mu_[s]);
  os << ")";
  return os.str();
}

GHElt GradedHecke::one() const {
  GHElt e;
  e.add(0, MPoly::constant(nvars(), Rat(1)));
  return e;
}

GHElt GradedHecke::t(int s) const {
  GHElt e;
  e.add(rs_.simple_reflection_index(s), MPoly::constant(nvars(), Rat(1)));
  return e;
}

GHElt GradedHecke::tw(int wi) const {
  GHElt e;
  e.add(wi, MPoly::constant(nvars(), Rat(1)));
  return e;
}

GHElt GradedHecke::poly(const MPoly& p) const {
  GHElt e;
  e.add(0, p);
  return e;
}

GHElt GradedHecke::x_lin(const QVec& coeffs) const { return poly(MPoly::linear(coeffs)); }

GHElt GradedHecke::r_elt() const { return poly(MPoly::r_var(nvars())); }

MPoly GradedHecke::act_poly(int wi, const MPoly& p) const {
  std::vector<MPoly> ximg(nvars());
  for (int i = 0; i < nvars(); ++i) {
    QVec ei = qvec_zero(nvars());
    ei[i] = 1;
    ximg[i] = MPoly::linear(rs_.act_E(wi, ei));
  }
  return p.substituted(ximg, MPoly::r_var(nvars()));
}

MPoly GradedHecke::reflect_poly(int s, const MPoly& p) const {
  std::vector<MPoly> ximg(nvars());
  for (int i = 0; i < nvars(); ++i) {
    QVec ei = qvec_zero(nvars());
    ei[i] = 1;
    ximg[i] = MPoly::linear(rs_.reflect_E(s, ei));
  }
  return p.substituted(ximg, MPoly::r_var(nvars()));
}

MPoly GradedHecke::demazure(int s, const MPoly& p) const {
  return (p - reflect_poly(s, p)).divide_by_linear(rs_.simples[s]);
}

GHElt GradedHecke::mult(const GHElt& a, const GHElt& b) const {
  GHElt out;
  for (const auto& [w2, p2] : b.c) {
    // move each left coefficient across t_{w2} along its reduced word:
    // p t_s = t_s s(p) + mu r Delta_s(p)
    for (const auto& [w1, p1] : a.c) {
      std::map<int, MPoly> cur;
      cur.emplace(0, p1);
      for (int s : rs_.W[w2].word) {
        std::map<int, MPoly> nxt;
        int si = rs_.simple_reflection_index(s);
        for (const auto& [u, q] : cur) {
          MPoly sq = reflect_poly(s, q);
          int us = rs_.weyl_mult(u, si);
          auto it = nxt.find(us);
          if (it == nxt.end())
            nxt.emplace(us, sq);
          else
            it->second += sq;
          if (mu_[s] != 0) {
            MPoly corr = (MPoly::r_var(nvars()) * demazure(s, q)).scaled(mu_[s]);
            if (!corr.is_zero()) {
              auto jt = nxt.find(u);
              if (jt == nxt.end())
                nxt.emplace(u, corr);
              else
                jt->second += corr;
            }
          }
        }
        cur = std::move(nxt);
      }
      for (const auto& [u, q] : cur) out.add(rs_.weyl_mult(w1, u), q * p2);
    }
  }
  return out;
}

namespace {

QMat neg_id(int n) { return QMat::id(n).scaled(Rat(-1)); }

QMat w0_matrix(const GradedHecke& G) { return G.rs().W[G.rs().w0()].mE; }

}  // namespace

GHMap gh_map_FT(const GradedHecke& G) {
  return GHMap{"FT", GHMap::Tau::Id, -1, neg_id(G.dim()), 1, false};
}

GHMap gh_map_C(const GradedHecke& G) {
  return GHMap{"C", GHMap::Tau::W0, 1, neg_id(G.dim()) * w0_matrix(G), 1, false};
}

GHMap gh_map_kappa(const GradedHecke& G) {
  return GHMap{"kappa", GHMap::Tau::Id, 1, neg_id(G.dim()), -1, false};
}

GHMap gh_map_D(const GradedHecke& G) {
  // conj o kappa: the generator images are fixed pointwise, the scalar
  // conjugation is trivial over Q
  return GHMap{"D", GHMap::Tau::Id, 1, QMat::id(G.dim()), 1, true};
}

GHMap gh_map_AZ(const GradedHecke& G) {
  return GHMap{"AZ", GHMap::Tau::W0, -1, w0_matrix(G), 1, false};
}

GHMap gh_map_iota(const GradedHecke& G) {
  return GHMap{"iota", GHMap::Tau::Id, -1, QMat::id(G.dim()), -1, false};
}

GHMap gh_map_cv(const GradedHecke& G) {
  // w0 carries Delta to -Delta, so the unsigned conjugation lands in the
  // presentation with every mu negated
  return GHMap{"c_w0", GHMap::Tau::W0, 1, w0_matrix(G), 1, false, -1};
}

std::vector<GHMap> gh_map_catalog(const GradedHecke& G) {
  return {gh_map_FT(G), gh_map_C(G),  gh_map_kappa(G), gh_map_D(G),
          gh_map_AZ(G), gh_map_iota(G), gh_map_cv(G)};
}

std::vector<Rat> gh_target_mu(const GradedHecke& G, const GHMap& m) {
  std::vector<Rat> out(G.rs().nsimple());
  for (int s = 0; s < G.rs().nsimple(); ++s) {
    out[s] = m.tau == GHMap::Tau::W0 ? G.mu(G.rs().w0_conj_simple(s)) : G.mu(s);
    if (m.musign < 0) out[s] = -out[s];
  }
  return out;
}

GHElt apply_ghmap(const GradedHecke& tgt, const GHMap& m, const GHElt& a) {
  const RootSystem& rs = tgt.rs();
  std::vector<MPoly> ximg(tgt.nvars());
  for (int i = 0; i < tgt.nvars(); ++i) {
    QVec col(tgt.nvars());
    for (int j = 0; j < tgt.nvars(); ++j) col[j] = m.xmat.at(j, i);
    ximg[i] = MPoly::linear(col);
  }
  MPoly rimg = MPoly::r_var(tgt.nvars()).scaled(Rat(m.rsign));
  GHElt out;
  for (const auto& [w, p] : a.c) {
    int tw = w;
    if (m.tau == GHMap::Tau::W0) tw = rs.weyl_mult(rs.weyl_mult(rs.w0(), w), rs.w0());
    Rat sign = m.tsign == 1 || rs.weyl_length(w) % 2 == 0 ? Rat(1) : Rat(-1);
    out.add(tw, p.substituted(ximg, rimg).scaled(sign));
  }
  return out;
}

bool gh_check_homomorphism(const GradedHecke& src, const GradedHecke& tgt,
                           const GHMap& m, std::string* diag) {
  const RootSystem& rs = src.rs();
  auto fail = [&](const std::string& what) {
    if (diag) *diag = m.name + ": " + what;
    return false;
  };
  // group relations: phi(t_s)^2 = 1 and the braid identities
  for (int s = 0; s < rs.nsimple(); ++s) {
    GHElt ts = apply_ghmap(tgt, m, src.t(s));
    if (tgt.mult(ts, ts) != tgt.one()) return fail("t_s^2 at s=" + std::to_string(s));
  }
  QMat C = rs.cartan();
  for (int s = 0; s < rs.nsimple(); ++s)
    for (int u = s + 1; u < rs.nsimple(); ++u) {
      long prod = rat_to_long(C.at(s, u) * C.at(u, s));
      int mm = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
      GHElt lhs = tgt.one(), rhs = tgt.one();
      for (int i = 0; i < mm; ++i) {
        lhs = tgt.mult(lhs, apply_ghmap(tgt, m, src.t(i % 2 == 0 ? s : u)));
        rhs = tgt.mult(rhs, apply_ghmap(tgt, m, src.t(i % 2 == 0 ? u : s)));
      }
      if (lhs != rhs)
        return fail("braid at (" + std::to_string(s) + "," + std::to_string(u) + ")");
    }
  // cross relations on the coordinate basis of E
  for (int s = 0; s < rs.nsimple(); ++s) {
    GHElt ts = apply_ghmap(tgt, m, src.t(s));
    GHElt rimg = apply_ghmap(tgt, m, src.r_elt());
    for (int i = 0; i < src.nvars(); ++i) {
      QVec ei = qvec_zero(src.nvars());
      ei[i] = 1;
      GHElt xi = apply_ghmap(tgt, m, src.x_lin(ei));
      GHElt sxi = apply_ghmap(tgt, m, src.x_lin(rs.reflect_E(s, ei)));
      GHElt lhs = tgt.mult(xi, ts) - tgt.mult(ts, sxi);
      GHElt rhs = rimg.scaled(src.mu(s) * dot(ei, rs.simple_cos[s]));
      if (lhs != rhs)
        return fail("cross relation at s=" + std::to_string(s) + " x_" + std::to_string(i));
    }
  }
  return true;
}

bool gh_check_composition(const GradedHecke& G, const GHMap& direct,
                          const std::vector<GHMap>& chain, std::string* diag) {
  std::vector<GHElt> battery;
  for (int s = 0; s < G.rs().nsimple(); ++s) battery.push_back(G.t(s));
  for (int i = 0; i < G.nvars(); ++i) {
    QVec ei = qvec_zero(G.nvars());
    ei[i] = 1;
    battery.push_back(G.x_lin(ei));
  }
  battery.push_back(G.r_elt());
  for (int s = 0; s < G.rs().nsimple(); ++s)
    battery.push_back(G.mult(G.t(s), G.x_lin(G.rs().simples[s])));
  for (size_t i = 0; i < battery.size(); ++i) {
    GHElt via_chain = battery[i];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      via_chain = apply_ghmap(G, *it, via_chain);
    GHElt via_direct = apply_ghmap(G, direct, battery[i]);
    if (via_chain != via_direct) {
      if (diag)
        *diag = direct.name + " vs chain: mismatch on battery element " + std::to_string(i);
      return false;
    }
  }
  return true;
}

RigidityReport rigidity_report(const GradedHecke& G) {
  RigidityReport rep;
  const RootSystem& rs = G.rs();
  size_t nw = rs.W.size();
  for (int s = 0; s < rs.nsimple(); ++s) {
    // unknown phi(t_s) = sum_w c_w t_w; for each basis x the relation
    // x phi(t_s) - phi(t_s) s(x) = mu <x, alpha^vee> r is linear in c.
    // rows are indexed by (Weyl index, monomial, which basis x), so the
    // systems for the different x share the one unknown vector
    std::map<std::pair<int, std::vector<int>>, int> row_index;
    auto row_of = [&](int w, const std::vector<int>& mono) {
      auto key = std::make_pair(w, mono);
      auto it = row_index.find(key);
      if (it != row_index.end()) return it->second;
      int id = (int)row_index.size();
      row_index.emplace(key, id);
      return id;
    };
    std::vector<std::vector<std::pair<int, Rat>>> col_terms(nw);
    std::vector<std::pair<int, Rat>> rhs_terms;
    for (int i = 0; i < G.nvars(); ++i) {
      QVec ei = qvec_zero(G.nvars());
      ei[i] = 1;
      GHElt x = G.x_lin(ei);
      GHElt sx = G.x_lin(rs.reflect_E(s, ei));
      for (size_t w = 0; w < nw; ++w) {
        GHElt bracket = G.mult(x, G.tw((int)w)) - G.mult(G.tw((int)w), sx);
        for (const auto& [u, p] : bracket.c)
          for (const auto& [mono, coef] : p.c) {
            std::vector<int> tagged = mono;
            tagged.push_back(i);  // block tag per basis vector x_i
            col_terms[w].push_back({row_of(u, tagged), coef});
          }
      }
      GHElt rhs = G.r_elt().scaled(G.mu(s) * dot(ei, rs.simple_cos[s]));
      for (const auto& [u, p] : rhs.c)
        for (const auto& [mono, coef] : p.c) {
          std::vector<int> tagged = mono;
          tagged.push_back(i);
          rhs_terms.push_back({row_of(u, tagged), coef});
        }
    }
    int nrows = (int)row_index.size();
    QMat A(nrows, (int)nw);
    QMat b(nrows, 1);
    for (size_t w = 0; w < nw; ++w)
      for (const auto& [r, coef] : col_terms[w]) A.at(r, (int)w) += coef;
    for (const auto& [r, coef] : rhs_terms) b.at(r, 0) += coef;

    auto sol = A.solve(b);
    if (!sol) {
      rep.id_only = false;
      rep.diag = "no solution at s=" + std::to_string(s);
      rep.kernel_dims.push_back(-1);
      continue;
    }
    auto ker = A.kernel();
    rep.kernel_dims.push_back(ker.nc);
    // the identity map is always a solution; uniqueness means kernel zero and
    // the particular solution is exactly delta_{t_s}
    bool is_delta = true;
    int si = rs.simple_reflection_index(s);
    for (size_t w = 0; w < nw; ++w) {
      Rat want = (int)w == si ? Rat(1) : Rat(0);
      if (sol->at((int)w, 0) != want) is_delta = false;
    }
    if (ker.nc != 0 || !is_delta) rep.id_only = false;
    if (!is_delta && rep.diag.empty())
      rep.diag = "particular solution differs from t_s at s=" + std::to_string(s);
  }
  return rep;
}

}  // namespace hecke
