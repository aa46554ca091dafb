#include "hecke/modules_affine.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace hecke {

namespace {

Cyclo laurent_value(const Laurent& l, const Rat& u, long vexp) {
  return Cyclo(l.eval_at_u_power(u, vexp));
}

CMat theta_matrix(const AffineModule& M, const XVec& x) {
  CMat out = CMat::id(M.dim);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    CMat base = M.X_mats[i];
    long e = x[i];
    if (e < 0) {
      base = base.inverse().value();
      e = -e;
    }
    for (long k = 0; k < e; ++k) out = out * base;
  }
  return out;
}

}  // namespace

Rat AffineModule::v_value_check() const { return rat_pow(u, vexp); }

CMat AffineModule::act(const AffineHecke& H, const AHElt& e) const {
  CMat out(dim, dim);
  for (const auto& [k, coef] : e.c) {
    CMat tw = CMat::id(dim);
    for (int s : H.rs().W[k.w].word) tw = tw * T_mats[s];
    out = out + (tw * theta_matrix(*this, k.x)).scaled(laurent_value(coef, u, vexp));
  }
  return out;
}

Cyclo AffineModule::trace_of(const AffineHecke& H, const AHElt& e) const {
  return act(H, e).trace();
}

bool af_check(const AffineHecke& H, const AffineModule& M, std::string* diag) {
  const RootSystem& rs = H.rs();
  auto fail = [&](const std::string& w) {
    if (diag) *diag = w;
    return false;
  };
  int d = M.dim;
  Cyclo one(Rat(1));
  for (int s = 0; s < rs.nsimple(); ++s) {
    Cyclo v2l(rat_pow(M.u, 2 * H.lambda(s) * M.vexp));
    CMat T = M.T_mats[s];
    if (T * T != T.scaled(v2l - one) + CMat::id(d).scaled(v2l))
      return fail("quadratic relation fails at s=" + std::to_string(s));
  }
  QMat C = rs.cartan();
  for (int s = 0; s < rs.nsimple(); ++s)
    for (int t = s + 1; t < rs.nsimple(); ++t) {
      long prod = rat_to_long(C.at(s, t) * C.at(t, s));
      int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
      CMat lhs = CMat::id(d), rhs = CMat::id(d);
      for (int i = 0; i < m; ++i) {
        lhs = lhs * (i % 2 == 0 ? M.T_mats[s] : M.T_mats[t]);
        rhs = rhs * (i % 2 == 0 ? M.T_mats[t] : M.T_mats[s]);
      }
      if (lhs != rhs) return fail("braid fails");
    }
  for (size_t i = 0; i < M.X_mats.size(); ++i)
    for (size_t j = i + 1; j < M.X_mats.size(); ++j)
      if (M.X_mats[i] * M.X_mats[j] != M.X_mats[j] * M.X_mats[i])
        return fail("theta matrices do not commute");
  // cross relation through the telescoped correction
  for (int s = 0; s < rs.nsimple(); ++s)
    for (int i = 0; i < H.dim(); ++i) {
      XVec ei(H.dim(), 0);
      ei[i] = 1;
      CMat lhs = theta_matrix(M, ei) * M.T_mats[s];
      CMat rhs = M.T_mats[s] * theta_matrix(M, H.reflect_x(s, ei));
      for (const auto& [y, cy] : H.cross_correction(ei, s))
        rhs = rhs + theta_matrix(M, y).scaled(laurent_value(cy, M.u, M.vexp));
      if (lhs != rhs) return fail("cross relation fails at s=" + std::to_string(s));
    }
  return true;
}

AffineModule af_principal_series(const AffineHecke& H, const TorusPoint& z, const Rat& u,
                                 long vexp) {
  const RootSystem& rs = H.rs();
  size_t nw = rs.W.size();
  AffineModule M;
  M.dim = (int)nw;
  M.u = u;
  M.vexp = vexp;
  // hyperbolic parts are powers of u itself; vexp only enters through v
  auto theta_val = [&](const XVec& x) {
    std::vector<long> xl(x.begin(), x.end());
    return z.theta_value(xl, u);
  };
  for (int s = 0; s < rs.nsimple(); ++s) {
    CMat mat((int)nw, (int)nw);
    for (size_t w = 0; w < nw; ++w) {
      AHElt img = H.mult(H.T(s), H.Tw((int)w));
      for (const auto& [k, coef] : img.c)
        mat.at(k.w, (int)w) += laurent_value(coef, u, vexp) * theta_val(k.x);
    }
    M.T_mats.push_back(mat);
  }
  for (int i = 0; i < H.dim(); ++i) {
    XVec ei(H.dim(), 0);
    ei[i] = 1;
    CMat mat((int)nw, (int)nw);
    for (size_t w = 0; w < nw; ++w) {
      AHElt img = H.mult(H.theta(ei), H.Tw((int)w));
      for (const auto& [k, coef] : img.c)
        mat.at(k.w, (int)w) += laurent_value(coef, u, vexp) * theta_val(k.x);
    }
    M.X_mats.push_back(mat);
  }
  for (size_t w = 0; w < nw; ++w)
    M.weight_candidates.push_back(z.transformed(rs.W[w].mD));
  return M;
}

std::map<TorusPoint, long> af_weights(const AffineHecke& H, const AffineModule& M) {
  std::map<TorusPoint, long> out;
  std::vector<TorusPoint> cands;
  std::set<TorusPoint> seen;
  for (const auto& c : M.weight_candidates)
    if (seen.insert(c).second) cands.push_back(c);
  long total = 0;
  for (const auto& z : cands) {
    CMat big(0, M.dim);
    for (int i = 0; i < (int)M.X_mats.size(); ++i) {
      std::vector<long> ei(M.X_mats.size(), 0);
      ei[i] = 1;
      Cyclo lam = z.theta_value(ei, M.u);
      CMat k = (M.X_mats[i] - CMat::id(M.dim).scaled(lam)).pow(M.dim);
      big = big.nr == 0 ? k : CMat::vcat(big, k);
    }
    int mult = big.kernel().nc;
    if (mult > 0) {
      out[z] = mult;
      total += mult;
    }
  }
  if (total != M.dim)
    throw std::runtime_error("af_weights: candidates cover " + std::to_string(total) +
                             " of " + std::to_string(M.dim) + " dimensions");
  return out;
}

AffineModule af_restrict(const std::vector<int>& P, const AffineModule& M) {
  AffineModule R = M;
  R.T_mats.clear();
  for (int s : P) R.T_mats.push_back(M.T_mats[s]);
  return R;
}

CMat af_act_parabolic(const AffineHecke& H, const std::vector<int>& P,
                      const AffineModule& V, const AHElt& e) {
  // elements of W_P only use P-generators in reduced words
  std::map<int, int> p_index;
  for (size_t j = 0; j < P.size(); ++j) p_index[P[j]] = (int)j;
  CMat out(V.dim, V.dim);
  for (const auto& [k, coef] : e.c) {
    CMat tw = CMat::id(V.dim);
    for (int s : H.rs().W[k.w].word) {
      auto it = p_index.find(s);
      if (it == p_index.end())
        throw std::domain_error("af_act_parabolic: element leaves the parabolic");
      tw = tw * V.T_mats[it->second];
    }
    out = out + (tw * theta_matrix(V, k.x)).scaled(laurent_value(coef, V.u, V.vexp));
  }
  return out;
}

namespace {

struct CosetData {
  std::vector<int> reps;
  std::vector<int> rep_of, par_of;  // w = rep * par, par in W_P
  std::map<int, int> rep_pos;
};

CosetData coset_data(const RootSystem& rs, const std::vector<int>& P) {
  CosetData cd;
  cd.reps = rs.min_coset_reps(P);
  std::vector<bool> in_p(rs.W.size(), false);
  for (int w : rs.parabolic_elements(P)) in_p[w] = true;
  cd.rep_of.assign(rs.W.size(), -1);
  cd.par_of.assign(rs.W.size(), -1);
  for (size_t w = 0; w < rs.W.size(); ++w)
    for (int c : cd.reps) {
      int v = rs.weyl_mult(rs.weyl_inverse(c), (int)w);
      if (in_p[v]) {
        cd.rep_of[w] = c;
        cd.par_of[w] = v;
        break;
      }
    }
  for (size_t i = 0; i < cd.reps.size(); ++i) cd.rep_pos[cd.reps[i]] = (int)i;
  return cd;
}

std::vector<TorusPoint> full_orbit_candidates(const RootSystem& rs,
                                              const std::vector<TorusPoint>& base) {
  std::set<TorusPoint> cands;
  for (const auto& z : base)
    for (size_t w = 0; w < rs.W.size(); ++w) cands.insert(z.transformed(rs.W[w].mD));
  return {cands.begin(), cands.end()};
}

}  // namespace

AffineModule af_induce(const AffineHecke& H, const std::vector<int>& P,
                       const AffineModule& V) {
  const RootSystem& rs = H.rs();
  CosetData cd = coset_data(rs, P);
  int nc = (int)cd.reps.size(), dv = V.dim;

  AffineModule M;
  M.dim = nc * dv;
  M.u = V.u;
  M.vexp = V.vexp;

  auto act_block = [&](const AHElt& gen) {
    CMat mat(nc * dv, nc * dv);
    for (int ci = 0; ci < nc; ++ci) {
      AHElt img = H.mult(gen, H.Tw(cd.reps[ci]));
      std::map<int, AHElt> blocks;  // destination rep position -> H_P part
      for (const auto& [k, coef] : img.c) {
        AHElt& b = blocks[cd.rep_pos.at(cd.rep_of[k.w])];
        b.add(cd.par_of[k.w], k.x, coef);
      }
      for (const auto& [c2, b] : blocks) {
        CMat bm = af_act_parabolic(H, P, V, b);
        for (int i = 0; i < dv; ++i)
          for (int j = 0; j < dv; ++j) mat.at(c2 * dv + i, ci * dv + j) += bm.at(i, j);
      }
    }
    return mat;
  };

  for (int s = 0; s < rs.nsimple(); ++s) M.T_mats.push_back(act_block(H.T(s)));
  for (int i = 0; i < H.dim(); ++i) {
    XVec ei(H.dim(), 0);
    ei[i] = 1;
    M.X_mats.push_back(act_block(H.theta(ei)));
  }
  M.weight_candidates = full_orbit_candidates(rs, V.weight_candidates);
  return M;
}

AffineModule af_hom_induce(const AffineHecke& H, const std::vector<int>& P,
                           const AffineModule& V) {
  const RootSystem& rs = H.rs();
  CosetData cd = coset_data(rs, P);
  int nc = (int)cd.reps.size(), dv = V.dim;

  AffineModule M;
  M.dim = nc * dv;
  M.u = V.u;
  M.vexp = V.vexp;

  // (g f)(T_{c^{-1}}) = sum_{c'} (b_{c'})^bullet f(T_{c'^{-1}})
  // where g^bullet T_c = sum_{c'} T_{c'} b_{c'}
  auto act_block = [&](const AHElt& gen) {
    CMat mat(nc * dv, nc * dv);
    AHElt gb = H.apply_bullet(gen);
    for (int ci = 0; ci < nc; ++ci) {
      AHElt y = H.mult(gb, H.Tw(cd.reps[ci]));
      std::map<int, AHElt> blocks;
      for (const auto& [k, coef] : y.c) {
        AHElt& b = blocks[cd.rep_pos.at(cd.rep_of[k.w])];
        b.add(cd.par_of[k.w], k.x, coef);
      }
      for (const auto& [c2, b] : blocks) {
        CMat bm = af_act_parabolic(H, P, V, H.apply_bullet(b));
        // value slot ci picks up rho_V(h_{c'}) from slot c2
        for (int i = 0; i < dv; ++i)
          for (int j = 0; j < dv; ++j) mat.at(ci * dv + i, c2 * dv + j) += bm.at(i, j);
      }
    }
    return mat;
  };

  for (int s = 0; s < rs.nsimple(); ++s) M.T_mats.push_back(act_block(H.T(s)));
  for (int i = 0; i < H.dim(); ++i) {
    XVec ei(H.dim(), 0);
    ei[i] = 1;
    M.X_mats.push_back(act_block(H.theta(ei)));
  }
  M.weight_candidates = full_orbit_candidates(rs, V.weight_candidates);
  return M;
}

AffineModule af_twist_by(const AffineHecke& H, const AffineModule& M,
                         const std::function<AHElt(const AHElt&)>& phi) {
  AffineModule N = M;
  for (int s = 0; s < H.rs().nsimple(); ++s) N.T_mats[s] = M.act(H, phi(H.T(s)));
  for (int i = 0; i < H.dim(); ++i) {
    XVec ei(H.dim(), 0);
    ei[i] = 1;
    N.X_mats[i] = M.act(H, phi(H.theta(ei)));
  }
  N.weight_candidates = full_orbit_candidates(H.rs(), M.weight_candidates);
  return N;
}

std::vector<AHElt> af_trace_battery(const AffineHecke& H, int extra, std::uint64_t seed) {
  const RootSystem& rs = H.rs();
  std::vector<AHElt> out;
  for (size_t w = 0; w < rs.W.size(); ++w) out.push_back(H.Tw((int)w));
  for (int i = 0; i < H.dim(); ++i) {
    XVec ei(H.dim(), 0);
    ei[i] = 1;
    out.push_back(H.theta(ei));
    for (size_t w = 0; w < rs.W.size(); ++w)
      out.push_back(H.mult(H.Tw((int)w), H.theta(ei)));
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < extra; ++t) {
    XVec x(H.dim());
    for (int i = 0; i < H.dim(); ++i) x[i] = (long)(rng() % 5) - 2;
    out.push_back(H.mult(H.Tw((int)(rng() % rs.W.size())), H.theta(x)));
  }
  return out;
}

}  // namespace hecke
