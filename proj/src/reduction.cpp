#include "hecke/reduction.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

std::string vec_str(const QVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(v[i]);
  }
  return out + ")";
}

std::vector<long> to_xvec(const QVec& v) {
  std::vector<long> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = rat_to_long(v[i]);
  return out;
}

// reflection s_alpha on E* for an arbitrary root index
QMat reflection_mD(const RootSystem& rs, int ri) {
  QMat m = QMat::id(rs.dim);
  for (int i = 0; i < rs.dim; ++i)
    for (int j = 0; j < rs.dim; ++j) m.at(i, j) -= rs.coroots[ri][i] * rs.roots[ri][j];
  return m;
}

long lambda_of_root(const AffineHecke& H, int ri) {
  const RootSystem& rs = H.rs();
  int o = rs.root_orbit[ri];
  for (int s = 0; s < rs.nsimple(); ++s)
    if (rs.root_orbit[rs.simple_root_index(s)] == o) return H.lambda(s);
  throw std::logic_error("root not conjugate to any simple root");
}

long lambda_star_of_root(const AffineHecke& H, int ri) {
  const RootSystem& rs = H.rs();
  int o = rs.root_orbit[ri];
  for (int s = 0; s < rs.nsimple(); ++s)
    if (rs.root_orbit[rs.simple_root_index(s)] == o) return H.lambda_star(s);
  throw std::logic_error("root not conjugate to any simple root");
}

// mu_z at a root of R_z; s_alpha z_c = z_c is a precondition
Rat mu_at_root(const AffineHecke& H, const TorusPoint& z_c, int ri) {
  const RootSystem& rs = H.rs();
  long lam = lambda_of_root(H, ri);
  if (!rs.coroot_in_2X(ri)) return Rat(2 * lam);
  long lams = lambda_star_of_root(H, ri);
  Cyclo th = z_c.theta_value(to_xvec(qvec_neg(rs.roots[ri])), Rat(2));
  if (!th.is_rational())
    throw std::runtime_error("theta(-alpha) not rational at a fixed compact point");
  Rat tv = th.rational_value();
  if (tv != Rat(1) && tv != Rat(-1))
    throw std::runtime_error("theta(-alpha) is not a sign at a fixed compact point");
  return Rat(lam) + Rat(lams) * tv;
}

GWeights to_gweights(const std::map<QVec, long>& m, const Rat& r) {
  GWeights out;
  for (const auto& [s, k] : m) out[{s, r}] += k;
  return out;
}

void drop_zeros(GWeights& w) {
  for (auto it = w.begin(); it != w.end();)
    it = it->second == 0 ? w.erase(it) : std::next(it);
}

void drop_zeros_a(AWeights& w) {
  for (auto it = w.begin(); it != w.end();)
    it = it->second == 0 ? w.erase(it) : std::next(it);
}

// minimal length ambient Weyl index with w(z_c) == target (on E* side)
int minimal_transporter(const RootSystem& rs, const TorusPoint& z_c,
                        const TorusPoint& target) {
  int best = -1;
  size_t best_len = 0;
  for (size_t w = 0; w < rs.W.size(); ++w) {
    if (!(z_c.transformed(rs.W[w].mD) == target)) continue;
    if (best < 0 || rs.W[w].word.size() < best_len) {
      best = (int)w;
      best_len = rs.W[w].word.size();
    }
  }
  if (best < 0) throw std::invalid_argument("target is not in the orbit of z_c");
  return best;
}

}  // namespace

std::string gw_str(const GWeights& w) {
  std::string out;
  for (const auto& [k, m] : w) {
    if (!out.empty()) out += " ";
    out += vec_str(k.first) + ";" + rat_to_string(k.second) + "x" + std::to_string(m);
  }
  return out.empty() ? "(empty)" : out;
}

std::string aw_str(const AWeights& w) {
  std::string out;
  for (const auto& [z, m] : w) {
    if (!out.empty()) out += "  ";
    out += z.str() + " x" + std::to_string(m);
  }
  return out.empty() ? "(empty)" : out;
}

DerivedGraded derive_graded_from_affine(const AffineHecke& H, const TorusPoint& z_c) {
  const RootSystem& rs = H.rs();
  if (!z_c.is_compact()) throw std::invalid_argument("base point must be compact");
  if (z_c.dim() != rs.dim) throw std::invalid_argument("base point dimension mismatch");
  if (!rs.quasi_simply_connected())
    throw std::invalid_argument("reduction requires a quasi simply connected datum");

  std::vector<int> rz;  // positive root indices fixed under reflection
  for (int ri = 0; ri < rs.npos; ++ri)
    if (z_c.transformed(reflection_mD(rs, ri)) == z_c) rz.push_back(ri);

  // simple system: indecomposable positives of R_z
  std::set<QVec> pos;
  for (int ri : rz) pos.insert(rs.roots[ri]);
  std::vector<QVec> sr, sc;
  std::vector<int> sidx;
  for (int ri : rz) {
    bool decomposable = false;
    for (const QVec& b : pos) {
      if (b == rs.roots[ri]) continue;
      if (pos.count(qvec_sub(rs.roots[ri], b))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) {
      sr.push_back(rs.roots[ri]);
      sc.push_back(rs.coroots[ri]);
      sidx.push_back(ri);
    }
  }

  RootSystem sys = RootSystem::from_simples(sr, sc, "Rz(" + rs.label + ")");
  sys.dim = rs.dim;  // rank 0 keeps the ambient dimension
  sys.ensure_weyl();
  if (sys.npos != (int)rz.size())
    throw std::logic_error("fixed roots do not form a closed subsystem");
  for (int i = 0; i < sys.npos; ++i)
    if (!pos.count(sys.roots[i]))
      throw std::logic_error("generated subsystem leaves the fixed root set");

  std::vector<Rat> mu;
  for (int ri : sidx) mu.push_back(mu_at_root(H, z_c, ri));

  GradedHecke G(sys, mu);
  return DerivedGraded{std::move(sys), std::move(mu), std::move(G)};
}

std::vector<TorusPoint> compact_classes(const AffineHecke& H, const TorusPoint& z) {
  const RootSystem& rs = H.rs();
  std::set<TorusPoint> classes;
  for (size_t w = 0; w < rs.W.size(); ++w)
    classes.insert(z.transformed(rs.W[w].mD).compact_part());
  return {classes.begin(), classes.end()};
}

ReductionContext make_reduction_context(const AffineHecke& H, const TorusPoint& z,
                                        const Rat& u, long vexp,
                                        const TorusPoint& z_c) {
  const RootSystem& rs = H.rs();
  if (z.dim() != rs.dim) throw std::invalid_argument("base point dimension mismatch");
  std::set<TorusPoint> oset;
  for (size_t w = 0; w < rs.W.size(); ++w) oset.insert(z.transformed(rs.W[w].mD));
  std::vector<TorusPoint> orbit(oset.begin(), oset.end());
  bool found = false;
  for (const TorusPoint& y : orbit)
    if (y.compact_part() == z_c) found = true;
  if (!z_c.is_compact() || !found)
    throw std::invalid_argument("z_c is not a compact class of the orbit");

  DerivedGraded der = derive_graded_from_affine(H, z_c);
  std::vector<int> stab;
  for (size_t w = 0; w < rs.W.size(); ++w)
    if (z_c.transformed(rs.W[w].mD) == z_c) stab.push_back((int)w);
  // quasi simply connected input: the stabilizer is generated by its reflections
  if (stab.size() != der.sys.W.size())
    throw std::runtime_error("stabilizer of z_c exceeds the derived Weyl group");

  return ReductionContext{&H, u, vexp, z, std::move(orbit), z_c, std::move(stab),
                          std::move(der)};
}

GWeights reduce_weights(const ReductionContext& ctx, const AWeights& wt) {
  GWeights out;
  for (const auto& [y, m] : wt) {
    if (!std::binary_search(ctx.orbit.begin(), ctx.orbit.end(), y))
      throw std::invalid_argument("weight outside the orbit of the base point");
    if (y.compact_part() == ctx.z_c) out[{y.hyp, Rat(ctx.vexp)}] += m;
  }
  drop_zeros(out);
  return out;
}

bool check_weight_symmetry(const ReductionContext& ctx, const AWeights& wt,
                           std::string* diag) {
  const RootSystem& rs = ctx.H->rs();
  bool ok = true;
  std::string msg;
  for (const auto& [s, m] : wt) {
    if (!std::binary_search(ctx.orbit.begin(), ctx.orbit.end(), s))
      throw std::invalid_argument("weight outside the orbit of the base point");
    int w = minimal_transporter(rs, ctx.z_c, s.compact_part());
    TorusPoint pulled = s.transformed(rs.W[rs.weyl_inverse(w)].mD);
    auto it = wt.find(pulled);
    long m2 = it == wt.end() ? 0 : it->second;
    if (m != m2) {
      ok = false;
      msg += "m(" + s.str() + ")=" + std::to_string(m) + " but m(" + pulled.str() +
             ")=" + std::to_string(m2) + "\n";
    }
  }
  if (diag) *diag = msg;
  return ok;
}

FwMap fw_transport(const ReductionContext& src, const ReductionContext& dst) {
  const RootSystem& rs = src.H->rs();
  if (src.H != dst.H) throw std::invalid_argument("contexts live over different algebras");
  FwMap f;
  f.w = minimal_transporter(rs, src.z_c, dst.z_c);
  const RootSystem& a = src.der.sys;
  const RootSystem& b = dst.der.sys;
  if (a.nsimple() != b.nsimple())
    throw std::logic_error("derived systems in one orbit have different ranks");
  for (int s = 0; s < a.nsimple(); ++s) {
    QVec img = rs.act_E(f.w, a.simples[s]);
    int j = -1;
    for (int k = 0; k < b.nsimple(); ++k)
      if (b.simples[k] == img) j = k;
    if (j < 0)
      throw std::logic_error("minimal transporter does not match the simple systems");
    if (!(rs.act_D(f.w, a.simple_cos[s]) == b.simple_cos[j]))
      throw std::logic_error("transported coroot disagrees");
    if (src.der.mu[s] != dst.der.mu[j])
      throw std::logic_error("transported parameter disagrees");
    f.simple_image.push_back(j);
  }
  return f;
}

GHElt fw_apply(const FwMap& f, const ReductionContext& src, const ReductionContext& dst,
               const GHElt& a) {
  const RootSystem& rs = src.H->rs();
  const QMat& wE = rs.W[f.w].mE;
  const QMat& wEi = rs.W[rs.weyl_inverse(f.w)].mE;
  int n = rs.dim;
  std::vector<MPoly> ximg;
  for (int i = 0; i < n; ++i) {
    QVec col(n);
    for (int j = 0; j < n; ++j) col[j] = wE.at(j, i);
    ximg.push_back(MPoly::linear(col));
  }
  MPoly rimg = MPoly::r_var(n);
  GHElt out;
  for (const auto& [vi, p] : a.c) {
    QMat conj = wE * src.der.sys.W[vi].mE * wEi;
    int vj = dst.der.sys.weyl_index_of_matrix(conj);
    if (vj < 0) throw std::logic_error("conjugated Weyl element leaves the target group");
    out.add(vj, p.substituted(ximg, rimg));
  }
  return out;
}

bool fw_check_homomorphism(const FwMap& f, const ReductionContext& src,
                           const ReductionContext& dst, std::string* diag) {
  const GradedHecke& A = src.der.G;
  const GradedHecke& B = dst.der.G;
  int n = src.H->rs().dim;
  bool ok = true;
  std::string msg;
  for (int s = 0; s < A.rs().nsimple(); ++s) {
    GHElt ft = fw_apply(f, src, dst, A.t(s));
    if (!(ft == B.t(f.simple_image[s]))) {
      ok = false;
      msg += "t(" + std::to_string(s) + ") does not map to the matched generator\n";
    }
    for (int i = 0; i < n; ++i) {
      QVec ei = qvec_zero(n);
      ei[i] = Rat(1);
      GHElt lhs = fw_apply(f, src, dst, A.mult(A.x_lin(ei), A.t(s)));
      GHElt rhs = B.mult(fw_apply(f, src, dst, A.x_lin(ei)), ft);
      if (!(lhs == rhs)) {
        ok = false;
        msg += "x_" + std::to_string(i) + " t_" + std::to_string(s) +
               " image breaks the cross relation\n";
      }
    }
  }
  if (diag) *diag = msg;
  return ok;
}

GWeights fw_push_weights(const FwMap& f, const ReductionContext& src, const GWeights& wt) {
  const RootSystem& rs = src.H->rs();
  GWeights out;
  for (const auto& [k, m] : wt) out[{rs.act_D(f.w, k.first), k.second}] += m;
  drop_zeros(out);
  return out;
}

// ---------------------------------------------------------------------------
// reconstruction

namespace {

std::pair<QVec, Rat> max_weight(const RootSystem& rs, const GWeights& wt) {
  bool first = true;
  Rat bestv;
  std::pair<QVec, Rat> best;
  for (const auto& [k, m] : wt) {
    Rat v = rs.rho_delta(k.first);
    if (first || v > bestv) {  // map order keeps the lex least among ties
      first = false;
      bestv = v;
      best = k;
    }
  }
  return best;
}

void subtract_weights(GWeights& block, const GWeights& part) {
  for (const auto& [k, m] : part) {
    auto it = block.find(k);
    if (it == block.end() || it->second < m)
      throw std::runtime_error("weight multiset is not a module restriction");
    it->second -= m;
    if (it->second == 0) block.erase(it);
  }
}

QVec orbit_min_sigma(const RootSystem& rs, const QVec& s) {
  QVec best = s;
  for (size_t w = 0; w < rs.W.size(); ++w) {
    QVec t = rs.act_D((int)w, s);
    if (t < best) best = t;
  }
  return best;
}

ReconTerm make_term(const GradedHecke& G, GradedModule J, const Rat& r, long coeff) {
  GWeights w = to_gweights(gm_weights(G, J), r);
  std::string label = gw_str(w);
  return ReconTerm{std::move(J), coeff, std::move(w), std::move(label)};
}

// peel one factor whose rho-maximal weight is sigma, with P = F(sigma) proper
ReconTerm peel_proper(const GradedHecke& G, GWeights& block, const QVec& sigma,
                      const Rat& r, const std::vector<int>& P) {
  const RootSystem& rs = G.rs();
  std::vector<Rat> mup;
  for (int j : P) mup.push_back(G.mu(j));
  GradedHecke GP(rs.sub_system(P), mup);
  auto sub = reconstruct_modules(GP, block);
  const ReconTerm* pick = nullptr;
  for (const auto& t : sub)
    if (t.wts.count({sigma, r})) {
      pick = &t;
      break;
    }
  if (!pick)
    throw std::runtime_error("maximal weight missing from the parabolic restriction");

  QVec nu = P.empty() ? sigma : qvec_sub(sigma, GP.rs().project_to_cospan(sigma));
  if (!rs.in_a_plus(nu, P))
    throw std::runtime_error("central part of the peel is not strictly dominant");
  if (!P.empty()) {
    for (const auto& [k, m] : pick->wts) {
      if (!(qvec_sub(k.first, GP.rs().project_to_cospan(k.first)) == nu))
        throw std::runtime_error("parabolic factor has a mixed central character");
      if (!GP.rs().weight_tempered(GP.rs().project_to_cospan(k.first)))
        throw std::runtime_error("parabolic factor is not tempered");
    }
  }

  GradedModule J = gm_langlands_J(G, GP, P, pick->mod);
  if (!gm_is_simple(G, J))
    throw std::runtime_error("induced head failed to be simple");
  ReconTerm t = make_term(G, std::move(J), r, 1);
  if (!t.wts.count({sigma, r}))
    throw std::runtime_error("induced head lost the maximal weight");
  subtract_weights(block, t.wts);
  return t;
}

std::vector<ReconTerm> reconstruct_block(const GradedHecke& G, GWeights block) {
  const RootSystem& rs = G.rs();
  long guard = 1;
  for (const auto& [k, m] : block) guard += m;
  std::vector<ReconTerm> out;
  for (long iter = 0; !block.empty(); ++iter) {
    if (iter >= guard) throw std::runtime_error("reconstruction failed to terminate");
    auto [sigma, r] = max_weight(rs, block);
    std::vector<int> P = rs.langlands_subset(sigma);
    if ((int)P.size() < rs.nsimple()) {
      out.push_back(peel_proper(G, block, sigma, r, P));
      continue;
    }
    // fully antidominant direction: retry once through the sign flip
    GWeights flip;
    for (const auto& [k, m] : block) flip[{qvec_neg(k.first), k.second}] += m;
    auto [sig2, r2] = max_weight(rs, flip);
    std::vector<int> P2 = rs.langlands_subset(sig2);
    if ((int)P2.size() < rs.nsimple()) {
      ReconTerm t = peel_proper(G, flip, sig2, r2, P2);
      GradedModule J = gm_pullback(G, gh_map_FT(G), t.mod);
      ReconTerm ft = make_term(G, std::move(J), r, 1);
      subtract_weights(block, ft.wts);
      out.push_back(std::move(ft));
      continue;
    }
    // inside a parabolic recursion sigma can be central (zero projection)
    // while nonzero as an ambient vector; the origin case is the projection
    if (!qvec_is_zero(rs.project_to_cospan(sigma)))
      throw std::runtime_error("no Langlands peel applies to a nonzero weight");
    GradedModule J = gm_principal_series(G, sigma, r);
    if (!gm_is_simple(G, J))
      throw std::runtime_error("origin principal series is not simple here");
    ReconTerm t = make_term(G, std::move(J), r, 1);
    subtract_weights(block, t.wts);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<ReconTerm> reconstruct_modules(const GradedHecke& G, const GWeights& wt) {
  if (wt.empty()) return {};
  const Rat& r = wt.begin()->first.second;
  for (const auto& [k, m] : wt) {
    if (m < 0) throw std::invalid_argument("reconstruction needs a genuine multiset");
    if (k.second != r) throw std::invalid_argument("mixed r values in one multiset");
  }
  if (r == Rat(0)) throw std::invalid_argument("reconstruction requires nonzero r");

  const RootSystem& rs = G.rs();
  std::vector<ReconTerm> all;
  if (rs.nsimple() == 0) {
    for (const auto& [k, m] : wt) {
      GradedModule V;
      V.dim = 1;
      V.r_scalar = k.second;
      for (int i = 0; i < rs.dim; ++i) {
        QMat x(1, 1);
        x.at(0, 0) = k.first[i];
        V.x_mats.push_back(x);
      }
      V.weight_candidates = {k.first};
      all.push_back(make_term(G, std::move(V), r, m));
    }
  } else {
    // split by central character: the Weyl orbit of sigma
    std::map<QVec, GWeights> blocks;
    for (const auto& [k, m] : wt) blocks[orbit_min_sigma(rs, k.first)][k] += m;
    for (auto& [key, block] : blocks) {
      auto part = reconstruct_block(G, std::move(block));
      for (auto& t : part) all.push_back(std::move(t));
    }
  }

  std::map<std::string, ReconTerm> merged;
  for (auto& t : all) {
    auto it = merged.find(t.label);
    if (it == merged.end())
      merged.emplace(t.label, std::move(t));
    else
      it->second.coeff += t.coeff;
  }
  std::vector<ReconTerm> out;
  for (auto& [lab, t] : merged) out.push_back(std::move(t));
  return out;
}

K0Expr k0_of_terms(const std::vector<ReconTerm>& ts) {
  K0Expr e;
  for (const auto& t : ts) e.terms[t.label] += t.coeff;
  for (auto it = e.terms.begin(); it != e.terms.end();)
    it = it->second == 0 ? e.terms.erase(it) : std::next(it);
  return e;
}

K0Expr reconstruct_from_weights(const GradedHecke& G, const GWeights& wt) {
  return k0_of_terms(reconstruct_modules(G, wt));
}

void k0_accumulate(K0Expr& into, const K0Expr& e, long scale) {
  for (const auto& [k, v] : e.terms) {
    into.terms[k] += v * scale;
    if (into.terms[k] == 0) into.terms.erase(k);
  }
}

bool k0_equal(const K0Expr& a, const K0Expr& b) { return a.terms == b.terms; }

std::string k0_str(const K0Expr& e) {
  std::string out;
  for (const auto& [k, v] : e.terms) {
    if (!out.empty()) out += " + ";
    out += std::to_string(v) + "*[" + k + "]";
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// the two K-group identities

TimAzReport verify_tim_equals_az(const ReductionContext& ctx, const AffineModule& M) {
  const AffineHecke& H = *ctx.H;
  if (M.u != ctx.u || M.vexp != ctx.vexp)
    throw std::invalid_argument("module and context disagree on (u, vexp)");
  TimAzReport rep;

  AffineModule Mt = af_twist_by(H, M, [&H](const AHElt& a) { return H.apply_tIM(a); });
  GWeights lhs = reduce_weights(ctx, af_weights(H, Mt));
  GWeights base = reduce_weights(ctx, af_weights(H, M));
  int v0 = ctx.der.sys.w0();
  GWeights rhs;
  for (const auto& [k, m] : base) rhs[{ctx.der.sys.act_D(v0, k.first), k.second}] += m;

  rep.lhs_weights = gw_str(lhs);
  rep.rhs_weights = gw_str(rhs);
  rep.weights_equal = (lhs == rhs);
  try {
    rep.k0_equal = k0_equal(reconstruct_from_weights(ctx.der.G, lhs),
                            reconstruct_from_weights(ctx.der.G, rhs));
  } catch (const std::exception& e) {
    rep.k0_equal = false;
    rep.detail = e.what();
  }
  rep.ok = rep.weights_equal && rep.k0_equal;
  return rep;
}

KatoReport kato_check(const AffineHecke& H, const AffineModule& M) {
  KatoReport rep;
  AffineModule Mt = af_twist_by(H, M, [&H](const AHElt& a) { return H.apply_tIM(a); });
  AWeights lhs = af_weights(H, Mt);

  int n = H.rs().nsimple();
  AWeights rhs;
  std::vector<AWeights> term_w;
  std::vector<long> term_sign;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> P;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) P.push_back(j);
    AffineModule I = af_hom_induce(H, P, af_restrict(P, M));
    long sign = (P.size() % 2) ? -1 : 1;
    AWeights wi = af_weights(H, I);
    for (const auto& [y, m] : wi) rhs[y] += sign * m;
    std::string pl = "{";
    for (size_t i = 0; i < P.size(); ++i) pl += (i ? "," : "") + std::to_string(P[i]);
    pl += "}";
    rep.term_lines.push_back("P=" + pl + " sign=" + (sign > 0 ? std::string("+1") : "-1") +
                             " dim=" + std::to_string(I.dim) + " weights: " + aw_str(wi));
    term_w.push_back(std::move(wi));
    term_sign.push_back(sign);
  }
  drop_zeros_a(rhs);

  rep.lhs_weights = aw_str(lhs);
  rep.rhs_weights = aw_str(rhs);
  rep.weights_equal = (lhs == rhs);

  rep.k0_equal = true;
  try {
    AWeights wm = af_weights(H, M);
    if (wm.empty()) throw std::runtime_error("module has no weights");
    TorusPoint z0 = wm.begin()->first;
    for (const TorusPoint& zc : compact_classes(H, z0)) {
      ReductionContext ctx = make_reduction_context(H, z0, M.u, M.vexp, zc);
      K0Expr L = reconstruct_from_weights(ctx.der.G, reduce_weights(ctx, lhs));
      K0Expr R;
      for (size_t t = 0; t < term_w.size(); ++t) {
        K0Expr e = reconstruct_from_weights(ctx.der.G, reduce_weights(ctx, term_w[t]));
        k0_accumulate(R, e, term_sign[t]);
      }
      if (!k0_equal(L, R)) {
        rep.k0_equal = false;
        rep.detail += "class " + zc.str() + ": lhs " + k0_str(L) + " vs rhs " + k0_str(R) + "\n";
      }
    }
  } catch (const std::exception& e) {
    rep.k0_equal = false;
    rep.detail += e.what();
  }
  rep.ok = rep.weights_equal && rep.k0_equal;
  return rep;
}

}  // namespace hecke
