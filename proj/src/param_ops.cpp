#include "hecke/param_ops.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hecke {

namespace {

GWeights module_gweights(const GradedHecke& G, const GradedModule& M) {
  GWeights out;
  for (const auto& [s, m] : gm_weights(G, M)) out[{s, M.r_scalar}] += m;
  return out;
}

bool algebra_presentation_equal(const GradedHecke& a, const GradedHecke& b) {
  if (a.rs().dim != b.rs().dim || a.rs().nsimple() != b.rs().nsimple()) return false;
  if (!(a.rs().simples == b.rs().simples)) return false;
  if (!(a.rs().simple_cos == b.rs().simple_cos)) return false;
  for (int s = 0; s < a.rs().nsimple(); ++s)
    if (a.mu(s) != b.mu(s)) return false;
  return true;
}

// Weyl elements of the attached algebra carrying the label set P into the
// simple labels; these implement the admissible relabelings c_w (all
// parabolics with a common Levi are conjugate, and the attached Weyl group
// fixes u by construction). Returns (w, sorted image of P) pairs.
std::vector<std::pair<int, std::vector<int>>> label_transports(
    const RootSystem& rs, const std::vector<int>& P) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (size_t w = 0; w < rs.W.size(); ++w) {
    std::vector<int> img;
    bool ok = true;
    for (int j : P) {
      QVec v = rs.act_E((int)w, rs.simples[j]);
      int hit = -1;
      for (int k = 0; k < rs.nsimple(); ++k)
        if (rs.simples[k] == v) hit = k;
      if (hit < 0) {
        ok = false;
        break;
      }
      img.push_back(hit);
    }
    if (!ok) continue;
    std::sort(img.begin(), img.end());
    out.emplace_back((int)w, std::move(img));
  }
  return out;
}

}  // namespace

const char* param_op_name(ParamOp op) {
  switch (op) {
    case ParamOp::AZp: return "AZ'";
    case ParamOp::FTp: return "FT'";
    case ParamOp::Dp: return "D'";
    case ParamOp::Cp: return "C'";
    case ParamOp::TauCp: return "tauC'";
    case ParamOp::Cinp: return "cin'";
  }
  return "?";
}

ParamOp param_op_from_name(const std::string& name) {
  if (name == "AZ'" || name == "AZ") return ParamOp::AZp;
  if (name == "FT'" || name == "FT") return ParamOp::FTp;
  if (name == "D'" || name == "D") return ParamOp::Dp;
  if (name == "C'" || name == "C") return ParamOp::Cp;
  if (name == "tauC'" || name == "tauC") return ParamOp::TauCp;
  if (name == "cin'" || name == "cin") return ParamOp::Cinp;
  throw std::invalid_argument("unknown operation: " + name);
}

ExtElt ext_inverse(const ThetaModel& m, const ExtElt& a) {
  int k = ((a.k % m.order) + m.order) % m.order;
  int j = (m.order - k) % m.order;
  return ExtElt{m.apply_theta(a.t.inverse(), j), j};
}

bool support_is_triality(const GeometricSupport& s) {
  return s.model.order == 3 && ((s.u.k % 3) + 3) % 3 != 0;
}

void validate_parameter(const GeometricParameter& p) {
  const GeometricSupport& s = p.support;
  if (!s.u.t.is_compact()) throw std::invalid_argument("support point must be compact");
  if (s.u.t.dim() != s.model.rs.dim)
    throw std::invalid_argument("support point dimension mismatch");
  int n = s.algebra.rs().nsimple();
  for (size_t i = 0; i < s.P.size(); ++i) {
    if (s.P[i] < 0 || s.P[i] >= n) throw std::invalid_argument("P label out of range");
    if (i > 0 && s.P[i] <= s.P[i - 1])
      throw std::invalid_argument("P labels must be strictly increasing");
  }
  if (p.module.r_scalar != Rat(-1))
    throw std::invalid_argument("parameter modules carry r = -1");
  std::string diag;
  if (!gm_check(s.algebra, p.module, &diag))
    throw std::invalid_argument("module fails verification: " + diag);
}

GeometricParameter apply_operation(const GeometricParameter& p, ParamOp which) {
  validate_parameter(p);
  const GradedHecke& G = p.support.algebra;
  GeometricParameter q = p;
  switch (which) {
    case ParamOp::AZp:
      q.module = gm_pullback(G, gh_map_AZ(G), p.module);
      break;
    case ParamOp::FTp:
      q.support.u = ext_inverse(p.support.model, p.support.u);
      q.module = gm_pullback(G, gh_map_FT(G), p.module);
      break;
    case ParamOp::Dp:
      q.support.c.dualized = !p.support.c.dualized;
      q.module = gm_pullback(G, gh_map_D(G), p.module);
      break;
    case ParamOp::Cp:
      if (support_is_triality(p.support))
        throw std::domain_error("C' is unavailable on a triality datum");
      q.support.u = ext_inverse(p.support.model, p.support.u);
      q.support.c.dualized = !p.support.c.dualized;
      q.module = gm_pullback(G, gh_map_C(G), p.module);
      break;
    case ParamOp::TauCp:
      q.module = gm_pullback(G, gh_map_D(G), gm_pullback(G, gh_map_C(G), p.module));
      break;
    case ParamOp::Cinp:
      q.support.u = ext_inverse(p.support.model, p.support.u);
      break;
  }
  return q;
}

int support_central_dim(const GeometricSupport& s) {
  return s.algebra.rs().dim - (int)s.P.size();
}

long az_sign(const GeometricSupport&, int d) {
  if (d < 0) throw std::invalid_argument("negative dimension");
  return d % 2 ? -1 : 1;
}

long az_sign(const GeometricSupport& s) { return az_sign(s, support_central_dim(s)); }

bool param_equal(const GeometricParameter& a, const GeometricParameter& b,
                 std::string* diag) {
  auto fail = [&](const std::string& why) {
    if (diag) *diag = why;
    return false;
  };
  const GeometricSupport& sa = a.support;
  const GeometricSupport& sb = b.support;
  if (sa.model.name != sb.model.name || sa.model.order != sb.model.order ||
      !(sa.model.theta == sb.model.theta))
    return fail("ambient data differ");
  if (!sa.model.equal(sa.u, sb.u)) return fail("support points differ");
  if (!(sa.c == sb.c)) return fail("cuspidal labels differ");
  if (!algebra_presentation_equal(sa.algebra, sb.algebra))
    return fail("attached algebras differ");
  if (a.module.r_scalar != b.module.r_scalar) return fail("r components differ");

  const GradedHecke& G = sa.algebra;
  GWeights wa = module_gweights(G, a.module);
  GWeights wb = module_gweights(G, b.module);

  for (const auto& [w, pimg] : label_transports(G.rs(), sa.P)) {
    if (pimg != sb.P) continue;
    GWeights pushed;
    for (const auto& [k, m] : wa) pushed[{G.rs().act_D(w, k.first), k.second}] += m;
    if (!(pushed == wb)) continue;
    // the multisets agree; decide the class by reconstruction when available
    try {
      if (!k0_equal(reconstruct_from_weights(G, pushed), reconstruct_from_weights(G, wb)))
        continue;
    } catch (const std::exception&) {
      if (diag) *diag = "reconstruction unavailable; multiset comparison only";
    }
    return true;
  }
  return fail("modules differ under every admissible relabeling");
}

DualityReport verify_duality_identities(const GeometricParameter& p) {
  validate_parameter(p);
  DualityReport rep;
  const GradedHecke& G = p.support.algebra;

  std::string d1;
  rep.gen_ok = gh_check_composition(G, gh_map_AZ(G),
                                    {gh_map_D(G), gh_map_C(G), gh_map_FT(G)}, &d1);
  if (!rep.gen_ok) rep.detail += "generator identity: " + d1 + "\n";

  GeometricParameter lhs = apply_operation(p, ParamOp::AZp);
  GeometricParameter rhs = apply_operation(
      apply_operation(apply_operation(p, ParamOp::FTp), ParamOp::TauCp), ParamOp::Cinp);
  std::string d2;
  rep.param_ok = param_equal(lhs, rhs, &d2);
  if (!rep.param_ok) rep.detail += "parameter identity: " + d2 + "\n";

  if (support_is_triality(p.support)) {
    rep.skipped_c = true;
    rep.nontriality_ok = true;
    rep.detail += "triality datum: the composite through C' is skipped\n";
  } else {
    GeometricParameter rhs2 = apply_operation(
        apply_operation(apply_operation(p, ParamOp::FTp), ParamOp::Cp), ParamOp::Dp);
    std::string d3;
    rep.nontriality_ok = param_equal(lhs, rhs2, &d3);
    if (!rep.nontriality_ok) rep.detail += "composite through C': " + d3 + "\n";
  }
  rep.ok = rep.gen_ok && rep.param_ok && rep.nontriality_ok;
  return rep;
}

}  // namespace hecke
