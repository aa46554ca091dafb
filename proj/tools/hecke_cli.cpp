// hecke: batch verification front end. One verb per pipeline, JSON documents
// in, a JSON ledger out. Ledgers are byte stable: exact fractions as "p/q"
// strings, object keys sorted, randomized suites pinned to --seed (default 0).
//
// exit codes: 0 all checks passed, 1 a mathematical check failed (the ledger
// carries the witness), 2 unusable input (parse error, schema violation,
// failed precondition), 3 internal invariant violation.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke/affine_hecke.hpp"
#include "hecke/graded_hecke.hpp"
#include "hecke/modules_affine.hpp"
#include "hecke/modules_graded.hpp"
#include "hecke/orbits.hpp"
#include "hecke/param_ops.hpp"
#include "hecke/reduction.hpp"
#include "hecke/root_system.hpp"
#include "hecke/torus.hpp"

using json = nlohmann::json;
using namespace hecke;

namespace {

// ---------------------------------------------------------------- scalars

Rat rat_from_j(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("fraction expected as \"p/q\" string");
  Rat q(j.get<std::string>());
  q.canonicalize();
  return q;
}

json rat_j(const Rat& a) { return rat_to_string(a); }

QVec qvec_from_j(const json& j) {
  QVec v;
  for (const auto& e : j) v.push_back(rat_from_j(e));
  return v;
}

json qvec_j(const QVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_j(x));
  return a;
}

QMat qmat_from_j(const json& j) {
  int nr = (int)j.size();
  int nc = nr ? (int)j.at(0).size() : 0;
  QMat m(nr, nc);
  for (int i = 0; i < nr; ++i) {
    if ((int)j.at(i).size() != nc) throw std::invalid_argument("ragged matrix");
    for (int k = 0; k < nc; ++k) m.at(i, k) = rat_from_j(j.at(i).at(k));
  }
  return m;
}

json qmat_j(const QMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.nr; ++i) {
    json r = json::array();
    for (int k = 0; k < m.nc; ++k) r.push_back(rat_j(m.at(i, k)));
    rows.push_back(r);
  }
  return rows;
}

// cyclotomic scalar: plain fraction, or {"cond": m, "coeffs": [...]}
Cyclo cyclo_from_j(const json& j) {
  if (j.is_string() || j.is_number_integer()) return Cyclo(rat_from_j(j));
  long m = j.at("cond").get<long>();
  Cyclo acc;
  const json& c = j.at("coeffs");
  for (size_t k = 0; k < c.size(); ++k)
    acc += Cyclo(rat_from_j(c.at(k))) * Cyclo::zeta(m, (long)k);
  return acc;
}

CMat cmat_from_j(const json& j) {
  int nr = (int)j.size();
  int nc = nr ? (int)j.at(0).size() : 0;
  CMat m(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int k = 0; k < nc; ++k) m.at(i, k) = cyclo_from_j(j.at(i).at(k));
  return m;
}

TorusPoint point_from_j(const json& j) {
  QVec tors = j.contains("mod1") ? qvec_from_j(j.at("mod1")) : QVec{};
  QVec hyp = j.contains("hyp") ? qvec_from_j(j.at("hyp")) : QVec{};
  if (tors.empty()) tors = qvec_zero(hyp.size());
  if (hyp.empty()) hyp = qvec_zero(tors.size());
  return TorusPoint(std::move(tors), std::move(hyp));
}

json point_j(const TorusPoint& p) {
  return json{{"mod1", qvec_j(p.tors)}, {"hyp", qvec_j(p.hyp)}};
}

// ------------------------------------------------------------- structures

RootSystem system_from_j(const json& j) {
  if (j.is_string()) return RootSystem::named(j.get<std::string>());
  if (j.contains("type")) return RootSystem::named(j.at("type").get<std::string>());
  std::vector<QVec> simples, cosim;
  for (const auto& e : j.at("simples")) simples.push_back(qvec_from_j(e));
  for (const auto& e : j.at("simple_coroots")) cosim.push_back(qvec_from_j(e));
  RootSystem rs = RootSystem::from_simples(std::move(simples), std::move(cosim),
                                           j.value("label", std::string("custom")));
  if (j.contains("dim")) rs.dim = j.at("dim").get<int>();
  return rs;
}

json system_j(const RootSystem& rs) {
  json d;
  d["version"] = 1;
  d["label"] = rs.label;
  d["dim"] = rs.dim;
  json sims = json::array(), cos = json::array();
  for (const QVec& s : rs.simples) sims.push_back(qvec_j(s));
  for (const QVec& s : rs.simple_cos) cos.push_back(qvec_j(s));
  d["simples"] = sims;
  d["simple_coroots"] = cos;
  if (!rs.simples.empty()) d["cartan"] = qmat_j(rs.cartan());
  return d;
}

AffineHecke affine_from_j(const json& j) {
  RootSystem rs = j.contains("datum") ? system_from_j(j.at("datum")) : system_from_j(j);
  std::vector<long> lam, lams;
  for (const auto& e : j.at("lambda")) lam.push_back(e.get<long>());
  if (j.contains("lambda_star"))
    for (const auto& e : j.at("lambda_star")) lams.push_back(e.get<long>());
  return AffineHecke(std::move(rs), std::move(lam), std::move(lams));
}

GradedHecke graded_from_j(const json& j) {
  RootSystem rs = j.contains("datum") ? system_from_j(j.at("datum")) : system_from_j(j);
  std::vector<Rat> mu;
  for (const auto& e : j.at("mu")) mu.push_back(rat_from_j(e));
  return GradedHecke(std::move(rs), std::move(mu));
}

std::vector<int> ints_from_j(const json& j) {
  std::vector<int> v;
  for (const auto& e : j) v.push_back(e.get<int>());
  return v;
}

AffineModule af_module_from_j(const AffineHecke& H, const json& j) {
  if (j.contains("construct")) {
    std::string c = j.at("construct").get<std::string>();
    TorusPoint z = point_from_j(j.at("z"));
    Rat u = j.contains("u") ? rat_from_j(j.at("u")) : Rat(2);
    long vexp = j.value("vexp", 1L);
    if (c == "principal-series") return af_principal_series(H, z, u, vexp);
    if (c == "hom-induced") {
      std::vector<int> P = ints_from_j(j.at("P"));
      return af_hom_induce(H, P, af_restrict(P, af_principal_series(H, z, u, vexp)));
    }
    throw std::invalid_argument("unknown affine module construct: " + c);
  }
  AffineModule M;
  M.dim = j.at("dim").get<int>();
  for (const auto& e : j.at("T_mats")) M.T_mats.push_back(cmat_from_j(e));
  for (const auto& e : j.at("X_mats")) M.X_mats.push_back(cmat_from_j(e));
  M.u = rat_from_j(j.at("u"));
  M.vexp = j.value("vexp", 1L);
  if (j.contains("candidates"))
    for (const auto& e : j.at("candidates")) M.weight_candidates.push_back(point_from_j(e));
  return M;
}

GradedModule gm_module_from_j(const GradedHecke& G, const json& j) {
  if (j.contains("construct")) {
    std::string c = j.at("construct").get<std::string>();
    QVec sigma = qvec_from_j(j.at("sigma"));
    Rat r = rat_from_j(j.at("r"));
    if (c == "principal-series") return gm_principal_series(G, sigma, r);
    if (c == "character") return gm_character(G, sigma, r, j.value("tsign", 1));
    throw std::invalid_argument("unknown graded module construct: " + c);
  }
  GradedModule M;
  M.dim = j.at("dim").get<int>();
  for (const auto& e : j.at("t_mats")) M.t_mats.push_back(qmat_from_j(e));
  for (const auto& e : j.at("x_mats")) M.x_mats.push_back(qmat_from_j(e));
  M.r_scalar = rat_from_j(j.at("r"));
  if (j.contains("candidates"))
    for (const auto& e : j.at("candidates")) M.weight_candidates.push_back(qvec_from_j(e));
  return M;
}

json gm_module_j(const GradedModule& M) {
  json d;
  d["dim"] = M.dim;
  json t = json::array(), x = json::array(), cand = json::array();
  for (const QMat& m : M.t_mats) t.push_back(qmat_j(m));
  for (const QMat& m : M.x_mats) x.push_back(qmat_j(m));
  for (const QVec& v : M.weight_candidates) cand.push_back(qvec_j(v));
  d["t_mats"] = t;
  d["x_mats"] = x;
  d["r"] = rat_j(M.r_scalar);
  d["candidates"] = cand;
  return d;
}

ThetaModel plain_model_of(const RootSystem& rs) {
  RootSystem copy = rs;
  QMat id = QMat::id(rs.dim);
  return ThetaModel{std::move(copy), id, 1, "plain-" + rs.label};
}

ThetaModel model_by_name(const std::string& name) {
  if (name == "A2-flip") return ThetaModel::a2_flip();
  if (name == "D4-triality") return ThetaModel::d4_triality();
  if (name.rfind("plain-", 0) == 0)
    return plain_model_of(RootSystem::named(name.substr(6)));
  throw std::invalid_argument("unknown model: " + name);
}

GeometricParameter param_from_j(const json& j) {
  GradedHecke G = graded_from_j(j.at("algebra"));
  ThetaModel model = j.contains("model")
                         ? model_by_name(j.at("model").get<std::string>())
                         : plain_model_of(G.rs());
  const json& ju = j.at("u");
  ExtElt u = ju.contains("point")
                 ? ExtElt{point_from_j(ju.at("point")), ju.value("k", 0)}
                 : ExtElt{point_from_j(ju), 0};
  std::vector<int> P = j.contains("P") ? ints_from_j(j.at("P")) : std::vector<int>{};
  CuspidalLabel c{j.at("c").at("id").get<std::string>(),
                  j.at("c").value("dualized", false)};
  GradedModule M = gm_module_from_j(G, j.at("module"));
  return GeometricParameter{
      GeometricSupport{std::move(model), u, std::move(P), std::move(c), std::move(G)},
      std::move(M)};
}

json param_j(const GeometricParameter& p) {
  json d;
  d["model"] = p.support.model.name;
  d["u"] = json{{"point", point_j(p.support.u.t)}, {"k", p.support.u.k}};
  d["P"] = p.support.P;
  d["c"] = json{{"id", p.support.c.id}, {"dualized", p.support.c.dualized}};
  json alg;
  alg["datum"] = system_j(p.support.algebra.rs());
  json mu = json::array();
  for (int s = 0; s < p.support.algebra.rs().nsimple(); ++s)
    mu.push_back(rat_j(p.support.algebra.mu(s)));
  alg["mu"] = mu;
  d["algebra"] = alg;
  d["module"] = gm_module_j(p.module);
  return d;
}

// --------------------------------------------------------------- ledgers

json gweights_j(const GWeights& w) {
  json a = json::array();
  for (const auto& [k, m] : w)
    a.push_back(json{{"sigma", qvec_j(k.first)}, {"r", rat_j(k.second)}, {"mult", m}});
  return a;
}

json aweights_j(const AWeights& w) {
  json a = json::array();
  for (const auto& [p, m] : w) a.push_back(json{{"point", point_j(p)}, {"mult", m}});
  return a;
}

json k0_j(const K0Expr& e) {
  json d = json::object();
  for (const auto& [label, c] : e.terms) d[label] = c;
  return d;
}

GWeights gm_gweights(const GradedHecke& G, const GradedModule& M) {
  GWeights out;
  for (const auto& [s, m] : gm_weights(G, M)) out[{s, M.r_scalar}] += m;
  return out;
}

K0Expr k0_of_factors(const GradedHecke& G,
                     const std::vector<std::pair<GradedModule, int>>& fs) {
  K0Expr e;
  for (const auto& [F, mult] : fs) e.terms[gw_str(gm_gweights(G, F))] += mult;
  return e;
}

struct Emit {
  std::string out_path;
  int write(const json& doc, int status) const {
    std::string s = doc.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << s;
    } else {
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot open output path: " + out_path);
      f << s;
    }
    return status;
  }
};

json load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read input: " + path);
  return json::parse(f);
}

// ----------------------------------------------------------------- verbs

int cmd_verify_presentation(const std::string& algebra, std::uint64_t seed,
                            const Emit& emit) {
  AffineHecke H = affine_from_j(load_file(algebra));
  PresReport rep = verify_presentation(H, 6, seed);
  json d;
  d["command"] = "verify-presentation";
  d["algebra"] = H.str();
  d["checks"] = rep.checks;
  d["ok"] = rep.ok;
  if (!rep.ok) d["witness"] = rep.first_failure;
  return emit.write(d, rep.ok ? 0 : 1);
}

int cmd_gh_check(const std::string& algebra, const Emit& emit) {
  GradedHecke G = graded_from_j(load_file(algebra));
  json maps = json::array();
  bool all = true;
  for (const GHMap& m : gh_map_catalog(G)) {
    GradedHecke tgt(G.rs(), gh_target_mu(G, m));
    std::string diag;
    bool ok = gh_check_homomorphism(G, tgt, m, &diag);
    json row;
    row["name"] = m.name;
    row["target_mu"] = [&] {
      json a = json::array();
      for (const Rat& x : gh_target_mu(G, m)) a.push_back(rat_j(x));
      return a;
    }();
    row["ok"] = ok;
    if (!ok) row["witness"] = diag;
    maps.push_back(row);
    all = all && ok;
  }
  std::string cdiag;
  bool comp =
      gh_check_composition(G, gh_map_AZ(G), {gh_map_D(G), gh_map_C(G), gh_map_FT(G)}, &cdiag);
  json d;
  d["command"] = "gh-check";
  d["algebra"] = G.str();
  d["maps"] = maps;
  d["az_is_d_c_ft"] = comp;
  if (!comp) d["composition_witness"] = cdiag;
  d["ok"] = all && comp;
  return emit.write(d, d["ok"].get<bool>() ? 0 : 1);
}

int cmd_module_weights(const std::string& algebra, const std::string& module,
                       const Emit& emit) {
  json ja = load_file(algebra);
  json jm = load_file(module);
  json d;
  d["command"] = "module-weights";
  if (ja.contains("lambda")) {
    AffineHecke H = affine_from_j(ja);
    AffineModule M = af_module_from_j(H, jm);
    std::string diag;
    bool ok = af_check(H, M, &diag);
    d["kind"] = "affine";
    d["dim"] = M.dim;
    d["u"] = rat_j(M.u);
    d["vexp"] = M.vexp;
    d["ok"] = ok;
    if (!ok) {
      d["witness"] = diag;
      return emit.write(d, 1);
    }
    d["weights"] = aweights_j(af_weights(H, M));
    return emit.write(d, 0);
  }
  GradedHecke G = graded_from_j(ja);
  GradedModule M = gm_module_from_j(G, jm);
  std::string diag;
  bool ok = gm_check(G, M, &diag);
  d["kind"] = "graded";
  d["dim"] = M.dim;
  d["r"] = rat_j(M.r_scalar);
  d["ok"] = ok;
  if (!ok) {
    d["witness"] = diag;
    return emit.write(d, 1);
  }
  d["weights"] = gweights_j(gm_gweights(G, M));
  return emit.write(d, 0);
}

int cmd_semisimplify(const std::string& algebra, const std::string& module,
                     const Emit& emit) {
  GradedHecke G = graded_from_j(load_file(algebra));
  GradedModule M = gm_module_from_j(G, load_file(module));
  std::string diag;
  if (!gm_check(G, M, &diag)) throw std::invalid_argument("module fails verification: " + diag);
  auto factors = gm_composition_factors(G, M);
  json fs = json::array();
  for (const auto& [F, mult] : factors) {
    GWeights w = gm_gweights(G, F);
    fs.push_back(json{{"dim", F.dim},
                      {"mult", mult},
                      {"weights", gweights_j(w)},
                      {"label", gw_str(w)}});
  }
  json d;
  d["command"] = "semisimplify";
  d["dim"] = M.dim;
  d["factors"] = fs;
  d["k0"] = k0_j(k0_of_factors(G, factors));
  d["ok"] = true;
  return emit.write(d, 0);
}

ReductionContext context_for(const AffineHecke& H, const AffineModule& M,
                             const std::string& zc_path) {
  AWeights wt = af_weights(H, M);
  if (wt.empty()) throw std::invalid_argument("module has no weights");
  TorusPoint z = wt.begin()->first;
  TorusPoint z_c = zc_path.empty() ? compact_classes(H, z).front()
                                   : point_from_j(load_file(zc_path));
  return make_reduction_context(H, z, M.u, M.vexp, z_c);
}

int cmd_reduce(const std::string& algebra, const std::string& module,
               const std::string& zc, const Emit& emit) {
  AffineHecke H = affine_from_j(load_file(algebra));
  AffineModule M = af_module_from_j(H, load_file(module));
  ReductionContext ctx = context_for(H, M, zc);
  AWeights wt = af_weights(H, M);
  std::string sym_diag;
  bool sym = check_weight_symmetry(ctx, wt, &sym_diag);
  json d;
  d["command"] = "reduce";
  d["orbit_size"] = ctx.orbit.size();
  json classes = json::array();
  for (const TorusPoint& c : compact_classes(H, ctx.z_base)) classes.push_back(point_j(c));
  d["compact_classes"] = classes;
  d["z_c"] = point_j(ctx.z_c);
  json der;
  der["system"] = system_j(ctx.der.sys);
  json mu = json::array();
  for (const Rat& x : ctx.der.mu) mu.push_back(rat_j(x));
  der["mu"] = mu;
  der["weyl_order"] = ctx.der.sys.W.size();
  d["derived"] = der;
  d["input_weights"] = aweights_j(wt);
  d["reduced_weights"] = gweights_j(reduce_weights(ctx, wt));
  d["symmetry_ok"] = sym;
  if (!sym) d["witness"] = sym_diag;
  d["ok"] = sym;
  return emit.write(d, sym ? 0 : 1);
}

int cmd_reconstruct(const std::string& algebra, const std::string& module,
                    const Emit& emit) {
  GradedHecke G = graded_from_j(load_file(algebra));
  GradedModule M = gm_module_from_j(G, load_file(module));
  std::string diag;
  if (!gm_check(G, M, &diag)) throw std::invalid_argument("module fails verification: " + diag);
  GWeights wt = gm_gweights(G, M);
  auto terms = reconstruct_modules(G, wt);
  json ts = json::array();
  for (const ReconTerm& t : terms)
    ts.push_back(json{{"label", t.label}, {"coeff", t.coeff}, {"dim", t.mod.dim}});
  K0Expr recon = k0_of_terms(terms);
  K0Expr direct = k0_of_factors(G, gm_composition_factors(G, M));
  bool ok = k0_equal(recon, direct);
  json d;
  d["command"] = "reconstruct";
  d["weights"] = gweights_j(wt);
  d["terms"] = ts;
  d["k0"] = k0_j(recon);
  d["round_trip_ok"] = ok;
  if (!ok) d["k0_direct"] = k0_j(direct);
  d["ok"] = ok;
  return emit.write(d, ok ? 0 : 1);
}

int cmd_kato(const std::string& algebra, const std::string& module, const Emit& emit) {
  AffineHecke H = affine_from_j(load_file(algebra));
  AffineModule M = af_module_from_j(H, load_file(module));
  KatoReport rep = kato_check(H, M);
  json d;
  d["command"] = "kato";
  d["weights_equal"] = rep.weights_equal;
  d["k0_equal"] = rep.k0_equal;
  d["lhs_weights"] = rep.lhs_weights;
  d["rhs_weights"] = rep.rhs_weights;
  d["terms"] = rep.term_lines;
  d["ok"] = rep.ok;
  if (!rep.ok) d["witness"] = rep.detail;
  return emit.write(d, rep.ok ? 0 : 1);
}

int cmd_tim_az(const std::string& algebra, const std::string& module,
               const std::string& zc, const Emit& emit) {
  AffineHecke H = affine_from_j(load_file(algebra));
  AffineModule M = af_module_from_j(H, load_file(module));
  ReductionContext ctx = context_for(H, M, zc);
  TimAzReport rep = verify_tim_equals_az(ctx, M);
  json d;
  d["command"] = "tim-az";
  d["z_c"] = point_j(ctx.z_c);
  d["weights_equal"] = rep.weights_equal;
  d["k0_equal"] = rep.k0_equal;
  d["lhs_weights"] = rep.lhs_weights;
  d["rhs_weights"] = rep.rhs_weights;
  d["ok"] = rep.ok;
  if (!rep.ok) d["witness"] = rep.detail;
  return emit.write(d, rep.ok ? 0 : 1);
}

// Cartan of the sub-diagram on I matches a named type under some relabeling
std::string induced_type(const RootSystem& rs, const std::vector<int>& I) {
  RootSystem sub = rs.sub_system(I);
  QMat c = sub.cartan();
  int n = (int)I.size();
  for (const std::string& t : RootSystem::known_types()) {
    RootSystem cand = RootSystem::named(t);
    if (cand.nsimple() != n) continue;
    QMat cc = cand.cartan();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      bool match = true;
      for (int i = 0; i < n && match; ++i)
        for (int j = 0; j < n && match; ++j)
          if (c.at(i, j) != cc.at(perm[i], perm[j])) match = false;
      if (match) return t;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return "unrecognized";
}

int cmd_table1(const std::string& type, const std::string& subset, bool long_running,
               const Emit& emit) {
  if (type == "E7" && !long_running)
    throw std::invalid_argument("E7 requires --long-running");
  RootSystem rs = RootSystem::named(type);
  rs.ensure_roots();
  std::vector<std::vector<int>> subsets;
  if (subset == "all") {
    subsets = RootSystem::levi_table_rows(type);
  } else if (!subset.empty() && (std::isdigit((unsigned char)subset[0]))) {
    std::vector<int> I;
    std::stringstream ss(subset);
    std::string tok;
    while (std::getline(ss, tok, ',')) I.push_back(std::stoi(tok));
    subsets.push_back(I);
  } else {
    // a named sub-diagram type selects every subset inducing it
    std::vector<int> idx(rs.nsimple());
    for (int i = 0; i < rs.nsimple(); ++i) idx[i] = i;
    for (std::uint32_t mask = 1; mask < (1u << rs.nsimple()); ++mask) {
      std::vector<int> I;
      for (int i = 0; i < rs.nsimple(); ++i)
        if (mask & (1u << i)) I.push_back(i);
      if (induced_type(rs, I) == subset) subsets.push_back(I);
    }
    if (subsets.empty())
      throw std::invalid_argument("no subset of " + type + " induces type " + subset);
  }
  json rows = json::array();
  bool all = true;
  for (const auto& I : subsets) {
    size_t visited = 0;
    bool holds = rs.levi_subset_check(I, 0, &visited);
    rows.push_back(json{{"subset", I},
                        {"induced", induced_type(rs, I)},
                        {"holds", holds},
                        {"orbit_nodes", visited}});
    all = all && holds;
  }
  json d;
  d["command"] = "table1";
  d["type"] = type;
  d["rows"] = rows;
  d["ok"] = all;
  return emit.write(d, all ? 0 : 1);
}

int cmd_polar(const std::string& model, int count, std::uint64_t seed, const Emit& emit) {
  ThetaModel m = model_by_name(model);
  PolarReport rep = run_polar_suite(m, count, seed);
  json d;
  d["command"] = "polar";
  d["model"] = m.name;
  d["order"] = m.order;
  d["checked"] = rep.checked;
  d["ok"] = rep.all_ok;
  if (!rep.all_ok) d["witness"] = rep.first_failure;
  return emit.write(d, rep.all_ok ? 0 : 1);
}

int cmd_duality_check(const std::string& param, const Emit& emit) {
  GeometricParameter p = param_from_j(load_file(param));
  DualityReport rep = verify_duality_identities(p);
  json d;
  d["command"] = "duality-check";
  d["generator_identity"] = rep.gen_ok;
  d["parameter_identity"] = rep.param_ok;
  d["composite_through_C"] = rep.skipped_c ? json("skipped") : json(rep.nontriality_ok);
  d["az_sign"] = az_sign(p.support);
  d["ok"] = rep.ok;
  if (!rep.detail.empty()) d["detail"] = rep.detail;
  return emit.write(d, rep.ok ? 0 : 1);
}

int cmd_param_apply(const std::string& param, const std::string& op, const Emit& emit) {
  GeometricParameter p = param_from_j(load_file(param));
  GeometricParameter q = apply_operation(p, param_op_from_name(op));
  json d;
  d["command"] = "param-apply";
  d["op"] = param_op_name(param_op_from_name(op));
  d["parameter"] = param_j(q);
  d["ok"] = true;
  return emit.write(d, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suite for affine and graded Hecke algebras"};
  app.require_subcommand(1);

  std::string algebra, module, param, zc, out, subset = "all", type, op;
  std::string model = "plain-A2";
  std::uint64_t seed = 0;
  bool long_running = false;
  int count = 500;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", out, "write the ledger to this path instead of stdout");
    c->add_option("--seed", seed, "seed for randomized batteries (default 0)");
  };

  CLI::App* vp = app.add_subcommand("verify-presentation", "check the defining relations");
  vp->add_option("--algebra", algebra)->required();
  add_common(vp);

  CLI::App* gc = app.add_subcommand("gh-check", "check the graded map catalog");
  gc->add_option("--algebra", algebra)->required();
  add_common(gc);

  CLI::App* mw = app.add_subcommand("module-weights", "verify a module and list weights");
  mw->add_option("--algebra", algebra)->required();
  mw->add_option("--module", module)->required();
  add_common(mw);

  CLI::App* ss = app.add_subcommand("semisimplify", "composition factors of a graded module");
  ss->add_option("--algebra", algebra)->required();
  ss->add_option("--module", module)->required();
  add_common(ss);

  CLI::App* rd = app.add_subcommand("reduce", "reduce affine weights at a compact class");
  rd->add_option("--algebra", algebra)->required();
  rd->add_option("--module", module)->required();
  rd->add_option("--zc", zc, "compact base point (defaults to the first class)");
  add_common(rd);

  CLI::App* rc = app.add_subcommand("reconstruct", "rebuild a class from its weights");
  rc->add_option("--algebra", algebra)->required();
  rc->add_option("--module", module)->required();
  add_common(rc);

  CLI::App* kt = app.add_subcommand("kato", "alternating induction-restriction identity");
  kt->add_option("--algebra", algebra)->required();
  kt->add_option("--module", module)->required();
  add_common(kt);

  CLI::App* ta = app.add_subcommand("tim-az", "twisted involution against the graded dual");
  ta->add_option("--algebra", algebra)->required();
  ta->add_option("--module", module)->required();
  ta->add_option("--zc", zc, "compact base point (defaults to the first class)");
  add_common(ta);

  CLI::App* t1 = app.add_subcommand("table1", "Levi subset classification rows");
  t1->add_option("--type", type)->required();
  t1->add_option("--subset", subset,
                 "'all', comma separated simple indices, or a sub-diagram type");
  t1->add_flag("--long-running", long_running, "allow the E7 rows");
  add_common(t1);

  CLI::App* pl = app.add_subcommand("polar", "polar decomposition property suite");
  pl->add_option("--model", model, "plain-<type>, A2-flip, or D4-triality");
  pl->add_option("--count", count, "number of random points");
  add_common(pl);

  CLI::App* dc = app.add_subcommand("duality-check", "verify the duality identities");
  dc->add_option("--param", param)->required();
  add_common(dc);

  CLI::App* pa = app.add_subcommand("param-apply", "apply an operation to a parameter");
  pa->add_option("--param", param)->required();
  pa->add_option("--op", op, "AZ', FT', D', C', tauC', cin'")->required();
  add_common(pa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Emit emit{out};
  try {
    if (*vp) return cmd_verify_presentation(algebra, seed, emit);
    if (*gc) return cmd_gh_check(algebra, emit);
    if (*mw) return cmd_module_weights(algebra, module, emit);
    if (*ss) return cmd_semisimplify(algebra, module, emit);
    if (*rd) return cmd_reduce(algebra, module, zc, emit);
    if (*rc) return cmd_reconstruct(algebra, module, emit);
    if (*kt) return cmd_kato(algebra, module, emit);
    if (*ta) return cmd_tim_az(algebra, module, zc, emit);
    if (*t1) return cmd_table1(type, subset, long_running, emit);
    if (*pl) return cmd_polar(model, count, seed, emit);
    if (*dc) return cmd_duality_check(param, emit);
    if (*pa) return cmd_param_apply(param, op, emit);
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
