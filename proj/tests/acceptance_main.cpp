// Acceptance gate: twelve end-to-end criteria, one verdict line each, exact
// arithmetic throughout (zero tolerance). A criterion with a wall clock
// budget fails when the budget is exceeded. --long-running unlocks the E7
// classification rows; without it they are gated and reported as such.

#include <chrono>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/affine_hecke.hpp"
#include "hecke/graded_hecke.hpp"
#include "hecke/modules_affine.hpp"
#include "hecke/modules_graded.hpp"
#include "hecke/param_ops.hpp"
#include "hecke/reduction.hpp"
#include "hecke/root_system.hpp"
#include "hecke/torus.hpp"

using namespace hecke;
using clk = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool pass = true;
  std::string witness;
  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
};

bool g_long_running = false;

std::string vstr(const QVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

AffineHecke ah(const std::string& t, std::vector<long> lam, std::vector<long> lams = {}) {
  return AffineHecke(RootSystem::named(t), std::move(lam), std::move(lams));
}

GradedHecke gh(const std::string& t, std::vector<Rat> mu) {
  return GradedHecke(RootSystem::named(t), std::move(mu));
}

TorusPoint tp(QVec tors, QVec hyp) { return TorusPoint(std::move(tors), std::move(hyp)); }

GWeights gw(const GradedHecke& G, const GradedModule& M) {
  GWeights out;
  for (const auto& [s, m] : gm_weights(G, M)) out[{s, M.r_scalar}] += m;
  return out;
}

K0Expr k0_of_factors(const GradedHecke& G,
                     const std::vector<std::pair<GradedModule, int>>& fs) {
  K0Expr e;
  for (const auto& [F, mult] : fs) e.terms[gw_str(gw(G, F))] += mult;
  return e;
}

// ------------------------------------------------------------ criterion 1

void c1_presentations(Verdict& v) {
  struct Row {
    const char* type;
    std::vector<long> lam, lams;
  };
  std::vector<Row> rows = {
      {"A1ad", {1}, {}}, {"A1ad", {2}, {}}, {"A2", {1, 1}, {}}, {"A2", {2, 2}, {}},
      {"C2", {1, 1}, {}}, {"C2", {2, 2}, {}}, {"G2", {1, 1}, {}}, {"G2", {2, 2}, {}},
      {"A1", {1}, {1}},  {"A1", {2}, {1}}};
  for (const Row& r : rows) {
    AffineHecke H = ah(r.type, r.lam, r.lams);
    PresReport rep = verify_presentation(H, 6, 0);
    if (!rep.ok) v.fail(H.str() + ": " + rep.first_failure);
  }
}

// ------------------------------------------------------------ criterion 2

void c2_conj_im(Verdict& v) {
  for (const char* t : {"A2", "C2"}) {
    AffineHecke H = ah(t, {1, 1});
    std::string diag;
    if (!check_conj_IM(H, 8, 0, &diag)) v.fail(std::string(t) + ": " + diag);
  }
}

// ------------------------------------------------------------ criterion 3

void c3_map_catalog(Verdict& v) {
  std::vector<std::pair<std::string, std::vector<std::vector<Rat>>>> corpus;
  for (const char* t : {"A1", "A1ad"})
    corpus.push_back({t, {{Rat(1)}, {Rat(2)}, {Rat(0)}, {Rat(3)}}});
  corpus.push_back({"A2",
                    {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(0), Rat(0)}, {Rat(3), Rat(3)}}});
  for (const char* t : {"A1xA1", "B2", "C2", "G2"})
    corpus.push_back({t,
                      {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(0), Rat(0)}, {Rat(1), Rat(2)}}});
  for (const auto& [type, profiles] : corpus) {
    for (const auto& mu : profiles) {
      GradedHecke G = gh(type, mu);
      for (const GHMap& m : gh_map_catalog(G)) {
        GradedHecke tgt(G.rs(), gh_target_mu(G, m));
        std::string diag;
        if (!gh_check_homomorphism(G, tgt, m, &diag))
          v.fail(G.str() + " " + m.name + ": " + diag);
      }
      std::string diag;
      if (!gh_check_composition(G, gh_map_AZ(G),
                                {gh_map_D(G), gh_map_C(G), gh_map_FT(G)}, &diag))
        v.fail(G.str() + " composition: " + diag);
    }
  }
}

// --------------------------------------------------- criteria 4, 5 corpus

struct AffCase {
  AffineHecke H;
  AffineModule M;
  std::string name;
};

std::vector<AffCase> affine_corpus() {
  std::vector<AffCase> out;
  AffineHecke a1 = ah("A1", {1}, {1});
  AffineHecke a2 = ah("A2", {1, 1});
  auto add = [&out](const AffineHecke& H, const TorusPoint& z, const std::string& n) {
    out.push_back({H, af_principal_series(H, z, Rat(2), 1), n});
  };
  add(a1, tp({Rat(0)}, {Rat(3)}), "A1 generic");
  add(a1, tp({Rat(1, 2)}, {Rat(3)}), "A1 torsion fixed");
  add(a1, tp({Rat(0)}, {Rat(1)}), "A1 reducibility point");
  add(a2, tp({Rat(0), Rat(0)}, {Rat(2), Rat(3)}), "A2 generic");
  add(a2, tp({Rat(1, 2), Rat(0)}, {Rat(1), Rat(0)}), "A2 torsion fixed");
  add(a2, tp({Rat(0), Rat(0)}, {Rat(2), Rat(2)}), "A2 reducibility point");
  return out;
}

void c4_kato(Verdict& v) {
  for (const AffCase& c : affine_corpus()) {
    KatoReport rep = kato_check(c.H, c.M);
    if (!rep.ok) v.fail(c.name + ": " + rep.detail);
  }
}

void c5_tim_az(Verdict& v) {
  for (const AffCase& c : affine_corpus()) {
    TorusPoint z = af_weights(c.H, c.M).begin()->first;
    for (const TorusPoint& zc : compact_classes(c.H, z)) {
      ReductionContext ctx = make_reduction_context(c.H, z, Rat(2), 1, zc);
      TimAzReport rep = verify_tim_equals_az(ctx, c.M);
      if (!rep.ok) v.fail(c.name + " at " + zc.str() + ": " + rep.detail);
    }
  }
}

// ------------------------------------------------------------ criterion 6

void c6_reconstruction(Verdict& v) {
  for (const char* type : {"A1", "A1ad", "A1xA1", "A2", "B2", "C2", "G2"}) {
    RootSystem rs = RootSystem::named(type);
    GradedHecke G(rs, std::vector<Rat>(rs.nsimple(), Rat(1)));
    std::uint64_t state = 0xC6C6C6C6ULL ^ std::hash<std::string>{}(type);
    auto next = [&state] {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return state >> 33;
    };
    for (int trial = 0; trial < 20; ++trial) {
      QVec sigma;
      for (int i = 0; i < G.dim(); ++i) {
        long num = (long)(next() % 11) - 5;
        long den = (long)(next() % 3) + 1;
        sigma.push_back(make_rat(num, den));
      }
      GradedModule M = gm_principal_series(G, sigma, Rat(1));
      auto factors = gm_composition_factors(G, M);
      K0Expr direct = k0_of_factors(G, factors);
      K0Expr recon = reconstruct_from_weights(G, gw(G, M));
      if (!k0_equal(recon, direct)) {
        v.fail(G.str() + " sigma=" + vstr(sigma) + ": principal series class");
        return;
      }
      for (const auto& [F, mult] : factors) {
        K0Expr one;
        one.terms[gw_str(gw(G, F))] = 1;
        if (!k0_equal(reconstruct_from_weights(G, gw(G, F)), one)) {
          v.fail(G.str() + " sigma=" + vstr(sigma) + ": factor class");
          return;
        }
      }
    }
  }
}

// ------------------------------------------------------------ criterion 7

// a proper submodule of a 2-dimensional module is a joint eigenline
bool has_joint_eigenline(const QMat& t, const QMat& x) {
  for (long lam : {1L, -1L}) {
    QMat shifted = t;
    shifted.at(0, 0) -= Rat(lam);
    shifted.at(1, 1) -= Rat(lam);
    QMat ker = shifted.kernel();
    if (ker.nc == 2) {
      // t scalar; x has rational spectrum here, any eigenline works
      return true;
    }
    if (ker.nc == 1) {
      QVec vv = {ker.at(0, 0), ker.at(1, 0)};
      QVec xv = x.apply(vv);
      if (xv[0] * vv[1] - xv[1] * vv[0] == 0) return true;
    }
  }
  return false;
}

void c7_locus(Verdict& v) {
  GradedHecke G = gh("A1", {Rat(1)});
  std::set<Rat> grid;
  for (long q = 1; q <= 6; ++q)
    for (long p = -3 * q; p <= 3 * q; ++p) grid.insert(make_rat(p, q));
  for (const Rat& s0 : grid) {
    GradedModule M = gm_principal_series(G, {s0}, Rat(1));
    bool formula = (2 * s0 == 1) || (2 * s0 == -1);
    bool simple = gm_is_simple(G, M);
    bool eigenline = has_joint_eigenline(M.t_mats[0], M.x_mats[0]);
    if (formula == simple || eigenline == simple) {
      v.fail("sigma = " + rat_to_string(s0));
      return;
    }
  }
}

// ------------------------------------------------------------ criterion 8

void c8_table1(Verdict& v) {
  for (const char* type : {"G2", "F4", "E6"}) {
    RootSystem rs = RootSystem::named(type);
    rs.ensure_roots();
    for (const auto& I : RootSystem::levi_table_rows(type))
      if (!rs.levi_subset_check(I))
        v.fail(std::string(type) + ": listed subset fails");
  }
  RootSystem a2 = RootSystem::named("A2");
  a2.ensure_roots();
  if (a2.levi_subset_check({1})) v.fail("A2 {1}: expected a failing subset");
  if (g_long_running) {
    RootSystem e7 = RootSystem::named("E7");
    e7.ensure_roots();
    for (const auto& I : RootSystem::levi_table_rows("E7"))
      if (!e7.levi_subset_check(I)) v.fail("E7: listed subset fails");
  }
}

// ------------------------------------------------------------ criterion 9

void c9_polar(Verdict& v) {
  PolarReport a = run_polar_suite(ThetaModel::a2_flip(), 250, 0);
  PolarReport b = run_polar_suite(ThetaModel::d4_triality(), 250, 1);
  if (!a.all_ok) v.fail("order 2 model: " + a.first_failure);
  if (!b.all_ok) v.fail("order 3 model: " + b.first_failure);
  if (a.checked + b.checked < 500) v.fail("fewer than 500 points checked");
}

// ----------------------------------------------------------- criterion 10

// strictly dominant direction vanishing on P: solve <alpha_j, nu> = [j not in P]
QVec a_plus_direction(const RootSystem& rs, const std::vector<int>& P) {
  std::set<int> inP(P.begin(), P.end());
  QMat A(rs.nsimple(), rs.dim), b(rs.nsimple(), 1);
  for (int j = 0; j < rs.nsimple(); ++j) {
    for (int i = 0; i < rs.dim; ++i) A.at(j, i) = rs.simples[j][i];
    b.at(j, 0) = inP.count(j) ? Rat(0) : Rat(1);
  }
  auto sol = A.solve(b);
  if (!sol) throw std::logic_error("a_plus solve failed");
  QVec nu(rs.dim);
  for (int i = 0; i < rs.dim; ++i) nu[i] = sol->at(i, 0);
  return nu;
}

void c10_langlands_quotients(Verdict& v) {
  struct Inst {
    const char* type;
    std::vector<Rat> mu;
    int p;
    Rat r;
    long nu_scale;
  };
  std::vector<Inst> corpus = {
      {"A2", {Rat(1), Rat(1)}, 0, Rat(1), 1}, {"A2", {Rat(1), Rat(1)}, 0, Rat(1), 2},
      {"A2", {Rat(1), Rat(1)}, 1, Rat(1), 1}, {"A2", {Rat(2), Rat(2)}, 0, Rat(1), 1},
      {"A2", {Rat(1), Rat(1)}, 0, Rat(2), 1}, {"B2", {Rat(1), Rat(1)}, 0, Rat(1), 1},
      {"B2", {Rat(1), Rat(1)}, 1, Rat(1), 1}, {"B2", {Rat(1), Rat(2)}, 0, Rat(1), 1},
      {"B2", {Rat(1), Rat(2)}, 1, Rat(1), 1}, {"B2", {Rat(1), Rat(1)}, 0, Rat(2), 2}};
  for (const Inst& in : corpus) {
    GradedHecke G = gh(in.type, in.mu);
    std::vector<int> P = {in.p};
    GradedHecke GP(G.rs().sub_system(P), {G.mu(in.p)});
    QVec sigma_U = qvec_scale(-(G.mu(in.p) * in.r) / 2, G.rs().simple_cos[in.p]);
    if (!GP.rs().weight_tempered(sigma_U)) {
      v.fail("tempered base point construction failed");
      return;
    }
    GradedModule U = gm_character(GP, sigma_U, in.r, -1);
    QVec nu = qvec_scale(Rat(in.nu_scale), a_plus_direction(G.rs(), P));
    if (!G.rs().in_a_plus(nu, P)) {
      v.fail("twist direction not strictly dominant");
      return;
    }
    GradedModule Ubox = gm_twist(U, nu);
    GradedModule J = gm_langlands_J(G, GP, P, Ubox);
    std::string tag = G.str() + " P={" + std::to_string(in.p) + "}";
    if (!gm_is_simple(G, J)) v.fail(tag + ": quotient not simple");
    QVec lead = qvec_add(sigma_U, nu);
    Rat lead_val = G.rs().rho_delta(lead);
    long at_max = 0;
    for (const auto& [w, mult] : gm_weights(G, J)) {
      Rat val = G.rs().rho_delta(w);
      if (val > lead_val) v.fail(tag + ": weight above the leading value");
      if (val == lead_val) {
        at_max += mult;
        if (G.rs().langlands_subset(w) != P) v.fail(tag + ": maximal weight off P");
        if (w != lead) v.fail(tag + ": equality away from the induced base");
      }
    }
    if (at_max != 1) v.fail(tag + ": leading multiplicity");
  }
}

// ----------------------------------------------------------- criterion 11

void c11_rigidity(Verdict& v) {
  for (const char* type : {"A1", "A2", "B2"}) {
    RootSystem rs = RootSystem::named(type);
    int n = rs.nsimple();
    for (long m : {1L, 2L}) {
      GradedHecke G = gh(type, std::vector<Rat>(n, Rat(m)));
      RigidityReport rep = rigidity_report(G);
      if (!rep.id_only) v.fail(G.str() + ": unexpected automorphism family");
    }
    GradedHecke Z = gh(type, std::vector<Rat>(n, Rat(0)));
    if (rigidity_report(Z).id_only)
      v.fail(std::string(type) + " mu=0: expected a nontrivial family");
  }
}

// ----------------------------------------------------------- criterion 12

GeometricParameter make_param(const std::string& type, std::vector<Rat> mu,
                              GradedModule M, std::vector<int> P = {},
                              QVec utors = {}) {
  RootSystem rs = RootSystem::named(type);
  rs.ensure_weyl();
  if (utors.empty()) utors = qvec_zero(rs.dim);
  ExtElt u{TorusPoint(utors, qvec_zero(rs.dim)), 0};
  QMat id = QMat::id(rs.dim);
  ThetaModel model{rs, id, 1, "plain-" + type};
  GradedHecke G(RootSystem::named(type), std::move(mu));
  return GeometricParameter{
      GeometricSupport{std::move(model), u, std::move(P), {"c0", false}, std::move(G)},
      std::move(M)};
}

void c12_duality(Verdict& v) {
  std::vector<std::pair<std::string, GeometricParameter>> corpus;
  auto ps = [](const std::string& t, std::vector<Rat> mu, QVec sigma,
               std::vector<int> P = {}, QVec utors = {}) {
    GradedHecke G(RootSystem::named(t), mu);
    return make_param(t, mu, gm_principal_series(G, sigma, Rat(-1)), std::move(P),
                      std::move(utors));
  };
  corpus.emplace_back("A1 generic", ps("A1", {Rat(2)}, {Rat(3)}));
  corpus.emplace_back("A1 split point", ps("A1", {Rat(2)}, {Rat(1)}));
  corpus.emplace_back("A1 torsion support", ps("A1", {Rat(2)}, {Rat(3)}, {}, {Rat(1, 2)}));
  corpus.emplace_back("A1ad", ps("A1ad", {Rat(1)}, {Rat(2)}));
  corpus.emplace_back("A1xA1", ps("A1xA1", {Rat(1), Rat(1)}, {Rat(1), Rat(2)}));
  corpus.emplace_back("A2", ps("A2", {Rat(1), Rat(1)}, {Rat(2), Rat(2)}));
  corpus.emplace_back("A2 parabolic label", ps("A2", {Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {0}));
  {
    GradedHecke G = gh("A2", {Rat(1), Rat(1)});
    corpus.emplace_back("A2 one dimensional",
                        make_param("A2", {Rat(1), Rat(1)},
                                   gm_character(G, {Rat(-1), Rat(-1)}, Rat(-1), 1)));
  }
  corpus.emplace_back("B2", ps("B2", {Rat(1), Rat(1)}, {Rat(5), Rat(2)}));
  corpus.emplace_back("C2", ps("C2", {Rat(2), Rat(1)}, {Rat(4), Rat(1)}));
  if (corpus.size() < 10) v.fail("corpus smaller than promised");
  for (auto& [name, p] : corpus) {
    DualityReport rep = verify_duality_identities(p);
    if (!(rep.ok && !rep.skipped_c)) v.fail(name + ": " + rep.detail);
  }
  GeometricParameter tri = [] {
    GradedHecke G(RootSystem::named("A2"), {Rat(1), Rat(1)});
    GradedModule M = gm_principal_series(G, {Rat(2), Rat(2)}, Rat(-1));
    ThetaModel model = ThetaModel::d4_triality();
    ExtElt u{TorusPoint(qvec_zero(4), qvec_zero(4)), 1};
    return GeometricParameter{
        GeometricSupport{std::move(model), u, {}, {"c0", false}, std::move(G)},
        std::move(M)};
  }();
  DualityReport rep = verify_duality_identities(tri);
  if (!(rep.ok && rep.skipped_c && rep.gen_ok && rep.param_ok))
    v.fail("triality datum: " + rep.detail);
}

// ------------------------------------------------------------------ gate

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 = no budget
  std::function<void(Verdict&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--long-running") g_long_running = true;

  double t1_budget = g_long_running ? 660.0 : 60.0;
  std::vector<Criterion> cs = {
      {1, "defining relations across the presentation corpus", 60.0, c1_presentations},
      {2, "twisted involution conjugate to the plain one", 0, c2_conj_im},
      {3, "generator map catalog and the triple composition", 0, c3_map_catalog},
      {4, "alternating induction-restriction identity", 30.0, c4_kato},
      {5, "reduction intertwines the twist with the graded dual", 0, c5_tim_az},
      {6, "weight multisets determine classes (round trip)", 0, c6_reconstruction},
      {7, "rank one reducibility locus against the eigenline oracle", 0, c7_locus},
      {8, "Levi subset classification rows", t1_budget, c8_table1},
      {9, "polar decomposition property suite", 0, c9_polar},
      {10, "Langlands quotients: heads, subsets, leading bound", 0, c10_langlands_quotients},
      {11, "toral rigidity of graded automorphisms", 0, c11_rigidity},
      {12, "duality identities on the parameter corpus", 0, c12_duality},
  };

  int passed = 0;
  for (const Criterion& c : cs) {
    Verdict v;
    clk::time_point t0 = clk::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(clk::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s)
      v.fail("time budget exceeded (" + std::to_string(secs) + " s)");
    std::string note;
    if (c.id == 8 && !g_long_running) note = " [E7 rows gated behind --long-running]";
    if (v.pass) {
      std::printf("[%2d] PASS  %s (%.2f s)%s\n", c.id, c.name, secs, note.c_str());
      ++passed;
    } else {
      std::printf("[%2d] FAIL  %s (%.2f s): %s\n", c.id, c.name, secs,
                  v.witness.c_str());
    }
  }
  std::printf("acceptance: %d/12 criteria passed\n", passed);
  return passed == 12 ? 0 : 1;
}
