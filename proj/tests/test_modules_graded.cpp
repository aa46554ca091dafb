#include "hecke/modules_graded.hpp"

#include "doctest.h"

using namespace hecke;

namespace {
GradedHecke gh(const std::string& type, std::vector<Rat> mu) {
  return GradedHecke(RootSystem::named(type), std::move(mu));
}
}

TEST_CASE("A1 principal series: frozen matrices, weights, reducibility locus") {
  GradedHecke G = gh("A1", {Rat(1)});
  QVec sigma = {make_rat(1, 3)};
  GradedModule M = gm_principal_series(G, sigma, Rat(1));
  std::string diag;
  CHECK_MESSAGE(gm_check(G, M, &diag), diag);

  // basis (t_e, t_s): t swaps, x is upper triangular with the r entry
  CHECK(M.t_mats[0].at(0, 0) == 0);
  CHECK(M.t_mats[0].at(1, 0) == 1);
  CHECK(M.x_mats[0].at(0, 0) == make_rat(1, 3));
  CHECK(M.x_mats[0].at(0, 1) == 1);
  CHECK(M.x_mats[0].at(1, 1) == make_rat(-1, 3));
  CHECK(M.x_mats[0].at(1, 0) == 0);

  auto w = gm_weights(G, M);
  CHECK(w.size() == 2);
  CHECK(w.at({make_rat(1, 3)}) == 1);
  CHECK(w.at({make_rat(-1, 3)}) == 1);

  CHECK(gm_is_simple(G, M));

  // sigma(alpha) = +-mu r, here sigma = +-1/2, is exactly the reducible locus
  GradedModule Mr = gm_principal_series(G, {make_rat(1, 2)}, Rat(1));
  CHECK_FALSE(gm_is_simple(G, Mr));
  auto factors = gm_composition_factors(G, Mr);
  CHECK(factors.size() == 2);
  CHECK(factors[0].first.dim == 1);
  CHECK(factors[1].first.dim == 1);

  // the sign character factors: one tempered (t = -1), one not
  bool saw_minus = false, saw_plus = false;
  for (auto& [f, mult] : factors) {
    CHECK(mult == 1);
    if (f.t_mats[0].at(0, 0) == -1) saw_minus = true;
    if (f.t_mats[0].at(0, 0) == 1) saw_plus = true;
  }
  CHECK(saw_minus);
  CHECK(saw_plus);

  GradedModule M0 = gm_principal_series(G, {Rat(0)}, Rat(1));
  auto w0 = gm_weights(G, M0);
  CHECK(w0.size() == 1);
  CHECK(w0.at({Rat(0)}) == 2);
}

TEST_CASE("weight candidates must exhaust the dimension") {
  GradedHecke G = gh("A1", {Rat(1)});
  GradedModule M = gm_principal_series(G, {make_rat(1, 5)}, Rat(1));
  M.weight_candidates.pop_back();
  CHECK_THROWS_AS(gm_weights(G, M), std::runtime_error);
}

TEST_CASE("induction from the empty parabolic is the principal series") {
  GradedHecke G = gh("A2", {Rat(1), Rat(1)});
  RootSystem rsP = G.rs().sub_system({});
  GradedHecke GP(rsP, {});
  QVec sigma = {make_rat(2, 5), make_rat(-1, 7)};
  GradedModule U = gm_character(GP, sigma, Rat(1), 1);
  GradedModule Ind = gm_induce(G, GP, {}, U);
  CHECK(Ind.dim == 6);
  std::string diag;
  CHECK_MESSAGE(gm_check(G, Ind, &diag), diag);
  GradedModule PS = gm_principal_series(G, sigma, Rat(1));
  CHECK(gm_isomorphic(G, Ind, PS));
}

TEST_CASE("A2 principal series at a generic point is simple, at a wall it is not") {
  GradedHecke G = gh("A2", {Rat(1), Rat(1)});
  GradedModule M = gm_principal_series(G, {make_rat(1, 3), make_rat(1, 7)}, Rat(1));
  std::string diag;
  CHECK_MESSAGE(gm_check(G, M, &diag), diag);
  CHECK(gm_is_simple(G, M));
  CHECK(gm_weights(G, M).size() == 6);

  GradedModule Mr = gm_principal_series(G, {Rat(1), Rat(0)}, Rat(1));
  CHECK_FALSE(gm_is_simple(G, Mr));
  auto factors = gm_composition_factors(G, Mr);
  int total = 0;
  for (auto& [f, mult] : factors) {
    CHECK(gm_is_simple(G, f));
    total += f.dim * mult;
  }
  CHECK(total == 6);
  CHECK(factors.size() >= 2);
}

TEST_CASE("Langlands quotient from a proper parabolic of A2") {
  GradedHecke G = gh("A2", {Rat(1), Rat(1)});
  std::vector<int> P = {0};
  RootSystem rsP = G.rs().sub_system(P);
  GradedHecke GP(rsP, {Rat(1)});
  // tempered character of the P block: sigma_U(alpha_0) = -mu r
  QVec sigma_U = {make_rat(-1, 2), Rat(0)};
  GradedModule U = gm_character(GP, sigma_U, Rat(1), -1);
  std::string diag;
  CHECK_MESSAGE(gm_check(GP, U, &diag), diag);
  CHECK(GP.rs().weight_tempered(sigma_U));

  QVec nu = {Rat(1), Rat(2)};  // annihilates alpha_0, positive off P
  CHECK(G.rs().in_a_plus(nu, P));
  GradedModule Ubox = gm_twist(U, nu);
  GradedModule Ind = gm_induce(G, GP, P, Ubox);
  CHECK(Ind.dim == 3);
  CHECK_MESSAGE(gm_check(G, Ind, &diag), diag);

  GradedModule J = gm_langlands_J(G, GP, P, Ubox);
  CHECK(gm_is_simple(G, J));
  auto wj = gm_weights(G, J);
  QVec lead = qvec_add(sigma_U, nu);
  CHECK(wj.count(lead) == 1);
  // the Langlands subset of the leading weight recovers P
  CHECK(G.rs().langlands_subset(lead) == P);
}

TEST_CASE("pullback along the catalog maps transports weights") {
  GradedHecke G = gh("A2", {Rat(1), Rat(1)});
  QVec sigma = {make_rat(1, 3), make_rat(1, 7)};
  GradedModule M = gm_principal_series(G, sigma, Rat(1));

  GHMap az = gh_map_AZ(G);
  GradedModule N = gm_pullback(G, az, M);
  std::string diag;
  CHECK_MESSAGE(gm_check(G, N, &diag), diag);
  auto wn = gm_weights(G, N);
  auto wm = gm_weights(G, M);
  CHECK(wn.size() == wm.size());
  // AZ sends x to w0(x), so weights move by the transpose action
  QMat xt = az.xmat.transpose();
  for (const auto& [w, mult] : wm) CHECK(wn.at(xt.apply(w)) == mult);

  GHMap kap = gh_map_kappa(G);
  GradedModule K = gm_pullback(G, kap, M);
  CHECK(K.r_scalar == -M.r_scalar);
  CHECK_MESSAGE(gm_check(G, K, &diag), diag);
}

TEST_CASE("restriction of an induced module sees the inducing block") {
  GradedHecke G = gh("A2", {Rat(1), Rat(1)});
  std::vector<int> P = {0};
  RootSystem rsP = G.rs().sub_system(P);
  GradedHecke GP(rsP, {Rat(1)});
  QVec sigma_U = {make_rat(-1, 2), Rat(0)};
  GradedModule U = gm_character(GP, sigma_U, Rat(1), -1);
  QVec nu = {Rat(1), Rat(2)};
  GradedModule Ubox = gm_twist(U, nu);
  GradedModule Ind = gm_induce(G, GP, P, Ubox);

  GradedModule R = gm_restrict(G, P, Ind);
  std::string diag;
  CHECK_MESSAGE(gm_check(GP, R, &diag), diag);
  auto factors = gm_composition_factors(GP, R);
  int total = 0;
  bool found_inducing = false;
  for (auto& [f, mult] : factors) {
    total += f.dim * mult;
    if (gm_isomorphic(GP, f, Ubox)) found_inducing = true;
  }
  CHECK(total == 3);
  CHECK(found_inducing);
}
