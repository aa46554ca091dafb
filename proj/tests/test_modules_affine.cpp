#include "hecke/modules_affine.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace hecke;

namespace {

AffineHecke ah(const std::string& type, std::vector<long> lam) {
  return AffineHecke(RootSystem::named(type), std::move(lam));
}

TorusPoint tp(QVec tors, QVec hyp) { return TorusPoint(std::move(tors), std::move(hyp)); }

AffineModule one_dim(const TorusPoint& z, std::vector<Rat> t_vals,
                     std::vector<Rat> x_vals) {
  AffineModule V;
  V.dim = 1;
  for (const Rat& t : t_vals) {
    CMat m(1, 1);
    m.at(0, 0) = Cyclo(t);
    V.T_mats.push_back(m);
  }
  for (const Rat& x : x_vals) {
    CMat m(1, 1);
    m.at(0, 0) = Cyclo(x);
    V.X_mats.push_back(m);
  }
  V.weight_candidates = {z};
  return V;
}

}  // namespace

TEST_CASE("A1 principal series at the trivial character: frozen matrices") {
  AffineHecke H = ah("A1", {1});
  TorusPoint z = tp({Rat(0)}, {Rat(0)});
  AffineModule M = af_principal_series(H, z, Rat(2));
  CHECK(M.dim == 2);
  CHECK(M.v_value_check() == 2);
  std::string diag;
  CHECK_MESSAGE(af_check(H, M, &diag), diag);

  // basis (T_e, T_s); columns are images
  CHECK(M.T_mats[0].at(0, 0) == Cyclo(Rat(0)));
  CHECK(M.T_mats[0].at(1, 0) == Cyclo(Rat(1)));
  CHECK(M.T_mats[0].at(0, 1) == Cyclo(Rat(4)));
  CHECK(M.T_mats[0].at(1, 1) == Cyclo(Rat(3)));
  CHECK(M.X_mats[0].at(0, 0) == Cyclo(Rat(1)));
  CHECK(M.X_mats[0].at(0, 1) == Cyclo(Rat(3)));
  CHECK(M.X_mats[0].at(1, 0) == Cyclo(Rat(0)));
  CHECK(M.X_mats[0].at(1, 1) == Cyclo(Rat(1)));

  // single weight, full multiplicity: the theta action is a Jordan block
  auto w = af_weights(H, M);
  CHECK(w.size() == 1);
  CHECK(w.at(z) == 2);
}

TEST_CASE("A1 principal series at a hyperbolic point: frozen theta action") {
  AffineHecke H = ah("A1", {1});
  TorusPoint z = tp({Rat(0)}, {Rat(1)});
  AffineModule M = af_principal_series(H, z, Rat(2));
  std::string diag;
  CHECK_MESSAGE(af_check(H, M, &diag), diag);

  CHECK(M.X_mats[0].at(0, 0) == Cyclo(Rat(2)));
  CHECK(M.X_mats[0].at(0, 1) == Cyclo(Rat(6)));
  CHECK(M.X_mats[0].at(1, 0) == Cyclo(Rat(0)));
  CHECK(M.X_mats[0].at(1, 1) == Cyclo(make_rat(1, 2)));

  auto w = af_weights(H, M);
  CHECK(w.size() == 2);
  CHECK(w.at(z) == 1);
  CHECK(w.at(tp({Rat(0)}, {Rat(-1)})) == 1);
}

TEST_CASE("induction from the empty parabolic reproduces the principal series") {
  AffineHecke H1 = ah("A1", {1});
  TorusPoint z1 = tp({make_rat(1, 2)}, {Rat(1)});
  AffineModule V1 = one_dim(z1, {}, {z1.theta_value({1}, Rat(2)).rational_value()});
  AffineModule I1 = af_induce(H1, {}, V1);
  AffineModule M1 = af_principal_series(H1, z1, Rat(2));
  CHECK(I1.dim == M1.dim);
  REQUIRE(I1.T_mats.size() == M1.T_mats.size());
  for (size_t s = 0; s < M1.T_mats.size(); ++s) CHECK(I1.T_mats[s] == M1.T_mats[s]);
  for (size_t i = 0; i < M1.X_mats.size(); ++i) CHECK(I1.X_mats[i] == M1.X_mats[i]);

  AffineHecke H2 = ah("A2", {1, 1});
  TorusPoint z2 = tp({Rat(0), Rat(0)}, {Rat(1), Rat(3)});
  AffineModule V2 = one_dim(z2, {},
                            {z2.theta_value({1, 0}, Rat(2)).rational_value(),
                             z2.theta_value({0, 1}, Rat(2)).rational_value()});
  AffineModule I2 = af_induce(H2, {}, V2);
  AffineModule M2 = af_principal_series(H2, z2, Rat(2));
  CHECK(I2.dim == 6);
  for (size_t s = 0; s < M2.T_mats.size(); ++s) CHECK(I2.T_mats[s] == M2.T_mats[s]);
  for (size_t i = 0; i < M2.X_mats.size(); ++i) CHECK(I2.X_mats[i] == M2.X_mats[i]);
}

TEST_CASE("hom induction from the empty parabolic: relations and weights") {
  AffineHecke H = ah("A1", {1});
  TorusPoint z = tp({Rat(0)}, {Rat(1)});
  AffineModule V = one_dim(z, {}, {Rat(2)});
  AffineModule Hm = af_hom_induce(H, {}, V);
  CHECK(Hm.dim == 2);
  std::string diag;
  CHECK_MESSAGE(af_check(H, Hm, &diag), diag);
  auto w = af_weights(H, Hm);
  CHECK(w.size() == 2);
  CHECK(w.at(z) == 1);
  CHECK(w.at(tp({Rat(0)}, {Rat(-1)})) == 1);

  AffineHecke H2 = ah("A2", {1, 1});
  TorusPoint z2 = tp({Rat(0), Rat(0)}, {Rat(1), Rat(3)});
  AffineModule V2 = one_dim(z2, {}, {Rat(2), Rat(8)});
  AffineModule Hm2 = af_hom_induce(H2, {}, V2);
  CHECK(Hm2.dim == 6);
  CHECK_MESSAGE(af_check(H2, Hm2, &diag), diag);
  auto w2 = af_weights(H2, Hm2);
  CHECK(w2.size() == 6);
}

TEST_CASE("A2 principal series: relations at regular and torsion points") {
  AffineHecke H = ah("A2", {1, 1});
  std::string diag;

  TorusPoint zr = tp({Rat(0), Rat(0)}, {Rat(1), Rat(3)});
  AffineModule Mr = af_principal_series(H, zr, Rat(2));
  CHECK(Mr.dim == 6);
  CHECK_MESSAGE(af_check(H, Mr, &diag), diag);
  auto wr = af_weights(H, Mr);
  CHECK(wr.size() == 6);
  for (const auto& [y, m] : wr) CHECK(m == 1);

  TorusPoint zt = tp({make_rat(1, 3), Rat(0)}, {Rat(1), Rat(0)});
  AffineModule Mt = af_principal_series(H, zt, Rat(2));
  CHECK_MESSAGE(af_check(H, Mt, &diag), diag);
  long total = 0;
  for (const auto& [y, m] : af_weights(H, Mt)) total += m;
  CHECK(total == 6);
}

TEST_CASE("parabolic action matches the full action on parabolic elements") {
  AffineHecke H = ah("A2", {1, 1});
  TorusPoint z = tp({Rat(0), Rat(0)}, {Rat(1), Rat(3)});
  AffineModule M = af_principal_series(H, z, Rat(2));
  std::vector<int> P = {0};
  AffineModule R = af_restrict(P, M);
  CHECK(R.T_mats.size() == 1);

  std::vector<AHElt> elems = {H.T(0), H.theta({2, -1}),
                              H.mult(H.T(0), H.theta({1, 1}))};
  for (const AHElt& e : elems) CHECK(af_act_parabolic(H, P, R, e) == M.act(H, e));

  CHECK_THROWS_AS(af_act_parabolic(H, P, R, H.T(1)), std::domain_error);
}

TEST_CASE("induction from a reducible parabolic character splits the class") {
  AffineHecke H = ah("A2", {1, 1});
  // theta_{alpha_0} takes value v^2 = 4 here, so the rank one principal
  // series at z has the one dimensional factors below
  TorusPoint z = tp({Rat(0), Rat(0)}, {Rat(1), Rat(0)});
  TorusPoint sz = tp({Rat(0), Rat(0)}, {Rat(-1), Rat(0)});
  std::vector<int> P = {0};

  AffineModule Vtriv = one_dim(z, {Rat(4)}, {Rat(2), Rat(1)});
  AffineModule Vst = one_dim(sz, {Rat(-1)}, {make_rat(1, 2), Rat(1)});

  AffineModule It = af_induce(H, P, Vtriv);
  AffineModule Is = af_induce(H, P, Vst);
  CHECK(It.dim == 3);
  CHECK(Is.dim == 3);
  std::string diag;
  CHECK_MESSAGE(af_check(H, It, &diag), diag);
  CHECK_MESSAGE(af_check(H, Is, &diag), diag);

  long total = 0;
  for (const auto& [y, m] : af_weights(H, It)) total += m;
  CHECK(total == 3);

  // class additivity: the full principal series is the sum of the two
  // inductions in the Grothendieck group, so traces agree on a battery
  AffineModule M = af_principal_series(H, z, Rat(2));
  for (const AHElt& h : af_trace_battery(H, 10, 5))
    CHECK(M.trace_of(H, h) == It.trace_of(H, h) + Is.trace_of(H, h));

  AffineModule Ht = af_hom_induce(H, P, Vtriv);
  CHECK(Ht.dim == 3);
  CHECK_MESSAGE(af_check(H, Ht, &diag), diag);
}

TEST_CASE("twisting by an involution preserves relations, twice restores") {
  AffineHecke H = ah("A2", {1, 1});
  TorusPoint z = tp({Rat(0), Rat(0)}, {Rat(1), Rat(3)});
  AffineModule M = af_principal_series(H, z, Rat(2));
  auto tim = [&](const AHElt& a) { return H.apply_tIM(a); };

  AffineModule N = af_twist_by(H, M, tim);
  std::string diag;
  CHECK_MESSAGE(af_check(H, N, &diag), diag);
  long total = 0;
  for (const auto& [y, m] : af_weights(H, N)) total += m;
  CHECK(total == 6);

  AffineModule N2 = af_twist_by(H, N, tim);
  for (size_t s = 0; s < M.T_mats.size(); ++s) CHECK(N2.T_mats[s] == M.T_mats[s]);
  for (size_t i = 0; i < M.X_mats.size(); ++i) CHECK(N2.X_mats[i] == M.X_mats[i]);
}

TEST_CASE("weight extraction demands full candidate coverage") {
  AffineHecke H = ah("A1", {1});
  AffineModule M = af_principal_series(H, tp({Rat(0)}, {Rat(1)}), Rat(2));
  M.weight_candidates = {tp({Rat(0)}, {Rat(5)})};
  CHECK_THROWS_AS(af_weights(H, M), std::runtime_error);
}

TEST_CASE("trace battery shape is deterministic") {
  AffineHecke H = ah("A1", {1});
  auto b = af_trace_battery(H, 3, 0);
  // |W| Weyl elements, each theta_{e_i} alone and against every T_w, extras
  CHECK(b.size() == 2 + 1 * (1 + 2) + 3);
}
