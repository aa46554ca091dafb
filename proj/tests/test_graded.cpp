#include "hecke/graded_hecke.hpp"

#include "doctest.h"

using namespace hecke;

namespace {
GradedHecke named_gh(const std::string& type, std::vector<Rat> mu) {
  return GradedHecke(RootSystem::named(type), std::move(mu));
}
}

TEST_CASE("graded relations in rank one") {
  GradedHecke G = named_gh("A1", {Rat(1)});
  int n = G.nvars();
  MPoly x = MPoly::x(n, 0), r = MPoly::r_var(n);

  CHECK(G.mult(G.t(0), G.t(0)) == G.one());

  // x t = t s(x) + mu <x, alpha^vee> r with s(x) = -x, <e1, alpha^vee> = 1
  GHElt lhs = G.mult(G.poly(x), G.t(0));
  GHElt rhs = G.mult(G.t(0), G.poly(-x)) + G.poly(r);
  CHECK(lhs == rhs);

  // even powers are s-invariant and commute with t
  CHECK(G.mult(G.poly(x * x), G.t(0)) == G.mult(G.t(0), G.poly(x * x)));

  // x^3 t = t (-x^3) + mu r x^2   (Demazure of x^3 by alpha = 2x is x^2)
  GHElt l3 = G.mult(G.poly(x * x * x), G.t(0));
  GHElt r3 = G.mult(G.t(0), G.poly(-(x * x * x))) + G.poly(r * x * x);
  CHECK(l3 == r3);

  CHECK(G.demazure(0, MPoly::linear(G.rs().simples[0])) ==
        MPoly::constant(n, Rat(2)));
}

TEST_CASE("graded product is associative and mu enters linearly") {
  GradedHecke G = named_gh("C2", {Rat(1), Rat(2)});
  int n = G.nvars();
  std::vector<GHElt> battery = {
      G.t(0), G.t(1), G.poly(MPoly::x(n, 0)), G.poly(MPoly::x(n, 1)),
      G.r_elt(), G.mult(G.t(0), G.poly(MPoly::x(n, 1))),
      G.mult(G.poly(MPoly::x(n, 0) * MPoly::x(n, 0)), G.t(1))};
  for (const auto& a : battery)
    for (const auto& b : battery)
      for (const auto& cc : battery)
        CHECK(G.mult(G.mult(a, b), cc) == G.mult(a, G.mult(b, cc)));

  // braid relation t0 t1 t0 t1 = t1 t0 t1 t0 in C2
  GHElt l = G.mult(G.mult(G.mult(G.t(0), G.t(1)), G.t(0)), G.t(1));
  GHElt r = G.mult(G.mult(G.mult(G.t(1), G.t(0)), G.t(1)), G.t(0));
  CHECK(l == r);
}

TEST_CASE("mu must be orbit invariant") {
  CHECK_THROWS_AS(named_gh("A2", {Rat(1), Rat(2)}), std::domain_error);
  CHECK_NOTHROW(named_gh("C2", {Rat(1), Rat(2)}));  // two orbits, two values
  CHECK_NOTHROW(named_gh("G2", {Rat(2), Rat(1)}));
}

TEST_CASE("map catalog: every entry is a homomorphism, several mu profiles") {
  std::vector<GradedHecke> algebras;
  algebras.push_back(named_gh("A1", {Rat(1)}));
  algebras.push_back(named_gh("A2", {Rat(1), Rat(1)}));
  algebras.push_back(named_gh("A2", {Rat(2), Rat(2)}));
  algebras.push_back(named_gh("C2", {Rat(1), Rat(2)}));
  algebras.push_back(named_gh("G2", {Rat(1), Rat(1)}));
  algebras.push_back(named_gh("G2", {Rat(2), Rat(3)}));
  for (const auto& G : algebras) {
    for (const auto& m : gh_map_catalog(G)) {
      GradedHecke tgt(G.rs(), gh_target_mu(G, m));
      std::string diag;
      CHECK_MESSAGE(gh_check_homomorphism(G, tgt, m, &diag), G.str(), " ", diag);
    }
  }
}

TEST_CASE("AZ equals D o C o FT, and the involutive maps square to one") {
  for (const char* type : {"A2", "C2", "G2"}) {
    GradedHecke G = named_gh(type, {Rat(1), Rat(1)});
    std::string diag;
    CHECK_MESSAGE(gh_check_composition(G, gh_map_AZ(G),
                                       {gh_map_D(G), gh_map_C(G), gh_map_FT(G)}, &diag),
                  type, " ", diag);

    // battery of elements for involution checks
    std::vector<GHElt> battery = {G.t(0), G.t(1), G.x_lin({Rat(1), Rat(0)}),
                                  G.r_elt(), G.mult(G.t(0), G.x_lin({Rat(0), Rat(1)}))};
    for (const auto& m : {gh_map_FT(G), gh_map_kappa(G), gh_map_AZ(G), gh_map_iota(G)})
      for (const auto& h : battery)
        CHECK(apply_ghmap(G, m, apply_ghmap(G, m, h)) == h);
  }
}

TEST_CASE("AZ on generators, A2 frozen images") {
  GradedHecke G = named_gh("A2", {Rat(1), Rat(1)});
  GHMap az = gh_map_AZ(G);
  // w0 conjugation swaps the two simple reflections in A2
  CHECK(apply_ghmap(G, az, G.t(0)) == G.t(1).scaled(Rat(-1)));
  CHECK(apply_ghmap(G, az, G.t(1)) == G.t(0).scaled(Rat(-1)));
  // x -> w0(x) and r fixed
  QVec e0 = {Rat(1), Rat(0)};
  CHECK(apply_ghmap(G, az, G.x_lin(e0)) == G.x_lin(G.rs().act_E(G.rs().w0(), e0)));
  CHECK(apply_ghmap(G, az, G.r_elt()) == G.r_elt());
}

TEST_CASE("rigidity: identity is the only toral-fixing automorphism iff mu avoids zero") {
  for (const char* type : {"A1", "A2", "B2"}) {
    RootSystem rs = RootSystem::named(type);
    std::vector<Rat> mu(rs.nsimple(), Rat(1));
    GradedHecke G(rs, mu);
    RigidityReport rep = rigidity_report(G);
    INFO(type, ": ", rep.diag);
    CHECK(rep.id_only);
    for (int d : rep.kernel_dims) CHECK(d == 0);
  }
  // mu = 0: the sign flip t_s -> -t_s is a genuine competing automorphism
  for (const char* type : {"A1", "A2"}) {
    RootSystem rs = RootSystem::named(type);
    std::vector<Rat> mu(rs.nsimple(), Rat(0));
    GradedHecke G(rs, mu);
    RigidityReport rep = rigidity_report(G);
    CHECK_FALSE(rep.id_only);
    for (int d : rep.kernel_dims) CHECK(d >= 1);
    GHMap flip{"sign-flip", GHMap::Tau::Id, -1, QMat::id(G.dim()), 1, false};
    CHECK(gh_check_homomorphism(G, G, flip));
    GradedHecke Gnz(rs, std::vector<Rat>(rs.nsimple(), Rat(1)));
    CHECK_FALSE(gh_check_homomorphism(Gnz, Gnz, flip));
  }
}
