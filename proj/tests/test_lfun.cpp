#include "doctest.h"

#include <numeric>
#include "shintani/lfun.hpp"
#include "shintani/gamma.hpp"
#include "shintani/lll.hpp"

using namespace shintani;

TEST_CASE("LLL recognizes simple algebraics") {
  long prec = 380;
  // golden ratio -> x^2 - x - 1
  Ball phi = (sqrt_rat(Rat(5), prec) + Rat(1)) / Rat(2);
  auto p1 = recognize_algebraic(phi, 2, Int(1000));
  REQUIRE(p1.has_value());
  CHECK(*p1 == std::vector<Int>{-1, -1, 1});
  // 2^(1/3) -> x^3 - 2
  Ball c = exp_b(log_rat(Rat(2), prec) / Rat(3));
  auto p2 = recognize_algebraic(c, 3, Int(1000));
  REQUIRE(p2.has_value());
  CHECK(*p2 == std::vector<Int>{-2, 0, 0, 1});
  // a transcendental-looking input fails
  auto p3 = recognize_algebraic(pi_ball(prec), 3, Int(50));
  CHECK(!p3.has_value());
}

TEST_CASE("integer relation detection") {
  long prec = 300;
  // 3*log2 - log8 = 0
  std::vector<Ball> v = {ln2_ball(prec), log_rat(Rat(8), prec)};
  auto rel = integer_relation(v, Int(100), 1e-40);
  REQUIRE(rel.has_value());
  CHECK((*rel)[0] * 1 == -(*rel)[1] * 3);
}

TEST_CASE("Dirichlet L at 0: odd quadratic mod 4") {
  PrecisionCtx ctx(30, 0, 0);
  Field Q = Field::Q();
  RayClassGroup G = RayClassGroup::build(Q, ideal_of_int(Q, 4));
  REQUIRE(G.size() == 2);
  for (auto& chi : G.characters()) {
    if (chi.order != 2) continue;
    LValue lv = hecke_L(G, chi, true, ctx);
    // L(0, chi_{-4}) = 1/2
    CHECK(cplx_dist(lv.L0, Cplx::from_ball(Ball(Rat(1, 2), ctx.bits()), ctx.bits())) < 1e-24);
    // dual oracle
    CHECK(cplx_dist(lv.L0, exact_L0_from_zeta(G, chi, ctx)) < 1e-24);
    CHECK(lv.root_number_known);
  }
}

TEST_CASE("Dirichlet L'(0) of the even quadratic mod 5 is log of the golden ratio") {
  PrecisionCtx ctx(30, 0, 0);
  long prec = ctx.bits();
  Field Q = Field::Q();
  RayClassGroup G = RayClassGroup::build(Q, ideal_of_int(Q, 5));
  bool found = false;
  for (auto& chi : G.characters()) {
    if (chi.order != 2) continue;
    found = true;
    LValue lv = hecke_L(G, chi, true, ctx);
    CHECK(lv.forced_order == 1);
    CHECK(cplx_dist(lv.L0, Cplx::zero(prec)) < 1e-25);
    // class number formula: L'(0, chi_5) = log((1+sqrt 5)/2)
    Ball golden = (sqrt_rat(Rat(5), prec) + Rat(1)) / Rat(2);
    CHECK(cplx_dist(lv.L1, Cplx::from_ball(log_b(golden), prec)) < 1e-24);
  }
  CHECK(found);
}

TEST_CASE("zeta'(0, c) over Q by inversion matches the closed form") {
  PrecisionCtx ctx(25, 0, 0);
  Field Q = Field::Q();
  for (long m : {5L, 12L}) {
    RayClassGroup G = RayClassGroup::build(Q, ideal_of_int(Q, m));
    for (long r = 1; r < m && r < 8; ++r) {
      if (std::gcd(r, m) != 1) continue;
      long c = G.class_of_element(FieldElement(Rat(Int(r))));
      Ball mine = partial_zeta_deriv0(G, c, ctx);
      Ball ref = classical_log_gamma(mkrat(Int(r), Int(m)), ctx) +
                 log_rat(Rat(Int(m)), ctx.bits()) * (mkrat(Int(r), Int(m)) - Rat(1, 2)) -
                 log_2pi(ctx.bits()) * Rat(1, 2);
      CHECK(ball_dist(mine, ref) < 1e-18);
    }
  }
}

TEST_CASE("Hecke L over Q(sqrt 5), conductor of norm 41: dual oracle") {
  PrecisionCtx ctx(25, 0, 0);
  Field F = Field::real_quadratic(5);
  FieldElement lam{Rat(7), Rat(-1)};
  RayClassGroup G = RayClassGroup::build(F, ideal_principal(F, lam));
  for (auto& chi : G.characters()) {
    LValue lv = hecke_L(G, chi, true, ctx);
    Cplx exact = exact_L0_from_zeta(G, chi, ctx);
    CHECK(cplx_dist(lv.L0, exact) < 1e-20);
    if (chi.order == 2) {
      // the totally odd character: L(0) = sum chi zeta(0) = 2 exactly
      CHECK(cplx_dist(exact, Cplx::from_ball(Ball(Rat(2), ctx.bits()), ctx.bits())) < 1e-20);
    }
  }
}

TEST_CASE("funeq tower for Q(sqrt 5) in Q(zeta_5)") {
  PrecisionCtx ctx(25, 0, 0);
  FuneqReport rep = check_funeq_sqrt5(ctx);
  CHECK(rep.exact_factorization);
  CHECK(rep.ztoz_exact);
  CHECK(rep.zdtoz_residual < 1e-15);
}
