#include "doctest.h"

#include "shintani/invariants.hpp"

using namespace shintani;

TEST_CASE("assembled G+W matches the closed form over Q") {
  PrecisionCtx ctx(40, 0, 0);
  Field Q = Field::Q();
  ShintaniDomain D = shintani_domain(Q);
  for (auto [r, m, a] : std::vector<std::array<long, 3>>{
           {1, 3, 1}, {2, 3, 1}, {1, 5, 2}, {3, 7, 3}, {5, 12, 1}, {7, 12, 2}}) {
    RayClassGroup G = RayClassGroup::build(Q, ideal_of_int(Q, m));
    long c = G.class_of_element(FieldElement(Rat(Int(r))));
    InvariantValue X = compute_X(G, c, D, ideal_of_int(Q, a), nullptr, ctx);
    Ball ref = closed_form_X_Q(r, m, ctx);
    CHECK(ball_dist(X.archimedean, ref) < 1e-30);
  }
  // exp(X(c_{1/2})) = Gamma(1/2) (2pi)^{-1/2} = 2^{-1/2}
  RayClassGroup G2 = RayClassGroup::build(Q, ideal_of_int(Q, 2));
  InvariantValue X2 = compute_X(G2, G2.identity(), D, ideal_one(Q), nullptr, ctx);
  Ball ref2 = -(ln2_ball(ctx.bits()) * Rat(1, 2));
  CHECK(ball_dist(X2.archimedean, ref2) < 1e-30);
}

TEST_CASE("X_p: choice independence mod mu_inf and the direct formula") {
  PrecisionCtx ctx(30, 5, 25);
  Field Q = Field::Q();
  ShintaniDomain D = shintani_domain(Q);
  RayClassGroup G = RayClassGroup::build(Q, ideal_of_int(Q, 15));
  for (long r : {1L, 2L, 4L}) {
    long c = G.class_of_element(FieldElement(Rat(Int(r))));
    PadicNumber direct = padic_partial_zeta_deriv0(5, r, 15, ctx.padic_digits);
    PadicNumber x1 = compute_Xp(G, c, D, ideal_one(Q), ctx);
    // with a_c = (1) the assembled value IS the direct formula
    CHECK((x1 - direct).is_zero());
    // other choices agree mod mu_inf
    for (long a : {2L, 7L}) {
      PadicNumber xa = compute_Xp(G, c, D, ideal_of_int(Q, a), ctx);
      CHECK(muinf_equal(MuInfClass::exp_class(xa), MuInfClass::exp_class(direct), ctx));
    }
  }
}

TEST_CASE("the exp formula as MuInfClass, nontrivial a_c") {
  for (auto [r, m, p] :
       std::vector<std::array<long, 3>>{{1, 15, 5}, {2, 15, 5}, {1, 21, 7}}) {
    PrecisionCtx ctx(30, p, 25);
    Field Q = Field::Q();
    ShintaniDomain D = shintani_domain(Q);
    RayClassGroup G = RayClassGroup::build(Q, ideal_of_int(Q, m));
    long c = G.class_of_element(FieldElement(Rat(Int(r))));
    MuInfClass lhs =
        MuInfClass::exp_class(compute_Xp(G, c, D, ideal_of_int(Q, 2), ctx));
    // Gamma_p(r/m) (m/d)_0^{r/m - 1/2} with the surrogate Gamma_p on Q_p - Z_p
    long m0 = m;
    while (m0 % p == 0) m0 /= p;
    PadicNumber logrhs =
        lgamma_p_rat(p, mkrat(Int(r), Int(m)), ctx.padic_digits) +
        PadicNumber::from_rat(p, mkrat(Int(r), Int(m)) - Rat(1, 2), ctx.padic_digits + 10) *
            iwasawa_log_rat(p, Rat(Int(m0)), ctx.padic_digits);
    CHECK(muinf_equal(lhs, MuInfClass::exp_class(logrhs), ctx));
  }
}

TEST_CASE("Prop 2.4 over Q, both cases, both sides") {
  PrecisionCtx ctx(40, 0, 0);
  // archimedean, q !| f: the worked instance f = (3), q = (2)
  Prop24Report r1 = check_prop24(3, 2, 1, 0, ctx);
  CHECK(!r1.q_divides_f);
  CHECK(r1.arch_residual < 1e-25);
  // archimedean, q | f: f = (4), q = (2)
  Prop24Report r2 = check_prop24(4, 2, 1, 0, ctx);
  CHECK(r2.q_divides_f);
  CHECK(r2.arch_residual < 1e-25);
  // p-adic, q !| f: f = (15), q = (2), p = 5
  PrecisionCtx ctx5(30, 5, 30);
  Prop24Report r3 = check_prop24(15, 2, 2, 5, ctx5);
  CHECK(r3.padic_checked);
  CHECK(r3.padic_equal);
  CHECK(r3.padic_digits >= 25);
  // p-adic, q | f: f = (15), q = (3), p = 5
  Prop24Report r4 = check_prop24(15, 3, 1, 5, ctx5);
  CHECK(r4.q_divides_f);
  CHECK(r4.padic_equal);
  CHECK(r4.padic_digits >= 25);
}

TEST_CASE("gamma_p agrees with its Morita closed form") {
  for (auto [p, r, m] : std::vector<std::array<long, 3>>{
           {5, 1, 3}, {5, 2, 3}, {7, 1, 4}, {7, 3, 4}, {3, 1, 5}, {3, 2, 5}}) {
    PrecisionCtx ctx(25, p, 25);
    MuInfClass lhs = gamma_p_lower(p, r, m, ctx);
    MuInfClass rhs = gamma_p_closed_form(p, r, m, ctx);
    CHECK(lhs.ord == Rat(1, 2) - mkrat(Int(r), Int(m)));
    CHECK(muinf_equal(lhs, rhs, ctx));
  }
}

TEST_CASE("fiber products over the real subfield give exp(zeta_S'(0, sigma))") {
  // H = real subfield of Q(zeta_15): ker phi_H = {1, s_iota} in C_(15)
  PrecisionCtx ctx(35, 5, 25);
  Field Q = Field::Q();
  RayClassGroup G = RayClassGroup::build(Q, ideal_of_int(Q, 15));
  std::vector<long> kerH = {G.identity(), G.s_iota(false)};
  for (long sigma : {G.identity(), G.class_of_element(FieldElement(Rat(2)))}) {
    FiberProductPair pr = fiber_product_ratio(G, kerH, sigma, ctx);
    // independent route: exp of the sum of the closed forms
    Ball zs = Ball::zero(ctx.bits());
    for (long k : kerH) {
      long c = G.mul(sigma, k);
      zs = zs + closed_form_X_Q(class_label_Q(G, c), 15, ctx);
    }
    CHECK(ball_dist(pr.arch, exp_b(zs)) < 1e-22);
  }
}

TEST_CASE("rGc over Q: both desk instances") {
  {
    PrecisionCtx ctx(30, 5, 28);
    RgcReport rep = verify_rGc_over_Q(-4, 5, 4, false, ctx);
    CHECK(rep.ord_identity);
    CHECK(rep.arch_defect < 1e-20);
    CHECK(rep.muinf_equal);
    RgcReport repc = verify_rGc_over_Q(-4, 5, 4, true, ctx);
    CHECK(repc.muinf_equal);
  }
  {
    PrecisionCtx ctx(30, 7, 26);
    RgcReport rep = verify_rGc_over_Q(-3, 7, 3, false, ctx);
    CHECK(rep.ord_identity);
    CHECK(rep.arch_defect < 1e-18);
    CHECK(rep.muinf_equal);
  }
  // p inert is rejected
  PrecisionCtx ctx(20, 7, 20);
  CHECK_THROWS(verify_rGc_over_Q(-4, 7, 4, false, ctx));
}
