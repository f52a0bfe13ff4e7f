#include "doctest.h"

#include <random>

#include "shintani/gamma.hpp"

using namespace shintani;

namespace {
Ball mpfr_lngamma_oracle(const Rat& x, long prec) {
  Real r(x, prec);
  Real out(prec);
  mpfr_lngamma(out.get(), r.get(), MPFR_RNDN);
  return Ball(std::move(out), std::ldexp(1.0, (int)(4 - prec)));
}
}  // namespace

TEST_CASE("log_gamma against the library oracle") {
  long prec = 200;
  std::mt19937 rng(31);
  for (int t = 0; t < 30; ++t) {
    Rat x = mkrat(Int(1 + rng() % 400), Int(1 + rng() % 40));
    Ball mine = log_gamma(Ball(x, prec), prec);
    Ball ref = mpfr_lngamma_oracle(x, prec);
    CHECK(ball_dist(mine, ref) < 1e-45);
    CHECK(mine.rad < 1e-45);
  }
}

TEST_CASE("classical gamma values") {
  PrecisionCtx ctx(40, 0, 0);
  long prec = ctx.bits();
  // Gamma(1) = 1
  CHECK(ball_dist(classical_log_gamma(Rat(1), ctx), Ball::zero(prec)) < 1e-35);
  // Gamma(1/2) = sqrt(pi)
  Ball lg = classical_log_gamma(Rat(1, 2), ctx);
  Ball ref = log_b(pi_ball(prec)) * Rat(1, 2);
  CHECK(ball_dist(lg, ref) < 1e-35);
  // Euler reflection at 1/3: Gamma(1/3) Gamma(2/3) = 2 pi / sqrt 3
  Ball s = classical_log_gamma(Rat(1, 3), ctx) + classical_log_gamma(Rat(2, 3), ctx);
  Ball rhs = log_b(pi_ball(prec) * Rat(2) / sqrt_rat(Rat(3), prec));
  CHECK(ball_dist(s, rhs) < 1e-35);
}

TEST_CASE("reflection over random points") {
  long prec = 160;
  std::mt19937 rng(77);
  Ball pi = pi_ball(prec);
  for (int t = 0; t < 50; ++t) {
    Rat x = mkrat(Int(1 + rng() % 997), Int(1000));
    Ball lhs = log_gamma(Ball(x, prec), prec) + log_gamma(Ball(Rat(1) - x, prec), prec);
    // log(pi / sin(pi x))
    Ball arg = pi * x;
    Real s(prec);
    mpfr_sin(s.get(), arg.mid.get(), MPFR_RNDN);
    Ball sinb(std::move(s), radd(arg.rad, 1e-45));
    Ball rhs = log_b(pi / sinb);
    CHECK(ball_dist(lhs, rhs) < 1e-38);
  }
}

TEST_CASE("hurwitz pieces") {
  long prec = 200;
  // zeta_H(0, x) = 1/2 - x exactly
  Ball z0 = hurwitz_value(0, Ball(Rat(3, 7), prec), prec);
  CHECK(ball_dist(z0, Ball(Rat(1, 2) - Rat(3, 7), prec)) < 1e-55);
  // zeta_H(2, 1) = pi^2/6
  Ball z2 = hurwitz_value(2, Ball(Rat(1), prec), prec);
  Ball pi2 = pi_ball(prec) * pi_ball(prec) / Rat(6);
  CHECK(ball_dist(z2, pi2) < 1e-50);
  // zeta_H'(0, x) = log(Gamma(x)/sqrt(2 pi))  [Lerch]
  Rat x(5, 8);
  Ball d0 = hurwitz_sderiv(0, Ball(x, prec), prec);
  Ball lr = log_gamma(Ball(x, prec), prec) - log_2pi(prec) * Rat(1, 2);
  CHECK(ball_dist(d0, lr) < 1e-50);
  // zeta_H'(-1, 1) = zeta'(-1); frozen 30 digits
  Ball dm1 = hurwitz_sderiv(-1, Ball(Rat(1), prec), prec);
  Real ref(prec);
  mpfr_set_str(ref.get(), "-0.16542114370045092921391966024278", 10, MPFR_RNDN);
  CHECK(ball_dist(dm1, Ball(std::move(ref), 1e-31)) < 1e-29);
  // derivative of the Hurwitz difference law at s = -1:
  // zeta'(-1,w) - zeta'(-1,w+1) = -w log w
  Rat w(7, 5);
  Ball lhs = hurwitz_sderiv(-1, Ball(w, prec), prec) -
             hurwitz_sderiv(-1, Ball(w + 1, prec), prec);
  Ball rhs = -(Ball(w, prec) * log_b(Ball(w, prec)));
  CHECK(ball_dist(lhs, rhs) < 1e-50);
}

TEST_CASE("hurwitz general-s equals integer-point evaluations") {
  long prec = 160;
  Ball w(Rat(4, 3), prec);
  Ball g = hurwitz_general(Ball(Rat(3), prec), w, prec);
  Ball v = hurwitz_value(3, w, prec);
  CHECK(ball_dist(g, v) < 1e-40);
  Ball g0 = hurwitz_general(Ball::zero(prec), w, prec);
  CHECK(ball_dist(g0, Ball(Rat(1, 2) - Rat(4, 3), prec)) < 1e-40);
}

TEST_CASE("barnes rank 1: Hurwitz specialization") {
  PrecisionCtx ctx(40, 0, 0);
  long prec = ctx.bits();
  // zeta(0, (1), z) = 1/2 - z
  BarnesInput in{{Ball(Rat(1), prec)}, Ball(Rat(2, 7), prec)};
  CHECK(ball_dist(barnes_zeta0(in, prec), Ball(Rat(1, 2) - Rat(2, 7), prec)) < 1e-35);
  // zeta(-1, (1), z) = -B_2(z)/2 via the general-s path at s = -1
  Ball zm1 = barnes_zeta(Ball(Rat(-1), prec), in, prec);
  Rat b2 = bernoulli_poly(2, Rat(2, 7));
  CHECK(ball_dist(zm1, Ball(-b2 / 2, prec)) < 1e-30);
  // log Gamma(1/2, (1)) = zeta_H'(0, 1/2) = -(1/2) log 2
  BarnesInput in2{{Ball(Rat(1), prec)}, Ball(Rat(1, 2), prec)};
  Ball lg = log_multiple_gamma(in2, prec);
  CHECK(ball_dist(lg, -(ln2_ball(prec) * Rat(1, 2))) < 1e-35);
  // v = (1), z = 1/3: log Gamma(1/3) - (1/2) log 2pi to 30 digits
  BarnesInput in3{{Ball(Rat(1), prec)}, Ball(Rat(1, 3), prec)};
  Ball lg3 = log_multiple_gamma(in3, prec);
  Ball ref = classical_log_gamma(Rat(1, 3), ctx) - log_2pi(prec) * Rat(1, 2);
  CHECK(ball_dist(lg3, ref) < 1e-30);
}

TEST_CASE("barnes rank 2: diagonal case reduces to zeta(s-1)") {
  long prec = 220;
  BarnesInput in{{Ball(Rat(1), prec), Ball(Rat(1), prec)}, Ball(Rat(1), prec)};
  BarnesAtZero z = barnes_at_zero(in, prec);
  CHECK(ball_dist(z.value, Ball(Rat(-1, 12), prec)) < 1e-45);
  // zeta'(-1) = -0.16542114370045092921...
  Real ref(prec);
  mpfr_set_str(ref.get(), "-0.16542114370045092921391966024278", 10, MPFR_RNDN);
  CHECK(ball_dist(z.sderiv, Ball(std::move(ref), 1e-31)) < 1e-29);
}

TEST_CASE("barnes rank 2 ladder: removing one index") {
  long prec = 220;
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    Rat z = mkrat(Int(1 + rng() % 50), Int(1 + rng() % 9));
    Rat v1 = mkrat(Int(1 + rng() % 30), Int(1 + rng() % 6));
    Rat v2 = mkrat(Int(1 + rng() % 30), Int(1 + rng() % 6));
    BarnesInput a{{Ball(v1, prec), Ball(v2, prec)}, Ball(z, prec)};
    BarnesInput b{{Ball(v1, prec), Ball(v2, prec)}, Ball(z + v2, prec)};
    BarnesInput c{{Ball(v1, prec)}, Ball(z, prec)};
    Ball lhs = log_multiple_gamma(a, prec) - log_multiple_gamma(b, prec);
    Ball rhs = log_multiple_gamma(c, prec);
    CHECK(ball_dist(lhs, rhs) < 1e-40);
    // same telescoping for the value
    Ball vl = barnes_zeta0(a, prec) - barnes_zeta0(b, prec);
    Ball vr = barnes_zeta0(c, prec);
    CHECK(ball_dist(vl, vr) < 1e-45);
  }
}

TEST_CASE("barnes homogeneity") {
  long prec = 200;
  std::mt19937 rng(8);
  for (int t = 0; t < 6; ++t) {
    Rat z = mkrat(Int(1 + rng() % 20), Int(1 + rng() % 5));
    Rat v1 = mkrat(Int(1 + rng() % 12), Int(1 + rng() % 4));
    Rat v2 = mkrat(Int(1 + rng() % 12), Int(1 + rng() % 4));
    Rat lam = mkrat(Int(1 + rng() % 9), Int(1 + rng() % 9));
    BarnesInput a{{Ball(v1, prec), Ball(v2, prec)}, Ball(z, prec)};
    BarnesInput al{{Ball(lam * v1, prec), Ball(lam * v2, prec)}, Ball(lam * z, prec)};
    // at sampled s: zeta(s, lam v, lam z) = lam^{-s} zeta(s, v, z)
    for (Rat s : {Rat(1, 2), Rat(-1, 2)}) {
      Ball L = barnes_zeta(Ball(s, prec), al, prec);
      Ball R = exp_b(-(Ball(s, prec) * log_b(Ball(lam, prec)))) *
               barnes_zeta(Ball(s, prec), a, prec);
      CHECK(ball_dist(L, R) < 1e-30);
    }
    // derivative law: zeta'(0, lam v, lam z) - zeta'(0, v, z)
    //                 + log(lam) zeta(0, v, z) = 0
    BarnesAtZero A = barnes_at_zero(a, prec);
    BarnesAtZero Al = barnes_at_zero(al, prec);
    Ball resid = Al.sderiv - A.sderiv + log_b(Ball(lam, prec)) * A.value;
    CHECK(ball_dist(resid, Ball::zero(prec)) < 1e-38);
    CHECK(ball_dist(Al.value, A.value) < 1e-42);
  }
}

TEST_CASE("digamma matches the library oracle") {
  long prec = 150;
  std::mt19937 rng(6);
  for (int t = 0; t < 15; ++t) {
    Rat x = mkrat(Int(1 + rng() % 200), Int(1 + rng() % 20));
    Ball mine = digamma(Ball(x, prec), prec);
    Real r(x, prec), out(prec);
    mpfr_digamma(out.get(), r.get(), MPFR_RNDN);
    CHECK(ball_dist(mine, Ball(std::move(out), 1e-40)) < 1e-38);
  }
}
