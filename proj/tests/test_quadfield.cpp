#include "doctest.h"

#include <random>

#include "shintani/quadfield.hpp"
#include "shintani/rayclass.hpp"

using namespace shintani;

TEST_CASE("fundamental totally positive units") {
  Field F5 = Field::real_quadratic(5);
  FieldElement e5 = fundamental_totally_positive_unit(F5);
  // (3+sqrt5)/2 = 1 + w for w = (1+sqrt5)/2
  CHECK(e5 == FieldElement(Rat(1), Rat(1)));
  CHECK(fe_norm(F5, e5) == 1);
  CHECK(fe_totally_positive(F5, e5));

  Field F2 = Field::real_quadratic(2);
  FieldElement e2 = fundamental_totally_positive_unit(F2);
  CHECK(e2 == FieldElement(Rat(3), Rat(2)));  // 3 + 2 sqrt 2

  CHECK_THROWS(fundamental_totally_positive_unit(Field::Q()));
}

TEST_CASE("no totally positive unit strictly between 1 and eps_+") {
  for (long D : {2L, 5L, 13L}) {
    Field F = Field::real_quadratic(D);
    FieldElement eps = fundamental_totally_positive_unit(F);
    auto [eu, ev] = fe_sqrt_coords(F, eps);
    long bound = (long)(eu.get_d() + ev.get_d() * std::sqrt((double)D)) + 2;
    for (long a = -bound; a <= bound; ++a)
      for (long b = -bound; b <= bound; ++b) {
        FieldElement u{Rat(Int(a)), Rat(Int(b))};
        if (u.is_zero()) continue;
        Rat n = fe_norm(F, u);
        if (n != 1 && n != -1) continue;
        if (!fe_totally_positive(F, u)) continue;
        // compare 1 < u < eps at the identity embedding
        if (fe_sign(F, fe_sub(u, FieldElement(Rat(1))), false) > 0 &&
            fe_sign(F, fe_sub(eps, u), false) > 0)
          CHECK(false);
      }
    CHECK(true);
  }
}

TEST_CASE("norms and ideal arithmetic") {
  Field F = Field::real_quadratic(5);
  // (13 - sqrt5)/2 = 7 - w
  FieldElement lam{Rat(7), Rat(-1)};
  CHECK(fe_norm(F, lam) == 41);

  Ideal lamI = ideal_principal(F, lam);
  CHECK(ideal_norm(F, lamI) == 41);

  // a * O = a, N(ab) = N(a) N(b)
  auto ideals = ideals_up_to(F, 30);
  Ideal one = ideal_one(F);
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    const Ideal& a = ideals[rng() % ideals.size()];
    const Ideal& b = ideals[rng() % ideals.size()];
    CHECK(ideal_mul(F, a, one) == a);
    CHECK(ideal_norm(F, ideal_mul(F, a, b)) == ideal_norm(F, a) * ideal_norm(F, b));
    // conj(a) * a = (N a)
    Ideal aa = ideal_mul(F, a, ideal_conj(F, a));
    CHECK(aa == ideal_of_int(F, ideal_norm(F, a)));
  }
}

TEST_CASE("hnf canonicalization is idempotent") {
  Field F = Field::real_quadratic(2);
  for (auto& I : ideals_up_to(F, 40)) {
    Ideal J = ideal_from_gens(F, {FieldElement(Rat(I.A), Rat(0)), FieldElement(Rat(I.B), Rat(I.C))});
    CHECK(I == J);
  }
}

TEST_CASE("primes above") {
  Field F = Field::real_quadratic(5);
  CHECK(primes_above(F, 11).size() == 2);  // split
  CHECK(primes_above(F, 3).size() == 1);   // inert
  CHECK(primes_above(F, 3)[0].f == 2);
  auto p5 = primes_above(F, 5);
  CHECK(p5.size() == 1);
  CHECK(p5[0].e == 2);  // ramified
  for (auto& P : primes_above(F, 11)) CHECK(ideal_norm(F, P.P) == 11);
}

TEST_CASE("factor_ideal reconstructs the ideal") {
  Field F = Field::real_quadratic(2);
  std::mt19937 rng(17);
  auto ideals = ideals_up_to(F, 60);
  for (int t = 0; t < 25; ++t) {
    const Ideal& I = ideals[rng() % ideals.size()];
    Ideal prod = ideal_one(F);
    for (auto& [P, e] : factor_ideal(F, I)) prod = ideal_mul(F, prod, ideal_pow(F, P, e));
    CHECK(prod == I);
  }
}

TEST_CASE("class numbers") {
  CHECK(class_number(Field::real_quadratic(5)) == 1);
  CHECK(class_number(Field::real_quadratic(2)) == 1);
  CHECK(class_number(Field::real_quadratic(13)) == 1);
  CHECK(class_number(Field::real_quadratic(10)) == 2);
  CHECK(narrow_class_number(Field::real_quadratic(5)) == 1);  // N(eps0) = -1
  CHECK(narrow_class_number(Field::real_quadratic(2)) == 1);
  CHECK(narrow_class_number(Field::real_quadratic(3)) == 2);  // N(eps0) = +1
}

TEST_CASE("real embeddings") {
  Field F = Field::real_quadratic(5);
  long prec = 150;
  // sqrt5 = 2w - 1
  FieldElement r5{Rat(-1), Rat(2)};
  Ball v = embed_real(F, r5, real_embedding(F, false), prec);
  Real ref(prec);
  mpfr_sqrt_ui(ref.get(), 5, MPFR_RNDN);
  CHECK(ball_dist(v, Ball(std::move(ref), 0.0)) < 1e-40);
  // rational elements map to themselves
  FieldElement q{Rat(22, 7), Rat(0)};
  CHECK(ball_dist(embed_real(F, q, real_embedding(F, true), prec), Ball(Rat(22, 7), prec)) <
        1e-40);
  // multiplicativity
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    FieldElement x{Rat(Int((long)(rng() % 19) - 9)), Rat(Int((long)(rng() % 19) - 9))};
    FieldElement y{Rat(Int((long)(rng() % 19) - 9)), Rat(Int((long)(rng() % 19) - 9))};
    for (bool cj : {false, true}) {
      Embedding e = real_embedding(F, cj);
      Ball lhs = embed_real(F, fe_mul(F, x, y), e, prec);
      Ball rhs = embed_real(F, x, e, prec) * embed_real(F, y, e, prec);
      CHECK(ball_dist(lhs, rhs) < 1e-35);
      Ball lhs2 = embed_real(F, fe_add(x, y), e, prec);
      Ball rhs2 = embed_real(F, x, e, prec) + embed_real(F, y, e, prec);
      CHECK(ball_dist(lhs2, rhs2) < 1e-35);
    }
  }
}

TEST_CASE("p-adic embeddings: split case hensel root") {
  Field F = Field::real_quadratic(5);
  long N = 20;
  // 4^2 = 16 = 5 mod 11
  FieldElement r5{Rat(-1), Rat(2)};
  bool found4 = false;
  for (int choice : {0, 1}) {
    Embedding e = padic_embedding(F, 11, choice, N);
    CHECK(e.split);
    PadicExt img = embed_padic(F, r5, e, N);
    CHECK(img.plain());
    Int rt = img.a().lift(1);
    CHECK((rt == 4 || rt == 7));
    if (rt == 4) found4 = true;
    // square equals 5
    PadicNumber sq = img.a() * img.a();
    PadicNumber d = sq - PadicNumber::from_rat(11, Rat(5), N);
    CHECK(d.is_zero());
  }
  CHECK(found4);
  // inert: 7 stays prime in Q(sqrt 5)? 5 is a QR mod 7? 5 != square mod 7 -> inert
  Embedding e7 = padic_embedding(F, 7, 0, N);
  CHECK(!e7.split);
  PadicExt img = embed_padic(F, r5, e7, N);
  PadicNumber nm = img.norm();  // = -5... norm(0 + 1*sqrt5) = -5
  CHECK((nm + PadicNumber::from_rat(7, Rat(5), N)).is_zero());
  // homomorphism to precision, split odd p
  std::mt19937 rng(9);
  Embedding e11 = padic_embedding(F, 11, 0, N);
  for (int t = 0; t < 15; ++t) {
    FieldElement x{Rat(Int((long)(rng() % 9) + 1)), Rat(Int((long)(rng() % 9)))};
    FieldElement y{Rat(Int((long)(rng() % 9) + 1)), Rat(Int((long)(rng() % 9)))};
    PadicExt im = embed_padic(F, fe_mul(F, x, y), e11, N);
    PadicExt pr = embed_padic(F, x, e11, N) * embed_padic(F, y, e11, N);
    PadicExt d = im - pr;
    CHECK(d.is_zero());
  }
}

TEST_CASE("principal generator search") {
  Field F = Field::real_quadratic(5);
  auto P11 = primes_above(F, 11)[0].P;
  auto g = principal_generator(F, frac(P11), true);
  REQUIRE(g.has_value());
  CHECK(fe_norm(F, *g) == 11);
  CHECK(fe_totally_positive(F, *g));
  CHECK(ideal_principal(F, *g) == P11);
}
