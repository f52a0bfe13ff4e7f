#include "shintani/lll.hpp"

#include <algorithm>
#include <cmath>

namespace shintani {

namespace {
Rat dotz(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return Rat(s);
}
}  // namespace

void lll_reduce(std::vector<std::vector<Int>>& B) {
  long n = (long)B.size();
  if (n == 0) return;
  // Gram-Schmidt data: mu and squared norms of the orthogonal vectors
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> Bstar(n, Rat(0));
  auto recompute = [&]() {
    std::vector<std::vector<Rat>> gso(n, std::vector<Rat>(B[0].size(), Rat(0)));
    for (long i = 0; i < n; ++i) {
      for (size_t t = 0; t < B[i].size(); ++t) gso[i][t] = Rat(B[i][t]);
      for (long j = 0; j < i; ++j) {
        // mu_ij = <b_i, b*_j> / <b*_j, b*_j>
        Rat num(0);
        for (size_t t = 0; t < B[i].size(); ++t) num += Rat(B[i][t]) * gso[j][t];
        mu[i][j] = num / Bstar[j];
        for (size_t t = 0; t < B[i].size(); ++t) gso[i][t] -= mu[i][j] * gso[j][t];
      }
      Rat nn(0);
      for (auto& v : gso[i]) nn += v * v;
      Bstar[i] = nn;
    }
  };
  recompute();
  auto size_reduce = [&](long i, long j) {
    Rat r = mu[i][j];
    Int q;
    // round to nearest
    Rat half(1, 2);
    Rat shifted = r + half;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    if (q != 0) {
      for (size_t t = 0; t < B[i].size(); ++t) B[i][t] -= q * B[j][t];
    }
  };
  long k = 1;
  int steps = 0;
  while (k < n && steps++ < 100000) {
    for (long j = k - 1; j >= 0; --j) size_reduce(k, j);
    recompute();
    Rat lhs = Bstar[k];
    Rat rhs = (Rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * Bstar[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(B[k], B[k - 1]);
      recompute();
      k = std::max(1L, k - 1);
    }
  }
}

Ball poly_eval(const std::vector<Int>& poly, const Ball& x) {
  Ball acc = Ball::zero(x.prec());
  for (long i = (long)poly.size() - 1; i >= 0; --i) acc = acc * x + Ball(Rat(poly[i]), x.prec());
  return acc;
}

namespace {
Int round_ball(const Ball& b) {
  Real half(0.5, b.prec());
  Real shifted(b.prec());
  mpfr_add(shifted.get(), b.mid.get(), half.get(), MPFR_RNDN);
  Real fl(b.prec());
  mpfr_floor(fl.get(), shifted.get());
  Int out;
  mpfr_get_z(out.get_mpz_t(), fl.get(), MPFR_RNDZ);
  return out;
}

// no rational root with numerator | poly(0), denominator | lead
bool has_rational_root(const std::vector<Int>& p) {
  Int c0 = p.front(), lead = p.back();
  if (c0 == 0) return true;
  auto divisors = [](const Int& n) {
    std::vector<Int> out;
    Int a = abs(n);
    for (Int d = 1; d * d <= a; ++d)
      if (a % d == 0) {
        out.push_back(d);
        out.push_back(a / d);
      }
    return out;
  };
  for (auto& num : divisors(c0))
    for (auto& den : divisors(lead)) {
      for (int sgn : {1, -1}) {
        // evaluate p(sgn*num/den) * den^deg exactly
        Int acc = 0;
        Int npow = 1;
        std::vector<Int> dpow(p.size(), 1);
        for (size_t i = 1; i < p.size(); ++i) dpow[p.size() - 1 - i] = dpow[p.size() - i] * den;
        for (size_t i = 0; i < p.size(); ++i) {
          acc += p[i] * npow * dpow[i];
          npow *= sgn * num;
        }
        if (acc == 0) return true;
      }
    }
  return false;
}

// bounded trial factorization by monic-ish quadratics when p(0) = +-1
bool has_small_quadratic_factor(const std::vector<Int>& p) {
  if (p.size() != 5) return false;  // only the quartic case needs it here
  if (abs(p.front()) != 1 || abs(p.back()) != 1) return false;
  // (x^2 + b x + c)(x^2 + b' x + c') with c c' = p0, |b| bounded by coeffs
  long bound = 2;
  for (auto& c : p) bound = std::max(bound, (long)(2 * std::sqrt(std::abs(c.get_d())) + 2));
  for (long b = -bound; b <= bound; ++b)
    for (int c : {1, -1}) {
      // synthetic division of p by x^2 + b x + c over Z
      std::vector<Int> q(3, 0);
      Int r1, r0;
      q[2] = p[4];
      q[1] = p[3] - b * q[2];
      q[0] = p[2] - b * q[1] - c * q[2];
      r1 = p[1] - b * q[0] - c * q[1];
      r0 = p[0] - c * q[0];
      if (r1 == 0 && r0 == 0) return true;
    }
  return false;
}
}  // namespace

std::optional<std::vector<Int>> recognize_algebraic(const Ball& x, int max_degree,
                                                    const Int& height_bound) {
  long prec = x.prec();
  // scale so that the fractional data dominates the unit part of the lattice
  long cbits = (long)(prec * 0.8);
  Real scale(prec);
  mpfr_set_ui_2exp(scale.get(), 1, cbits, MPFR_RNDN);
  long dim = max_degree + 1;
  std::vector<std::vector<Int>> B(dim, std::vector<Int>(dim + 1, 0));
  Ball xp(Rat(1), prec);
  for (long i = 0; i < dim; ++i) {
    B[i][i] = 1;
    Real sc(prec);
    mpfr_mul(sc.get(), xp.mid.get(), scale.get(), MPFR_RNDN);
    B[i][dim] = round_ball(Ball(std::move(sc), 0.0));
    xp = xp * x;
  }
  lll_reduce(B);
  // try the shortest few rows
  for (long row = 0; row < dim; ++row) {
    std::vector<Int> poly(B[row].begin(), B[row].begin() + dim);
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    if (poly.size() < 2) continue;
    bool ok = true;
    Int hmax = 0;
    for (auto& c : poly) hmax = std::max(hmax, Int(abs(c)));
    if (hmax > height_bound || hmax == 0) continue;
    // certified residual: |p(x)| must be far below the coefficient scale
    Ball val = poly_eval(poly, x);
    double thresh = std::ldexp(1.0, (int)-(0.55 * prec)) * hmax.get_d() * dim;
    if (!(val.mag() < thresh)) ok = false;
    if (ok) {
      // primitive, positive leading coefficient
      Int content = 0;
      for (auto& c : poly) content = gcd(content, c);
      for (auto& c : poly) c /= content;
      if (poly.back() < 0)
        for (auto& c : poly) c = -c;
      if (has_rational_root(poly) && poly.size() > 2) continue;
      if (has_small_quadratic_factor(poly)) continue;
      return poly;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Int>> integer_relation(const std::vector<Ball>& v,
                                                 const Int& height_bound, double tol) {
  long k = (long)v.size();
  long prec = v[0].prec();
  long cbits = (long)(prec * 0.8);
  Real scale(prec);
  mpfr_set_ui_2exp(scale.get(), 1, cbits, MPFR_RNDN);
  std::vector<std::vector<Int>> B(k, std::vector<Int>(k + 1, 0));
  for (long i = 0; i < k; ++i) {
    B[i][i] = 1;
    Real sc(prec);
    mpfr_mul(sc.get(), v[i].mid.get(), scale.get(), MPFR_RNDN);
    B[i][k] = round_ball(Ball(std::move(sc), 0.0));
  }
  lll_reduce(B);
  for (long row = 0; row < k; ++row) {
    std::vector<Int> rel(B[row].begin(), B[row].begin() + k);
    Int hmax = 0;
    bool nonzero = false;
    for (auto& c : rel) {
      hmax = std::max(hmax, Int(abs(c)));
      if (c != 0) nonzero = true;
    }
    if (!nonzero || hmax > height_bound) continue;
    Ball s = Ball::zero(prec);
    for (long i = 0; i < k; ++i) s = s + v[i] * Rat(rel[i]);
    if (s.mag() < tol) return rel;
  }
  return std::nullopt;
}

}  // namespace shintani
