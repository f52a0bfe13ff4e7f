#include "shintani/padic_gamma.hpp"

#include <algorithm>
#include <numeric>

namespace shintani {

namespace {
long guard_for(long p, long len) {
  long g = 0;
  Int pk = 1;
  while (pk < len) {
    pk *= p;
    ++g;
  }
  return g + 5;
}
}  // namespace

PadicNumber lgamma_p(const PadicNumber& z, long N) {
  long p = z.p();
  if (z.is_zero() || z.ord() >= 0)
    throw std::invalid_argument("lgamma_p: requires ord_p(z) < 0");
  long t = -z.ord();
  long denom = (p - 1);
  // series term j has ord >= (j-1)t - 1 - ord_p(j(j-1)); crude length bound
  long len = N / std::max(1L, t - (denom == 2 ? 1 : 0)) + 3 * N / (2 * (p > 3 ? 4 : 2)) + 32;
  long g = guard_for(p, 2 * len) + 4;
  long Ni = N + g;
  PadicNumber zi = z.truncate_abs(z.ord() + Ni + 2 * t + 8);
  PadicNumber half = PadicNumber::from_rat(p, Rat(1, 2), Ni);
  PadicNumber acc = (zi - half) * iwasawa_log(zi) - zi;
  PadicNumber zinv2 = (zi * zi).inv();
  PadicNumber zp = zi;  // z^{1-j} for j = 2
  zp = zi.inv();
  for (long j = 2;; j += 2) {
    PadicNumber term = PadicNumber::from_rat(
                           p, bernoulli_number((unsigned)j) / Rat(Int(j) * Int(j - 1)), Ni) *
                       zp;
    // break well past the target so the log_p-valuation dents of later
    // terms cannot reach back below N
    if (term.is_zero() || term.ord() >= N + g - 2) break;
    acc = acc + term;
    zp = zp * zinv2;
    if (j > 8 * len + 64) throw std::runtime_error("lgamma_p: series bound exceeded");
  }
  return acc.truncate_abs(N);
}

PadicNumber lgamma_p_rat(long p, const Rat& z, long N) {
  long t = -valuation(z, p);
  if (t <= 0) throw std::invalid_argument("lgamma_p_rat: requires ord_p(z) < 0");
  long g = guard_for(p, 4 * N) + 8;
  return lgamma_p(PadicNumber::from_rat(p, z, N + g + 2 * t), N);
}

Int morita_gamma_product_oracle(long p, const Rat& x, long k) {
  Int m = ipow(Int(p), (unsigned long)k);
  // n = x mod p^k as an integer in [0, p^k)
  PadicNumber xp = PadicNumber::from_rat(p, x, k + 2);
  Int n = xp.is_zero() ? Int(0) : xp.lift(k);
  Int acc = (n % 2 == 0) ? Int(1) : Int(m - 1);  // (-1)^n
  for (Int j = 1; j < n; ++j) {
    if (j % p == 0) continue;
    acc = acc * j % m;
  }
  return acc;
}

PadicNumber morita_gamma(const PadicNumber& x) {
  long p = x.p();
  if (!x.is_zero() && x.ord() < 0)
    throw std::invalid_argument("morita_gamma: requires x in Z_p");
  long N = x.is_zero() ? 25 : x.rel_prec();
  // Teichmuller digit from the product definition mod p^2
  Int mod2 = Int(p) * p;
  Int n2 = x.is_zero() ? Int(0) : x.lift(2);
  Int g2 = (n2 % 2 == 0) ? Int(1) : Int(mod2 - 1);
  for (Int j = 1; j < n2; ++j) {
    if (j % p == 0) continue;
    g2 = g2 * j % mod2;
  }
  PadicNumber theta = teichmuller(PadicNumber::from_int(p, g2 % p == 0 ? Int(1) : g2, N + 6));
  // log Gamma_p(x) = sum over the unit translates of the distribution row
  long g = guard_for(p, 4 * N) + 6;
  long Ni = N + g;
  PadicNumber xi = x.is_zero() ? PadicNumber::zero_to(p, Ni) : x.truncate_abs(x.ord() + Ni);
  PadicNumber pinv = PadicNumber::from_rat(p, Rat(1, Int(p)), Ni + 2);
  PadicNumber logsum = PadicNumber::zero(p);
  for (long k = 0; k < p; ++k) {
    PadicNumber xk = xi + PadicNumber::from_rat(p, Rat(Int(k)), Ni);
    if (xk.is_zero() || xk.ord() >= 1) continue;  // the excluded p-divisible slot
    logsum = logsum + lgamma_p(xk * pinv, N + 4);
  }
  PadicNumber unit_part = exp_p(logsum.truncate_abs(N + 2));
  return (theta * unit_part).truncate_abs(N);
}

PadicNumber morita_gamma_rat(long p, const Rat& x, long N) {
  long g = guard_for(p, 4 * N) + 8;
  return morita_gamma(PadicNumber::from_rat(p, x, N + g));
}

// ------------------------------------------------------ PadicZetaSeries

PadicZetaSeries::PadicZetaSeries(long p_, Rat z_, long N_) : p(p_), z(std::move(z_)), N(N_) {
  if (valuation(z, p) >= 0)
    throw std::invalid_argument("PadicZetaSeries: requires ord_p(z) < 0");
}

namespace {
using Series = std::vector<PadicNumber>;  // coefficients in s

Series series_mul(const Series& a, const Series& b, long S, long p) {
  Series out((size_t)S + 1, PadicNumber::zero(p));
  for (long i = 0; i <= S; ++i)
    for (long j = 0; i + j <= S; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}
}  // namespace

std::vector<PadicNumber> PadicZetaSeries::coefficients(long S) const {
  long t = -valuation(z, p);
  long g = guard_for(p, 8 * N) + 8;
  long Ni = N + g;
  PadicNumber zp = PadicNumber::from_rat(p, z, Ni + 2 * t + 4);
  PadicNumber theta = teichmuller(PadicNumber::make(p, 0, zp.unit(), zp.rel_prec()));
  // <z> = z * p^{-ord} theta^{-1}; omega <z> = z
  PadicNumber zang = PadicNumber::make(p, 0, zp.unit(), zp.rel_prec()) / theta;
  PadicNumber L = iwasawa_log(zp);  // = log_p <z>
  // exp(-s L)
  Series expser((size_t)S + 1, PadicNumber::zero(p));
  {
    PadicNumber c = PadicNumber::from_rat(p, Rat(1), Ni);
    expser[0] = c;
    for (long k = 1; k <= S; ++k) {
      c = c * (-L) / PadicNumber::from_rat(p, Rat(Int(k)), Ni);
      expser[k] = c;
    }
  }
  // 1/(s-1) = -(1 + s + s^2 + ...)
  Series geom((size_t)S + 1, PadicNumber::from_rat(p, Rat(-1), Ni));
  // f(s) = sum_j binom(1-s, j) B_j z^{-j}: binom built as a polynomial in s
  Series f((size_t)S + 1, PadicNumber::zero(p));
  f[0] = PadicNumber::from_rat(p, Rat(1), Ni);
  Series binom_poly((size_t)S + 1, PadicNumber::zero(p));
  binom_poly[0] = PadicNumber::from_rat(p, Rat(1), Ni);
  PadicNumber zinv = zp.inv();
  PadicNumber zpow = zinv;
  long maxlen = 16 * N + 256;
  for (long j = 1; j <= maxlen; ++j) {
    // binom(1-s, j) = binom(1-s, j-1) * (2 - j - s)/j
    Series lin((size_t)S + 1, PadicNumber::zero(p));
    lin[0] = PadicNumber::from_rat(p, Rat(Int(2 - j)), Ni);
    if (S >= 1) lin[1] = PadicNumber::from_rat(p, Rat(-1), Ni);
    binom_poly = series_mul(binom_poly, lin, S, p);
    PadicNumber jinv = PadicNumber::from_rat(p, Rat(Int(j)), Ni).inv();
    for (auto& c : binom_poly) c = c * jinv;
    Rat Bj = bernoulli_number((unsigned)j);
    if (Bj != 0) {
      PadicNumber w = PadicNumber::from_rat(p, Bj, Ni) * zpow;
      bool small = w.is_zero() || w.ord() >= N + g / 2;
      for (long k = 0; k <= S; ++k) f[k] = f[k] + binom_poly[k] * w;
      if (small && j > 2) break;
    }
    zpow = zpow * zinv;
  }
  // assemble omega <z>^{1-s} f(s)/(s-1) = z * exp(-sL) * f(s) * geom(s)
  Series out = series_mul(expser, f, S, p);
  out = series_mul(out, geom, S, p);
  for (auto& c : out) c = (c * zp).truncate_abs(N);
  return out;
}

PadicNumber PadicZetaSeries::value_at(long minus_k) const {
  long k = minus_k;
  if (k < 0) throw std::invalid_argument("value_at: expects -k with k >= 0");
  long t = -valuation(z, p);
  long g = guard_for(p, 8 * N) + 8;
  long Ni = N + g + (k + 2) * t + 4;
  PadicNumber zp = PadicNumber::from_rat(p, z, Ni);
  PadicNumber theta = teichmuller(PadicNumber::make(p, 0, zp.unit(), zp.rel_prec()));
  PadicNumber zang = PadicNumber::make(p, 0, zp.unit(), zp.rel_prec()) / theta;  // <z>
  // omega <z>^{1+k}/(-k-1) * sum_{j=0}^{k+1} binom(1+k, j) B_j z^{-j}
  PadicNumber sum = PadicNumber::zero(p);
  PadicNumber zpow = PadicNumber::from_rat(p, Rat(1), Ni);
  PadicNumber zinv = zp.inv();
  for (long j = 0; j <= k + 1; ++j) {
    Rat c = binom((unsigned)(k + 1), (unsigned)j) * bernoulli_number((unsigned)j);
    if (c != 0) sum = sum + PadicNumber::from_rat(p, c, Ni) * zpow;
    zpow = zpow * zinv;
  }
  PadicNumber pref = zp;  // omega * <z>
  for (long i = 0; i < k; ++i) pref = pref * zang;
  return (pref * sum / PadicNumber::from_rat(p, Rat(Int(-k - 1)), Ni)).truncate_abs(N);
}

PadicNumber PadicZetaSeries::lgamma() const { return lgamma_p_rat(p, z, N); }

bool PadicZetaSeries::check_interpolation(long kmax) const {
  long t = -valuation(z, p);
  for (long k = 0; k <= kmax; ++k) {
    PadicNumber lhs = value_at(k);
    // omega^{-k} zeta(-k, z), omega = p^{ord} theta
    long g = guard_for(p, 8 * N) + 8;
    long Ni = N + g + (k + 2) * t + 4;
    PadicNumber zp = PadicNumber::from_rat(p, z, Ni);
    PadicNumber theta = teichmuller(PadicNumber::make(p, 0, zp.unit(), zp.rel_prec()));
    PadicNumber omega = PadicNumber::make(p, zp.ord(), theta.unit(), theta.rel_prec());
    Rat classical = -bernoulli_poly((unsigned)(k + 1), z) / Rat(Int(k + 1));
    PadicNumber rhs = omega.pow(-k) * PadicNumber::from_rat(p, classical, Ni);
    PadicNumber d = lhs - rhs;
    if (!d.is_zero() || d.abs_prec() < N - 2) return false;
  }
  return true;
}

PadicNumber padic_partial_zeta_deriv0(long p, long r, long m, long N) {
  if (std::gcd(r, m) != 1) throw std::invalid_argument("padic_partial_zeta_deriv0: reduce r/m");
  if (m % p != 0) throw std::invalid_argument("padic_partial_zeta_deriv0: requires p | m");
  long g = guard_for(p, 8 * N) + 8;
  PadicNumber G = lgamma_p_rat(p, mkrat(Int(r), Int(m)), N + 4);
  PadicNumber W = PadicNumber::from_rat(p, mkrat(Int(r), Int(m)) - Rat(1, 2), N + g) *
                  iwasawa_log_rat(p, Rat(Int(m)), N + 4);
  return (G + W).truncate_abs(N);
}

MuInfClass padic_partial_zeta_class(long p, long r, long m, long N) {
  return MuInfClass::exp_class(padic_partial_zeta_deriv0(p, r, m, N));
}

}  // namespace shintani
