#pragma once

#include "shintani/padic.hpp"

// Morita's p-adic gamma on Z_p and the p-adic Hurwitz log gamma
// LGamma_p(z, (1)) for ord_p(z) < 0, built from the locally analytic
// expansion
//
//   zeta_p(s, (1), z) = omega(z) <z>^{1-s}/(s-1) sum_j binom(1-s, j) B_j z^{-j},
//
// omega(z) = p^{ord z} theta_p(z), <z> = z / omega(z).  Its s-derivative at 0
// collapses to the closed form
//
//   LGamma_p(z) = (z - 1/2) log_p z - z + sum_{j>=2} B_j z^{1-j} / (j (j-1)),
//
// and the defining interpolation reads
// zeta_p(-k, (1), z) = (p^{ord z} theta_p(z))^{-k} zeta(-k, (1), z).
// Morita's gamma is reassembled from its Teichmuller digit and
// log_p Gamma_p(x) = sum_{0<=k<p, x+k a unit} LGamma_p((x+k)/p).

namespace shintani {

// LGamma_p(z, (1)) for a p-adic z with ord_p(z) < 0, to O(p^N) absolute
PadicNumber lgamma_p(const PadicNumber& z, long N);
PadicNumber lgamma_p_rat(long p, const Rat& z, long N);

// Morita gamma, x in Z_p (ord >= 0), p odd
PadicNumber morita_gamma(const PadicNumber& x);
PadicNumber morita_gamma_rat(long p, const Rat& x, long N);

// the limit-product definition evaluated mod p^k (test oracle; cost ~ p^k)
Int morita_gamma_product_oracle(long p, const Rat& x, long k);

// the locally analytic expansion of s -> zeta_p(s, (1), z)
struct PadicZetaSeries {
  long p = 0;
  Rat z;
  long N = 0;

  PadicZetaSeries(long p_, Rat z_, long N_);
  // s-power-series coefficients a_0..a_S around s = 0 (formal composition)
  std::vector<PadicNumber> coefficients(long S) const;
  // exact finite evaluation at s = -k (binom(1+k, j) truncates)
  PadicNumber value_at(long minus_k) const;
  PadicNumber lgamma() const;  // closed-form s-derivative at 0
  // interpolation self-check against omega^{-k} * (-B_{k+1}(z)/(k+1))
  bool check_interpolation(long kmax) const;
};

// zeta_p'(0, c_{r/m}) = X_p(c_{r/m}) for F = Q: LGamma_p(r/m) + (r/m - 1/2) log_p m
// requires gcd(r, m) = 1, p | m, p odd
PadicNumber padic_partial_zeta_deriv0(long p, long r, long m, long N);
MuInfClass padic_partial_zeta_class(long p, long r, long m, long N);

}  // namespace shintani
