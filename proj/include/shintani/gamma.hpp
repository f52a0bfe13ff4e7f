#pragma once

#include <vector>

#include "shintani/real.hpp"

// Archimedean special functions with certified balls: classical log Gamma
// and digamma by Stirling with argument shift, Hurwitz zeta values and
// s-derivatives at integer points by Euler-Maclaurin with explicit
// remainder bounds, and Barnes multiple zeta of rank <= 2 near s = 0.
//
// The rank-2 continuation sums the inner index into Hurwitz zetas and
// expands the outer tail by Euler-Maclaurin; every s-derivative is taken
// term by term (each term is elementary in s), and the one integral
// remainder carries the explicit periodic-Bernoulli bound.

namespace shintani {

// log Gamma(x), x > 0
Ball log_gamma(const Ball& x, long prec);
// Gamma(x) itself (exp of the above)
Ball gamma_fn(const Ball& x, long prec);
// psi(x) = Gamma'/Gamma
Ball digamma(const Ball& x, long prec);

// Hurwitz zeta(s0, w) for integer s0 != 1 (exact Bernoulli polynomial for
// s0 <= 0, Euler-Maclaurin for s0 >= 2)
Ball hurwitz_value(long s0, const Ball& w, long prec);
// d/ds zeta_H(s, w) at s0 = 0 or s0 = -1
Ball hurwitz_sderiv(long s0, const Ball& w, long prec);
// zeta_H(s, w) for real ball s (s away from 1)
Ball hurwitz_general(const Ball& s, const Ball& w, long prec);

struct BarnesInput {
  std::vector<Ball> v;  // 1 or 2 positive reals
  Ball z;               // positive
};

// value and s-derivative of the continued Barnes zeta at s = 0
struct BarnesAtZero {
  Ball value;   // zeta(0, v, z)
  Ball sderiv;  // zeta'(0, v, z) = log Gamma(z, v) in the modified normalization
};
BarnesAtZero barnes_at_zero(const BarnesInput& in, long prec);

Ball barnes_zeta0(const BarnesInput& in, long prec);
Ball log_multiple_gamma(const BarnesInput& in, long prec);

// Barnes zeta at a real ball s bounded away from the poles (and from the
// s = 0 special point, which barnes_at_zero handles)
Ball barnes_zeta(const Ball& s, const BarnesInput& in, long prec);

// conveniences on exact rational input
Ball classical_log_gamma(const Rat& x, const PrecisionCtx& ctx);
Ball log_multiple_gamma_rat(const std::vector<Rat>& v, const Rat& z, const PrecisionCtx& ctx);

}  // namespace shintani
