#pragma once

#include "shintani/rayclass.hpp"
#include "shintani/shintani.hpp"

// Hecke/Dirichlet L-functions of narrow ray class characters (degree <= 2)
// by the smoothed approximate functional equation.  The completed function
//
//   Lambda(s) = (|d_F| N(cond))^{s/2} prod_i Gamma_R(s + a_i) L(s, chi)
//
// is evaluated at s = 0 and 1 through incomplete kernel moments: incomplete
// gammas for the elementary signatures and Bessel-K_0 moment series for the
// (0,0) and (1,1) signatures of a real quadratic field.  Root numbers come
// from the theta relation Theta(1/y) = W y Theta~(y) evaluated at a test
// point, which stays certified and avoids committing to a Gauss-sum sign
// convention.

namespace shintani {

struct LValue {
  Cplx L0;   // L_f(0, chi), imprimitive Euler factors included
  Cplx L1;   // d/ds at 0
  Ideal conductor;
  int a1 = 0, a2 = 0;
  Cplx root_number;
  int forced_order = 0;  // vanishing order at s = 0 forced by the Gamma factor
  bool root_number_known = false;
};

LValue hecke_L(const RayClassGroup& G, const Character& chi, bool want_derivative,
               const PrecisionCtx& ctx);

// exact Sum_c chi(c) zeta(0, c) for cross-checks (cyclotomic, then complex)
Cplx exact_L0_from_zeta(const RayClassGroup& G, const Character& chi,
                        const PrecisionCtx& ctx);

// zeta'(0, c) by character inversion over all characters of G
Ball partial_zeta_deriv0(const RayClassGroup& G, long c, const PrecisionCtx& ctx);

// the primitive character behind chi
struct PrimitiveData {
  RayClassGroup Gp;
  Character chip;
  Ideal conductor;
  int a1 = 0, a2 = 0;
};
PrimitiveData primitivize(const RayClassGroup& G, const Character& chi);

// weight-function internals, exposed for tests
Ball incgamma_upper(const Rat& c, int logweight, const Ball& x, long prec);
Ball besselK0_moment(int c, int logweight, const Ball& y, long prec);

struct FuneqReport {
  bool exact_factorization = false;  // (funeq) at s = 0, exact cyclotomic
  bool ztoz_exact = false;           // (ztoz) exact
  double zdtoz_residual = 1.0;       // (zdtoz') numeric residual bound
};
// the worked tower F = Q(sqrt 5) inside K = Q(zeta_5), f = (5), d = 5
FuneqReport check_funeq_sqrt5(const PrecisionCtx& ctx);

}  // namespace shintani
