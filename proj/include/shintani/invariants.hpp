#pragma once

#include <functional>
#include <optional>

#include "shintani/gamma.hpp"
#include "shintani/padic_gamma.hpp"
#include "shintani/shintani.hpp"

// Yoshida-type class invariants.  X(c; D, a_c) = G + V + W with
//   G = sum over cones and R(c, v_j) of log Gamma(x.v_j, v_j),
//   W = -zeta(0,c)/h+ * log pi_{a_c f},
// and V supplied by a pluggable provider for degree 2 (the degree-1 case
// has V = 0).  X_p(c) is the p-adic analogue over Q with p | f.

namespace shintani {

// V(c; D, a_c) as explicit (a_i, eps_i) data: V = sum a_i log eps_i
struct CorrectionTerm {
  std::vector<std::pair<FieldElement, FieldElement>> terms;
};
using CorrectionTermProvider =
    std::function<std::optional<CorrectionTerm>(const RayClassGroup&, long,
                                                const ShintaniDomain&, const Ideal&)>;

struct InvariantValue {
  Ball archimedean;   // X(c) on the log scale
  bool arch_full = true;  // false: degree-2 value is G + W only (no V provider)
  std::optional<PadicNumber> padic;  // X_p(c) when requested
  Ideal a_c;
};

InvariantValue compute_X(const RayClassGroup& G, long c, const ShintaniDomain& D,
                         const Ideal& a_c, const CorrectionTermProvider* provider,
                         const PrecisionCtx& ctx, int pi_unit_shift = 0);

// F = Q, p | f: G_p + W_p (V_p = 0)
PadicNumber compute_Xp(const RayClassGroup& G, long c, const ShintaniDomain& D,
                       const Ideal& a_c, const PrecisionCtx& ctx);

// closed form of exp(X(c_{r/m})) over Q on the log scale:
// log Gamma(r'/m') + (r'/m' - 1/2) log(m') - (1/2) log 2pi
Ball closed_form_X_Q(long r, long m, const PrecisionCtx& ctx);

struct Prop24Report {
  bool q_divides_f = false;
  double arch_residual = 0.0;   // |LHS - RHS| upper bound (archimedean side)
  bool padic_checked = false;
  bool padic_equal = false;
  long padic_digits = 0;        // absolute digits to which the two sides agree
};

// Prop. 2.4 over Q, both sides of the stated identity (q | f and q !| f are
// distinguished from the inputs); p = 0 runs only the archimedean side
Prop24Report check_prop24(long m, long q, long r_class, long p, const PrecisionCtx& ctx);

// gamma_p(c_{pr/m}) for p not dividing m, as the fiber product
// p^{zeta(0, c_{r/m})} prod exp_p(X_p(c~)); and its Morita closed form
MuInfClass gamma_p_lower(long p, long r, long m, const PrecisionCtx& ctx);
MuInfClass gamma_p_closed_form(long p, long r, long m, const PrecisionCtx& ctx);

// the pair [prod exp(X(c)) : prod exp_p(X_p(c))] over a fiber of
// phi_H : C_(m) -> C_(m)/ker_H, sigma given by a representative class
struct FiberProductPair {
  Ball arch;        // prod exp(X(c))
  MuInfClass padic;  // class of prod exp_p(X_p(c))
};
FiberProductPair fiber_product_ratio(const RayClassGroup& G, const std::vector<long>& kerH,
                                     long sigma_rep, const PrecisionCtx& ctx);

struct RgcReport {
  bool ord_identity = false;   // exact rational ord comparison
  bool muinf_equal = false;
  double arch_defect = 1.0;    // | prod exp(X) * p^{-r} - 1 |
  Rat ord_value;
};

// the (rGc) verifier over Q: K imaginary quadratic of discriminant dK
// (dK in {-4, -3}), p odd split in K, f = f0 * p, K inside Q(zeta_{f0});
// sigma_conj = false for id, true for complex conjugation
RgcReport verify_rGc_over_Q(long dK, long p, long f0, bool sigma_conj,
                            const PrecisionCtx& ctx);

}  // namespace shintani
