#pragma once

#include "shintani/rayclass.hpp"

// Shintani cone decomposition for F of degree <= 2, enumeration of the
// finite sets R(c, v_j), and exact rational values zeta(-k, c) of the
// narrow ray class partial zeta functions via the cone Bernoulli formula.
//
// For a rank-2 cone C(v1, v2) and x = x1 v1 + x2 v2 the value at s = -k is
//
//   zeta_C(-k, x) = (k!)^2 / 2 * Tr_{F/Q}( [u^k] sum_{k1+k2=2k+2}
//       B_{k1}(x1) B_{k2}(x2) / (k1! k2!) W1(u)^{k1-1} W2(u)^{k2-1} )
//
// with W_j(u) = v_j + u * conj(v_j) expanded as a power series in u over F.

namespace shintani {

struct Cone {
  std::vector<FieldElement> v;  // basis, totally positive, rank <= 2
  int rank() const { return (int)v.size(); }
};

struct ShintaniDomain {
  std::vector<Cone> cones;
};

// D = C(1) for Q; C(1) u C(1, eps_+) for real quadratic F
ShintaniDomain shintani_domain(const Field& F);

// exact membership of a totally positive z in a cone (coefficients > 0,
// with the half-open convention handled by the caller via coefficients)
bool cone_contains(const Field& F, const Cone& cone, const FieldElement& z);

// the unique (k, j) with eps_+^k z in cone j of D; throws if not found
std::pair<long, int> locate_in_domain(const Field& F, const ShintaniDomain& D,
                                      const FieldElement& z, long kmax = 512);

struct RSet {
  long cls = 0;
  int cone_index = 0;
  std::vector<std::vector<Rat>> xs;  // each x in (Q cap (0,1])^rank
};

// R(c, v_j) = { x in (0,1]^r : (x.v) a_c f integral and in class c }
RSet enumerate_rset(const RayClassGroup& G, long c, const ShintaniDomain& D, int cone_index,
                    const Ideal& a_c);

// exact zeta(-k, c) via the Bernoulli formula over all cones of D
Rat partial_zeta_neg_int(const RayClassGroup& G, long c, unsigned k);
// with explicit choices (used by independence tests)
Rat partial_zeta_neg_int(const RayClassGroup& G, long c, unsigned k, const ShintaniDomain& D,
                         const Ideal& a_c);

// cone zeta building block: zeta_C(-k, x) for a single cone
Rat cone_zeta_neg_int(const Field& F, const Cone& cone, const std::vector<Rat>& x, unsigned k);

}  // namespace shintani
