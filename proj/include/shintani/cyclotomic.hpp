#pragma once

#include <vector>

#include "shintani/rational.hpp"

// Exact arithmetic in Q(zeta_n), represented in Q[X]/(Phi_n).  Used where
// character sums must come out as exact rationals (orthogonality, the
// aggregation coefficients r(c, sigma), L-values at 0).

namespace shintani {

struct CycField {
  long n;                    // zeta = e^{2 pi i / n}
  std::vector<Rat> phi;      // Phi_n, monic, ascending coefficients
  long deg() const { return (long)phi.size() - 1; }
  static CycField make(long n);
};

struct CycElt {
  std::vector<Rat> c;  // coordinates in basis 1, zeta, ..., zeta^{deg-1}
};

CycElt cyc_zero(const CycField& K);
CycElt cyc_rat(const CycField& K, const Rat& r);
CycElt cyc_zeta_pow(const CycField& K, long k);  // zeta^k reduced mod Phi_n
CycElt cyc_add(const CycField& K, const CycElt& x, const CycElt& y);
CycElt cyc_sub(const CycField& K, const CycElt& x, const CycElt& y);
CycElt cyc_mul(const CycField& K, const CycElt& x, const CycElt& y);
CycElt cyc_scale(const CycElt& x, const Rat& r);
bool cyc_is_zero(const CycElt& x);
bool cyc_is_rational(const CycElt& x);
Rat cyc_rational_part(const CycElt& x);  // requires cyc_is_rational

}  // namespace shintani
