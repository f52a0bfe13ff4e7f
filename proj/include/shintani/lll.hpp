#pragma once

#include <optional>

#include "shintani/real.hpp"

// Exact-arithmetic LLL and the two recognition front ends built on it:
// minimal polynomials of real balls (algdep) and small integer relations
// among a list of reals.

namespace shintani {

// LLL-reduce the rows of B in place (delta = 3/4), exact rational Gram-Schmidt
void lll_reduce(std::vector<std::vector<Int>>& B);

// minimal integer polynomial of x of degree <= max_degree with coefficients
// bounded by height_bound, or nullopt; the returned polynomial is primitive,
// has positive leading coefficient, passes a certified residual test and a
// rational-root / bounded quadratic-factor irreducibility screen
std::optional<std::vector<Int>> recognize_algebraic(const Ball& x, int max_degree,
                                                    const Int& height_bound);

// small integers (n_0..n_k), not all zero, with |sum n_i v_i| < tol certified
std::optional<std::vector<Int>> integer_relation(const std::vector<Ball>& v,
                                                 const Int& height_bound, double tol);

// evaluate an integer polynomial on a ball
Ball poly_eval(const std::vector<Int>& poly, const Ball& x);

}  // namespace shintani
