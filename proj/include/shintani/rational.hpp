#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

// Exact integer/rational layer. GMP supplies the raw arithmetic; everything
// number-theoretic on top of it (valuations, Bernoulli numbers, modular
// square roots) lives here.

namespace shintani {

using Int = mpz_class;
using Rat = mpq_class;

// canonicalized rational a/b (mpq_class's two-argument constructor does not
// reduce; every fraction built from non-coprime parts must go through here)
inline Rat mkrat(const Int& a, const Int& b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

inline Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rat qpow(const Rat& b, long e) {
  if (e >= 0) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), (unsigned long)e);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), (unsigned long)e);
    r.canonicalize();
    return r;
  }
  Rat r = qpow(b, -e);
  return 1 / r;
}

// p-adic valuation of a nonzero integer.
long valuation(const Int& n, const Int& p);
// valuation of a nonzero rational.
long valuation(const Rat& q, const Int& p);

// inverse of a mod m, throws if not invertible
Int invmod(const Int& a, const Int& m);

Int powmod(const Int& b, const Int& e, const Int& m);

// square root of a mod odd prime p, returns false if a is a non-residue
bool sqrt_mod_p(const Int& a, const Int& p, Int& root);

bool is_prime(const Int& n);

// trial-division factorization, smallest factors first
std::vector<std::pair<Int, int>> factor(const Int& n);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

inline Rat frac_part(const Rat& q) {  // <q> in (0,1) for q not integral, 0 for integral
  Rat f = q - Rat(Int(q.get_num() / q.get_den()));  // truncates toward zero
  if (f < 0) f += 1;
  return f;
}

long floor_long(const Rat& q);

// Exact Bernoulli numbers B_0, B_1 = -1/2, B_2, ...  Cached, thread-safe.
Rat bernoulli_number(unsigned k);

// k-th Bernoulli polynomial at rational x, B_k(x) = sum C(k,j) B_j x^{k-j}.
Rat bernoulli_poly(unsigned k, const Rat& x);

Rat binom(unsigned n, unsigned k);

// binomial coefficient with rational upper argument, C(a, k)
Rat binom_rat(const Rat& a, unsigned k);

std::string to_string(const Rat& q);

}  // namespace shintani
