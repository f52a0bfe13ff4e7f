#pragma once

#include <optional>
#include <vector>

#include "shintani/padic.hpp"
#include "shintani/rational.hpp"
#include "shintani/real.hpp"

// F = Q or a real quadratic field Q(sqrt D), with exact element and ideal
// arithmetic.  Elements are a + b*w in the integral basis (1, w), where
// w = (1+sqrt D)/2 for D = 1 mod 4 and w = sqrt D otherwise.  Ideals are
// kept in 2x2 Hermite normal form.  Degree is capped at 2: the rank-2 cone
// machinery downstream is the effective frontier.

namespace shintani {

struct Field {
  Int D = 1;        // squarefree, D = 1 encodes Q
  int degree = 1;   // 1 or 2
  Int disc = 1;
  bool omega_half = false;  // w = (1+sqrt D)/2 ?
  long tr_w = 0;            // Tr(w)
  Int nm_w = 0;             // w^2 = tr_w * w + nm_w

  static Field Q();
  static Field real_quadratic(const Int& D);
  bool is_Q() const { return degree == 1; }
  bool operator==(const Field& o) const { return D == o.D; }
};

struct FieldElement {
  Rat a, b;  // a + b*w

  FieldElement() : a(0), b(0) {}
  FieldElement(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit FieldElement(const Rat& r) : a(r), b(0) {}
  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  bool operator==(const FieldElement& o) const { return a == o.a && b == o.b; }
};

FieldElement fe_add(const FieldElement& x, const FieldElement& y);
FieldElement fe_sub(const FieldElement& x, const FieldElement& y);
FieldElement fe_neg(const FieldElement& x);
FieldElement fe_mul(const Field& F, const FieldElement& x, const FieldElement& y);
FieldElement fe_div(const Field& F, const FieldElement& x, const FieldElement& y);
FieldElement fe_conj(const Field& F, const FieldElement& x);
Rat fe_trace(const Field& F, const FieldElement& x);
Rat fe_norm(const Field& F, const FieldElement& x);
FieldElement fe_pow(const Field& F, const FieldElement& x, long e);
// x as u + v*sqrt(D), returns (u, v)
std::pair<Rat, Rat> fe_sqrt_coords(const Field& F, const FieldElement& x);
// sign at the identity embedding (sqrt D > 0) or its conjugate; exact
int fe_sign(const Field& F, const FieldElement& x, bool conj_embedding);
bool fe_totally_positive(const Field& F, const FieldElement& x);
bool fe_is_integral(const FieldElement& x);
std::string fe_str(const Field& F, const FieldElement& x);

// Integral ideal in HNF: Z*A + Z*(B + C*w), C | A and C | B, 0 <= B < A.
// For degree 1 the lattice is Z*A (B = 0, C = A).
struct Ideal {
  Int A = 1, B = 0, C = 1;
  bool operator==(const Ideal& o) const { return A == o.A && B == o.B && C == o.C; }
  bool operator<(const Ideal& o) const;
};

Ideal ideal_one(const Field& F);
// ideal generated by integral elements
Ideal ideal_from_gens(const Field& F, const std::vector<FieldElement>& gens);
Ideal ideal_principal(const Field& F, const FieldElement& x);  // x integral, nonzero
Ideal ideal_of_int(const Field& F, const Int& n);
Ideal ideal_mul(const Field& F, const Ideal& I, const Ideal& J);
Ideal ideal_pow(const Field& F, const Ideal& I, unsigned e);
Int ideal_norm(const Field& F, const Ideal& I);
Ideal ideal_sum(const Field& F, const Ideal& I, const Ideal& J);
Ideal ideal_conj(const Field& F, const Ideal& I);
bool ideal_contains(const Field& F, const Ideal& I, const FieldElement& x);
bool ideal_coprime(const Field& F, const Ideal& I, const Ideal& J);
bool ideal_divides(const Field& F, const Ideal& I, const Ideal& J);  // I | J
// J / I, requiring I | J
Ideal ideal_exact_divide(const Field& F, const Ideal& J, const Ideal& I);
std::string ideal_str(const Field& F, const Ideal& I);

struct FracIdeal {
  Ideal num;
  Int den = 1;  // lattice = num / den
};
FracIdeal frac(const Ideal& I);
FracIdeal frac_inv(const Field& F, const Ideal& I);
FracIdeal frac_mul(const Field& F, const FracIdeal& X, const FracIdeal& Y);
bool frac_contains(const Field& F, const FracIdeal& X, const FieldElement& x);
// Z-basis (g1, g2) of the fractional ideal lattice
std::pair<FieldElement, FieldElement> frac_basis(const Field& F, const FracIdeal& X);

// prime ideals above a rational prime q, with residue degrees
struct PrimeAbove {
  Ideal P;
  int f = 1;  // residue degree
  int e = 1;  // ramification
};
std::vector<PrimeAbove> primes_above(const Field& F, const Int& q);
std::vector<std::pair<Ideal, int>> factor_ideal(const Field& F, const Ideal& I);

// fundamental unit > 1 of O_F (degree 2), by continued fractions of w
FieldElement fundamental_unit(const Field& F);
// generator of the group of totally positive units (> 1 at id); rejects Q
FieldElement fundamental_totally_positive_unit(const Field& F);
// wide class number by Minkowski-bound enumeration; narrow h+ derived
long class_number(const Field& F);
long narrow_class_number(const Field& F);

// alpha with (alpha) = J; if totally_positive, both embeddings positive.
// Bounded search; returns nullopt if J is not principal (with that sign datum).
std::optional<FieldElement> principal_generator(const Field& F, const FracIdeal& J,
                                                bool totally_positive);

// element z = 1 + (f-lattice) with prescribed signs at (id, conj); bounded search
FieldElement element_one_mod_f_with_signs(const Field& F, const Ideal& f, int sign_id,
                                          int sign_conj);

struct Embedding {
  enum Kind { RealId, RealConj, Padic } kind = RealId;
  long p = 0;
  bool split = false;
  PadicNumber omega_image;  // split case
  Rat ext_A, ext_B;         // inert/ramified: w -> ext_A + ext_B*sqrt(d0)
  Int ext_d0 = 0;
};

Embedding real_embedding(const Field& F, bool conj);
// p odd; lift_choice in {0,1} picks the Hensel root for split p
Embedding padic_embedding(const Field& F, long p, int lift_choice, long N);

Ball embed_real(const Field& F, const FieldElement& x, const Embedding& e, long prec);
PadicExt embed_padic(const Field& F, const FieldElement& x, const Embedding& e, long N);

}  // namespace shintani
