#pragma once

#include <map>
#include <optional>
#include <vector>

#include "shintani/cyclotomic.hpp"
#include "shintani/quadfield.hpp"

// Narrow ray class groups C_f, realized as ((O/f)^x x {signs}) / (global
// units) -- valid whenever the wide class number of F is 1, which covers
// every field this artifact computes with; larger class numbers are
// rejected loudly.  Classes are dense indices with an explicit
// multiplication table, an elementary-divisor basis for the character
// group, and both element and ideal representatives per class.

namespace shintani {

struct Character {
  std::vector<long> t;  // exponent against each cyclic factor
  long order = 1;       // order of the character
  long n = 1;           // values live in mu_n (n = exponent of the group)
};

class RayClassGroup {
 public:
  static RayClassGroup build(const Field& F, const Ideal& f);

  const Field& field() const { return F_; }
  const Ideal& modulus() const { return f_; }
  long h_plus() const { return h_plus_; }
  long size() const { return nclasses_; }
  long identity() const { return id_class_; }
  long mul(long c1, long c2) const { return mult_[c1][c2]; }
  long inv_class(long c) const { return inv_[c]; }
  long pow_class(long c, long e) const;

  long class_of_element(const FieldElement& z) const;  // z nonzero, coprime to f
  long class_of_ideal(const Ideal& J) const;           // integral, coprime to f
  bool ideal_coprime_to_f(const Ideal& J) const;
  const Ideal& ideal_rep(long c) const { return class_rep_ideal_[c]; }
  const FieldElement& element_rep(long c) const { return class_rep_elt_[c]; }

  // complex conjugation class s_iota (direct coset construction)
  long s_iota(bool conj_place) const;

  // group structure
  const std::vector<long>& gen_classes() const { return gens_; }
  const std::vector<long>& gen_orders() const { return orders_; }
  long exponent() const { return exponent_; }
  const std::vector<long>& dlog(long c) const { return dlog_[c]; }

  std::vector<Character> characters() const;
  // exponent k with chi(c) = zeta_n^k, n = chi.n
  long char_value_exp(const Character& chi, long c) const;
  Cplx char_value(const Character& chi, long c, long prec) const;
  CycElt char_value_exact(const CycField& K, const Character& chi, long c) const;

  // subgroup generated by the given classes, as a sorted list
  std::vector<long> subgroup(const std::vector<long>& gens) const;

 private:
  Field F_;
  Ideal f_;
  long h_plus_ = 1;
  long nsigns_ = 2;
  std::vector<FieldElement> residues_;
  std::map<std::pair<Int, Int>, long> residue_index_;
  std::vector<long> unit_index_;          // residue idx -> unit ordinal or -1
  std::vector<long> units_;               // unit ordinals -> residue idx
  std::vector<long> coset_of_;            // U element -> class
  long nclasses_ = 1, id_class_ = 0;
  std::vector<long> class_rep_u_;
  std::vector<FieldElement> class_rep_elt_;
  std::vector<Ideal> class_rep_ideal_;
  std::vector<std::vector<long>> mult_;
  std::vector<long> inv_;
  std::vector<long> gens_;
  std::vector<long> orders_;
  long exponent_ = 1;
  std::vector<std::vector<long>> dlog_;

  long reduce_index(const FieldElement& z) const;
  long u_mul(long u1, long u2) const;
  long u_of(const FieldElement& z) const;  // (residue, signs) -> U index
  long pow_class_raw(long c, long e) const;
  std::vector<long> subgroup_of(const std::vector<long>& gens) const;
  void build_structure();
};

// Find nu = 1 mod f, negative exactly at the given place: the search oracle
// for s_iota.
long conjugation_class(const RayClassGroup& G, bool conj_place);

struct CmStructure {
  std::vector<long> s_subgroup;        // <s_iota>
  std::vector<long> s_pair_subgroup;   // <s_iota s_iota'>
  bool has_cm = false;
};
CmStructure cm_structure(const RayClassGroup& G);

// natural projection C_{f'} -> C_f (f | f'), and its fiber
long project_class(const RayClassGroup& big, const RayClassGroup& small, long c_big);
std::vector<long> fiber_of_class(const RayClassGroup& big, const RayClassGroup& small,
                                 long c_small);

// integral ideal a_c with a_c * f in pi(c) (C_(1) condition), smallest norm,
// HNF lexicographic tie-break, optionally divisible by the given ideal
Ideal choose_ac(const RayClassGroup& G, long c, const Ideal& multiple_of);
Ideal choose_ac(const RayClassGroup& G, long c);

// totally positive generator of q^{h+}, canonical unit normalization
FieldElement choose_pi_q(const Field& F, const Ideal& q);
FieldElement choose_pi_q(const Field& F, const Ideal& q, int unit_shift);
// pi_g = prod over primes q | g of pi_q^{ord_q g}
FieldElement pi_of_ideal(const Field& F, const Ideal& g);
FieldElement pi_of_ideal(const Field& F, const Ideal& g, int unit_shift);

// all integral ideals of norm <= X, sorted by (norm, HNF)
std::vector<Ideal> ideals_up_to(const Field& F, long X);

// F = Q: the label r of the class c = c_{r/m}, i.e. the smallest positive
// r coprime to m with [(r)] = c
long class_label_Q(const RayClassGroup& G, long c);

// Aggregation coefficients r(c, sigma) of the abelian-over-Q setup:
// Cd = C_(d) over Q, G = Cd/kerK = Gal(K/Q), H = HK/kerK = Gal(K/F),
// sigma a class in HK.  Lvalues[i] is the exact L_d(0, psi_i) for the i-th
// character of Cd (only those trivial on kerK are consulted).  The
// cyclotomic sums must collapse to rationals; a non-rational result throws.
std::map<long, Rat> aggregation_coeffs(const RayClassGroup& Cd,
                                       const std::vector<long>& kerK,
                                       const std::vector<long>& HK, long sigma_class,
                                       const CycField& K,
                                       const std::vector<Character>& chars,
                                       const std::vector<CycElt>& Lvalues);

}  // namespace shintani
