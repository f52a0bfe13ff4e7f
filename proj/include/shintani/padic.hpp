#pragma once

#include <stdexcept>
#include <string>

#include "shintani/rational.hpp"
#include "shintani/real.hpp"

// p-adic arithmetic with exact precision-loss accounting.  A nonzero value
// is p^ord * unit with the unit known mod p^N; additions recompute the
// valuation of the sum digit-exactly, so every result knows how many digits
// it is good for.  PadicExt adjoins a square root of a non-square (the
// quadratic unramified or ramified extension); MuInfClass represents
// elements of C_p^x modulo all roots of unity by the pair (ord, Iwasawa log).

namespace shintani {

struct insufficient_precision : std::runtime_error {
  explicit insufficient_precision(const std::string& m) : std::runtime_error(m) {}
};

class PadicNumber {
 public:
  PadicNumber() = default;
  // exact zero
  static PadicNumber zero(long p);
  // zero known only to O(p^abs_prec)
  static PadicNumber zero_to(long p, long abs_prec);
  static PadicNumber from_rat(long p, const Rat& q, long N);
  static PadicNumber from_int(long p, const Int& n, long N) { return from_rat(p, Rat(n), N); }
  // p^ord * unit, unit given mod p^N (must be coprime to p)
  static PadicNumber make(long p, long ord, const Int& unit, long N);

  long p() const { return p_; }
  bool is_zero() const { return zero_; }          // zero to available precision
  bool is_exact_zero() const;
  long ord() const;                                // throws on zero
  const Int& unit() const { return unit_; }
  long rel_prec() const { return N_; }
  long abs_prec() const;                           // value is known mod p^{abs_prec}
  // integer congruent to the value mod p^k (requires ord >= 0)
  Int lift(long k) const;

  std::string str() const;

  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

  PadicNumber inv() const;
  PadicNumber pow(long e) const;
  // drop to absolute precision at most A
  PadicNumber truncate_abs(long A) const;

 private:
  long p_ = 0;
  bool zero_ = true;
  long ord_ = 0;   // for zero_: absolute precision bound (huge = exact zero)
  Int unit_ = 0;   // 0 < unit < p^N, p does not divide unit
  long N_ = 0;
  void normalize();
  friend class PadicExt;
};

bool padic_equal(const PadicNumber& a, const PadicNumber& b);  // to shared precision

// Teichmuller lift: the unique root of unity of prime-to-p order congruent
// to the unit part of x.  Public form requires |x|_p = 1.
PadicNumber teichmuller(const PadicNumber& x);

// Iwasawa branch of log_p on Q_p^x: log_p(p) = 0, roots of unity killed.
PadicNumber iwasawa_log(const PadicNumber& x);

// log_p of an exact rational, good to O(p^N); pads working digits internally
PadicNumber iwasawa_log_rat(long p, const Rat& q, long N);

// exp of the power series, requires ord(x) >= 1 (p odd)
PadicNumber exp_p(const PadicNumber& x);

// Element a + b*sqrt(d) of Q_p or a quadratic extension.
// d = 0 marks a plain Q_p element (b must be zero).
class PadicExt {
 public:
  PadicExt() = default;
  PadicExt(long p, const Int& d, PadicNumber a, PadicNumber b);
  static PadicExt from_padic(const PadicNumber& a);  // plain Q_p
  static PadicExt zero(long p) { return from_padic(PadicNumber::zero(p)); }

  long p() const { return p_; }
  const Int& d() const { return d_; }
  bool plain() const { return d_ == 0; }
  const PadicNumber& a() const { return a_; }
  const PadicNumber& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  int ramification() const;   // 1 unramified (or plain), 2 ramified
  Rat ord() const;            // throws on zero
  long abs_prec2() const;     // absolute precision in units of 1/e, floor
  std::string str() const;

  friend PadicExt operator+(const PadicExt& x, const PadicExt& y);
  friend PadicExt operator-(const PadicExt& x, const PadicExt& y);
  friend PadicExt operator-(const PadicExt& x);
  friend PadicExt operator*(const PadicExt& x, const PadicExt& y);
  friend PadicExt operator/(const PadicExt& x, const PadicExt& y);
  PadicExt conj() const;      // a - b sqrt(d)
  PadicNumber norm() const;   // a^2 - d b^2
  PadicExt inv() const;
  PadicExt pow(long e) const;
  PadicExt scale(const Rat& q, long N) const;

 private:
  long p_ = 0;
  Int d_ = 0;
  PadicNumber a_, b_;
};

// Iwasawa log on a quadratic extension (total on nonzero elements).
PadicExt iwasawa_log(const PadicExt& x);

// x mod mu_infinity, represented by (ord_p x, log_p x).
struct MuInfClass {
  long p = 0;
  Rat ord;
  PadicExt logv;

  MuInfClass() = default;
  MuInfClass(long p_, Rat o, PadicExt l) : p(p_), ord(std::move(o)), logv(std::move(l)) {}
  static MuInfClass one(long p);
  static MuInfClass of(const PadicNumber& x);
  static MuInfClass of(const PadicExt& x);
  // class of exp_p(v): ord 0, log v (exp_p is never materialized)
  static MuInfClass exp_class(const PadicNumber& v);
  static MuInfClass exp_class(const PadicExt& v);
  // class of p^r
  static MuInfClass p_power(long p, const Rat& r);

  MuInfClass operator*(const MuInfClass& o) const;
  MuInfClass inv() const;
  MuInfClass pow(const Rat& q) const;
  std::string str() const;
};

// true iff equal as elements of C_p^x / mu_inf, to the guard-digit policy
// guard = ceil(log_p N) + 5.  Throws insufficient_precision in the gray band.
bool muinf_equal(const MuInfClass& u, const MuInfClass& v, const PrecisionCtx& ctx);

}  // namespace shintani
