#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "shintani/rational.hpp"

// Arbitrary-precision reals with tracked error radius (ball style) and a
// complex counterpart with one shared radius.  MPFR supplies correctly
// rounded kernels; every operation here adds the rounding ulp into the
// radius, so a ball that excludes a value is a certificate.

namespace shintani {

struct PrecisionCtx {
  long digits = 40;        // archimedean working decimal digits
  long p = 0;              // prime for the p-adic side, 0 if unused
  long padic_digits = 30;  // relative p-adic digits N

  PrecisionCtx() = default;
  PrecisionCtx(long digits_, long p_, long padic_digits_)
      : digits(digits_), p(p_), padic_digits(padic_digits_) {
    if (digits <= 0) throw std::invalid_argument("PrecisionCtx: digits must be positive");
    if (p_ == 2) throw std::invalid_argument("PrecisionCtx: p = 2 is excluded");
    if (p_ != 0 && padic_digits_ <= 0)
      throw std::invalid_argument("PrecisionCtx: padic_digits must be positive");
  }
  static PrecisionCtx archimedean(long digits) { return PrecisionCtx(digits, 0, 0); }
  static PrecisionCtx padic(long p, long n) { return PrecisionCtx(20, p, n); }

  long bits() const { return (long)(digits * 3.3219280948873626) + 32; }
};

class Real {
 public:
  Real() { mpfr_init2(v_, 64); }
  explicit Real(long prec) { mpfr_init2(v_, prec < 2 ? 2 : prec); }
  Real(double x, long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(const Int& n, long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, n.get_mpz_t(), MPFR_RNDN);
  }
  Real(const Rat& q, long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long prec() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(long digits) const;

 private:
  mpfr_t v_;
};

// magnitude of one ulp at the precision of x, as a double (0 for exact zero)
double ulp_of(const Real& x);

// a + b with a small upward fudge, for radius bookkeeping
double radd(double a, double b);

struct Ball {
  Real mid;
  double rad = 0.0;

  Ball() = default;
  Ball(Real m, double r) : mid(std::move(m)), rad(r) {}
  Ball(const Rat& q, long prec) : mid(q, prec) { rad = ulp_of(mid); }
  Ball(const Int& n, long prec) : mid(n, prec) { rad = ulp_of(mid); }
  Ball(double x, long prec) : mid(x, prec) {}
  static Ball zero(long prec) { return Ball(Real(0.0, prec), 0.0); }
  static Ball exact(double x, long prec) { return Ball(Real(x, prec), 0.0); }

  long prec() const { return mid.prec(); }
  double mag() const;  // |mid| + rad as double, clamped
  bool contains_zero() const;
  std::string str() const;  // guaranteed digits only
};

Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator-(const Ball& a);
Ball operator*(const Ball& a, const Ball& b);
Ball operator/(const Ball& a, const Ball& b);
Ball operator*(const Ball& a, const Rat& q);
Ball operator/(const Ball& a, const Rat& q);
Ball operator+(const Ball& a, const Rat& q);
Ball operator-(const Ball& a, const Rat& q);

Ball sqrt_b(const Ball& a);
Ball exp_b(const Ball& a);
Ball log_b(const Ball& a);       // requires a strictly positive
Ball log_rat(const Rat& q, long prec);
Ball pow_q(const Ball& a, const Rat& e);  // a > 0
Ball pow_si(const Ball& a, long e);
Ball abs_b(const Ball& a);
Ball inv_b(const Ball& a);

Ball pi_ball(long prec);
Ball log_2pi(long prec);
Ball euler_gamma(long prec);
Ball ln2_ball(long prec);
Ball zeta3_ball(long prec);
Ball sqrt_rat(const Rat& q, long prec);  // q >= 0

// the same ball carried at a different working precision
Ball to_prec(const Ball& a, long prec);

// certified comparison: |a.mid - b.mid| <= a.rad + b.rad + tol ?
bool balls_overlap(const Ball& a, const Ball& b, double tol = 0.0);
// upper bound on |a - b| as double
double ball_dist(const Ball& a, const Ball& b);

struct Cplx {
  Real re, im;
  double rad = 0.0;  // one disk radius for both components

  Cplx() = default;
  Cplx(Real r, Real i, double e) : re(std::move(r)), im(std::move(i)), rad(e) {}
  static Cplx from_ball(const Ball& b, long prec);
  static Cplx zero(long prec) { return Cplx(Real(0.0, prec), Real(0.0, prec), 0.0); }
  long prec() const { return re.prec(); }
  std::string str() const;
};

Cplx operator+(const Cplx& a, const Cplx& b);
Cplx operator-(const Cplx& a, const Cplx& b);
Cplx operator*(const Cplx& a, const Cplx& b);
Cplx operator/(const Cplx& a, const Cplx& b);
Ball abs_c(const Cplx& a);
Cplx conj_c(const Cplx& a);
Cplx scale(const Cplx& a, const Ball& s);
double cplx_dist(const Cplx& a, const Cplx& b);

// e^{2 pi i t} for rational t, as a certified complex ball
Cplx cis_2pi(const Rat& t, long prec);

}  // namespace shintani
