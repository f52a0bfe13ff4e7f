#include "shintani/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace shintani {

std::string Real::str(long digits) const {
  if (digits < 1) digits = 1;
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%ldRe", digits);
  char* s = nullptr;
  mpfr_asprintf(&s, fmt, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

double ulp_of(const Real& x) {
  if (x.is_zero()) return 0.0;
  long e = mpfr_get_exp(x.get());
  double l = (double)(e - x.prec() + 2);
  if (l < -1060) return 0.0;  // below double range; negligible at our scales
  if (l > 1020) return std::ldexp(1.0, 1020);
  return std::ldexp(1.0, (int)l);
}

double radd(double a, double b) { return (a + b) * (1.0 + 1e-9) + 1e-320; }

namespace {
long pmax(const Ball& a, const Ball& b) { return std::max(a.prec(), b.prec()); }

double dmag(const Real& x) {
  double d = std::fabs(mpfr_get_d(x.get(), MPFR_RNDA));
  if (!std::isfinite(d)) d = 1e300;
  return d * (1.0 + 1e-12) + 1e-320;
}
}  // namespace

double Ball::mag() const { return radd(dmag(mid), rad); }

bool Ball::contains_zero() const { return dmag(mid) <= rad * (1.0 + 1e-9) + 1e-320; }

std::string Ball::str() const {
  if (mid.is_zero() && rad == 0.0) return "0";
  double m = dmag(mid);
  double r = std::max(rad, ulp_of(mid));
  long digits;
  if (r <= 0) {
    digits = (long)(mid.prec() * 0.3010);
  } else if (m <= r) {
    return std::string("0 (+/- ") + std::to_string(r) + ")";
  } else {
    digits = (long)std::floor(std::log10(m / r));
    digits = std::max<long>(1, std::min<long>(digits, (long)(mid.prec() * 0.3010)));
  }
  std::string s = mid.str(digits);
  char buf[40];
  std::snprintf(buf, sizeof buf, " (+/- %.2e)", rad);
  return s + buf;
}

Ball operator+(const Ball& a, const Ball& b) {
  Real m(pmax(a, b));
  mpfr_add(m.get(), a.mid.get(), b.mid.get(), MPFR_RNDN);
  double r = radd(radd(a.rad, b.rad), ulp_of(m));
  return Ball(std::move(m), r);
}

Ball operator-(const Ball& a, const Ball& b) {
  Real m(pmax(a, b));
  mpfr_sub(m.get(), a.mid.get(), b.mid.get(), MPFR_RNDN);
  double r = radd(radd(a.rad, b.rad), ulp_of(m));
  return Ball(std::move(m), r);
}

Ball operator-(const Ball& a) {
  Real m(a.prec());
  mpfr_neg(m.get(), a.mid.get(), MPFR_RNDN);
  return Ball(std::move(m), a.rad);
}

Ball operator*(const Ball& a, const Ball& b) {
  Real m(pmax(a, b));
  mpfr_mul(m.get(), a.mid.get(), b.mid.get(), MPFR_RNDN);
  double r = radd(radd(dmag(a.mid) * b.rad, dmag(b.mid) * a.rad),
                  radd(a.rad * b.rad, ulp_of(m)));
  return Ball(std::move(m), r);
}

Ball inv_b(const Ball& a) {
  double lo = dmag(a.mid) - a.rad;
  if (lo <= 0) throw std::domain_error("inv_b: ball contains zero");
  Real m(a.prec());
  mpfr_ui_div(m.get(), 1, a.mid.get(), MPFR_RNDN);
  // |1/x - 1/m| <= rad / (|m| (|m|-rad))
  double r = radd(a.rad / (dmag(a.mid) * lo), ulp_of(m));
  return Ball(std::move(m), r);
}

Ball operator/(const Ball& a, const Ball& b) { return a * inv_b(b); }

Ball operator*(const Ball& a, const Rat& q) {
  Ball qb(q, a.prec());
  return a * qb;
}
Ball operator/(const Ball& a, const Rat& q) { return a * Rat(1 / q); }
Ball operator+(const Ball& a, const Rat& q) { return a + Ball(q, a.prec()); }
Ball operator-(const Ball& a, const Rat& q) { return a - Ball(q, a.prec()); }

Ball sqrt_b(const Ball& a) {
  if (a.mid.sign() < 0) throw std::domain_error("sqrt_b: negative");
  Real m(a.prec());
  mpfr_sqrt(m.get(), a.mid.get(), MPFR_RNDN);
  double s = dmag(m);
  double r = (s > 0) ? radd(a.rad / s, ulp_of(m)) : std::sqrt(a.rad);
  return Ball(std::move(m), r);
}

Ball exp_b(const Ball& a) {
  Real m(a.prec());
  mpfr_exp(m.get(), a.mid.get(), MPFR_RNDN);
  // |e^x - e^m| <= e^m (e^rad - 1) <= e^m * rad * e^rad
  double f = (a.rad < 1e-3) ? a.rad * (1.0 + 2 * a.rad) : std::expm1(a.rad);
  double r = radd(dmag(m) * f, ulp_of(m));
  return Ball(std::move(m), r);
}

Ball log_b(const Ball& a) {
  double lo = dmag(a.mid) * (1 - 1e-12) - a.rad;
  if (a.mid.sign() <= 0 || lo <= 0) throw std::domain_error("log_b: not strictly positive");
  Real m(a.prec());
  mpfr_log(m.get(), a.mid.get(), MPFR_RNDN);
  double r = radd(a.rad / lo, ulp_of(m));
  return Ball(std::move(m), r);
}

Ball log_rat(const Rat& q, long prec) {
  if (q <= 0) throw std::domain_error("log_rat: not positive");
  return log_b(Ball(q, prec));
}

Ball pow_q(const Ball& a, const Rat& e) {
  if (e == 0) return Ball(Rat(1), a.prec());
  if (e.get_den() == 1 && e.get_num().fits_slong_p())
    return pow_si(a, e.get_num().get_si());
  return exp_b(log_b(a) * e);
}

Ball pow_si(const Ball& a, long e) {
  if (e == 0) return Ball(Rat(1), a.prec());
  bool neg = e < 0;
  unsigned long k = neg ? (unsigned long)(-e) : (unsigned long)e;
  Ball r(Rat(1), a.prec());
  Ball base = a;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return neg ? inv_b(r) : r;
}

Ball abs_b(const Ball& a) {
  Real m(a.prec());
  mpfr_abs(m.get(), a.mid.get(), MPFR_RNDN);
  return Ball(std::move(m), a.rad);
}

Ball pi_ball(long prec) {
  Real m(prec);
  mpfr_const_pi(m.get(), MPFR_RNDN);
  return Ball(std::move(m), ulp_of(Real(3.14, prec)) * 4);
}

Ball ln2_ball(long prec) {
  Real m(prec);
  mpfr_const_log2(m.get(), MPFR_RNDN);
  return Ball(std::move(m), std::ldexp(1.0, (int)std::max(-1060L, 1 - prec)));
}

Ball euler_gamma(long prec) {
  Real m(prec);
  mpfr_const_euler(m.get(), MPFR_RNDN);
  return Ball(std::move(m), std::ldexp(1.0, (int)std::max(-1060L, 1 - prec)));
}

Ball zeta3_ball(long prec) {
  Real m(prec);
  mpfr_zeta_ui(m.get(), 3, MPFR_RNDN);
  return Ball(std::move(m), std::ldexp(1.0, (int)std::max(-1060L, 2 - prec)));
}

Ball log_2pi(long prec) {
  Ball two_pi = pi_ball(prec) * Rat(2);
  return log_b(two_pi);
}

Ball sqrt_rat(const Rat& q, long prec) {
  if (q < 0) throw std::domain_error("sqrt_rat: negative");
  return sqrt_b(Ball(q, prec));
}

Ball to_prec(const Ball& a, long prec) {
  Real m(prec);
  mpfr_set(m.get(), a.mid.get(), MPFR_RNDN);
  double r = radd(a.rad, ulp_of(m));
  return Ball(std::move(m), r);
}

bool balls_overlap(const Ball& a, const Ball& b, double tol) {
  Ball d = a - b;
  return dmag(d.mid) <= radd(d.rad, tol);
}

double ball_dist(const Ball& a, const Ball& b) {
  Ball d = a - b;
  return radd(dmag(d.mid), d.rad);
}

Cplx Cplx::from_ball(const Ball& b, long prec) {
  return Cplx(Real(b.mid), Real(0.0, prec), b.rad);
}

std::string Cplx::str() const {
  Ball r(re, rad), i(im, rad);
  return r.str() + " + " + i.str() + "*i";
}

Cplx operator+(const Cplx& a, const Cplx& b) {
  long p = std::max(a.prec(), b.prec());
  Real re(p), im(p);
  mpfr_add(re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  double r = radd(radd(a.rad, b.rad), radd(ulp_of(re), ulp_of(im)));
  return Cplx(std::move(re), std::move(im), r);
}

Cplx operator-(const Cplx& a, const Cplx& b) {
  long p = std::max(a.prec(), b.prec());
  Real re(p), im(p);
  mpfr_sub(re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  double r = radd(radd(a.rad, b.rad), radd(ulp_of(re), ulp_of(im)));
  return Cplx(std::move(re), std::move(im), r);
}

namespace {
double cmag(const Cplx& a) {
  double x = dmag(a.re), y = dmag(a.im);
  return std::hypot(x, y) * (1 + 1e-12) + 1e-320;
}
}  // namespace

Cplx operator*(const Cplx& a, const Cplx& b) {
  long p = std::max(a.prec(), b.prec());
  Real re(p), im(p), t1(p), t2(p);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(im.get(), t1.get(), t2.get(), MPFR_RNDN);
  double r = radd(radd(cmag(a) * b.rad, cmag(b) * a.rad),
                  radd(a.rad * b.rad, 4 * radd(ulp_of(re), ulp_of(im))));
  return Cplx(std::move(re), std::move(im), r);
}

Cplx operator/(const Cplx& a, const Cplx& b) {
  double lo = cmag(b) * (1 - 1e-12) - b.rad;
  if (lo <= 0) throw std::domain_error("cplx division by ball containing zero");
  long p = std::max(a.prec(), b.prec());
  Real n2(p), re(p), im(p), t1(p), t2(p);
  mpfr_mul(t1.get(), b.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), b.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(n2.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_div(re.get(), re.get(), n2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(im.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_div(im.get(), im.get(), n2.get(), MPFR_RNDN);
  // crude but conservative: |a/b| error <= (|a| rb + |b| ra)/(|b| lo)
  double r = radd((cmag(a) * b.rad + cmag(b) * a.rad) / (cmag(b) * lo) + a.rad / lo,
                  4 * radd(ulp_of(re), ulp_of(im)));
  return Cplx(std::move(re), std::move(im), r);
}

Ball abs_c(const Cplx& a) {
  Real m(a.prec());
  mpfr_hypot(m.get(), a.re.get(), a.im.get(), MPFR_RNDN);
  return Ball(std::move(m), radd(a.rad, ulp_of(m)));
}

Cplx conj_c(const Cplx& a) {
  Real im(a.prec());
  mpfr_neg(im.get(), a.im.get(), MPFR_RNDN);
  return Cplx(a.re, std::move(im), a.rad);
}

Cplx scale(const Cplx& a, const Ball& s) {
  Cplx sb(s.mid, Real(0.0, s.prec()), s.rad);
  return a * sb;
}

double cplx_dist(const Cplx& a, const Cplx& b) {
  Cplx d = a - b;
  return radd(cmag(d), d.rad);
}

Cplx cis_2pi(const Rat& t, long prec) {
  Ball arg = pi_ball(prec) * (t * 2);
  Real s(prec), c(prec);
  mpfr_sin_cos(s.get(), c.get(), arg.mid.get(), MPFR_RNDN);
  double r = radd(arg.rad, radd(ulp_of(s), ulp_of(c)));
  return Cplx(std::move(c), std::move(s), r);
}

}  // namespace shintani
