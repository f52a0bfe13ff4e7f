#include "shintani/padic.hpp"

#include <algorithm>
#include <sstream>

namespace shintani {

namespace {
constexpr long kExact = (1L << 50);

Int ppow(long p, long k) { return ipow(Int(p), (unsigned long)(k < 0 ? 0 : k)); }

long guard_digits(long p, long series_len) {
  long g = 0;
  Int pk = 1;
  while (pk < series_len) {
    pk *= p;
    ++g;
  }
  return g + 5;
}
}  // namespace

PadicNumber PadicNumber::zero(long p) {
  PadicNumber x;
  x.p_ = p;
  x.zero_ = true;
  x.ord_ = kExact;
  return x;
}

PadicNumber PadicNumber::zero_to(long p, long abs_prec) {
  PadicNumber x;
  x.p_ = p;
  x.zero_ = true;
  x.ord_ = abs_prec;
  return x;
}

bool PadicNumber::is_exact_zero() const { return zero_ && ord_ >= kExact; }

PadicNumber PadicNumber::make(long p, long ord, const Int& unit, long N) {
  if (N <= 0) return zero_to(p, ord);
  PadicNumber x;
  x.p_ = p;
  x.zero_ = false;
  x.ord_ = ord;
  x.N_ = N;
  Int m = ppow(p, N);
  x.unit_ = unit % m;
  if (x.unit_ < 0) x.unit_ += m;
  if (x.unit_ % p == 0) throw std::invalid_argument("PadicNumber::make: unit divisible by p");
  return x;
}

PadicNumber PadicNumber::from_rat(long p, const Rat& q, long N) {
  if (q == 0) return zero(p);
  Int num = q.get_num(), den = q.get_den();
  long vn = (num != 0) ? valuation(num, p) : 0;
  long vd = valuation(den, p);
  Int nu = num / ppow(p, vn);
  Int de = den / ppow(p, vd);
  Int m = ppow(p, N);
  Int u = (nu % m) * invmod(de, m) % m;
  return make(p, vn - vd, u, N);
}

long PadicNumber::ord() const {
  if (zero_) throw std::domain_error("ord of (p-adic) zero");
  return ord_;
}

long PadicNumber::abs_prec() const { return zero_ ? ord_ : ord_ + N_; }

Int PadicNumber::lift(long k) const {
  if (zero_) return 0;
  if (ord_ < 0) throw std::domain_error("lift: negative valuation");
  if (ord_ + N_ < k) throw insufficient_precision("lift: not enough digits");
  Int m = ppow(p_, k);
  return (ppow(p_, ord_) * unit_) % m;
}

std::string PadicNumber::str() const {
  std::ostringstream os;
  if (zero_) {
    os << "O(" << p_ << "^" << (ord_ >= kExact ? std::string("inf") : std::to_string(ord_))
       << ")";
    return os.str();
  }
  os << unit_.get_str() << "*" << p_ << "^" << ord_ << " + O(" << p_ << "^" << (ord_ + N_)
     << ")";
  return os.str();
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("p mismatch");
  if (a.zero_ && b.zero_) return PadicNumber::zero_to(a.p_, std::min(a.ord_, b.ord_));
  if (a.zero_) return b.truncate_abs(a.ord_);
  if (b.zero_) return a.truncate_abs(b.ord_);
  long o = std::min(a.ord_, b.ord_);
  long A = std::min(a.abs_prec(), b.abs_prec());
  if (A <= o) return PadicNumber::zero_to(a.p_, A);
  Int m = ppow(a.p_, A - o);
  Int s = (ppow(a.p_, a.ord_ - o) * a.unit_ + ppow(a.p_, b.ord_ - o) * b.unit_) % m;
  if (s < 0) s += m;
  if (s == 0) return PadicNumber::zero_to(a.p_, A);
  long v = valuation(s, a.p_);
  if (o + v >= A) return PadicNumber::zero_to(a.p_, A);
  return PadicNumber::make(a.p_, o + v, s / ppow(a.p_, v), A - o - v);
}

PadicNumber operator-(const PadicNumber& a) {
  if (a.zero_) return a;
  return PadicNumber::make(a.p_, a.ord_, ppow(a.p_, a.N_) - a.unit_, a.N_);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("p mismatch");
  if (a.zero_ || b.zero_) {
    if (a.is_exact_zero() || b.is_exact_zero()) return PadicNumber::zero(a.p_);
    long bound;
    if (a.zero_ && b.zero_)
      bound = a.ord_ + b.ord_;
    else if (a.zero_)
      bound = a.ord_ + b.ord_;
    else
      bound = b.ord_ + a.ord_;
    return PadicNumber::zero_to(a.p_, std::min(bound, kExact));
  }
  long N = std::min(a.N_, b.N_);
  Int m = ppow(a.p_, N);
  return PadicNumber::make(a.p_, a.ord_ + b.ord_, a.unit_ * b.unit_ % m, N);
}

PadicNumber PadicNumber::inv() const {
  if (zero_) throw std::domain_error("p-adic division by zero");
  Int m = ppow(p_, N_);
  return make(p_, -ord_, invmod(unit_, m), N_);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) { return a * b.inv(); }

PadicNumber PadicNumber::pow(long e) const {
  if (e == 0) return from_rat(p_, 1, zero_ ? 20 : N_);
  if (zero_) {
    if (e < 0) throw std::domain_error("p-adic division by zero");
    return is_exact_zero() ? *this : zero_to(p_, std::min(ord_ * e, kExact));
  }
  bool neg = e < 0;
  unsigned long k = neg ? -(unsigned long)e : (unsigned long)e;
  PadicNumber r = from_rat(p_, 1, N_), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return neg ? r.inv() : r;
}

PadicNumber PadicNumber::truncate_abs(long A) const {
  if (zero_) return zero_to(p_, std::min(ord_, A));
  if (ord_ >= A) return zero_to(p_, A);
  if (ord_ + N_ <= A) return *this;
  return make(p_, ord_, unit_, A - ord_);
}

bool padic_equal(const PadicNumber& a, const PadicNumber& b) {
  PadicNumber d = a - b;
  return d.is_zero();
}

PadicNumber teichmuller(const PadicNumber& x) {
  if (x.is_zero()) throw std::invalid_argument("teichmuller: zero");
  if (x.ord() != 0) throw std::invalid_argument("teichmuller: requires |x|_p = 1");
  long p = x.p(), N = x.rel_prec();
  Int m = ppow(p, N);
  // theta = lim x^{p^n}; x^{p^N} is already stable mod p^N
  Int e = ppow(p, N);
  Int t = powmod(x.unit(), e, m);
  return PadicNumber::make(p, 0, t, N);
}

PadicNumber iwasawa_log(const PadicNumber& x) {
  if (x.is_zero()) throw std::domain_error("iwasawa_log: zero");
  long p = x.p(), N = x.rel_prec();
  long len = N + guard_digits(p, N) + 2;
  long g = guard_digits(p, len);
  long Ni = N + g;
  // one-unit part: u = unit * theta^{-1}
  PadicNumber u = PadicNumber::make(p, 0, x.unit(), N);
  PadicNumber th = teichmuller(u);
  PadicNumber w = u / th;
  PadicNumber t = PadicNumber::from_rat(p, 1, Ni) - w;  // ord >= 1
  if (t.is_zero()) return PadicNumber::zero_to(p, t.abs_prec());
  // log(1 - t) = -sum t^m / m
  PadicNumber sum = PadicNumber::zero(p);
  PadicNumber tm = t;
  for (long m = 1;; ++m) {
    if (tm.is_zero() || (!tm.is_zero() && tm.ord() >= N + g)) break;
    sum = sum + tm / PadicNumber::from_rat(p, Rat(Int(m)), Ni);
    tm = tm * t;
    if (m > 4 * len + 16) break;
  }
  return (-sum).truncate_abs(N);
}

PadicNumber iwasawa_log_rat(long p, const Rat& q, long N) {
  long pad = guard_digits(p, N + 16) + 4;
  PadicNumber x = PadicNumber::from_rat(p, q, N + pad);
  return iwasawa_log(x).truncate_abs(N);
}

PadicNumber exp_p(const PadicNumber& x) {
  if (x.is_zero()) return PadicNumber::from_rat(x.p(), 1, 30);
  long p = x.p();
  if (x.ord() < 1) throw std::domain_error("exp_p: requires ord >= 1 (p odd)");
  long N = x.abs_prec();
  long g = guard_digits(p, 4 * N);
  long Ni = N + g + N / std::max(2L, p - 2);
  PadicNumber sum = PadicNumber::from_rat(p, 1, Ni);
  PadicNumber term = PadicNumber::from_rat(p, 1, Ni);
  for (long k = 1;; ++k) {
    term = term * x / PadicNumber::from_rat(p, Rat(Int(k)), Ni);
    if (term.is_zero() || term.ord() >= N + g / 2 + 2) break;
    sum = sum + term;
    if (k > 8 * N + 64) break;
  }
  return sum.truncate_abs(N);
}

// ---------------------------------------------------------------- PadicExt

PadicExt::PadicExt(long p, const Int& d, PadicNumber a, PadicNumber b)
    : p_(p), d_(d), a_(std::move(a)), b_(std::move(b)) {
  if (d_ == 0 && !b_.is_zero()) throw std::invalid_argument("PadicExt: plain element with b != 0");
}

PadicExt PadicExt::from_padic(const PadicNumber& a) {
  PadicExt x;
  x.p_ = a.p();
  x.d_ = 0;
  x.a_ = a;
  x.b_ = PadicNumber::zero(a.p());
  return x;
}

int PadicExt::ramification() const {
  if (d_ == 0) return 1;
  return (d_ % p_ == 0) ? 2 : 1;
}

Rat PadicExt::ord() const {
  if (is_zero()) throw std::domain_error("ord of zero");
  Rat oa = a_.is_zero() ? Rat(kExact) : Rat(Int(a_.ord()));
  Rat ob = b_.is_zero() ? Rat(kExact) : Rat(Int(b_.ord()));
  if (ramification() == 2) ob += Rat(1, 2);
  return std::min(oa, ob);
}

long PadicExt::abs_prec2() const {
  long e = ramification();
  long pa = a_.abs_prec() * e;
  long pb = b_.abs_prec() * e + (e == 2 ? 1 : 0);
  return std::min(pa, pb);
}

std::string PadicExt::str() const {
  if (plain()) return a_.str();
  return a_.str() + " + (" + b_.str() + ")*sqrt(" + d_.get_str() + ")";
}

namespace {
void check_compat(const PadicExt& x, const PadicExt& y) {
  if (x.p() != y.p()) throw std::invalid_argument("PadicExt: p mismatch");
  if (x.d() != 0 && y.d() != 0 && x.d() != y.d())
    throw std::invalid_argument("PadicExt: extension mismatch");
}
Int dd(const PadicExt& x, const PadicExt& y) { return x.d() != 0 ? x.d() : y.d(); }
}  // namespace

PadicExt operator+(const PadicExt& x, const PadicExt& y) {
  check_compat(x, y);
  return PadicExt(x.p(), dd(x, y), x.a() + y.a(), x.b() + y.b());
}
PadicExt operator-(const PadicExt& x, const PadicExt& y) {
  check_compat(x, y);
  return PadicExt(x.p(), dd(x, y), x.a() - y.a(), x.b() - y.b());
}
PadicExt operator-(const PadicExt& x) { return PadicExt(x.p(), x.d(), -x.a(), -x.b()); }

PadicExt operator*(const PadicExt& x, const PadicExt& y) {
  check_compat(x, y);
  Int d = dd(x, y);
  PadicNumber dpn = PadicNumber::from_rat(
      x.p(), Rat(d), std::max({x.a().rel_prec(), x.b().rel_prec(), y.a().rel_prec(),
                               y.b().rel_prec(), 2L}));
  return PadicExt(x.p(), d, x.a() * y.a() + dpn * (x.b() * y.b()),
                  x.a() * y.b() + x.b() * y.a());
}

PadicExt PadicExt::conj() const { return PadicExt(p_, d_, a_, -b_); }

PadicNumber PadicExt::norm() const {
  PadicNumber dpn = PadicNumber::from_rat(
      p_, Rat(d_), std::max({a_.rel_prec(), b_.rel_prec(), 2L}));
  return a_ * a_ - dpn * (b_ * b_);
}

PadicExt PadicExt::inv() const {
  if (is_zero()) throw std::domain_error("PadicExt: division by zero");
  PadicExt c = conj();
  PadicNumber n = norm();
  return PadicExt(p_, d_, c.a() / n, c.b() / n);
}

PadicExt operator/(const PadicExt& x, const PadicExt& y) { return x * y.inv(); }

PadicExt PadicExt::pow(long e) const {
  PadicExt r(p_, d_,
             PadicNumber::from_rat(p_, 1, std::max({a_.rel_prec(), b_.rel_prec(), 2L})),
             PadicNumber::zero(p_));
  if (e == 0) return r;
  bool neg = e < 0;
  unsigned long k = neg ? -(unsigned long)e : (unsigned long)e;
  PadicExt b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return neg ? r.inv() : r;
}

PadicExt PadicExt::scale(const Rat& q, long N) const {
  PadicNumber s = PadicNumber::from_rat(p_, q, N);
  return PadicExt(p_, d_, a_ * s, b_ * s);
}

namespace {
// Teichmuller part of a unit in the quadratic extension: iterate z -> z^q
// (q = size of residue field) to stabilization.
PadicExt teich_ext(const PadicExt& u) {
  long p = u.p();
  if (u.plain()) return PadicExt::from_padic(teichmuller(u.a()));
  if (u.ramification() == 2) {
    // residue field F_p; theta determined by the residue of the a-component
    return PadicExt::from_padic(teichmuller(u.a()));
  }
  long N = std::max(u.a().is_zero() ? 2 : u.a().rel_prec(),
                    u.b().is_zero() ? 2 : u.b().rel_prec());
  // square-and-multiply with exponent q^N = p^{2N}
  Int k = ipow(Int(p), (unsigned long)(2 * N));
  PadicExt res(p, u.d(), PadicNumber::from_rat(p, 1, N), PadicNumber::zero(p));
  PadicExt base = u;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) res = res * base;
    k /= 2;
    if (k > 0) base = base * base;
  }
  return res;
}
}  // namespace

PadicExt iwasawa_log(const PadicExt& x) {
  if (x.is_zero()) throw std::domain_error("iwasawa_log: zero");
  long p = x.p();
  if (x.plain()) return PadicExt::from_padic(iwasawa_log(x.a()));
  Rat o = x.ord();
  if (o.get_den() != 1) {
    // fractional valuation: log(x) = log(x^2)/2
    PadicExt sq = x * x;
    PadicExt l = iwasawa_log(sq);
    long N = std::max(2L, std::max(l.a().is_zero() ? 2 : l.a().rel_prec(),
                                   l.b().is_zero() ? 2 : l.b().rel_prec()));
    return l.scale(Rat(1, 2), N);
  }
  long oi = (long)o.get_num().get_si();
  long N = std::max(x.a().is_zero() ? 2 : x.a().rel_prec(),
                    x.b().is_zero() ? 2 : x.b().rel_prec());
  long e = x.ramification();
  long len = e * (N + 8);
  long g = guard_digits(p, len) + 2;
  long Ni = N + g;
  PadicNumber pinv = PadicNumber::from_rat(p, qpow(Rat(Int(p)), -oi), Ni);
  PadicExt u = PadicExt(p, x.d(), x.a() * pinv, x.b() * pinv);
  PadicExt th = teich_ext(u);
  PadicExt w = u / th;
  PadicExt one = PadicExt(p, x.d(), PadicNumber::from_rat(p, 1, Ni), PadicNumber::zero(p));
  PadicExt t = one - w;
  if (t.is_zero()) return PadicExt(p, x.d(), PadicNumber::zero_to(p, t.abs_prec2() / e),
                                   PadicNumber::zero(p));
  PadicExt sum = PadicExt(p, x.d(), PadicNumber::zero(p), PadicNumber::zero(p));
  PadicExt tm = t;
  for (long m = 1;; ++m) {
    bool small = tm.is_zero();
    if (!small) {
      Rat to = tm.ord();
      small = to >= Rat(Int(N + g / 2));
    }
    if (small) break;
    PadicNumber mm = PadicNumber::from_rat(p, Rat(Int(m)), Ni);
    sum = sum + PadicExt(p, x.d(), tm.a() / mm, tm.b() / mm);
    tm = tm * t;
    if (m > 4 * len + 32) break;
  }
  return -sum;
}

// ---------------------------------------------------------------- MuInfClass

MuInfClass MuInfClass::one(long p) {
  return MuInfClass(p, Rat(0), PadicExt::from_padic(PadicNumber::zero(p)));
}

MuInfClass MuInfClass::of(const PadicNumber& x) {
  return MuInfClass(x.p(), Rat(Int(x.ord())), PadicExt::from_padic(iwasawa_log(x)));
}

MuInfClass MuInfClass::of(const PadicExt& x) { return MuInfClass(x.p(), x.ord(), iwasawa_log(x)); }

MuInfClass MuInfClass::exp_class(const PadicNumber& v) {
  return MuInfClass(v.p(), Rat(0), PadicExt::from_padic(v));
}

MuInfClass MuInfClass::exp_class(const PadicExt& v) { return MuInfClass(v.p(), Rat(0), v); }

MuInfClass MuInfClass::p_power(long p, const Rat& r) {
  return MuInfClass(p, r, PadicExt::from_padic(PadicNumber::zero(p)));
}

MuInfClass MuInfClass::operator*(const MuInfClass& o) const {
  if (p != o.p) throw std::invalid_argument("MuInfClass: p mismatch");
  return MuInfClass(p, ord + o.ord, logv + o.logv);
}

MuInfClass MuInfClass::inv() const { return MuInfClass(p, -ord, -logv); }

MuInfClass MuInfClass::pow(const Rat& q) const {
  long N = std::max({logv.a().is_zero() ? 2 : logv.a().rel_prec(),
                     logv.b().is_zero() ? 2 : logv.b().rel_prec(), 2L});
  return MuInfClass(p, ord * q, logv.scale(q, N));
}

std::string MuInfClass::str() const {
  return "(ord " + to_string(ord) + ", log " + logv.str() + ")";
}

bool muinf_equal(const MuInfClass& u, const MuInfClass& v, const PrecisionCtx& ctx) {
  if (u.p != v.p) throw std::invalid_argument("muinf_equal: p mismatch");
  if (u.ord != v.ord) return false;
  PadicExt d = u.logv - v.logv;
  if (d.is_zero()) return true;
  long e = d.ramification();
  long N = ctx.padic_digits;
  long g = guard_digits(u.p, N);  // ceil(log_p N) + 5
  Rat vd = d.ord();
  long A2 = d.abs_prec2();
  // compare in units of 1/e
  Rat thresh = Rat(Int(std::min(A2, e * (N)))) / Rat(Int(e)) - Rat(Int(g));
  if (vd >= thresh) {
    // nonzero but below the declared threshold: cannot certify inequality
    throw insufficient_precision("muinf_equal: difference below guard threshold");
  }
  return false;
}

}  // namespace shintani
