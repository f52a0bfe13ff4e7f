#include "shintani/lfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "shintani/gamma.hpp"

namespace shintani {

// --------------------------------------------------------- weight kernels

namespace {
double eps_for(long prec) { return std::ldexp(1.0, (int)std::max(-1000L, 10 - prec)); }

// working precision padded for the e^{2x}-scale cancellation of the series
long padded(long prec, double x) { return prec + (long)(2.9 * std::max(0.0, x)) + 80; }
}  // namespace

// int_x^infty e^{-u} u^{c-1} (ln u)^j du, c >= 0 (c = 0 regularized), j in {0,1}
Ball incgamma_upper(const Rat& c, int logweight, const Ball& x, long prec) {
  double xd = x.mid.to_double();
  long wp = padded(prec, xd);
  // series on the exact center; the input radius enters through the
  // integrand bound |e^{-x} x^{c-1} (ln x)^j| at the end
  Ball X = to_prec(Ball(x.mid, 0.0), wp);
  Ball L = log_b(X);
  double sens = std::exp(-xd) * std::pow(xd + 1.0, c.get_d()) *
                (1.0 + std::fabs(std::log(xd))) / std::max(0.1, xd);
  double inherited = 2.0 * sens * x.rad;
  double eps = eps_for(prec);
  Ball acc = Ball::zero(wp);
  if (c == 0) {
    Ball g = euler_gamma(wp);
    if (logweight == 0) {
      // E_1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k/(k k!)
      acc = -g - L;
    } else {
      // gamma^2/2 + pi^2/12 - ln^2 x / 2 - sum_{k>=1} (-1)^k x^k (k ln x - 1)/(k! k^2)
      Ball pi = pi_ball(wp);
      acc = g * g * Rat(1, 2) + pi * pi / Rat(12) - L * L * Rat(1, 2);
    }
    Ball term(Rat(1), wp);  // x^k/k!
    for (long k = 1; k <= 100000; ++k) {
      term = term * X / Rat(Int(k));
      Ball piece;
      if (logweight == 0)
        piece = term / Rat(Int(k));
      else
        piece = term * (L * Rat(Int(k)) - Rat(1)) / Rat(Int(k) * Int(k));
      if (k % 2 == 0)
        acc = acc + (logweight == 0 ? -piece : piece);
      else
        acc = acc + (logweight == 0 ? piece : -piece);
      if (term.mag() / (double)k < eps && (double)k > xd + 4) {
        acc.rad = radd(acc.rad, 2 * term.mag());
        break;
      }
    }
    acc.rad = radd(acc.rad, inherited);
    return acc;
  }
  // c > 0: Gamma(c) (psi(c) for the log weight) minus the lower series
  Ball cb(c, wp);
  Ball gam = gamma_fn(cb, wp);
  if (logweight == 0)
    acc = gam;
  else
    acc = gam * digamma(cb, wp);
  // x^{c+k}: start from x^c = exp(c ln x)
  Ball xc = exp_b(L * c);
  Ball term = xc;  // x^{c+k}/k!
  for (long k = 0; k <= 100000; ++k) {
    Ball ck(c + Rat(Int(k)), wp);
    Ball piece;
    if (logweight == 0)
      piece = term / ck;
    else
      piece = term * (L / ck - inv_b(ck * ck));
    acc = acc + (k % 2 == 0 ? -piece : piece);
    if (term.mag() < eps * (double)(k + 1) && (double)k > xd + 4) {
      acc.rad = radd(acc.rad, 2 * term.mag());
      break;
    }
    term = term * X / Rat(Int(k + 1));
  }
  acc.rad = radd(acc.rad, inherited);
  return acc;
}

// int_y^infty K_0(2t) t^c (ln t)^j dt/t for c in {0, 1, 2}, j in {0, 1}
Ball besselK0_moment(int c, int logweight, const Ball& y, long prec) {
  double yd = y.mid.to_double();
  long wp = padded(prec, 2 * yd);
  // exact-center series; integrand bound K_0(2y) y^{c-1} (ln y)^j covers the
  // input radius
  Ball Y = to_prec(Ball(y.mid, 0.0), wp);
  Ball L = log_b(Y);
  double inherited = 4.0 * std::exp(-2 * yd) * std::pow(yd + 1.0, (double)c) *
                     (1.0 + std::fabs(std::log(yd))) *
                     (1.0 + 1.0 / std::max(0.05, yd)) / std::max(0.05, yd) * y.rad;
  Ball g = euler_gamma(wp);
  Ball pi = pi_ball(wp);
  double eps = eps_for(prec);
  // A(n, t) = int_0^y u^{n-1} (ln u)^t du
  auto A0 = [&](const Ball& yn, long n) { return yn / Rat(Int(n)); };
  auto A1 = [&](const Ball& yn, long n) {
    return yn * (L / Rat(Int(n)) - Rat(mkrat(1, Int(n) * Int(n))));
  };
  auto A2 = [&](const Ball& yn, long n) {
    Rat n2 = mkrat(1, Int(n) * Int(n));
    Rat n3 = mkrat(2, Int(n) * Int(n) * Int(n));
    return yn * (L * L / Rat(Int(n)) - L * n2 * Rat(2) + Rat(n3));
  };
  Ball acc = Ball::zero(wp);
  if (c > 0) {
    // full Mellin value minus the lower integral
    if (c == 1)
      acc = (logweight == 0) ? pi / Rat(4) : pi * (-g - ln2_ball(wp) * Rat(2)) / Rat(4);
    else
      acc = (logweight == 0) ? Ball(Rat(1, 4), wp) : -g / Rat(4);
  } else {
    if (logweight == 0) {
      acc = (L + g) * (L + g) * Rat(1, 2) + pi * pi / Rat(24);
    } else {
      Ball z3 = zeta3_ball(wp);
      Ball d3 = -(g * g * g / Rat(6) + g * pi * pi / Rat(24) + z3 / Rat(12));
      acc = d3 + g * L * L * Rat(1, 2) + L * L * L / Rat(3);
    }
  }
  // subtract the lower series sum_k (1/k!^2)[ (H_k - g) A(2k+c, j) - A(2k+c, j+1) ]
  // (for c = 0 the k = 0 singular part is already folded into acc)
  Ball y2 = Y * Y;
  Ball yn = (c == 0) ? y2 : pow_si(Y, c) * (c == 0 ? Ball(Rat(1), wp) : Ball(Rat(1), wp));
  // walk k with y^{2k+c}
  Ball ypow = pow_si(Y, c);  // y^{2k+c} at k = 0
  Ball invkfac2(Rat(1), wp);
  Ball Hk = Ball::zero(wp);
  for (long k = 0; k <= 100000; ++k) {
    if (k > 0) {
      invkfac2 = invkfac2 / Rat(Int(k) * Int(k));
      Hk = Hk + Rat(mkrat(1, Int(k)));
    }
    long n = 2 * k + c;
    if (n > 0) {
      Ball piece;
      if (logweight == 0)
        piece = (Hk - g) * A0(ypow, n) - A1(ypow, n);
      else
        piece = (Hk - g) * A1(ypow, n) - A2(ypow, n);
      acc = acc - invkfac2 * piece;
    }
    double tb = invkfac2.mag() * ypow.mag() * (2.0 + std::fabs(L.mid.to_double()) +
                                               std::log((double)k + 2) + 1.0);
    if (tb < eps && (double)(2 * k) > 2.8 * yd + 4) {
      acc.rad = radd(acc.rad, 4 * tb);
      break;
    }
    ypow = ypow * y2;
  }
  acc.rad = radd(acc.rad, inherited);
  return acc;
}

namespace {
// kernel families per signature
enum class WKind { Gauss0, Gauss1, Exp2, K0w0, K0w1 };

WKind kind_for(int degree, int a1, int a2) {
  if (degree == 1) return a1 == 0 ? WKind::Gauss0 : WKind::Gauss1;
  if (a1 != a2) return WKind::Exp2;
  return a1 == 0 ? WKind::K0w0 : WKind::K0w1;
}

// kappa(t): the inverse Mellin kernel of the Gamma factor
Ball kappa_point(WKind k, const Ball& t, long prec) {
  double td = t.mid.to_double();
  long wp = padded(prec, (k == WKind::Gauss0 || k == WKind::Gauss1) ? td * td : 2 * td);
  Ball tw = to_prec(Ball(t.mid, 0.0), wp);
  double kd = std::exp(-((k == WKind::Gauss0 || k == WKind::Gauss1) ? td * td : 2 * td));
  double inherited =
      t.rad * 40.0 * (1.0 + td) * (1.0 + 1.0 / std::max(0.05, td)) * kd;
  auto add_inh = [&](Ball b) {
    b.rad = radd(b.rad, inherited);
    return b;
  };
  switch (k) {
    case WKind::Gauss0:
    case WKind::Gauss1: {
      Ball e = exp_b(-(tw * tw));
      return add_inh((k == WKind::Gauss0) ? e * Rat(2) : e * tw * Rat(2));
    }
    case WKind::Exp2: {
      Ball e = exp_b(-(tw * Rat(2)));
      return add_inh(e * sqrt_b(pi_ball(wp)) * Rat(2));
    }
    default: {
      // 4 t^eps K_0(2t): K_0(2t) = -(ln t + gamma) I_0(2t) + sum H_k t^{2k}/k!^2
      Ball L = log_b(tw);
      Ball g = euler_gamma(wp);
      Ball i0 = Ball::zero(wp), s = Ball::zero(wp);
      Ball term(Rat(1), wp);
      Ball Hk = Ball::zero(wp);
      Ball t2 = tw * tw;
      double eps = eps_for(prec);
      for (long kk = 0; kk <= 100000; ++kk) {
        if (kk > 0) {
          term = term * t2 / Rat(Int(kk) * Int(kk));
          Hk = Hk + Rat(mkrat(1, Int(kk)));
        }
        i0 = i0 + term;
        s = s + term * Hk;
        if (term.mag() * (2 + Hk.mag()) < eps && (double)kk > 2.8 * td) {
          i0.rad = radd(i0.rad, 2 * term.mag());
          s.rad = radd(s.rad, 4 * term.mag());
          break;
        }
      }
      Ball k0 = -(L + g) * i0 + s;
      return add_inh((k == WKind::K0w0) ? k0 * Rat(4) : k0 * tw * Rat(4));
    }
  }
}

// Ghat_{s}(y) and its s-derivative at s in {0, 1}
Ball ghat(WKind k, int s, int deriv, const Ball& y, long prec) {
  Ball L = log_b(y);
  switch (k) {
    case WKind::Gauss0:
    case WKind::Gauss1: {
      int a = (k == WKind::Gauss0) ? 0 : 1;
      Ball x = y * y;
      Rat c = mkrat(Int(a + s), 2);
      Ball base = incgamma_upper(c, 0, x, prec);
      Ball out;
      if (deriv == 0)
        out = base;
      else
        out = (incgamma_upper(c, 1, x, prec) * Rat(1, 2) - L * base);
      // the substitution u = t^2 contributes ln t = (1/2) ln u; prefactor y^{-s}
      return (s == 0) ? out : out * exp_b(-(L * Rat(Int(s))));
    }
    case WKind::Exp2: {
      // 2 sqrt(pi) int_y^infty e^{-2t} t^s (ln t - ln y)^j dt/t
      long wp = padded(prec, 2 * y.mid.to_double());
      Ball sp = sqrt_b(pi_ball(wp)) * Rat(2);
      Ball x2 = y * Rat(2);
      Rat c = Rat(Int(s));
      Ball l2 = ln2_ball(wp);
      Ball e0 = incgamma_upper(c, 0, x2, prec);
      Ball m0 = (s == 0) ? e0 : e0 * Rat(1, 2);  // 2^{-c} factor
      if (deriv == 0) {
        Ball out = sp * m0;
        return (s == 0) ? out : out * exp_b(-(L * Rat(Int(s))));
      }
      Ball e1 = incgamma_upper(c, 1, x2, prec);
      Ball m1 = ((s == 0) ? (e1 - l2 * e0) : (e1 - l2 * e0) * Rat(1, 2));
      Ball out = sp * (m1 - L * m0);
      return (s == 0) ? out : out * exp_b(-(L * Rat(Int(s))));
    }
    default: {
      int eps_pow = (k == WKind::K0w0) ? 0 : 1;
      int c = eps_pow + s;
      Ball m0 = besselK0_moment(c, 0, y, prec) * Rat(4);
      if (deriv == 0) {
        return (s == 0) ? m0 : m0 * exp_b(-(L * Rat(Int(s))));
      }
      Ball m1 = besselK0_moment(c, 1, y, prec) * Rat(4);
      Ball out = m1 - L * m0;
      return (s == 0) ? out : out * exp_b(-(L * Rat(Int(s))));
    }
  }
}

// crude certified bound for the ideal-sum tail beyond norm X
double tail_bound(WKind k, double sqrtC, long X) {
  double acc = 0;
  // per-norm count <= 4 n; kernel bound e^{-2y} (1+y)^3 * 16, or e^{-y^2} flavor
  for (long n = X + 1; n <= X + 40 * (long)sqrtC + 400; ++n) {
    double y = n / sqrtC;
    double kb;
    if (k == WKind::Gauss0 || k == WKind::Gauss1)
      kb = 16 * (1 + y) * std::exp(-y * y);
    else
      kb = 16 * std::pow(1 + y, 3) * std::exp(-2 * y);
    acc += 4.0 * n * kb;
  }
  return acc * 2;  // geometric slack for the rest
}

struct IdealItem {
  long norm;
  long cls;
};

std::vector<IdealItem> ideals_with_classes(const RayClassGroup& G, long X) {
  const Field& F = G.field();
  struct PI { long first; long cls; };
  std::vector<PI> pitems;  // prime ideal (norm, class)
  std::vector<Ideal> pids;
  for (long q = 2; q <= X; ++q) {
    if (!is_prime(Int(q))) continue;
    for (auto& P : primes_above(F, Int(q))) {
      Int nrm = ideal_norm(F, P.P);
      if (nrm > X) continue;
      if (!G.ideal_coprime_to_f(P.P)) continue;
      pitems.push_back({nrm.get_si(), G.class_of_ideal(P.P)});
    }
  }
  std::vector<IdealItem> out;
  out.push_back({1, G.identity()});
  // DFS over prime powers
  std::function<void(size_t, long, long)> rec = [&](size_t i, long nrm, long cls) {
    if (i == pitems.size()) return;
    rec(i + 1, nrm, cls);
    long n = nrm, c = cls;
    while ((double)n * pitems[i].first <= (double)X) {
      n *= pitems[i].first;
      c = G.mul(c, pitems[i].cls);
      out.push_back({n, c});
      rec(i + 1, n, c);
    }
  };
  rec(0, 1, G.identity());
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.norm < b.norm; });
  return out;
}
}  // namespace

PrimitiveData primitivize(const RayClassGroup& G, const Character& chi) {
  const Field& F = G.field();
  // divisors of f, by norm
  auto fact = factor_ideal(F, G.modulus());
  std::vector<Ideal> divisors = {ideal_one(F)};
  for (auto& [P, e] : fact) {
    std::vector<Ideal> next;
    for (auto& d : divisors) {
      Ideal cur = d;
      for (int t = 0; t <= e; ++t) {
        next.push_back(cur);
        if (t < e) cur = ideal_mul(F, cur, P);
      }
    }
    divisors = next;
  }
  std::sort(divisors.begin(), divisors.end(), [&](const Ideal& a, const Ideal& b) {
    Int na = ideal_norm(F, a), nb = ideal_norm(F, b);
    if (na != nb) return na < nb;
    return a < b;
  });
  for (auto& d : divisors) {
    RayClassGroup Gd = RayClassGroup::build(F, d);
    // does chi factor through Gd?
    bool ok = true;
    for (long c = 0; c < G.size() && ok; ++c) {
      if (project_class(G, Gd, c) == Gd.identity() && G.char_value_exp(chi, c) != 0) ok = false;
    }
    if (!ok) continue;
    // build the character on Gd from preimages of its generators
    Character chip;
    chip.n = Gd.exponent();
    long n_big = chi.n;
    for (size_t j = 0; j < Gd.gen_classes().size(); ++j) {
      long target = Gd.gen_classes()[j];
      long pre = -1;
      for (long c = 0; c < G.size(); ++c)
        if (project_class(G, Gd, c) == target) {
          pre = c;
          break;
        }
      if (pre < 0) throw std::logic_error("primitivize: projection not surjective");
      long e = G.char_value_exp(chi, pre);
      long dj = Gd.gen_orders()[j];
      if ((e * dj) % n_big != 0) throw std::logic_error("primitivize: incompatible value");
      chip.t.push_back(((e * dj / n_big) % dj + dj) % dj);
    }
    long ord = 1;
    for (size_t j = 0; j < chip.t.size(); ++j) {
      long dj = Gd.gen_orders()[j];
      ord = std::lcm(ord, dj / std::gcd(chip.t[j], dj));
    }
    chip.order = ord;
    PrimitiveData out{std::move(Gd), chip, d, 0, 0};
    out.a1 = (out.Gp.char_value_exp(chip, out.Gp.s_iota(false)) == 0) ? 0 : 1;
    out.a2 = F.is_Q() ? 0
                      : ((out.Gp.char_value_exp(chip, out.Gp.s_iota(true)) == 0) ? 0 : 1);
    return out;
  }
  throw std::logic_error("primitivize: no conductor found");
}

Cplx exact_L0_from_zeta(const RayClassGroup& G, const Character& chi,
                        const PrecisionCtx& ctx) {
  long prec = ctx.bits();
  Cplx acc = Cplx::zero(prec);
  for (long c = 0; c < G.size(); ++c) {
    Rat z = partial_zeta_neg_int(G, c, 0);
    if (z == 0) continue;
    acc = acc + scale(G.char_value(chi, c, prec), Ball(z, prec));
  }
  return acc;
}

namespace {
// first-order jet
struct Jet {
  Cplx v, d;
};
Jet jet_mul(const Jet& a, const Jet& b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }

Cplx cplx_of(const Ball& b, long prec) { return Cplx::from_ball(b, prec); }

// Lambda(0), Lambda'(0) and the root number by the theta relation
struct AfeOut {
  Cplx lam0, lam1;
  Cplx W;
};

AfeOut afe_lambda(const RayClassGroup& Gp, const Character& chip, int a1, int a2,
                  const PrecisionCtx& ctx) {
  const Field& F = Gp.field();
  long prec = ctx.bits() + 40;
  WKind kind = kind_for(F.degree, a1, a2);
  // C = |d_F| N(cond) / pi^degree
  Ball C = Ball(Rat(F.disc * ideal_norm(F, Gp.modulus())), prec) /
           pow_si(pi_ball(prec), F.degree);
  Ball sqC = sqrt_b(C);
  double sqCd = sqC.mid.to_double();
  double digits = ctx.digits * 2.303 + 45;
  long X;
  {
    double yX = (kind == WKind::Gauss0 || kind == WKind::Gauss1)
                    ? std::sqrt(digits) + 4
                    : digits / 2 + 4;
    X = (long)(sqCd * yX) + 2;
    while (tail_bound(kind, sqCd, X) > std::exp(-digits) && X < 100000) X = X * 12 / 10;
  }
  auto items = ideals_with_classes(Gp, X);
  // theta ratio for W: Theta(1/y0) = W y0 Theta~(y0)
  Cplx W;
  {
    bool done = false;
    for (double y0 : {1.21, 1.37, 0.83, 1.51}) {
      Cplx num = Cplx::zero(prec), den = Cplx::zero(prec);
      for (auto& it : items) {
        Ball t1 = Ball(Rat(Int(it.norm)), prec) / (sqC * Ball(y0, prec));
        Ball t2 = Ball(Rat(Int(it.norm)), prec) * Ball(y0, prec) / sqC;
        Cplx chv = Gp.char_value(chip, it.cls, prec);
        num = num + scale(chv, kappa_point(kind, t1, prec));
        den = den + scale(conj_c(chv), kappa_point(kind, t2, prec));
      }
      den = scale(den, Ball(y0, prec));
      Ball dmag = abs_c(den);
      if (dmag.mid.to_double() - dmag.rad > 1e-4) {
        W = num / den;
        done = true;
        break;
      }
    }
    if (!done) throw std::runtime_error("afe_lambda: could not stabilize the root number");
    // |W| must be 1
    Ball wm = abs_c(W);
    if (std::fabs(wm.mid.to_double() - 1.0) > 1e-6 + wm.rad)
      throw std::runtime_error("afe_lambda: |W| != 1, setup inconsistent");
    if (chip.order <= 2) {
      // quadratic characters have W = +-1 exactly; snap once certain
      double wr = W.re.to_double();
      if (std::fabs(wr - 1) < 0.2)
        W = Cplx(Real(1.0, prec), Real(0.0, prec), 0.0);
      else if (std::fabs(wr + 1) < 0.2)
        W = Cplx(Real(-1.0, prec), Real(0.0, prec), 0.0);
      else
        throw std::runtime_error("afe_lambda: quadratic W not near +-1");
    }
  }
  Cplx lam0 = Cplx::zero(prec), lam1 = Cplx::zero(prec);
  for (auto& it : items) {
    Ball y = Ball(Rat(Int(it.norm)), prec) / sqC;
    Cplx chv = Gp.char_value(chip, it.cls, prec);
    Cplx chvb = conj_c(chv);
    Ball g00 = ghat(kind, 0, 0, y, prec);
    Ball g10 = ghat(kind, 1, 0, y, prec);
    lam0 = lam0 + scale(chv, g00) + scale(chvb, g10) * W;
    Ball g01 = ghat(kind, 0, 1, y, prec);
    Ball g11 = ghat(kind, 1, 1, y, prec);
    lam1 = lam1 + scale(chv, g01) - scale(chvb, g11) * W;
  }
  double tb = tail_bound(kind, sqCd, X);
  lam0.rad = radd(lam0.rad, tb);
  lam1.rad = radd(lam1.rad, tb);
  return {lam0, lam1, W};
}
}  // namespace

LValue hecke_L(const RayClassGroup& G, const Character& chi, bool want_derivative,
               const PrecisionCtx& ctx) {
  (void)want_derivative;
  const Field& F = G.field();
  long prec = ctx.bits();
  LValue out;
  if (chi.order == 1) {
    // trivial character: zeta_F times the removed Euler factors, as jets
    Jet acc;
    if (F.is_Q()) {
      acc = {cplx_of(Ball(Rat(-1, 2), prec), prec),
             cplx_of(-(log_2pi(prec) * Rat(1, 2)), prec)};
    } else {
      // zeta_F(0) = 0 and zeta_F'(0) = -(1/2) L'(0, chi_disc)
      // with chi_disc the even quadratic character of conductor disc
      Field Q = Field::Q();
      RayClassGroup Gd = RayClassGroup::build(Q, ideal_of_int(Q, F.disc));
      Character chid;
      bool found = false;
      for (auto& cand : Gd.characters()) {
        if (cand.order != 2) continue;
        PrimitiveData pd = primitivize(Gd, cand);
        if (ideal_norm(Q, pd.conductor) != F.disc) continue;
        if (pd.a1 != 0) continue;
        // match the splitting behavior at a few primes
        bool match = true;
        for (long q : {3L, 5L, 7L, 11L, 13L, 17L}) {
          if (F.disc % q == 0) continue;
          long cls = Gd.class_of_element(FieldElement(Rat(Int(q))));
          bool split = primes_above(F, Int(q)).size() == 2;
          bool chi_one = Gd.char_value_exp(cand, cls) == 0;
          if (split != chi_one) {
            match = false;
            break;
          }
        }
        if (match) {
          chid = cand;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("hecke_L: discriminant character not found");
      LValue ld = hecke_L(Gd, chid, true, ctx);
      acc.v = Cplx::zero(prec);
      acc.d = scale(ld.L1, Ball(Rat(-1, 2), prec));
    }
    for (auto& [P, e] : factor_ideal(F, G.modulus())) {
      (void)e;
      // factor (1 - N(P)^{-s}): jet at 0 is (0, ln N P)
      Jet f{Cplx::zero(prec), cplx_of(log_rat(Rat(ideal_norm(F, P)), prec), prec)};
      acc = jet_mul(acc, f);
    }
    out.L0 = acc.v;
    out.L1 = acc.d;
    out.conductor = ideal_one(F);
    out.forced_order = 0;
    return out;
  }
  PrimitiveData pd = primitivize(G, chi);
  out.conductor = pd.conductor;
  out.a1 = pd.a1;
  out.a2 = pd.a2;
  int k = (pd.a1 == 0 ? 1 : 0) + (F.is_Q() ? 0 : (pd.a2 == 0 ? 1 : 0));
  out.forced_order = k;
  Jet Lj;
  if (k == 2) {
    // totally even over a real quadratic field: order >= 2 at s = 0
    Lj = {Cplx::zero(prec), Cplx::zero(prec)};
    out.root_number_known = false;
  } else {
    AfeOut afe = afe_lambda(pd.Gp, pd.chip, pd.a1, pd.a2, ctx);
    out.root_number = afe.W;
    out.root_number_known = true;
    Ball C = Ball(Rat(F.disc * ideal_norm(F, pd.conductor)), prec) /
             pow_si(pi_ball(prec), F.degree);
    Ball halflogC = log_b(C) * Rat(1, 2);
    if (k == 0) {
      // gamma(0) = Gamma(1/2)^degree, gamma'/gamma = degree * psi(1/2)/2
      Ball g0 = pow_si(gamma_fn(Ball(Rat(1, 2), prec), prec), F.degree);
      Ball psih = digamma(Ball(Rat(1, 2), prec), prec);
      Jet denom{cplx_of(g0, prec),
                cplx_of(g0 * (halflogC + psih * Rat(Int(F.degree), 2)), prec)};
      // L = Lambda / (C^{s/2} gamma): first-order quotient
      Cplx L0 = afe.lam0 / denom.v;
      Cplx L1 = (afe.lam1 - L0 * denom.d) / denom.v;
      Lj = {L0, L1};
    } else {
      // k = 1: L(0) = 0, L'(0) = Lambda(0)/gtilde(0)
      Ball gt0 = (F.is_Q()) ? Ball(Rat(2), prec)
                            : Ball(Rat(2), prec) * gamma_fn(Ball(Rat(1, 2), prec), prec);
      Lj = {Cplx::zero(prec), afe.lam0 / cplx_of(gt0, prec)};
    }
  }
  // imprimitive Euler factors
  for (auto& [P, e] : factor_ideal(F, G.modulus())) {
    (void)e;
    if (ideal_divides(F, P, pd.conductor)) continue;
    long cls = pd.Gp.class_of_ideal(P);
    Cplx chPv = pd.Gp.char_value(pd.chip, cls, prec);
    Jet f{Cplx(Real(1.0, prec), Real(0.0, prec), 0.0) - chPv,
          scale(chPv, log_rat(Rat(ideal_norm(F, P)), prec))};
    Lj = jet_mul(Lj, f);
  }
  out.L0 = Lj.v;
  out.L1 = Lj.d;
  return out;
}

Ball partial_zeta_deriv0(const RayClassGroup& G, long c, const PrecisionCtx& ctx) {
  long prec = ctx.bits();
  Cplx acc = Cplx::zero(prec);
  auto chars = G.characters();
  for (auto& chi : chars) {
    LValue lv = hecke_L(G, chi, true, ctx);
    Cplx chv = G.char_value(chi, G.inv_class(c), prec);
    acc = acc + chv * lv.L1;
  }
  Ball inv(Rat(1, Int(G.size())), prec);
  Cplx res = scale(acc, inv);
  // the value is real; fold imaginary ball into the radius
  Ball re(res.re, radd(res.rad, std::fabs(res.im.to_double())));
  return re;
}

FuneqReport check_funeq_sqrt5(const PrecisionCtx& ctx) {
  FuneqReport rep;
  Field F = Field::real_quadratic(5);
  Field Q = Field::Q();
  RayClassGroup Gf = RayClassGroup::build(F, ideal_of_int(F, 5));
  RayClassGroup Cd = RayClassGroup::build(Q, ideal_of_int(Q, 5));
  // phi_K : C_(5) over F -> Gal(K/F) = {classes of +-1 mod 5} via the norm
  auto phiK = [&](long c) {
    Int n = abs(ideal_norm(F, Gf.ideal_rep(c)));
    long t = Int(n % 5).get_si();
    if (t != 1 && t != 4) throw std::logic_error("check_funeq: norm not in the subgroup");
    return t;  // 1 or 4
  };
  // exact L_d(0, psi) for all Dirichlet characters mod 5
  CycField K = CycField::make(Cd.exponent());
  auto dchars = Cd.characters();
  std::vector<CycElt> Lvals;
  for (auto& psi : dchars) {
    CycElt acc = cyc_zero(K);
    for (long c = 0; c < Cd.size(); ++c) {
      Rat z = partial_zeta_neg_int(Cd, c, 0);
      acc = cyc_add(K, acc, cyc_scale(Cd.char_value_exact(K, psi, c), z));
    }
    Lvals.push_back(acc);
  }
  // (funeq) at s = 0, exact: for chi in H^, sum chi(phi(c)) zeta(0,c) over F
  // equals the product of L_5(0, psi) over psi restricting to chi
  std::vector<long> HK;  // classes of C_(5)/Q mapping into Gal(K/F)
  for (long c = 0; c < Cd.size(); ++c) {
    long r = class_label_Q(Cd, c);
    if (r == 1 || r == 4) HK.push_back(c);
  }
  rep.exact_factorization = true;
  for (int chi_sign : {1, -1}) {
    // chi on Gal(K/F) = {1, 4 mod 5}: chi(4) = chi_sign
    CycElt lhs = cyc_zero(K);
    for (long c = 0; c < Gf.size(); ++c) {
      Rat z = partial_zeta_neg_int(Gf, c, 0);
      Rat v = (phiK(c) == 1 || chi_sign == 1) ? z : -z;
      lhs = cyc_add(K, lhs, cyc_rat(K, v));
    }
    CycElt rhs = cyc_rat(K, Rat(1));
    for (size_t i = 0; i < dchars.size(); ++i) {
      // psi restricts to chi iff psi(4 mod 5) = chi_sign
      long c4 = Cd.class_of_element(FieldElement(Rat(4)));
      long e = Cd.char_value_exp(dchars[i], c4);
      // psi(4 mod 5) = zeta_n^e: equals -1 iff e = n/2, equals +1 iff e = 0
      bool is_minus = (2 * e) % dchars[i].n == 0 && e % dchars[i].n != 0;
      bool matches = (chi_sign == -1) ? is_minus : (e % dchars[i].n == 0);
      if (matches) rhs = cyc_mul(K, rhs, Lvals[i]);
    }
    if (!cyc_is_zero(cyc_sub(K, lhs, rhs))) rep.exact_factorization = false;
  }
  // r(c, sigma) and (ztoz): |G| sum_{fiber} zeta(0,c over F) = sum r(c,s) zeta(0,c)
  std::vector<long> kerK = {Cd.identity()};
  rep.ztoz_exact = true;
  double worst = 0;
  for (long sigma : HK) {
    auto r = aggregation_coeffs(Cd, kerK, HK, sigma, K, dchars, Lvals);
    Rat lhs_sum(0);
    long sig45 = class_label_Q(Cd, sigma) == 1 ? 1 : 4;
    for (long c = 0; c < Gf.size(); ++c)
      if (phiK(c) == sig45) lhs_sum += partial_zeta_neg_int(Gf, c, 0);
    Rat rhs_sum(0);
    for (long c = 0; c < Cd.size(); ++c) rhs_sum += r[c] * partial_zeta_neg_int(Cd, c, 0);
    if (rhs_sum != Rat(Int(Cd.size())) * lhs_sum) rep.ztoz_exact = false;
    // (zdtoz'): |H| sum_{fiber} zeta'(0, c over F) = sum_c r(c, sigma) zeta'(0, c)
    long prec = ctx.bits();
    Ball lhs = Ball::zero(prec);
    for (long c = 0; c < Gf.size(); ++c)
      if (phiK(c) == sig45) lhs = lhs + partial_zeta_deriv0(Gf, c, ctx);
    lhs = lhs * Rat(2);  // |H| = 2
    Ball rhs = Ball::zero(prec);
    for (long c = 0; c < Cd.size(); ++c) {
      if (r[c] == 0) continue;
      // zeta'(0, c_{r/5}) over Q from the closed form
      long rr = class_label_Q(Cd, c);
      Ball z = classical_log_gamma(mkrat(Int(rr), Int(5)), ctx) +
               log_rat(Rat(5), prec) * (mkrat(Int(rr), Int(5)) - Rat(1, 2)) -
               log_2pi(prec) * Rat(1, 2);
      rhs = rhs + z * r[c];
    }
    worst = std::max(worst, ball_dist(lhs, rhs));
  }
  rep.zdtoz_residual = worst;
  return rep;
}

}  // namespace shintani
