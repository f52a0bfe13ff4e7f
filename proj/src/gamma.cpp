#include "shintani/gamma.hpp"

#include <algorithm>
#include <cmath>

namespace shintani {

namespace {
double target_eps(long prec) { return std::ldexp(1.0, (int)std::max(-1000L, 8 - prec)); }

// Stirling shift target: W = x + M comfortably large for the digit goal
double shift_goal(long prec) { return std::max(12.0, 0.27 * (double)prec); }

long shift_count(const Ball& x, long prec) {
  double g = shift_goal(prec);
  double xv = x.mid.to_double();
  if (xv >= g) return 0;
  return (long)std::ceil(g - xv);
}
}  // namespace

Ball log_gamma(const Ball& x, long prec) {
  if (x.mid.sign() <= 0 || x.contains_zero())
    throw std::domain_error("log_gamma: requires x > 0");
  double eps = target_eps(prec);
  long M = shift_count(x, prec);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Ball W = x + Rat(Int(M));
    Ball L = log_b(W);
    Ball acc = (W - Rat(1, 2)) * L - W + log_2pi(prec) * Rat(1, 2);
    Ball Winv = inv_b(W);
    Ball Winv2 = Winv * Winv;
    // incremental terms keep every intermediate at the size of the term
    Ball term = Ball(Rat(1, 12), prec) * Winv;  // j = 1
    bool converged = false;
    for (long j = 1; j <= 400; ++j) {
      // classical bound: remainder after j-1 terms is at most |term|
      double tb = term.mag();
      if (tb < eps) {
        acc.rad = radd(acc.rad, tb);
        converged = true;
        break;
      }
      acc = acc + term;
      Rat ratio = bernoulli_number((unsigned)(2 * j + 2)) * Rat(Int(2 * j) * Int(2 * j - 1)) /
                  (bernoulli_number((unsigned)(2 * j)) * Rat(Int(2 * j + 2) * Int(2 * j + 1)));
      term = term * Ball(ratio, prec) * Winv2;
    }
    if (converged) {
      // downward recurrence log G(x) = log G(x + M) - sum log(x + n)
      for (long n = 0; n < M; ++n) acc = acc - log_b(x + Rat(Int(n)));
      return acc;
    }
    M += (long)shift_goal(prec) + 8;
  }
  throw std::runtime_error("log_gamma: precision budget exhausted");
}

Ball gamma_fn(const Ball& x, long prec) { return exp_b(log_gamma(x, prec)); }

Ball digamma(const Ball& x, long prec) {
  if (x.mid.sign() <= 0 || x.contains_zero())
    throw std::domain_error("digamma: requires x > 0");
  double eps = target_eps(prec);
  long M = shift_count(x, prec);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Ball W = x + Rat(Int(M));
    Ball Winv = inv_b(W);
    Ball acc = log_b(W) - Winv * Rat(1, 2);
    Ball Winv2 = Winv * Winv;
    Ball term = Ball(Rat(1, 12), prec) * Winv2;  // j = 1
    bool converged = false;
    for (long j = 1; j <= 400; ++j) {
      double tb = term.mag();
      if (tb < eps) {
        acc.rad = radd(acc.rad, tb);
        converged = true;
        break;
      }
      acc = acc - term;
      Rat ratio = bernoulli_number((unsigned)(2 * j + 2)) * Rat(Int(2 * j)) /
                  (bernoulli_number((unsigned)(2 * j)) * Rat(Int(2 * j + 2)));
      term = term * Ball(ratio, prec) * Winv2;
    }
    if (converged) {
      for (long n = 0; n < M; ++n) acc = acc - inv_b(x + Rat(Int(n)));
      return acc;
    }
    M += (long)shift_goal(prec) + 8;
  }
  throw std::runtime_error("digamma: precision budget exhausted");
}

Ball hurwitz_value(long s0, const Ball& w, long prec) {
  if (s0 == 1) throw std::domain_error("hurwitz_value: pole at s = 1");
  if (s0 <= 0) {
    // exact continuation: zeta(-k, w) = -B_{k+1}(w)/(k+1)
    unsigned k = (unsigned)(-s0);
    // evaluate the Bernoulli polynomial at the ball
    Ball acc = Ball::zero(prec);
    Ball wp(Rat(1), prec);
    // sum C(k+1, j) B_j w^{k+1-j}, iterate powers upward from j = k+1 down
    std::vector<Ball> pows(k + 2, Ball(Rat(1), prec));
    for (unsigned t = 1; t <= k + 1; ++t) pows[t] = pows[t - 1] * w;
    for (unsigned j = 0; j <= k + 1; ++j) {
      Rat c = binom(k + 1, j) * bernoulli_number(j);
      if (c == 0) continue;
      acc = acc + pows[k + 1 - j] * c;
    }
    return -(acc / Rat(Int(k + 1)));
  }
  // s0 >= 2: Euler-Maclaurin
  double eps = target_eps(prec);
  long M = shift_count(w, prec);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Ball W = w + Rat(Int(M));
    Ball head = Ball::zero(prec);
    for (long n = 0; n < M; ++n) head = head + pow_si(w + Rat(Int(n)), -s0);
    Ball Winv = inv_b(W);
    Ball acc = pow_si(W, 1 - s0) / Rat(Int(s0 - 1)) + pow_si(W, -s0) * Rat(1, 2);
    // sum_j B_{2j}/(2j)! (s0)_{2j-1} W^{-s0-2j+1}, terms built incrementally
    Ball Winv2 = Winv * Winv;
    Ball term = Ball(mkrat(Int(s0), Int(12)), prec) * pow_si(W, -s0 - 1);  // j = 1
    bool converged = false;
    for (long j = 1; j <= 400; ++j) {
      double tb = term.mag();
      if (tb < eps) {
        acc.rad = radd(acc.rad, tb);
        converged = true;
        break;
      }
      acc = acc + term;
      Rat ratio = bernoulli_number((unsigned)(2 * j + 2)) *
                  Rat(Int(s0 + 2 * j - 1) * Int(s0 + 2 * j)) /
                  (bernoulli_number((unsigned)(2 * j)) * Rat(Int(2 * j + 1) * Int(2 * j + 2)));
      term = term * Ball(ratio, prec) * Winv2;
    }
    if (converged) return head + acc;
    M += (long)shift_goal(prec) + 8;
  }
  throw std::runtime_error("hurwitz_value: precision budget exhausted");
}

Ball hurwitz_sderiv(long s0, const Ball& w, long prec) {
  if (s0 == 0) return log_gamma(w, prec) - log_2pi(prec) * Rat(1, 2);
  if (s0 != -1) throw std::domain_error("hurwitz_sderiv: only s0 in {0, -1}");
  double eps = target_eps(prec);
  long M = shift_count(w, prec);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Ball W = w + Rat(Int(M));
    Ball L = log_b(W);
    Ball head = Ball::zero(prec);
    for (long n = 0; n < M; ++n) {
      Ball wn = w + Rat(Int(n));
      head = head - wn * log_b(wn);
    }
    // termwise s-derivative of the EM expansion at s = -1
    Ball W2 = W * W;
    Ball acc = W2 * (L * Rat(1, 2) - Ball(Rat(1, 4), prec)) - W * L * Rat(1, 2) +
               (L + Rat(1)) * Rat(1, 12);
    Ball Winv2 = inv_b(W2);
    bool converged = false;
    double Wd = W.mid.to_double();
    // term_j = -(B_{2j}/((2j)(2j-1)(2j-2))) W^{2-2j}, built incrementally
    Ball term = Ball(Rat(1, 720), prec) * Winv2;  // j = 2: -B_4/(4*3*2)
    for (long j = 2; j <= 400; ++j) {
      double tb = term.mag();
      // explicit remainder-derivative bound with J = j-1 Bernoulli terms:
      // 2 zeta(2J+1) (2J-2)! W^{1-2J} / (2 pi)^{2J+1}
      double rb = 2.6 * std::exp(std::lgamma(2.0 * (j - 1) - 1.0) -
                                 (2.0 * (j - 1) + 1) * std::log(2 * M_PI) +
                                 (1.0 - 2.0 * (j - 1)) * std::log(Wd));
      if (tb < eps && rb < 8 * eps) {
        acc.rad = radd(acc.rad, radd(tb, rb));
        converged = true;
        break;
      }
      acc = acc + term;
      Rat ratio = bernoulli_number((unsigned)(2 * j + 2)) *
                  Rat(Int(2 * j) * Int(2 * j - 2)) * Rat(Int(2 * j - 1)) /
                  (bernoulli_number((unsigned)(2 * j)) * Rat(Int(2 * j + 2) * Int(2 * j)) *
                   Rat(Int(2 * j + 1)));
      term = term * Ball(ratio, prec) * Winv2;
    }
    if (converged) return head + acc;
    M += (long)shift_goal(prec) + 8;
  }
  throw std::runtime_error("hurwitz_sderiv: precision budget exhausted");
}

Ball hurwitz_general(const Ball& s, const Ball& w, long prec) {
  double sv = s.mid.to_double();
  if (std::abs(sv - 1.0) < 0.05 + s.rad)
    throw std::domain_error("hurwitz_general: too close to the pole");
  double eps = target_eps(prec);
  long M = shift_count(w, prec);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Ball W = w + Rat(Int(M));
    Ball head = Ball::zero(prec);
    for (long n = 0; n < M; ++n) {
      Ball wn = w + Rat(Int(n));
      head = head + exp_b(-(s * log_b(wn)));
    }
    Ball L = log_b(W);
    Ball Wms = exp_b(-(s * L));            // W^{-s}
    Ball acc = Wms * W / (s - Rat(1)) + Wms * Rat(1, 2);
    Ball Winv2 = inv_b(W * W);
    // term_j = B_{2j}/(2j)! (s)_{2j-1} W^{-s-2j+1}, incremental in j
    Ball term = Ball(Rat(1, 12), prec) * s * Wms * inv_b(W);  // j = 1
    bool converged = false;
    for (long j = 1; j <= 400; ++j) {
      double tb = term.mag();
      // remainder bound: |next term| * |s + 2J + 1| / (sigma + 2J + 1)
      double sig = sv;
      double fac = (sig + 2 * j + 1) > 0 ? 1.0 : 1e9;
      if (tb * fac < eps && sig + 2 * j + 1 > 0) {
        acc.rad = radd(acc.rad, tb * fac);
        converged = true;
        break;
      }
      acc = acc + term;
      Ball ratio = Ball(bernoulli_number((unsigned)(2 * j + 2)) /
                            (bernoulli_number((unsigned)(2 * j)) *
                             Rat(Int(2 * j + 1) * Int(2 * j + 2))),
                        prec) *
                   (s + Rat(Int(2 * j - 1))) * (s + Rat(Int(2 * j)));
      term = term * ratio * Winv2;
    }
    if (converged) return head + acc;
    M += (long)shift_goal(prec) + 8;
  }
  throw std::runtime_error("hurwitz_general: precision budget exhausted");
}

namespace {
// remainder-derivative tail bound for the rank-2 outer expansion:
// sum_{m >= M2} |d/ds R_J(s, w_m)|_{s=0}, computed in log space
double outer_tail_bound(double beta, double q, long J) {
  // (2 (2J+1)! zeta(2J+1) / ((2J+1)(2J)(2pi)^{2J+1})) beta^{-2J}
  //   * (q^{-2J} + q^{1-2J}/(2J-1))
  double lg = std::lgamma(2.0 * J + 2.0);
  double l = std::log(2.6) + lg - std::log(2.0 * J + 1) - std::log(2.0 * J) -
             (2.0 * J + 1) * std::log(2 * M_PI) - 2.0 * J * std::log(beta);
  double tail = std::pow(q, -2.0 * J) + std::pow(q, 1.0 - 2.0 * J) / (2.0 * J - 1);
  return std::exp(l) * tail;
}
}  // namespace

BarnesAtZero barnes_at_zero(const BarnesInput& in, long prec) {
  BarnesAtZero out;
  if (in.v.size() == 1) {
    // zeta(s, (v), z) = v^{-s} zeta_H(s, z/v)
    Ball wq = in.z / in.v[0];
    Ball lv = log_b(in.v[0]);
    Ball h0 = Ball(Rat(1, 2), prec) - wq;
    out.value = h0;
    out.sderiv = -(lv * h0) + hurwitz_sderiv(0, wq, prec);
    return out;
  }
  if (in.v.size() != 2) throw std::invalid_argument("barnes_at_zero: rank must be 1 or 2");
  // order the basis so beta = v2/v1 >= 1 (fewer outer terms)
  Ball v1 = in.v[0], v2 = in.v[1];
  if (v1.mid.to_double() > v2.mid.to_double()) std::swap(v1, v2);
  Ball beta = v2 / v1;
  Ball q0 = in.z / v2;
  double eps = target_eps(prec);
  double bd = beta.mid.to_double();
  double goal = shift_goal(prec) * 1.2 + 4;
  long M2 = std::max(0L, (long)std::ceil(goal / bd - q0.mid.to_double()) + 1);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Ball q = q0 + Rat(Int(M2));
    double qd = q.mid.to_double();
    // head: inner Hurwitz rows m = 0 .. M2-1
    Ball head_val = Ball::zero(prec), head_der = Ball::zero(prec);
    for (long m = 0; m < M2; ++m) {
      Ball wm = (in.z + v2 * Rat(Int(m))) / v1;
      head_val = head_val + Ball(Rat(1, 2), prec) - wm;
      head_der = head_der + hurwitz_sderiv(0, wm, prec);
    }
    // outer tail pieces
    Ball lb = log_b(beta);
    Ball zm1 = hurwitz_value(-1, q, prec);       // zeta_H(-1, q)
    Ball zm1d = hurwitz_sderiv(-1, q, prec);     // zeta_H'(-1, q)
    Ball z0 = Ball(Rat(1, 2), prec) - q;         // zeta_H(0, q)
    Ball z0d = hurwitz_sderiv(0, q, prec);
    Ball psi_q = digamma(q, prec);
    Ball binv = inv_b(beta);

    Ball val = head_val - beta * zm1 + z0 * Rat(1, 2) + binv * Rat(1, 12);
    Ball der = head_der + beta * (zm1 * lb - zm1d - zm1) +
               (z0d - lb * z0) * Rat(1, 2) - binv * (lb + psi_q) * Rat(1, 12);
    // j >= 2 terms contribute only to the derivative; coefficients built
    // incrementally so intermediates stay term-sized
    Ball binv2 = binv * binv;
    Ball coef = Ball(Rat(-1, 360), prec) * binv * binv2;  // B_4/12 * beta^{-3}
    bool converged = false;
    for (long j = 2; j <= 400; ++j) {
      Ball term = coef * hurwitz_value(2 * j - 1, q, prec);
      double tb = term.mag();
      double rb = outer_tail_bound(bd, qd, j - 1);
      if (tb < eps && rb < 8 * eps) {
        der.rad = radd(der.rad, radd(tb, rb));
        converged = true;
        break;
      }
      der = der + term;
      Rat ratio = bernoulli_number((unsigned)(2 * j + 2)) * Rat(Int(2 * j) * Int(2 * j - 1)) /
                  (bernoulli_number((unsigned)(2 * j)) * Rat(Int(2 * j + 2) * Int(2 * j + 1)));
      coef = coef * Ball(ratio, prec) * binv2;
    }
    if (converged) {
      // prefactor v1^{-s}: value unchanged, derivative shifts by -log(v1)*value
      Ball lv1 = log_b(v1);
      out.value = val;
      out.sderiv = der - lv1 * val;
      return out;
    }
    M2 += (long)(goal / bd) + 8;
  }
  throw std::runtime_error("barnes_at_zero: precision budget exhausted");
}

Ball barnes_zeta0(const BarnesInput& in, long prec) { return barnes_at_zero(in, prec).value; }

Ball log_multiple_gamma(const BarnesInput& in, long prec) {
  return barnes_at_zero(in, prec).sderiv;
}

Ball barnes_zeta(const Ball& s, const BarnesInput& in, long prec) {
  if (in.v.size() == 1) {
    Ball wq = in.z / in.v[0];
    return exp_b(-(s * log_b(in.v[0]))) * hurwitz_general(s, wq, prec);
  }
  if (in.v.size() != 2) throw std::invalid_argument("barnes_zeta: rank must be 1 or 2");
  double sv = s.mid.to_double();
  for (double pole : {0.0, 1.0, 2.0})
    if (std::abs(sv - pole) < 0.05)
      throw std::domain_error("barnes_zeta: s too close to a special point");
  Ball v1 = in.v[0], v2 = in.v[1];
  if (v1.mid.to_double() > v2.mid.to_double()) std::swap(v1, v2);
  Ball beta = v2 / v1;
  Ball q0 = in.z / v2;
  double eps = target_eps(prec);
  double bd = beta.mid.to_double();
  double goal = shift_goal(prec) * 1.2 + 4;
  long M2 = std::max(0L, (long)std::ceil(goal / bd - q0.mid.to_double()) + 1);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Ball q = q0 + Rat(Int(M2));
    Ball head = Ball::zero(prec);
    for (long m = 0; m < M2; ++m) {
      Ball wm = (in.z + v2 * Rat(Int(m))) / v1;
      head = head + hurwitz_general(s, wm, prec);
    }
    Ball lb = log_b(beta);
    Ball bms = exp_b(-(s * lb));  // beta^{-s}
    Ball acc = bms * beta * hurwitz_general(s - Rat(1), q, prec) / (s - Rat(1)) +
               bms * hurwitz_general(s, q, prec) * Rat(1, 2);
    Ball binv = inv_b(beta);
    // coefficient B_{2j}/(2j)! (s)_{2j-1} beta^{-s-2j+1}, incremental
    Ball coef = Ball(Rat(1, 12), prec) * s * bms * binv;
    bool converged = false;
    double qd = q.mid.to_double();
    for (long j = 1; j <= 400; ++j) {
      Ball term = coef * hurwitz_general(s + Rat(Int(2 * j - 1)), q, prec);
      double tb = term.mag();
      if (tb < eps && sv + 2 * j + 1 > 1) {
        // generic-s remainder: s = 0 bound inflated by |(s)_{2J+1}/(2J)!| ~ (2J+2)^{|s|+1}
        double infl = std::pow(2.0 * j + 2.0, std::abs(sv) + 1.0);
        double rb = radd(tb * 2, outer_tail_bound(bd, qd, j - 1) * infl);
        acc.rad = radd(acc.rad, rb);
        converged = true;
        break;
      }
      acc = acc + term;
      Ball ratio = Ball(bernoulli_number((unsigned)(2 * j + 2)) /
                            (bernoulli_number((unsigned)(2 * j)) *
                             Rat(Int(2 * j + 1) * Int(2 * j + 2))),
                        prec) *
                   (s + Rat(Int(2 * j - 1))) * (s + Rat(Int(2 * j)));
      coef = coef * ratio * binv * binv;
    }
    if (converged) return exp_b(-(s * log_b(v1))) * (head + acc);
    M2 += (long)(goal / bd) + 8;
  }
  throw std::runtime_error("barnes_zeta: precision budget exhausted");
}

Ball classical_log_gamma(const Rat& x, const PrecisionCtx& ctx) {
  long prec = ctx.bits();
  return log_gamma(Ball(x, prec), prec);
}

Ball log_multiple_gamma_rat(const std::vector<Rat>& v, const Rat& z, const PrecisionCtx& ctx) {
  long prec = ctx.bits();
  BarnesInput in;
  for (auto& q : v) in.v.push_back(Ball(q, prec));
  in.z = Ball(z, prec);
  return log_multiple_gamma(in, prec);
}

}  // namespace shintani
