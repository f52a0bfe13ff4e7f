#include "shintani/shintani.hpp"

#include <algorithm>
#include <cmath>

namespace shintani {

ShintaniDomain shintani_domain(const Field& F) {
  ShintaniDomain D;
  if (F.is_Q()) {
    D.cones.push_back(Cone{{FieldElement(Rat(1))}});
    return D;
  }
  FieldElement eps = fundamental_totally_positive_unit(F);
  D.cones.push_back(Cone{{FieldElement(Rat(1))}});
  D.cones.push_back(Cone{{FieldElement(Rat(1)), eps}});
  return D;
}

namespace {
// coordinates of z in the basis of a rank-2 cone: z = t1 v1 + t2 v2
std::pair<Rat, Rat> cone_coords(const Field& F, const Cone& cone, const FieldElement& z) {
  const FieldElement &v1 = cone.v[0], &v2 = cone.v[1];
  // solve [v1.a v2.a; v1.b v2.b] t = (z.a, z.b)
  Rat det = v1.a * v2.b - v2.a * v1.b;
  if (det == 0) throw std::logic_error("cone basis not independent");
  Rat t1 = (z.a * v2.b - v2.a * z.b) / det;
  Rat t2 = (v1.a * z.b - z.a * v1.b) / det;
  return {t1, t2};
}
}  // namespace

bool cone_contains(const Field& F, const Cone& cone, const FieldElement& z) {
  if (cone.rank() == 1) {
    // z on the ray through v1: z = t v1, t > 0
    const FieldElement& v1 = cone.v[0];
    if (v1.b == 0) {
      if (z.b != 0) return false;
      return z.a / v1.a > 0;
    }
    Rat t = z.b / v1.b;
    if (t <= 0) return false;
    return z.a == t * v1.a;
  }
  auto [t1, t2] = cone_coords(F, cone, z);
  return t1 > 0 && t2 > 0;
}

std::pair<long, int> locate_in_domain(const Field& F, const ShintaniDomain& D,
                                      const FieldElement& z, long kmax) {
  if (!fe_totally_positive(F, z)) throw std::invalid_argument("locate_in_domain: not >> 0");
  if (F.is_Q()) return {0, 0};
  FieldElement eps = fundamental_totally_positive_unit(F);
  for (long k = -kmax; k <= kmax; ++k) {
    FieldElement w = fe_mul(F, fe_pow(F, eps, k), z);
    for (int j = 0; j < (int)D.cones.size(); ++j)
      if (cone_contains(F, D.cones[j], w)) return {k, j};
  }
  throw std::runtime_error("locate_in_domain: search bound exceeded");
}

RSet enumerate_rset(const RayClassGroup& G, long c, const ShintaniDomain& D, int cone_index,
                    const Ideal& a_c) {
  const Field& F = G.field();
  const Cone& cone = D.cones[cone_index];
  Ideal af = ideal_mul(F, a_c, G.modulus());
  // h = 1: af = (gamma), so (z) af = (z gamma) and the class test becomes a
  // residue/sign lookup on the integral element w = z gamma
  auto gopt = principal_generator(F, frac(af), false);
  if (!gopt) throw std::runtime_error("enumerate_rset: af not principal");
  FieldElement gamma = *gopt;
  FieldElement gamma_inv = fe_div(F, FieldElement(Rat(1)), gamma);
  auto class_of_w = [&](const FieldElement& w) -> long {
    // class of the ideal (w); -1 if not coprime to f
    try {
      return G.class_of_element(w);
    } catch (const std::invalid_argument&) {
      return -1;
    }
  };
  RSet R;
  R.cls = c;
  R.cone_index = cone_index;
  if (cone.rank() == 1) {
    // z = t v1; w = t (gamma v1) integral forces den(t) | gcd of coords
    FieldElement gv1 = fe_mul(F, gamma, cone.v[0]);
    Int g0 = F.is_Q() ? abs(Int(gv1.a.get_num()))
                      : gcd(Int(gv1.a.get_num()), Int(gv1.b.get_num()));
    for (Int k = 1; k <= g0; ++k) {
      Rat t = mkrat(k, g0);
      FieldElement w{t * gv1.a, t * gv1.b};
      if (!fe_is_integral(w)) continue;
      if (class_of_w(w) != c) continue;
      R.xs.push_back({t});
    }
    return R;
  }
  const FieldElement &v1 = cone.v[0], &v2 = cone.v[1];
  // w = z gamma with z in the cone box; bound the embeddings of w
  long prec = 64;
  double s1 = embed_real(F, fe_add(v1, v2), real_embedding(F, false), prec).mid.to_double();
  double s2 = embed_real(F, fe_add(v1, v2), real_embedding(F, true), prec).mid.to_double();
  double gg1 = embed_real(F, gamma, real_embedding(F, false), prec).mid.to_double();
  double gg2 = embed_real(F, gamma, real_embedding(F, true), prec).mid.to_double();
  double B1 = std::abs(gg1) * s1 * 1.001 + 0.1, B2 = std::abs(gg2) * s2 * 1.001 + 0.1;
  // w = x + y w_F: y = (id(w) - conj(w)) / (id(w_F) - conj(w_F))
  double sq = std::sqrt(F.disc.get_d());  // id(w_F) - conj(w_F) = sqrt(disc)
  double ymax = (B1 + B2) / sq + 1;
  for (long y = -(long)ymax; y <= (long)ymax; ++y) {
    // x bounded by |id(w)| <= B1: x in [-B1 - y*id(w_F), B1 - y*id(w_F)] etc.
    double w1 = (F.tr_w + sq) / 2.0 * y;  // y*id(w_F)
    double w2 = (F.tr_w - sq) / 2.0 * y;
    double xlo = std::max(-B1 - w1, -B2 - w2) - 1, xhi = std::min(B1 - w1, B2 - w2) + 1;
    for (long x = (long)xlo; x <= (long)xhi; ++x) {
      FieldElement w{Rat(Int(x)), Rat(Int(y))};
      if (w.is_zero()) continue;
      FieldElement z = fe_mul(F, w, gamma_inv);
      auto [t1, t2] = cone_coords(F, cone, z);
      if (!(t1 > 0 && t1 <= 1 && t2 > 0 && t2 <= 1)) continue;
      if (class_of_w(w) != c) continue;
      R.xs.push_back({t1, t2});
    }
  }
  std::sort(R.xs.begin(), R.xs.end(), [](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    if (x[0] != y[0]) return x[0] < y[0];
    return x.size() > 1 && x[1] < y[1];
  });
  return R;
}

Rat cone_zeta_neg_int(const Field& F, const Cone& cone, const std::vector<Rat>& x, unsigned k) {
  if (cone.rank() == 1) {
    // sum_m N((x1 + m) v1)^{-s}; degree d gives Hurwitz at d*s
    const FieldElement& v1 = cone.v[0];
    Rat Nv = fe_norm(F, v1);
    unsigned d = F.is_Q() ? 1 : 2;
    // zeta_H(-dk, x) = -B_{dk+1}(x) / (dk+1)
    Rat hz = -bernoulli_poly(d * k + 1, x[0]) / Rat(Int(d * k + 1));
    return qpow(Nv, (long)k) * hz;
  }
  // rank 2 Bernoulli formula
  const FieldElement &v1 = cone.v[0], &v2 = cone.v[1];
  FieldElement v1c = fe_conj(F, v1), v2c = fe_conj(F, v2);
  long K = 2 * (long)k + 2;
  // [u^k] of W1^{k1-1} W2^{k2-1}, W_j = v_j + u conj(v_j), as element of F
  auto w_pow_coeffs = [&](const FieldElement& v, const FieldElement& vc,
                          long e) -> std::vector<FieldElement> {
    // coefficients 0..k of (v + u vc)^e; e may be -1
    std::vector<FieldElement> out(k + 1, FieldElement(Rat(0)));
    if (e >= 0) {
      for (long j = 0; j <= (long)k && j <= e; ++j) {
        Rat c = binom((unsigned)e, (unsigned)j);
        out[j] = fe_mul(F, FieldElement(c),
                        fe_mul(F, fe_pow(F, v, e - j), fe_pow(F, vc, j)));
      }
      return out;
    }
    // e = -1: 1/(v + u vc) = (1/v) sum (-vc/v)^j u^j
    FieldElement inv = fe_div(F, FieldElement(Rat(1)), v);
    FieldElement ratio = fe_neg(fe_div(F, vc, v));
    FieldElement cur = inv;
    for (long j = 0; j <= (long)k; ++j) {
      out[j] = cur;
      cur = fe_mul(F, cur, ratio);
    }
    return out;
  };
  FieldElement acc(Rat(0));
  for (long k1 = 0; k1 <= K; ++k1) {
    long k2 = K - k1;
    Rat b = bernoulli_poly((unsigned)k1, x[0]) * bernoulli_poly((unsigned)k2, x[1]);
    if (b == 0) continue;
    Rat fct(1);
    for (long t = 2; t <= k1; ++t) fct *= t;
    for (long t = 2; t <= k2; ++t) fct *= t;
    auto c1 = w_pow_coeffs(v1, v1c, k1 - 1);
    auto c2 = w_pow_coeffs(v2, v2c, k2 - 1);
    FieldElement conv(Rat(0));
    for (long j = 0; j <= (long)k; ++j)
      conv = fe_add(conv, fe_mul(F, c1[j], c2[(long)k - j]));
    acc = fe_add(acc, fe_mul(F, FieldElement(b / fct), conv));
  }
  Rat kfac(1);
  for (unsigned t = 2; t <= k; ++t) kfac *= t;
  return kfac * kfac / 2 * fe_trace(F, acc);
}

Rat partial_zeta_neg_int(const RayClassGroup& G, long c, unsigned k, const ShintaniDomain& D,
                         const Ideal& a_c) {
  const Field& F = G.field();
  Ideal af = ideal_mul(F, a_c, G.modulus());
  Rat naf(ideal_norm(F, af));
  Rat total(0);
  for (int j = 0; j < (int)D.cones.size(); ++j) {
    RSet R = enumerate_rset(G, c, D, j, a_c);
    for (auto& x : R.xs) total += cone_zeta_neg_int(F, D.cones[j], x, k);
  }
  return qpow(naf, (long)k) * total;
}

Rat partial_zeta_neg_int(const RayClassGroup& G, long c, unsigned k) {
  ShintaniDomain D = shintani_domain(G.field());
  return partial_zeta_neg_int(G, c, k, D, choose_ac(G, c));
}

}  // namespace shintani
