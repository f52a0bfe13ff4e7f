#include "shintani/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace shintani {

Field Field::Q() { return Field{}; }

Field Field::real_quadratic(const Int& D) {
  if (D <= 1) throw std::invalid_argument("real_quadratic: need D > 1");
  for (auto& [q, e] : factor(D))
    if (e > 1) throw std::invalid_argument("real_quadratic: D must be squarefree");
  Field F;
  F.D = D;
  F.degree = 2;
  if ((D - 1) % 4 == 0) {
    F.disc = D;
    F.omega_half = true;
    F.tr_w = 1;
    F.nm_w = (D - 1) / 4;  // w^2 = w + (D-1)/4
  } else {
    F.disc = 4 * D;
    F.omega_half = false;
    F.tr_w = 0;
    F.nm_w = D;  // w^2 = D
  }
  return F;
}

FieldElement fe_add(const FieldElement& x, const FieldElement& y) {
  return {x.a + y.a, x.b + y.b};
}
FieldElement fe_sub(const FieldElement& x, const FieldElement& y) {
  return {x.a - y.a, x.b - y.b};
}
FieldElement fe_neg(const FieldElement& x) { return {-x.a, -x.b}; }

FieldElement fe_mul(const Field& F, const FieldElement& x, const FieldElement& y) {
  // (a1 + b1 w)(a2 + b2 w) = a1a2 + n*b1b2 + (a1b2 + a2b1 + t*b1b2) w
  Rat bb = x.b * y.b;
  return {x.a * y.a + Rat(F.nm_w) * bb, x.a * y.b + x.b * y.a + Rat(Int(F.tr_w)) * bb};
}

FieldElement fe_conj(const Field& F, const FieldElement& x) {
  // conj(w) = t - w
  return {x.a + Rat(Int(F.tr_w)) * x.b, -x.b};
}

Rat fe_trace(const Field& F, const FieldElement& x) {
  if (F.is_Q()) return x.a;
  return 2 * x.a + Rat(Int(F.tr_w)) * x.b;
}

Rat fe_norm(const Field& F, const FieldElement& x) {
  if (F.is_Q()) return x.a;
  FieldElement n = fe_mul(F, x, fe_conj(F, x));
  return n.a;  // b component vanishes
}

FieldElement fe_div(const Field& F, const FieldElement& x, const FieldElement& y) {
  if (y.is_zero()) throw std::domain_error("fe_div: by zero");
  if (F.is_Q() || y.is_rational()) return {x.a / y.a, x.b / y.a};
  FieldElement c = fe_conj(F, y);
  Rat n = fe_norm(F, y);
  FieldElement xc = fe_mul(F, x, c);
  return {xc.a / n, xc.b / n};
}

FieldElement fe_pow(const Field& F, const FieldElement& x, long e) {
  FieldElement r(Rat(1));
  if (e == 0) return r;
  bool neg = e < 0;
  unsigned long k = neg ? -(unsigned long)e : (unsigned long)e;
  FieldElement b = x;
  while (k) {
    if (k & 1) r = fe_mul(F, r, b);
    b = fe_mul(F, b, b);
    k >>= 1;
  }
  return neg ? fe_div(F, FieldElement(Rat(1)), r) : r;
}

std::pair<Rat, Rat> fe_sqrt_coords(const Field& F, const FieldElement& x) {
  if (F.is_Q()) return {x.a, Rat(0)};
  if (F.omega_half) return {x.a + x.b / 2, x.b / 2};
  return {x.a, x.b};
}

int fe_sign(const Field& F, const FieldElement& x, bool conj_embedding) {
  if (x.is_zero()) return 0;
  auto [u, v] = fe_sqrt_coords(F, x);
  if (conj_embedding) v = -v;
  // sign of u + v sqrt(D)
  if (v == 0) return sgn(u);
  if (u == 0) return sgn(v);
  if (sgn(u) == sgn(v)) return sgn(u);
  Rat u2 = u * u, v2d = v * v * Rat(F.D);
  if (u2 == v2d) return 0;  // cannot happen, D is not a square
  return (u2 > v2d) ? sgn(u) : sgn(v);
}

bool fe_totally_positive(const Field& F, const FieldElement& x) {
  if (F.is_Q()) return x.a > 0;
  return fe_sign(F, x, false) > 0 && fe_sign(F, x, true) > 0;
}

bool fe_is_integral(const FieldElement& x) {
  return x.a.get_den() == 1 && x.b.get_den() == 1;
}

std::string fe_str(const Field& F, const FieldElement& x) {
  std::ostringstream os;
  os << x.a.get_str();
  if (!F.is_Q() && x.b != 0) os << " + " << x.b.get_str() << "*w";
  return os.str();
}

// ------------------------------------------------------------------ ideals

bool Ideal::operator<(const Ideal& o) const {
  if (A != o.A) return A < o.A;
  if (C != o.C) return C < o.C;
  return B < o.B;
}

Ideal ideal_one(const Field& F) {
  (void)F;
  return Ideal{1, 0, 1};
}

namespace {
// HNF of the lattice spanned by integer-coordinate vectors (x, y) ~ x + y*w
Ideal hnf_from_vectors(std::vector<std::pair<Int, Int>> vs) {
  Int A = 0, B = 0, C = 0;
  for (auto& [x, y] : vs) {
    if (x == 0 && y == 0) continue;
    if (y == 0) {
      A = gcd(A, x);
      continue;
    }
    if (C == 0) {
      C = abs(y);
      B = (y > 0) ? x : -x;
      continue;
    }
    Int g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), C.get_mpz_t(), y.get_mpz_t());
    Int B2 = u * B + v * x;
    Int elim = B * (y / g) - x * (C / g);  // the combination with zero w-part
    A = gcd(A, elim);
    B = B2;
    C = g;
  }
  if (C == 0 || A == 0) throw std::invalid_argument("hnf: lattice is not full rank");
  Ideal I;
  I.A = abs(A);
  I.C = C;
  I.B = B % I.A;
  if (I.B < 0) I.B += I.A;
  return I;
}
}  // namespace

Ideal ideal_from_gens(const Field& F, const std::vector<FieldElement>& gens) {
  if (F.is_Q()) {
    Int g = 0;
    for (auto& x : gens) {
      if (!fe_is_integral(x)) throw std::invalid_argument("ideal_from_gens: not integral");
      g = gcd(g, Int(x.a.get_num()));
    }
    if (g == 0) throw std::invalid_argument("ideal_from_gens: zero ideal");
    return Ideal{abs(g), 0, abs(g)};
  }
  std::vector<std::pair<Int, Int>> vs;
  for (auto& x : gens) {
    if (!fe_is_integral(x)) throw std::invalid_argument("ideal_from_gens: not integral");
    FieldElement xw = fe_mul(F, x, FieldElement(Rat(0), Rat(1)));
    vs.push_back({Int(x.a.get_num()), Int(x.b.get_num())});
    vs.push_back({Int(xw.a.get_num()), Int(xw.b.get_num())});
  }
  return hnf_from_vectors(std::move(vs));
}

Ideal ideal_principal(const Field& F, const FieldElement& x) {
  return ideal_from_gens(F, {x});
}

Ideal ideal_of_int(const Field& F, const Int& n) {
  return ideal_principal(F, FieldElement(Rat(abs(n))));
}

Ideal ideal_mul(const Field& F, const Ideal& I, const Ideal& J) {
  if (F.is_Q()) return Ideal{I.A * J.A, 0, I.A * J.A};
  FieldElement b1(Rat(I.B), Rat(I.C)), b2(Rat(J.B), Rat(J.C));
  FieldElement b1b2 = fe_mul(F, b1, b2);
  std::vector<std::pair<Int, Int>> vs = {{I.A * J.A, 0},
                                         {I.A * J.B, I.A * J.C},
                                         {J.A * I.B, J.A * I.C},
                                         {Int(b1b2.a.get_num()), Int(b1b2.b.get_num())}};
  std::vector<std::pair<Int, Int>> all = vs;
  for (auto& [x, y] : vs) {
    FieldElement z = fe_mul(F, FieldElement(Rat(x), Rat(y)), FieldElement(Rat(0), Rat(1)));
    all.push_back({Int(z.a.get_num()), Int(z.b.get_num())});
  }
  return hnf_from_vectors(std::move(all));
}

Ideal ideal_pow(const Field& F, const Ideal& I, unsigned e) {
  Ideal r = ideal_one(F);
  for (unsigned i = 0; i < e; ++i) r = ideal_mul(F, r, I);
  return r;
}

Int ideal_norm(const Field& F, const Ideal& I) { return F.is_Q() ? I.A : I.A * I.C; }

Ideal ideal_sum(const Field& F, const Ideal& I, const Ideal& J) {
  if (F.is_Q()) {
    Int g = gcd(I.A, J.A);
    return Ideal{g, 0, g};
  }
  std::vector<std::pair<Int, Int>> vs = {{I.A, 0}, {I.B, I.C}, {J.A, 0}, {J.B, J.C}};
  return hnf_from_vectors(std::move(vs));
}

Ideal ideal_conj(const Field& F, const Ideal& I) {
  if (F.is_Q()) return I;
  std::vector<std::pair<Int, Int>> vs = {{I.A, 0}, {I.B + I.C * F.tr_w, -I.C}};
  std::vector<std::pair<Int, Int>> all = vs;
  for (auto& [x, y] : vs) {
    FieldElement z = fe_mul(F, FieldElement(Rat(x), Rat(y)), FieldElement(Rat(0), Rat(1)));
    all.push_back({Int(z.a.get_num()), Int(z.b.get_num())});
  }
  return hnf_from_vectors(std::move(all));
}

bool ideal_contains(const Field& F, const Ideal& I, const FieldElement& x) {
  if (!fe_is_integral(x)) return false;
  if (F.is_Q()) return Int(x.a.get_num()) % I.A == 0;
  Int xa = x.a.get_num(), xb = x.b.get_num();
  if (xb % I.C != 0) return false;
  Int k = xb / I.C;
  return (xa - k * I.B) % I.A == 0;
}

bool ideal_coprime(const Field& F, const Ideal& I, const Ideal& J) {
  return ideal_sum(F, I, J) == ideal_one(F);
}

bool ideal_divides(const Field& F, const Ideal& I, const Ideal& J) {
  if (F.is_Q()) return J.A % I.A == 0;
  return ideal_contains(F, I, FieldElement(Rat(J.A), Rat(0))) &&
         ideal_contains(F, I, FieldElement(Rat(J.B), Rat(J.C)));
}

Ideal ideal_exact_divide(const Field& F, const Ideal& J, const Ideal& I) {
  if (!ideal_divides(F, I, J)) throw std::invalid_argument("ideal_exact_divide: not divisible");
  if (F.is_Q()) {
    Int q = J.A / I.A;
    return Ideal{q, 0, q};
  }
  Ideal JC = ideal_mul(F, J, ideal_conj(F, I));
  Int n = ideal_norm(F, I);
  if (JC.A % n != 0 || JC.B % n != 0 || JC.C % n != 0)
    throw std::logic_error("ideal_exact_divide: non-integral quotient");
  return Ideal{JC.A / n, JC.B / n, JC.C / n};
}

std::string ideal_str(const Field& F, const Ideal& I) {
  std::ostringstream os;
  if (F.is_Q())
    os << "(" << I.A.get_str() << ")";
  else
    os << "[" << I.A.get_str() << ", " << I.B.get_str() << " + " << I.C.get_str() << "*w]";
  return os.str();
}

FracIdeal frac(const Ideal& I) { return FracIdeal{I, 1}; }

namespace {
void frac_normalize(FracIdeal& X) {
  Int g = gcd(gcd(X.num.A, X.num.B), gcd(X.num.C, X.den));
  X.num.A /= g;
  X.num.B /= g;
  X.num.C /= g;
  X.den /= g;
}
}  // namespace

FracIdeal frac_inv(const Field& F, const Ideal& I) {
  FracIdeal X;
  if (F.is_Q()) {
    X.num = ideal_one(F);
    X.den = I.A;
    return X;
  }
  X.num = ideal_conj(F, I);
  X.den = ideal_norm(F, I);
  frac_normalize(X);
  return X;
}

FracIdeal frac_mul(const Field& F, const FracIdeal& X, const FracIdeal& Y) {
  FracIdeal R;
  R.num = ideal_mul(F, X.num, Y.num);
  R.den = X.den * Y.den;
  frac_normalize(R);
  return R;
}

bool frac_contains(const Field& F, const FracIdeal& X, const FieldElement& x) {
  FieldElement y{x.a * Rat(X.den), x.b * Rat(X.den)};
  if (y.a.get_den() != 1 || y.b.get_den() != 1) return false;
  return ideal_contains(F, X.num, y);
}

std::pair<FieldElement, FieldElement> frac_basis(const Field& F, const FracIdeal& X) {
  Rat d(X.den);
  if (F.is_Q()) return {FieldElement(Rat(X.num.A) / d), FieldElement(Rat(X.num.A) / d)};
  return {FieldElement(Rat(X.num.A) / d, Rat(0)),
          FieldElement(Rat(X.num.B) / d, Rat(X.num.C) / d)};
}

std::vector<PrimeAbove> primes_above(const Field& F, const Int& q) {
  std::vector<PrimeAbove> out;
  if (!is_prime(q)) throw std::invalid_argument("primes_above: q not prime");
  if (F.is_Q()) {
    out.push_back({ideal_of_int(F, q), 1, 1});
    return out;
  }
  if (q == 2) {
    std::vector<Int> roots;
    for (Int r = 0; r < 2; ++r)
      if ((r * r - F.tr_w * r - F.nm_w) % 2 == 0) roots.push_back(r);
    if (roots.empty()) {
      out.push_back({ideal_of_int(F, q), 2, 1});
    } else if (roots.size() == 2) {
      for (auto& r : roots)
        out.push_back(
            {ideal_from_gens(F, {FieldElement(Rat(q)), FieldElement(-Rat(r), Rat(1))}), 1, 1});
    } else {
      out.push_back(
          {ideal_from_gens(F, {FieldElement(Rat(q)), FieldElement(-Rat(roots[0]), Rat(1))}), 1,
           2});
    }
    return out;
  }
  Int delta = (Int(F.tr_w) * F.tr_w + 4 * F.nm_w) % q;
  if (delta < 0) delta += q;
  Int r;
  Int inv2 = invmod(2, q);
  if (delta == 0) {
    Int rt = Int(F.tr_w) * inv2 % q;
    if (rt < 0) rt += q;
    out.push_back(
        {ideal_from_gens(F, {FieldElement(Rat(q)), FieldElement(-Rat(rt), Rat(1))}), 1, 2});
  } else if (sqrt_mod_p(delta, q, r)) {
    Int r1 = (Int(F.tr_w) + r) * inv2 % q, r2 = (Int(F.tr_w) - r) * inv2 % q;
    if (r1 < 0) r1 += q;
    if (r2 < 0) r2 += q;
    for (auto& rt : {r1, r2})
      out.push_back(
          {ideal_from_gens(F, {FieldElement(Rat(q)), FieldElement(-Rat(rt), Rat(1))}), 1, 1});
  } else {
    out.push_back({ideal_of_int(F, q), 2, 1});
  }
  return out;
}

std::vector<std::pair<Ideal, int>> factor_ideal(const Field& F, const Ideal& I) {
  std::vector<std::pair<Ideal, int>> out;
  Int n = ideal_norm(F, I);
  for (auto& [q, e] : factor(n)) {
    (void)e;
    for (auto& P : primes_above(F, q)) {
      int k = 0;
      Ideal cur = I;
      while (ideal_divides(F, P.P, cur)) {
        cur = ideal_exact_divide(F, cur, P.P);
        ++k;
      }
      if (k > 0) out.push_back({P.P, k});
    }
  }
  return out;
}

// -------------------------------------------------------------------- units

FieldElement fundamental_unit(const Field& F) {
  if (F.is_Q()) throw std::invalid_argument("fundamental_unit: degree 1");
  Int Delta = F.disc;
  Int s = sqrt(Delta);  // floor
  Int P = F.tr_w, Q = 2;
  Int h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (int i = 0; i < 200000; ++i) {
    Int a;
    if (Q > 0)
      mpz_fdiv_q(a.get_mpz_t(), Int(P + s).get_mpz_t(), Q.get_mpz_t());
    else
      mpz_fdiv_q(a.get_mpz_t(), Int(P + s + 1).get_mpz_t(), Q.get_mpz_t());
    Int h = a * h1 + h2, k = a * k1 + k2;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    P = a * Q - P;
    Q = (Delta - P * P) / Q;
    // candidate unit h - k*conj(w) = (h - k t) + k w
    FieldElement u{Rat(h - k * F.tr_w), Rat(k)};
    Rat n = fe_norm(F, u);
    if ((n == 1 || n == -1) && k > 0) {
      if (fe_sign(F, u, false) < 0) u = fe_neg(u);
      return u;
    }
  }
  throw std::runtime_error("fundamental_unit: search bound exceeded");
}

FieldElement fundamental_totally_positive_unit(const Field& F) {
  if (F.is_Q())
    throw std::invalid_argument("degree 1 has no nontrivial totally positive units");
  FieldElement u = fundamental_unit(F);
  if (fe_norm(F, u) == -1) return fe_mul(F, u, u);
  return fe_totally_positive(F, u) ? u : fe_neg(u);
}

namespace {
std::optional<FieldElement> generator_in_box(const Field& F, const FracIdeal& J, const Rat& NJ,
                                             double X, const Int& den2,
                                             bool totally_positive) {
  double sqD = std::sqrt(F.D.get_d());
  long yb = (long)(X * den2.get_d() / sqD) + 2;
  long ub = (long)(X * den2.get_d()) + 2;
  for (long v = -yb; v <= yb; ++v) {
    for (long u = -ub; u <= ub; ++u) {
      if (u == 0 && v == 0) continue;
      Rat uu{Int(u)}, vv{Int(v)};
      Rat a, b;
      if (F.omega_half) {
        a = (uu - vv) / Rat(den2);
        b = (2 * vv) / Rat(den2);
      } else {
        a = uu / Rat(den2);
        b = vv / Rat(den2);
      }
      FieldElement x{a, b};
      if (!frac_contains(F, J, x)) continue;
      Rat n = fe_norm(F, x);
      if (n != NJ && n != -NJ) continue;
      if (totally_positive) {
        if (n < 0) continue;
        if (!fe_totally_positive(F, x)) x = fe_neg(x);
      }
      return x;
    }
  }
  return std::nullopt;
}
}  // namespace

std::optional<FieldElement> principal_generator(const Field& F, const FracIdeal& J,
                                                bool totally_positive) {
  if (F.is_Q()) return FieldElement(Rat(J.num.A) / Rat(J.den));
  FieldElement eps = fundamental_totally_positive_unit(F);
  Rat NJ = Rat(ideal_norm(F, J.num)) / Rat(J.den * J.den);
  auto [eu, ev] = fe_sqrt_coords(F, eps);
  double sqD = std::sqrt(F.D.get_d());
  double epsd = eu.get_d() + ev.get_d() * sqD;
  double Nd = std::abs(NJ.get_d());
  Int den2 = J.den * (F.omega_half ? 2 : 1);
  // any generator has a unit multiple with both embeddings in (0, X]
  for (int widen = 0; widen <= 2; ++widen) {
    double X = std::sqrt(Nd * std::pow(epsd, 1 + widen)) * 1.001 + 1;
    if (auto g = generator_in_box(F, J, NJ, X, den2, totally_positive)) return g;
  }
  return std::nullopt;
}

long class_number(const Field& F) {
  if (F.is_Q()) return 1;
  double mk = std::sqrt(F.disc.get_d()) / 2.0;
  std::vector<Ideal> reps;
  reps.push_back(ideal_one(F));
  for (Int q = 2; q.get_d() <= mk; mpz_nextprime(q.get_mpz_t(), q.get_mpz_t())) {
    for (auto& P : primes_above(F, q))
      if (P.f == 1) reps.push_back(P.P);
  }
  auto same_class = [&](const Ideal& I, const Ideal& J) {
    FracIdeal q = frac_mul(F, frac(I), frac_inv(F, J));
    return principal_generator(F, q, false).has_value();
  };
  std::vector<Ideal> classes;
  auto insert = [&](const Ideal& I) {
    for (auto& Jc : classes)
      if (same_class(I, Jc)) return false;
    classes.push_back(I);
    return true;
  };
  for (auto& I : reps) insert(I);
  bool grew = true;
  while (grew) {
    grew = false;
    size_t n = classes.size();
    for (size_t i = 0; i < n && !grew; ++i)
      for (size_t j = i; j < n && !grew; ++j)
        if (insert(ideal_mul(F, classes[i], classes[j]))) grew = true;
  }
  return (long)classes.size();
}

long narrow_class_number(const Field& F) {
  if (F.is_Q()) return 1;
  long h = class_number(F);
  FieldElement u = fundamental_unit(F);
  return fe_norm(F, u) == -1 ? h : 2 * h;
}

FieldElement element_one_mod_f_with_signs(const Field& F, const Ideal& f, int sign_id,
                                          int sign_conj) {
  if (F.is_Q()) {
    Int A = f.A;
    for (Int k = -64; k <= 64; ++k) {
      Rat z = Rat(1 + k * A);
      if (z != 0 && sgn(z) == sign_id) return FieldElement(z);
    }
    throw std::runtime_error("element_one_mod_f_with_signs: search failed");
  }
  for (long box = 4; box <= 4096; box *= 4) {
    for (long m = -box; m <= box; ++m) {
      for (long n = -box; n <= box; ++n) {
        FieldElement z{Rat(1 + Int(m) * f.A + Int(n) * f.B), Rat(Int(n) * f.C)};
        if (z.is_zero()) continue;
        if (fe_sign(F, z, false) == sign_id && fe_sign(F, z, true) == sign_conj) return z;
      }
    }
  }
  throw std::runtime_error("element_one_mod_f_with_signs: search bound exceeded");
}

// --------------------------------------------------------------- embeddings

Embedding real_embedding(const Field& F, bool conj) {
  (void)F;
  Embedding e;
  e.kind = conj ? Embedding::RealConj : Embedding::RealId;
  return e;
}

Embedding padic_embedding(const Field& F, long p, int lift_choice, long N) {
  if (p == 2) throw std::invalid_argument("padic_embedding: p = 2 excluded");
  Embedding e;
  e.kind = Embedding::Padic;
  e.p = p;
  if (F.is_Q()) {
    e.split = true;
    e.omega_image = PadicNumber::zero(p);
    return e;
  }
  Int pI(p);
  Int dmod = F.D % pI;
  if (dmod < 0) dmod += pI;
  Int r;
  if (dmod != 0 && sqrt_mod_p(dmod, pI, r)) {
    e.split = true;
    long target = N + 8;
    Int x = r;
    long have = 1;
    Int pn = pI;
    while (have < target) {
      long nxt = std::min(2 * have, target);
      pn = ipow(pI, (unsigned long)nxt);
      Int fx = (x * x - F.D) % pn;
      Int dfx = (2 * x) % pn;
      x = (x - fx * invmod(dfx, pn)) % pn;
      if (x < 0) x += pn;
      have = nxt;
    }
    if (lift_choice == 1) x = pn - x;
    PadicNumber sqrtD = PadicNumber::make(p, 0, x, target);
    e.omega_image = F.omega_half ? (PadicNumber::from_rat(p, Rat(1), target) + sqrtD) /
                                       PadicNumber::from_rat(p, Rat(2), target)
                                 : sqrtD;
    return e;
  }
  e.split = false;
  e.ext_d0 = F.D;
  if (F.omega_half) {
    e.ext_A = Rat(1, 2);
    e.ext_B = Rat(1, 2);
  } else {
    e.ext_A = Rat(0);
    e.ext_B = Rat(1);
  }
  return e;
}

Ball embed_real(const Field& F, const FieldElement& x, const Embedding& e, long prec) {
  if (F.is_Q() || x.is_rational()) return Ball(x.a, prec);
  auto [u, v] = fe_sqrt_coords(F, x);
  Ball sq = sqrt_rat(Rat(F.D), prec);
  if (e.kind == Embedding::RealConj) sq = -sq;
  return Ball(u, prec) + sq * v;
}

PadicExt embed_padic(const Field& F, const FieldElement& x, const Embedding& e, long N) {
  long p = e.p;
  if (F.is_Q() || x.is_rational())
    return PadicExt::from_padic(PadicNumber::from_rat(p, x.a, N));
  if (e.split) {
    PadicNumber img = PadicNumber::from_rat(p, x.a, N + 4) +
                      PadicNumber::from_rat(p, x.b, N + 4) * e.omega_image;
    return PadicExt::from_padic(img);
  }
  auto [u, v] = fe_sqrt_coords(F, x);
  return PadicExt(p, e.ext_d0, PadicNumber::from_rat(p, u, N),
                  PadicNumber::from_rat(p, v, N));
}

}  // namespace shintani
