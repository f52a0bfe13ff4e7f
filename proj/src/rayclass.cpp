#include "shintani/rayclass.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace shintani {

// ----------------------------------------------------------- cyclotomic

CycField CycField::make(long n) {
  CycField K;
  K.n = n;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<std::vector<Rat>> memo(n + 1);
  std::function<std::vector<Rat>(long)> phi = [&](long m) -> std::vector<Rat> {
    if (!memo[m].empty()) return memo[m];
    std::vector<Rat> num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      std::vector<Rat> pd = phi(d);
      std::vector<Rat> q(num.size() - pd.size() + 1, Rat(0));
      std::vector<Rat> r = num;
      for (long i = (long)q.size() - 1; i >= 0; --i) {
        Rat c = r[i + pd.size() - 1] / pd.back();
        q[i] = c;
        for (size_t j = 0; j < pd.size(); ++j) r[i + j] -= c * pd[j];
      }
      num = q;
    }
    return memo[m] = num;
  };
  K.phi = phi(n);
  return K;
}

CycElt cyc_zero(const CycField& K) { return CycElt{std::vector<Rat>(K.deg(), Rat(0))}; }

CycElt cyc_rat(const CycField& K, const Rat& r) {
  CycElt x = cyc_zero(K);
  x.c[0] = r;
  return x;
}

namespace {
std::vector<Rat> cyc_reduce(const CycField& K, std::vector<Rat> v) {
  long d = K.deg();
  for (long i = (long)v.size() - 1; i >= d; --i) {
    Rat c = v[i];
    if (c == 0) continue;
    for (long j = 0; j <= d; ++j) v[i - d + j] -= c * K.phi[j];
  }
  v.resize(d);
  return v;
}
}  // namespace

CycElt cyc_zeta_pow(const CycField& K, long k) {
  k %= K.n;
  if (k < 0) k += K.n;
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = 1;
  return CycElt{cyc_reduce(K, std::move(v))};
}

CycElt cyc_add(const CycField& K, const CycElt& x, const CycElt& y) {
  CycElt z = cyc_zero(K);
  for (long i = 0; i < K.deg(); ++i) z.c[i] = x.c[i] + y.c[i];
  return z;
}

CycElt cyc_sub(const CycField& K, const CycElt& x, const CycElt& y) {
  CycElt z = cyc_zero(K);
  for (long i = 0; i < K.deg(); ++i) z.c[i] = x.c[i] - y.c[i];
  return z;
}

CycElt cyc_mul(const CycField& K, const CycElt& x, const CycElt& y) {
  std::vector<Rat> v(2 * K.deg(), Rat(0));
  for (long i = 0; i < K.deg(); ++i) {
    if (x.c[i] == 0) continue;
    for (long j = 0; j < K.deg(); ++j) {
      if (y.c[j] == 0) continue;
      v[i + j] += x.c[i] * y.c[j];
    }
  }
  return CycElt{cyc_reduce(K, std::move(v))};
}

CycElt cyc_scale(const CycElt& x, const Rat& r) {
  CycElt z = x;
  for (auto& c : z.c) c *= r;
  return z;
}

bool cyc_is_zero(const CycElt& x) {
  for (auto& c : x.c)
    if (c != 0) return false;
  return true;
}

bool cyc_is_rational(const CycElt& x) {
  for (size_t i = 1; i < x.c.size(); ++i)
    if (x.c[i] != 0) return false;
  return true;
}

Rat cyc_rational_part(const CycElt& x) {
  if (!cyc_is_rational(x)) throw std::logic_error("cyc_rational_part: not rational");
  return x.c[0];
}

// ------------------------------------------------------- SNF (small, exact)

namespace {
struct Snf {
  std::vector<std::vector<Int>> U;  // unimodular row transform: U*M*V = D
  std::vector<Int> d;
};

Snf smith_normal_form(std::vector<std::vector<Int>> M) {
  long k = (long)M.size();
  long m = k ? (long)M[0].size() : 0;
  Snf out;
  out.U.assign(k, std::vector<Int>(k, 0));
  for (long i = 0; i < k; ++i) out.U[i][i] = 1;
  auto row_op = [&](long i, long j, const Int& c) {
    for (long t = 0; t < m; ++t) M[i][t] += c * M[j][t];
    for (long t = 0; t < k; ++t) out.U[i][t] += c * out.U[j][t];
  };
  auto row_swap = [&](long i, long j) {
    std::swap(M[i], M[j]);
    std::swap(out.U[i], out.U[j]);
  };
  auto row_neg = [&](long i) {
    for (long t = 0; t < m; ++t) M[i][t] = -M[i][t];
    for (long t = 0; t < k; ++t) out.U[i][t] = -out.U[i][t];
  };
  auto col_op = [&](long i, long j, const Int& c) {
    for (long t = 0; t < k; ++t) M[t][i] += c * M[t][j];
  };
  auto col_swap = [&](long i, long j) {
    for (long t = 0; t < k; ++t) std::swap(M[t][i], M[t][j]);
  };
  long r = 0;
  while (r < k && r < m) {
    long pi = -1, pj = -1;
    for (long i = r; i < k && pi < 0; ++i)
      for (long j = r; j < m; ++j)
        if (M[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    row_swap(r, pi);
    col_swap(r, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (long i = r + 1; i < k; ++i) {
        while (M[i][r] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), M[i][r].get_mpz_t(), M[r][r].get_mpz_t());
          row_op(i, r, -q);
          if (M[i][r] != 0) row_swap(i, r);
        }
      }
      for (long j = r + 1; j < m; ++j) {
        while (M[r][j] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), M[r][j].get_mpz_t(), M[r][r].get_mpz_t());
          col_op(j, r, -q);
          if (M[r][j] != 0) {
            col_swap(j, r);
            dirty = true;
          }
        }
      }
    }
    if (M[r][r] < 0) row_neg(r);
    ++r;
  }
  // enforce the divisibility chain
  bool changed = true;
  while (changed) {
    changed = false;
    for (long i = 0; i + 1 < r; ++i) {
      if (M[i + 1][i + 1] % M[i][i] != 0) {
        col_op(i, i + 1, 1);
        while (M[i + 1][i] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), M[i + 1][i].get_mpz_t(), M[i][i].get_mpz_t());
          row_op(i + 1, i, -q);
          if (M[i + 1][i] != 0) row_swap(i + 1, i);
        }
        while (M[i][i + 1] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), M[i][i + 1].get_mpz_t(), M[i][i].get_mpz_t());
          col_op(i + 1, i, -q);
          if (M[i][i + 1] != 0) col_swap(i + 1, i);
        }
        if (M[i][i] < 0) row_neg(i);
        if (M[i + 1][i + 1] < 0) row_neg(i + 1);
        changed = true;
      }
    }
  }
  for (long i = 0; i < r; ++i) out.d.push_back(M[i][i]);
  return out;
}

std::vector<std::vector<Int>> unimodular_inverse(const std::vector<std::vector<Int>>& U) {
  long k = (long)U.size();
  std::vector<std::vector<Rat>> a(k, std::vector<Rat>(2 * k, Rat(0)));
  for (long i = 0; i < k; ++i) {
    for (long j = 0; j < k; ++j) a[i][j] = Rat(U[i][j]);
    a[i][k + i] = 1;
  }
  for (long c = 0; c < k; ++c) {
    long p = -1;
    for (long i = c; i < k; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) throw std::logic_error("unimodular_inverse: singular");
    std::swap(a[c], a[p]);
    Rat pv = a[c][c];
    for (long j = 0; j < 2 * k; ++j) a[c][j] /= pv;
    for (long i = 0; i < k; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (long j = 0; j < 2 * k; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Int>> inv(k, std::vector<Int>(k));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) {
      if (a[i][k + j].get_den() != 1) throw std::logic_error("unimodular_inverse: not integral");
      inv[i][j] = a[i][k + j].get_num();
    }
  return inv;
}
}  // namespace

// ----------------------------------------------------------- RayClassGroup

long RayClassGroup::reduce_index(const FieldElement& z) const {
  Int A = f_.A;
  if (F_.is_Q()) {
    Int x = z.a.get_num() % A;
    if (x < 0) x += A;
    auto it = residue_index_.find({x, 0});
    return it->second;
  }
  Int B = f_.B, C = f_.C;
  Int a = z.a.get_num(), b = z.b.get_num();
  Int y = b % C;
  if (y < 0) y += C;
  Int k = (b - y) / C;
  Int x = (a - k * B) % A;
  if (x < 0) x += A;
  auto it = residue_index_.find({x, y});
  if (it == residue_index_.end()) throw std::logic_error("reduce_index: missing residue");
  return it->second;
}

long RayClassGroup::u_of(const FieldElement& z) const {
  long ridx = reduce_index(z);
  long u = unit_index_[ridx];
  if (u < 0) throw std::invalid_argument("u_of: element not coprime to modulus");
  long code = 0;
  if (F_.is_Q()) {
    if (z.a < 0) code |= 1;
  } else {
    if (fe_sign(F_, z, false) < 0) code |= 1;
    if (fe_sign(F_, z, true) < 0) code |= 2;
  }
  return u * nsigns_ + code;
}

long RayClassGroup::u_mul(long u1, long u2) const {
  long q1 = u1 / nsigns_, s1 = u1 % nsigns_;
  long q2 = u2 / nsigns_, s2 = u2 % nsigns_;
  FieldElement prod = fe_mul(F_, residues_[units_[q1]], residues_[units_[q2]]);
  long r = reduce_index(prod);
  return unit_index_[r] * nsigns_ + (s1 ^ s2);
}

RayClassGroup RayClassGroup::build(const Field& F, const Ideal& f) {
  RayClassGroup G;
  G.F_ = F;
  G.f_ = f;
  if (class_number(F) != 1)
    throw std::runtime_error("RayClassGroup: wide class number > 1 is not supported");
  G.h_plus_ = narrow_class_number(F);
  G.nsigns_ = F.is_Q() ? 2 : 4;

  Int A = f.A;
  Int C = F.is_Q() ? Int(1) : f.C;
  for (Int y = 0; y < C; ++y)
    for (Int x = 0; x < A; ++x) {
      G.residue_index_[{x, y}] = (long)G.residues_.size();
      G.residues_.push_back(FieldElement{Rat(x), Rat(y)});
    }
  auto fprimes = factor_ideal(F, f);
  G.unit_index_.assign(G.residues_.size(), -1);
  for (size_t i = 0; i < G.residues_.size(); ++i) {
    bool unit = true;
    for (auto& [P, e] : fprimes) {
      (void)e;
      if (ideal_contains(F, P, G.residues_[i])) {
        unit = false;
        break;
      }
    }
    if (unit) {
      G.unit_index_[i] = (long)G.units_.size();
      G.units_.push_back((long)i);
    }
  }

  long usize = (long)G.units_.size() * G.nsigns_;
  std::vector<long> vgens;
  vgens.push_back(G.u_of(FieldElement(Rat(-1))));
  if (!F.is_Q()) vgens.push_back(G.u_of(fundamental_unit(F)));
  std::vector<char> inV(usize, 0);
  long id_u = G.u_of(FieldElement(Rat(1)));
  inV[id_u] = 1;
  std::queue<long> bfs;
  bfs.push(id_u);
  while (!bfs.empty()) {
    long x = bfs.front();
    bfs.pop();
    for (long g : vgens) {
      long y = G.u_mul(x, g);
      if (!inV[y]) {
        inV[y] = 1;
        bfs.push(y);
      }
    }
  }
  G.coset_of_.assign(usize, -1);
  std::vector<long> vlist;
  for (long u = 0; u < usize; ++u)
    if (inV[u]) vlist.push_back(u);
  for (long u = 0; u < usize; ++u) {
    if (G.coset_of_[u] >= 0) continue;
    long c = (long)G.class_rep_u_.size();
    G.class_rep_u_.push_back(u);
    for (long v : vlist) G.coset_of_[G.u_mul(u, v)] = c;
  }
  G.nclasses_ = (long)G.class_rep_u_.size();
  G.id_class_ = G.coset_of_[id_u];

  G.mult_.assign(G.nclasses_, std::vector<long>(G.nclasses_));
  for (long i = 0; i < G.nclasses_; ++i)
    for (long j = 0; j < G.nclasses_; ++j)
      G.mult_[i][j] = G.coset_of_[G.u_mul(G.class_rep_u_[i], G.class_rep_u_[j])];
  G.inv_.assign(G.nclasses_, -1);
  for (long i = 0; i < G.nclasses_; ++i)
    for (long j = 0; j < G.nclasses_; ++j)
      if (G.mult_[i][j] == G.id_class_) G.inv_[i] = j;

  for (long c = 0; c < G.nclasses_; ++c) {
    long u = G.class_rep_u_[c];
    long ridx = G.units_[u / G.nsigns_];
    long code = u % G.nsigns_;
    FieldElement z0 = G.residues_[ridx];
    FieldElement found;
    bool ok = false;
    if (F.is_Q()) {
      if (z0.a == 0) z0.a = Rat(A);  // modulus (1): representative 1
      if (code & 1) {
        Int t = z0.a.get_num();
        found = FieldElement(Rat(t - A * (t / A + 1)));
      } else {
        found = z0;
      }
      ok = true;
    } else {
      for (long box = 2; box <= 2048 && !ok; box *= 4) {
        for (long m = -box; m <= box && !ok; ++m)
          for (long n = -box; n <= box && !ok; ++n) {
            FieldElement z{z0.a + Rat(Int(m) * f.A + Int(n) * f.B), z0.b + Rat(Int(n) * f.C)};
            if (z.is_zero()) continue;
            int want_id = (code & 1) ? -1 : 1, want_cj = (code & 2) ? -1 : 1;
            if (fe_sign(F, z, false) == want_id && fe_sign(F, z, true) == want_cj) {
              found = z;
              ok = true;
            }
          }
      }
    }
    if (!ok) throw std::runtime_error("RayClassGroup: representative search failed");
    G.class_rep_elt_.push_back(found);
    G.class_rep_ideal_.push_back(ideal_principal(F, found));
  }

  G.build_structure();
  return G;
}

long RayClassGroup::pow_class_raw(long c, long e) const {
  long r = id_class_;
  long b = c;
  unsigned long kk = e < 0 ? (unsigned long)(-e) : (unsigned long)e;
  while (kk) {
    if (kk & 1) r = mult_[r][b];
    b = mult_[b][b];
    kk >>= 1;
  }
  if (e < 0) r = inv_[r];
  return r;
}

long RayClassGroup::pow_class(long c, long e) const { return pow_class_raw(c, e); }

void RayClassGroup::build_structure() {
  long n = nclasses_;
  gens_.clear();
  std::vector<long> small_gens;
  std::vector<long> H = {id_class_};
  auto closure = [&](const std::vector<long>& gs) { return subgroup_of(gs); };
  while ((long)H.size() < n) {
    for (long c = 0; c < n; ++c) {
      if (!std::binary_search(H.begin(), H.end(), c)) {
        small_gens.push_back(c);
        break;
      }
    }
    H = closure(small_gens);
  }
  long k = (long)small_gens.size();
  if (k == 0) {
    orders_.clear();
    exponent_ = 1;
    dlog_.assign(n, {});
    return;
  }
  std::vector<std::vector<long>> vec(n);
  std::vector<char> seen(n, 0);
  seen[id_class_] = 1;
  vec[id_class_] = std::vector<long>(k, 0);
  std::queue<long> q;
  q.push(id_class_);
  while (!q.empty()) {
    long x = q.front();
    q.pop();
    for (long i = 0; i < k; ++i) {
      long y = mult_[x][small_gens[i]];
      if (!seen[y]) {
        seen[y] = 1;
        vec[y] = vec[x];
        vec[y][i] += 1;
        q.push(y);
      }
    }
  }
  std::set<std::vector<Int>> rels;
  for (long x = 0; x < n; ++x) {
    for (long i = 0; i < k; ++i) {
      long y = mult_[x][small_gens[i]];
      std::vector<Int> r(k);
      bool nonzero = false;
      for (long j = 0; j < k; ++j) {
        long rv = vec[x][j] + (j == i ? 1 : 0) - vec[y][j];
        r[j] = rv;
        if (rv != 0) nonzero = true;
      }
      if (nonzero) rels.insert(r);
    }
  }
  std::vector<std::vector<Int>> M(k, std::vector<Int>(std::max<size_t>(rels.size(), 1), 0));
  long col = 0;
  for (auto& r : rels) {
    for (long i = 0; i < k; ++i) M[i][col] = r[i];
    ++col;
  }
  Snf s = smith_normal_form(M);
  if ((long)s.d.size() != k)
    throw std::logic_error("RayClassGroup: relation lattice not full rank");
  auto Uinv = unimodular_inverse(s.U);
  std::vector<long> ghat(k, id_class_);
  for (long j = 0; j < k; ++j) {
    long g = id_class_;
    for (long i = 0; i < k; ++i) {
      long dj = s.d[j].get_si();
      Int em = ((Uinv[i][j] % dj) + dj) % dj;
      long gp = pow_class_raw(small_gens[i], em.get_si());
      g = mult_[g][gp];
    }
    ghat[j] = g;
  }
  orders_.clear();
  std::vector<long> keep;
  for (long j = 0; j < k; ++j)
    if (s.d[j] != 1) {
      keep.push_back(j);
      orders_.push_back(s.d[j].get_si());
    }
  exponent_ = orders_.empty() ? 1 : orders_.back();
  gens_.clear();
  for (long j : keep) gens_.push_back(ghat[j]);
  dlog_.assign(n, {});
  for (long c = 0; c < n; ++c) {
    std::vector<long> w;
    for (size_t jj = 0; jj < keep.size(); ++jj) {
      long j = keep[jj];
      Int acc = 0;
      for (long i = 0; i < k; ++i) acc += s.U[j][i] * vec[c][i];
      Int dj = s.d[j];
      Int wm = acc % dj;
      if (wm < 0) wm += dj;
      w.push_back(wm.get_si());
    }
    dlog_[c] = w;
  }
  for (long c = 0; c < n; ++c) {
    long g = id_class_;
    for (size_t j = 0; j < gens_.size(); ++j) g = mult_[g][pow_class_raw(gens_[j], dlog_[c][j])];
    if (g != c) throw std::logic_error("RayClassGroup: structure verification failed");
  }
}

std::vector<long> RayClassGroup::subgroup_of(const std::vector<long>& gens) const {
  std::vector<char> in(nclasses_, 0);
  in[id_class_] = 1;
  std::queue<long> q;
  q.push(id_class_);
  while (!q.empty()) {
    long x = q.front();
    q.pop();
    for (long g : gens) {
      long y = mult_[x][g];
      if (!in[y]) {
        in[y] = 1;
        q.push(y);
      }
    }
  }
  std::vector<long> out;
  for (long i = 0; i < nclasses_; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<long> RayClassGroup::subgroup(const std::vector<long>& gens) const {
  return subgroup_of(gens);
}

long RayClassGroup::class_of_element(const FieldElement& z) const {
  if (z.is_zero()) throw std::invalid_argument("class_of_element: zero");
  Int den = lcm(Int(z.a.get_den()), Int(z.b.get_den()));
  if (den == 1) return coset_of_[u_of(z)];
  FieldElement zi{z.a * Rat(den), z.b * Rat(den)};
  long czi = coset_of_[u_of(zi)];
  long cd = coset_of_[u_of(FieldElement(Rat(den)))];
  return mult_[czi][inv_[cd]];
}

bool RayClassGroup::ideal_coprime_to_f(const Ideal& J) const {
  return ideal_coprime(F_, J, f_);
}

long RayClassGroup::class_of_ideal(const Ideal& J) const {
  if (!ideal_coprime_to_f(J))
    throw std::invalid_argument("class_of_ideal: ideal not coprime to modulus");
  auto g = principal_generator(F_, frac(J), false);
  if (!g) throw std::runtime_error("class_of_ideal: generator search failed");
  return class_of_element(*g);
}

long RayClassGroup::s_iota(bool conj_place) const {
  if (F_.is_Q() && conj_place) throw std::invalid_argument("s_iota: Q has one real place");
  long u = u_of(FieldElement(Rat(1)));
  long base = (u / nsigns_) * nsigns_;
  long code = conj_place ? 2 : 1;
  return coset_of_[base + code];
}

std::vector<Character> RayClassGroup::characters() const {
  std::vector<Character> out;
  long k = (long)orders_.size();
  long n = exponent_;
  if (k == 0) {
    out.push_back(Character{{}, 1, 1});
    return out;
  }
  std::vector<long> t(k, 0);
  while (true) {
    Character chi;
    chi.t = t;
    chi.n = n;
    long ord = 1;
    for (long j = 0; j < k; ++j) {
      long dj = orders_[j];
      long g = std::gcd(t[j], dj);
      ord = std::lcm(ord, dj / g);
    }
    chi.order = ord;
    out.push_back(chi);
    long j = 0;
    while (j < k && ++t[j] >= orders_[j]) {
      t[j] = 0;
      ++j;
    }
    if (j >= k) break;
  }
  return out;
}

long RayClassGroup::char_value_exp(const Character& chi, long c) const {
  long n = chi.n;
  long acc = 0;
  const auto& w = dlog_[c];
  for (size_t j = 0; j < chi.t.size(); ++j) {
    long dj = orders_[j];
    acc = (acc + chi.t[j] % dj * (w[j] % dj) % n * (n / dj)) % n;
  }
  return ((acc % n) + n) % n;
}

Cplx RayClassGroup::char_value(const Character& chi, long c, long prec) const {
  long k = char_value_exp(chi, c);
  return cis_2pi(mkrat(Int(k), Int(chi.n)), prec);
}

CycElt RayClassGroup::char_value_exact(const CycField& K, const Character& chi, long c) const {
  long k = char_value_exp(chi, c);
  if (K.n % chi.n != 0) throw std::invalid_argument("char_value_exact: field too small");
  return cyc_zeta_pow(K, k * (K.n / chi.n));
}

// ------------------------------------------------------------ free helpers

long conjugation_class(const RayClassGroup& G, bool conj_place) {
  const Field& F = G.field();
  if (F.is_Q()) {
    FieldElement nu = element_one_mod_f_with_signs(F, G.modulus(), -1, 0);
    return G.class_of_element(nu);
  }
  FieldElement nu = conj_place ? element_one_mod_f_with_signs(F, G.modulus(), 1, -1)
                               : element_one_mod_f_with_signs(F, G.modulus(), -1, 1);
  return G.class_of_element(nu);
}

CmStructure cm_structure(const RayClassGroup& G) {
  CmStructure out;
  std::vector<long> ss;
  ss.push_back(G.s_iota(false));
  if (!G.field().is_Q()) ss.push_back(G.s_iota(true));
  out.s_subgroup = G.subgroup(ss);
  std::vector<long> pair_gens;
  for (long a : ss)
    for (long b : ss) pair_gens.push_back(G.mul(a, b));
  out.s_pair_subgroup = G.subgroup(pair_gens);
  out.has_cm = out.s_subgroup.size() > out.s_pair_subgroup.size();
  return out;
}

long project_class(const RayClassGroup& big, const RayClassGroup& small, long c_big) {
  if (!ideal_divides(small.field(), small.modulus(), big.modulus()))
    throw std::invalid_argument("project_class: moduli not nested");
  return small.class_of_ideal(big.ideal_rep(c_big));
}

std::vector<long> fiber_of_class(const RayClassGroup& big, const RayClassGroup& small,
                                 long c_small) {
  std::vector<long> out;
  for (long c = 0; c < big.size(); ++c)
    if (project_class(big, small, c) == c_small) out.push_back(c);
  return out;
}

std::vector<Ideal> ideals_up_to(const Field& F, long X) {
  std::vector<std::pair<Int, Ideal>> all;
  if (F.is_Q()) {
    for (long n = 1; n <= X; ++n) all.push_back({Int(n), Ideal{Int(n), 0, Int(n)}});
  } else {
    for (long c = 1; (long)c * c <= X; ++c) {
      for (long a = 1; (long)c * c * a <= X; ++a) {
        for (long b = 0; b < a; ++b) {
          FieldElement z{Rat(Int(b)), Rat(1)};
          Rat nb = fe_norm(F, z);
          Int nn = nb.get_num();
          if (nn % a != 0) continue;
          Ideal I{Int(c) * a, Int(c) * b, Int(c)};
          all.push_back({ideal_norm(F, I), I});
        }
      }
    }
  }
  std::sort(all.begin(), all.end(), [](auto& x, auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
  std::vector<Ideal> out;
  out.reserve(all.size());
  for (auto& [n, I] : all) out.push_back(I);
  return out;
}

Ideal choose_ac(const RayClassGroup& G, long c, const Ideal& multiple_of) {
  const Field& F = G.field();
  bool trivial = (G.h_plus() == 1);
  std::optional<RayClassGroup> C1;
  long target = 0;
  if (!trivial) {
    C1.emplace(RayClassGroup::build(F, ideal_one(F)));
    target = C1->class_of_ideal(G.ideal_rep(c));
  }
  for (long X = 8; X <= (1L << 22); X *= 4) {
    for (auto& a : ideals_up_to(F, X)) {
      if (!ideal_divides(F, multiple_of, a)) continue;
      if (!trivial) {
        Ideal af = ideal_mul(F, a, G.modulus());
        if (C1->class_of_ideal(af) != target) continue;
      }
      return a;
    }
  }
  throw std::runtime_error("choose_ac: search bound exceeded");
}

Ideal choose_ac(const RayClassGroup& G, long c) { return choose_ac(G, c, ideal_one(G.field())); }

FieldElement choose_pi_q(const Field& F, const Ideal& q, int unit_shift) {
  long hp = narrow_class_number(F);
  Ideal qh = ideal_pow(F, q, (unsigned)hp);
  auto g = principal_generator(F, frac(qh), true);
  if (!g) throw std::runtime_error("choose_pi_q: no totally positive generator");
  if (F.is_Q()) return *g;
  FieldElement eps = fundamental_totally_positive_unit(F);
  Rat N = fe_norm(F, *g);
  FieldElement x = *g;
  auto id_sq_cmp = [&](const FieldElement& y) {
    FieldElement y2 = fe_mul(F, y, y);
    return fe_sign(F, fe_sub(y2, FieldElement(N)), false);
  };
  int steps = 0;
  while (id_sq_cmp(x) < 0 && steps++ < 4096) x = fe_mul(F, x, eps);
  while (steps++ < 8192) {
    FieldElement xe = fe_div(F, x, eps);
    if (id_sq_cmp(xe) < 0) break;
    x = xe;
  }
  for (int i = 0; i < unit_shift; ++i) x = fe_mul(F, x, eps);
  for (int i = 0; i < -unit_shift; ++i) x = fe_div(F, x, eps);
  return x;
}

FieldElement choose_pi_q(const Field& F, const Ideal& q) { return choose_pi_q(F, q, 0); }

FieldElement pi_of_ideal(const Field& F, const Ideal& g, int unit_shift) {
  FieldElement out(Rat(1));
  for (auto& [P, e] : factor_ideal(F, g))
    out = fe_mul(F, out, fe_pow(F, choose_pi_q(F, P, unit_shift), e));
  return out;
}

FieldElement pi_of_ideal(const Field& F, const Ideal& g) { return pi_of_ideal(F, g, 0); }

long class_label_Q(const RayClassGroup& G, long c) {
  if (!G.field().is_Q()) throw std::invalid_argument("class_label_Q: F = Q only");
  long m = G.modulus().A.get_si();
  for (long r = 1; r <= m; ++r) {
    if (std::gcd(r, m) != 1) continue;
    if (G.class_of_element(FieldElement(Rat(Int(r)))) == c) return r;
  }
  throw std::logic_error("class_label_Q: no label found");
}

std::map<long, Rat> aggregation_coeffs(const RayClassGroup& Cd,
                                       const std::vector<long>& kerK,
                                       const std::vector<long>& HK, long sigma_class,
                                       const CycField& K,
                                       const std::vector<Character>& chars,
                                       const std::vector<CycElt>& Lvalues) {
  auto trivial_on = [&](const Character& chi, const std::vector<long>& S) {
    for (long s : S)
      if (Cd.char_value_exp(chi, s) != 0) return false;
    return true;
  };
  std::vector<long> Ghat;  // indices of characters of G = Cd/kerK
  for (size_t i = 0; i < chars.size(); ++i)
    if (trivial_on(chars[i], kerK)) Ghat.push_back((long)i);
  auto same_H_restriction = [&](long i, long j) {
    // psi_i and psi_j agree on H iff psi_i * psi_j^{-1} is trivial on HK
    for (long s : HK) {
      long a = Cd.char_value_exp(chars[i], s);
      long b = Cd.char_value_exp(chars[j], s);
      long n = chars[i].n;
      if (((a - b) % n + n) % n != 0) return false;
    }
    return true;
  };
  long sigma_inv = Cd.inv_class(sigma_class);
  std::map<long, Rat> out;
  for (long c = 0; c < Cd.size(); ++c) {
    CycElt acc = cyc_zero(K);
    for (long i : Ghat) {
      CycElt term = Cd.char_value_exact(K, chars[i], Cd.mul(sigma_inv, c));
      for (long j : Ghat) {
        if (j == i || !same_H_restriction(i, j)) continue;
        term = cyc_mul(K, term, Lvalues[j]);
      }
      acc = cyc_add(K, acc, term);
    }
    if (!cyc_is_rational(acc))
      throw std::logic_error("aggregation_coeffs: non-rational coefficient");
    out[c] = cyc_rational_part(acc);
  }
  return out;
}

}  // namespace shintani
