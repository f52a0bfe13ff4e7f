#include "shintani/rational.hpp"

#include <mutex>
#include <stdexcept>

namespace shintani {

long valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  Int m = abs(n);
  long v = 0;
  Int q, r;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    m = q;
    ++v;
  }
  return v;
}

long valuation(const Rat& q, const Int& p) {
  return valuation(Int(q.get_num()), p) - valuation(Int(q.get_den()), p);
}

Int invmod(const Int& a, const Int& m) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw std::invalid_argument("invmod: not invertible");
  return r;
}

Int powmod(const Int& b, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool sqrt_mod_p(const Int& a, const Int& p, Int& root) {
  Int am = a % p;
  if (am < 0) am += p;
  if (am == 0) {
    root = 0;
    return true;
  }
  if (p == 2) {
    root = am;
    return true;
  }
  if (powmod(am, (p - 1) / 2, p) != 1) return false;
  // Tonelli-Shanks
  Int q = p - 1;
  long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  Int m = s, c = powmod(z, q, p), t = powmod(am, q, p), r = powmod(am, (q + 1) / 2, p);
  while (t != 1) {
    Int tt = t;
    long i = 0;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Int b = c;
    for (long j = 0; j < mpz_get_si(m.get_mpz_t()) - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  root = r;
  return true;
}

bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

std::vector<std::pair<Int, int>> factor(const Int& n) {
  std::vector<std::pair<Int, int>> out;
  Int m = abs(n);
  if (m <= 1) return out;
  for (Int d = 2; d * d <= m; d == 2 ? d = 3 : d += 2) {
    if (m % d == 0) {
      int e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      out.push_back({d, e});
    }
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long floor_long(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("floor_long overflow");
  return f.get_si();
}

namespace {
std::mutex g_bern_mutex;
std::vector<Rat> g_bern{Rat(1)};

// B_k = -1/(k+1) * sum_{j<k} C(k+1,j) B_j
void extend_bernoulli(unsigned k) {
  while (g_bern.size() <= k) {
    unsigned n = (unsigned)g_bern.size();
    Rat s = 0;
    Rat c = 1;  // C(n+1, j) built incrementally
    for (unsigned j = 0; j < n; ++j) {
      s += c * g_bern[j];
      c *= mkrat(Int(n + 1 - j), Int(j + 1));
    }
    g_bern.push_back(-s / Rat(Int(n + 1)));
  }
}
}  // namespace

Rat bernoulli_number(unsigned k) {
  std::lock_guard<std::mutex> lk(g_bern_mutex);
  extend_bernoulli(k);
  return g_bern[k];
}

Rat bernoulli_poly(unsigned k, const Rat& x) {
  if (k == 0) return Rat(1);
  Rat s = 0;
  Rat xp = 1;  // x^{k-j} built from the top
  // sum_{j=0..k} C(k,j) B_j x^{k-j}; iterate j downward so x powers ascend
  std::vector<Rat> bs(k + 1);
  {
    std::lock_guard<std::mutex> lk(g_bern_mutex);
    extend_bernoulli(k);
    for (unsigned j = 0; j <= k; ++j) bs[j] = g_bern[j];
  }
  for (long j = (long)k; j >= 0; --j) {
    s += binom(k, (unsigned)j) * bs[j] * xp;
    xp *= x;
  }
  return s;
}

Rat binom(unsigned n, unsigned k) {
  if (k > n) return Rat(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rat(r);
}

Rat binom_rat(const Rat& a, unsigned k) {
  Rat r = 1;
  for (unsigned j = 0; j < k; ++j) r *= (a - Rat(Int(j))) / Rat(Int(j + 1));
  return r;
}

std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace shintani
