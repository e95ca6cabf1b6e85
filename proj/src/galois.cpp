#include "qbw/galois.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbw {

namespace {

using PolyP = std::vector<int>; // coefficients mod p, low degree first

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP poly_mul_mod(const PolyP& a, const PolyP& b, const PolyP& mod, long p) {
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
  }
  // reduce modulo the monic polynomial `mod`
  std::size_t deg = mod.size() - 1;
  for (std::size_t i = r.size(); i-- > deg;) {
    int c = r[i];
    if (!c) continue;
    std::size_t shift = i - deg;
    for (std::size_t j = 0; j < mod.size(); ++j)
      r[shift + j] = static_cast<int>(((r[shift + j] - 1LL * c * mod[j]) % p + p) % p);
  }
  if (r.size() > deg) r.resize(deg);
  trim(r);
  if (r.empty()) r.push_back(0);
  return r;
}

PolyP poly_pow_mod(PolyP base, long long e, const PolyP& mod, long p) {
  PolyP acc{1};
  while (e > 0) {
    if (e & 1) acc = poly_mul_mod(acc, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return acc;
}

PolyP poly_gcd(PolyP a, PolyP b, long p) {
  auto inv_mod = [&](long x) {
    long r = 1, base = ((x % p) + p) % p;
    long e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    long lead_inv = inv_mod(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      long c = a.back() * lead_inv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = static_cast<int>(((a[shift + j] - c * b[j]) % p + p) % p);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const PolyP& f, long p) {
  int e = static_cast<int>(f.size()) - 1;
  // x^{p^e} == x (mod f), and gcd(x^{p^{e/l}} - x, f) = 1 for prime l | e.
  // x^{p^i} computed by repeated p-th powering.
  PolyP x{0, 1};
  std::vector<PolyP> frob(e + 1);
  frob[0] = x;
  for (int i = 1; i <= e; ++i) frob[i] = poly_pow_mod(frob[i - 1], p, f, p);
  PolyP diff = frob[e];
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
  trim(diff);
  if (!diff.empty()) return false;
  for (int l = 2; l <= e; ++l) {
    if (e % l) continue;
    bool prime = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) prime = false;
    if (!prime) continue;
    PolyP g = frob[e / l];
    if (g.size() < 2) g.resize(2, 0);
    g[1] = static_cast<int>(((g[1] - 1) % p + p) % p);
    PolyP gc = poly_gcd(g, f, p);
    if (!(gc.size() == 1 && gc[0] != 0)) return false;
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> fs;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    fs.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

} // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(long q, long& p, int& e) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d) continue;
    long m = q;
    int cnt = 0;
    while (m % d == 0) { m /= d; ++cnt; }
    if (m != 1) return false;
    p = d;
    e = cnt;
    return true;
  }
  p = q;
  e = 1;
  return true;
}

FiniteField FiniteField::gf(long p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (e < 1 || e > 6) throw std::invalid_argument("extension degree out of range");
  long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > 1000000) throw std::invalid_argument("field size cap exceeded");
  }

  FiniteField F;
  F.p_ = p;
  F.e_ = e;
  F.q_ = q;

  // lexicographically least monic irreducible, low-order digits varying fastest
  if (e == 1) {
    F.modulus_ = {0, 1};
  } else {
    long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    bool found = false;
    for (long tail = 0; tail < count && !found; ++tail) {
      PolyP f(e + 1, 0);
      long t = tail;
      for (int i = 0; i < e; ++i) { f[i] = static_cast<int>(t % p); t /= p; }
      f[e] = 1;
      if (is_irreducible(f, p)) {
        F.modulus_ = f;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
  }

  auto decode = [&](long x) {
    PolyP f;
    while (x) { f.push_back(static_cast<int>(x % p)); x /= p; }
    if (f.empty()) f.push_back(0);
    return f;
  };
  auto encode = [&](const PolyP& f) {
    long x = 0;
    for (std::size_t i = f.size(); i-- > 0;) x = x * p + f[i];
    return x;
  };
  auto field_mul = [&](long a, long b) {
    if (e == 1) return a * b % p;
    return encode(poly_mul_mod(decode(a), decode(b), F.modulus_, p));
  };

  // least primitive element
  std::vector<long> ell = prime_factors(q - 1);
  auto power = [&](long g, long exp) {
    long r = 1, base = g;
    while (exp) {
      if (exp & 1) r = field_mul(r, base);
      base = field_mul(base, base);
      exp >>= 1;
    }
    return r;
  };
  long gen = 0;
  for (long g = 1; g < q; ++g) {
    if (g == 0) continue;
    bool primitive = true;
    for (long l : ell)
      if (power(g, (q - 1) / l) == 1) { primitive = false; break; }
    if (primitive) { gen = g; break; }
  }
  if (!gen) throw std::logic_error("no primitive element found");
  F.generator_ = gen;

  F.exp_table_.assign(q - 1, 0);
  F.log_table_.assign(q, -1);
  long cur = 1;
  for (long i = 0; i < q - 1; ++i) {
    F.exp_table_[i] = cur;
    if (F.log_table_[cur] != -1) throw std::logic_error("generator is not primitive");
    F.log_table_[cur] = i;
    cur = field_mul(cur, gen);
  }
  if (cur != 1) throw std::logic_error("generator order mismatch");
  return F;
}

long FiniteField::add(long a, long b) const {
  if (e_ == 1) return (a + b) % p_;
  long r = 0, mul = 1;
  for (int i = 0; i < e_; ++i) {
    long da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += ((da + db) % p_) * mul;
    mul *= p_;
  }
  return r;
}

long FiniteField::neg(long a) const {
  if (e_ == 1) return (p_ - a) % p_;
  long r = 0, mul = 1;
  for (int i = 0; i < e_; ++i) {
    long da = a % p_;
    a /= p_;
    r += ((p_ - da) % p_) * mul;
    mul *= p_;
  }
  return r;
}

long FiniteField::mul(long a, long b) const {
  if (a == 0 || b == 0) return 0;
  return exp_table_[(log_table_[a] + log_table_[b]) % (q_ - 1)];
}

long FiniteField::inv(long a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return exp_table_[(q_ - 1 - log_table_[a]) % (q_ - 1)];
}

long FiniteField::pow_generator(long exp) const {
  long m = exp % (q_ - 1);
  if (m < 0) m += q_ - 1;
  return exp_table_[m];
}

long FiniteField::dlog(long x) const {
  if (x == 0) throw std::domain_error("discrete log of zero");
  if (x < 0 || x >= q_) throw std::invalid_argument("element out of range");
  return log_table_[x];
}

} // namespace qbw
