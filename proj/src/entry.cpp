#include "qbw/entry.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qbw {

namespace {

using Poly = std::vector<Int>; // coefficients, low degree first

std::atomic<int> g_order_cap{360};

int checked_lcm(int a, int b) {
  long long l = std::lcm<long long>(a, b);
  if (l > g_order_cap.load())
    throw std::domain_error("cyclotomic order lcm " + std::to_string(l) +
                            " exceeds cap " + std::to_string(g_order_cap.load()));
  return static_cast<int>(l);
}

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Exact division by a monic divisor; remainder must vanish.
Poly poly_div_exact(Poly num, const Poly& den) {
  if (den.back() != 1) throw std::logic_error("divisor not monic");
  if (num.size() < den.size()) throw std::logic_error("bad cyclotomic division");
  Poly q(num.size() - den.size() + 1, Int(0));
  for (std::size_t i = num.size(); i-- >= den.size();) {
    Int c = num[i];
    if (c == 0) continue;
    std::size_t shift = i - (den.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("cyclotomic division not exact");
  return q;
}

// Remainder of p modulo the (monic, degree phi) cyclotomic polynomial.
void poly_reduce(Poly& p, const Poly& phi_poly) {
  std::size_t deg = phi_poly.size() - 1;
  if (p.size() <= deg) {
    p.resize(deg, Int(0));
    return;
  }
  for (std::size_t i = p.size(); i-- > deg;) {
    Int c = p[i];
    if (c == 0) continue;
    std::size_t shift = i - deg;
    for (std::size_t j = 0; j < phi_poly.size(); ++j) p[shift + j] -= c * phi_poly[j];
  }
  p.resize(deg, Int(0));
}

} // namespace

int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Int>& cyclotomic_polynomial(int n) {
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom up so the
  // recursion never re-enters the lock.
  std::vector<int> pending{n};
  for (std::size_t s = 0; s < pending.size(); ++s)
    for (int d = 1; d < pending[s]; ++d)
      if (pending[s] % d == 0 && !cache.count(d)) pending.push_back(d);
  std::sort(pending.begin(), pending.end());
  for (int m : pending) {
    if (cache.count(m)) continue;
    Poly num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d)
      if (m % d == 0) num = poly_div_exact(std::move(num), cache.at(d));
    trim(num);
    cache.emplace(m, std::move(num));
  }
  return cache.at(n);
}

int cyclotomic_order_cap() { return g_order_cap.load(); }

void set_cyclotomic_order_cap(int cap) {
  if (cap < 1) throw std::invalid_argument("order cap must be positive");
  g_order_cap.store(cap);
}

EntryKind EntryKind::cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (n == 1) return integer();
  return {Ring::Cyclotomic, n};
}

EntryKind EntryKind::quaternionic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  return {Ring::Quaternionic, n};
}

EntryKind join(EntryKind a, EntryKind b) {
  Ring ring = std::max(a.ring, b.ring);
  int order = checked_lcm(a.order, b.order);
  if (ring == Ring::Integer) return EntryKind::integer();
  if (ring == Ring::Cyclotomic) return EntryKind::cyclotomic(order);
  return EntryKind::quaternionic(order);
}

void Entry::normalize() {
  if (quat_) {
    bool bzero = true;
    for (const Int& c : b_)
      if (c != 0) { bzero = false; break; }
    if (bzero) {
      quat_ = false;
      b_.clear();
    }
  }
  if (order_ > 1) {
    bool constant = true;
    for (std::size_t i = 1; i < a_.size(); ++i)
      if (a_[i] != 0) { constant = false; break; }
    if (quat_)
      for (std::size_t i = 1; i < b_.size(); ++i)
        if (b_[i] != 0) { constant = false; break; }
    if (constant) {
      order_ = 1;
      a_.resize(1);
      if (quat_) b_.resize(1);
    }
  }
}

Entry Entry::cyc_root(int n, int j) {
  if (n < 1) throw std::invalid_argument("root order must be positive");
  if (j < 0 || j >= n) throw std::invalid_argument("root exponent out of range");
  Entry e;
  e.order_ = n;
  Poly p(j + 1, Int(0));
  p[j] = 1;
  poly_reduce(p, cyclotomic_polynomial(n));
  e.a_ = std::move(p);
  e.normalize();
  return e;
}

Entry Entry::quaternion_unit() {
  Entry e;
  e.quat_ = true;
  e.a_ = {Int(0)};
  e.b_ = {Int(1)};
  return e;
}

Entry Entry::quaternion(const Entry& a, const Entry& b) {
  if (a.quat_ || b.quat_)
    throw std::invalid_argument("quaternion parts must be cyclotomic");
  int n = checked_lcm(a.order_, b.order_);
  Entry ea = a.embedded(n), eb = b.embedded(n);
  Entry e;
  e.order_ = n;
  e.quat_ = true;
  e.a_ = std::move(ea.a_);
  e.b_ = std::move(eb.a_);
  e.a_.resize(euler_phi(n), Int(0));
  e.b_.resize(euler_phi(n), Int(0));
  e.normalize();
  return e;
}

EntryKind Entry::kind() const {
  if (quat_) return EntryKind::quaternionic(order_);
  if (order_ == 1) return EntryKind::integer();
  return EntryKind::cyclotomic(order_);
}

bool Entry::is_zero() const {
  for (const Int& c : a_)
    if (c != 0) return false;
  for (const Int& c : b_)
    if (c != 0) return false;
  return true;
}

const Int& Entry::integer_value() const {
  if (!is_integer()) throw std::logic_error("entry is not a rational integer");
  return a_[0];
}

std::vector<Int> Entry::part_b() const {
  if (quat_) return b_;
  return std::vector<Int>(a_.size(), Int(0));
}

Entry Entry::embedded(int n) const {
  if (n == order_) return *this;
  if (n % order_ != 0)
    throw std::invalid_argument("embedding target must be a multiple of the order");
  int stride = n / order_;
  const Poly& phi_poly = cyclotomic_polynomial(n);
  auto lift = [&](const Poly& src) {
    Poly buf(static_cast<std::size_t>(n), Int(0));
    for (std::size_t i = 0; i < src.size(); ++i)
      buf[(i * stride) % n] += src[i];
    poly_reduce(buf, phi_poly);
    return buf;
  };
  Entry e;
  e.order_ = n;
  e.quat_ = quat_;
  e.a_ = lift(a_);
  if (quat_) e.b_ = lift(b_);
  return e;
}

Entry Entry::operator-() const {
  Entry e = *this;
  for (Int& c : e.a_) c = -c;
  for (Int& c : e.b_) c = -c;
  return e;
}

Entry& Entry::operator+=(const Entry& rhs) {
  int n = checked_lcm(order_, rhs.order_);
  Entry l = embedded(n), r = rhs.embedded(n);
  std::size_t len = euler_phi(n);
  l.a_.resize(len, Int(0));
  r.a_.resize(len, Int(0));
  for (std::size_t i = 0; i < len; ++i) l.a_[i] += r.a_[i];
  if (l.quat_ || r.quat_) {
    Poly lb = l.quat_ ? l.b_ : Poly(len, Int(0));
    Poly rb = r.quat_ ? r.b_ : Poly(len, Int(0));
    lb.resize(len, Int(0));
    rb.resize(len, Int(0));
    for (std::size_t i = 0; i < len; ++i) lb[i] += rb[i];
    l.quat_ = true;
    l.b_ = std::move(lb);
  }
  l.normalize();
  *this = std::move(l);
  return *this;
}

Entry& Entry::operator-=(const Entry& rhs) { return *this += -rhs; }

Entry& Entry::operator*=(const Entry& rhs) {
  int n = checked_lcm(order_, rhs.order_);
  Entry l = embedded(n), r = rhs.embedded(n);
  const Poly& phi_poly = cyclotomic_polynomial(n);
  auto mul = [&](const Poly& x, const Poly& y) {
    Poly p = poly_mul(x, y);
    poly_reduce(p, phi_poly);
    return p;
  };
  auto conj_poly = [&](const Poly& x) {
    Poly buf(static_cast<std::size_t>(n), Int(0));
    for (std::size_t i = 0; i < x.size(); ++i)
      buf[(i * (n - 1)) % n] += x[i];
    poly_reduce(buf, phi_poly);
    return buf;
  };
  std::size_t len = euler_phi(n);
  Poly la = l.a_, ra = r.a_;
  la.resize(len, Int(0));
  ra.resize(len, Int(0));
  Entry out;
  out.order_ = n;
  if (!l.quat_ && !r.quat_) {
    out.a_ = mul(la, ra);
  } else {
    // (a + k b)(c + k d) = (a c - conj(b) d) + k (conj(a) d + b c)
    Poly lb = l.quat_ ? l.b_ : Poly(len, Int(0));
    Poly rb = r.quat_ ? r.b_ : Poly(len, Int(0));
    lb.resize(len, Int(0));
    rb.resize(len, Int(0));
    Poly ac = mul(la, ra), bbar_d = mul(conj_poly(lb), rb);
    Poly abar_d = mul(conj_poly(la), rb), bc = mul(lb, ra);
    out.quat_ = true;
    out.a_.resize(len, Int(0));
    out.b_.resize(len, Int(0));
    for (std::size_t i = 0; i < len; ++i) {
      out.a_[i] = ac[i] - bbar_d[i];
      out.b_[i] = abar_d[i] + bc[i];
    }
  }
  out.normalize();
  *this = std::move(out);
  return *this;
}

bool Entry::operator==(const Entry& rhs) const {
  if (order_ == rhs.order_ && quat_ == rhs.quat_)
    return a_ == rhs.a_ && b_ == rhs.b_;
  int n = std::lcm(order_, rhs.order_);
  Entry l = embedded(n), r = rhs.embedded(n);
  l.normalize();
  r.normalize();
  return l.order_ == r.order_ && l.quat_ == r.quat_ && l.a_ == r.a_ && l.b_ == r.b_;
}

Entry entry_conj(const Entry& x) {
  int n = x.order_;
  const Poly& phi_poly = cyclotomic_polynomial(n);
  auto conj_poly = [&](const Poly& p) {
    Poly buf(static_cast<std::size_t>(n), Int(0));
    for (std::size_t i = 0; i < p.size(); ++i)
      buf[(i * (n - 1)) % n] += p[i];
    poly_reduce(buf, phi_poly);
    return buf;
  };
  Entry e;
  e.order_ = n;
  e.quat_ = x.quat_;
  e.a_ = n == 1 ? x.a_ : conj_poly(x.a_);
  if (x.quat_) {
    e.b_ = x.b_;
    for (Int& c : e.b_) c = -c;
  }
  e.normalize();
  return e;
}

bool is_unit_or_zero(const Entry& x) {
  if (x.is_zero()) return true;
  return x * entry_conj(x) == Entry(1);
}

namespace {

int parse_int(std::string_view& s) {
  std::size_t i = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == 0) throw std::invalid_argument("expected digits in entry token");
  int v = std::stoi(std::string(s.substr(0, i)));
  s.remove_prefix(i);
  return v;
}

} // namespace

Entry parse_entry_token(std::string_view token) {
  std::string_view s = token;
  if (s.empty()) throw std::invalid_argument("empty entry token");
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    s.remove_prefix(1);
    if (s.empty()) return Entry(-1); // appendix shorthand
  }
  Entry value;
  if (s == "0") {
    if (neg) throw std::invalid_argument("signed zero token");
    return Entry(0);
  } else if (s == "1") {
    value = Entry(1);
  } else if (s == "i") {
    value = Entry::cyc_root(4, 1);
  } else if (s == "k") {
    value = Entry::quaternion_unit();
  } else if (!s.empty() && s[0] == 'w') {
    s.remove_prefix(1);
    int n = parse_int(s);
    if (s.empty() || s[0] != '^') throw std::invalid_argument("bad root token: " + std::string(token));
    s.remove_prefix(1);
    int j = parse_int(s);
    if (n < 1 || j < 0 || j >= n) throw std::invalid_argument("root exponent out of range: " + std::string(token));
    value = Entry::cyc_root(n, j);
    if (s == "*k") {
      value = value * Entry::quaternion_unit();
      s = {};
    }
    if (!s.empty()) throw std::invalid_argument("trailing characters in entry token: " + std::string(token));
  } else {
    throw std::invalid_argument("unrecognized entry token: " + std::string(token));
  }
  return neg ? -value : value;
}

std::string entry_token(const Entry& x, int n) {
  if (x.is_zero()) return "0";
  auto match_root = [&](const Entry& v, int& j, bool& neg) {
    for (int e = 0; e < n; ++e) {
      Entry r = Entry::cyc_root(n, e);
      if (v == r) { j = e; neg = false; return true; }
      if (v == -r) { j = e; neg = true; return true; }
    }
    return false;
  };
  auto root_text = [&](int j, bool neg, const char* suffix) {
    std::string s = neg ? "-" : "";
    if (j == 0) return s + "1" + (suffix[0] ? std::string(suffix) : "");
    if (n % 4 == 0 && j == n / 4) return s + "i" + (suffix[0] ? std::string(suffix) : "");
    return s + "w" + std::to_string(n) + "^" + std::to_string(j) + suffix;
  };
  if (!x.is_quaternionic()) {
    int j;
    bool neg;
    if (!match_root(x, j, neg))
      throw std::domain_error("entry is not a root of unity of order dividing " + std::to_string(n));
    return root_text(j, neg, "");
  }
  // pure k-part units: x = z * k with z = conj(b), since z k = k conj(z)
  for (const Int& c : x.part_a())
    if (c != 0) throw std::domain_error("mixed quaternion entry has no token form");
  Entry bent(0);
  {
    int ord = x.order();
    std::vector<Int> bp = x.part_b();
    for (std::size_t i = 0; i < bp.size(); ++i) {
      if (bp[i] == 0) continue;
      bent += Entry(bp[i]) * Entry::cyc_root(ord, static_cast<int>(i));
    }
  }
  Entry z = entry_conj(bent);
  int j;
  bool neg;
  if (!match_root(z, j, neg))
    throw std::domain_error("quaternion entry is not a unit times k");
  if (j == 0) return neg ? "-k" : "k";
  return root_text(j, neg, "*k");
}

} // namespace qbw
