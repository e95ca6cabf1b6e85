#include "qbw/bgw.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qbw/galois.hpp"

namespace qbw {

DesignReport bgw_check(const BgwMatrix& h) {
  DesignReport rep;
  rep.kind = "bgw";
  rep.pass = true;
  const int v = h.v, g = h.group_order;
  if (v <= 0 || g <= 0) {
    rep.pass = false;
    rep.notes.push_back("empty matrix");
    return rep;
  }
  int k = -1;
  for (int i = 0; i < v; ++i) {
    int w = 0;
    for (int j = 0; j < v; ++j)
      if (h.at(i, j) >= 0) ++w;
    if (k < 0) k = w;
    if (w != k) return rep.fail_at(i, 0), rep;
  }
  if (k <= 0) {
    rep.pass = false;
    rep.notes.push_back("zero row weight");
    return rep;
  }
  long long lambda = -1;
  std::vector<int> count(g);
  for (int i = 0; i < v && rep.pass; ++i)
    for (int r = i + 1; r < v && rep.pass; ++r) {
      std::fill(count.begin(), count.end(), 0);
      int shared = 0;
      for (int j = 0; j < v; ++j) {
        int a = h.at(i, j), b = h.at(r, j);
        if (a < 0 || b < 0) continue;
        ++shared;
        ++count[((a - b) % g + g) % g];
      }
      if (lambda < 0) {
        if (shared % g != 0) { rep.fail_at(i, r); break; }
        lambda = shared;
      }
      if (shared != lambda) { rep.fail_at(i, r); break; }
      for (int t = 0; t < g; ++t)
        if (count[t] * g != lambda) { rep.fail_at(i, r); break; }
    }
  rep.with_param("v", v).with_param("k", k).with_param("lambda", lambda)
      .with_param("g", g);
  return rep;
}

bool skew_check(const BgwMatrix& h) {
  if (h.group_order % 2) return false;
  int half = h.group_order / 2;
  for (int i = 0; i < h.v; ++i) {
    if (h.at(i, i) >= 0) return false;
    for (int j = 0; j < h.v; ++j) {
      if (i == j) continue;
      int a = h.at(i, j), b = h.at(j, i);
      if ((a < 0) != (b < 0)) return false;
      if (a >= 0 && b != (a + half) % h.group_order) return false;
    }
  }
  return true;
}

bool symmetric_check(const BgwMatrix& h) {
  for (int i = 0; i < h.v; ++i)
    for (int j = i + 1; j < h.v; ++j)
      if (h.at(i, j) != h.at(j, i)) return false;
  return true;
}

BgwMatrix paley_bgw(long Q, int n) {
  long p;
  int e;
  if (!prime_power(Q, p, e) || Q > 10000)
    throw std::invalid_argument("Q must be a prime power <= 10^4");
  if (n < 1 || (Q - 1) % n != 0)
    throw std::invalid_argument("n must divide Q-1");
  FiniteField F = FiniteField::gf(p, e);

  long ratio = (Q - 1) / n;
  bool skew = (Q % 2 == 1) && (ratio % 2 == 1);

  // index 0 is the point at infinity; 1..Q are the field elements 0..Q-1
  BgwMatrix h(static_cast<int>(Q) + 1, n);
  for (long y = 0; y < Q; ++y) h.set(0, static_cast<int>(y) + 1, 0);
  int col_inf = skew ? n / 2 : 0;
  for (long x = 0; x < Q; ++x) h.set(static_cast<int>(x) + 1, 0, col_inf);
  for (long x = 0; x < Q; ++x)
    for (long y = 0; y < Q; ++y) {
      if (x == y) continue;
      long d = F.sub(x, y);
      h.set(static_cast<int>(x) + 1, static_cast<int>(y) + 1,
            static_cast<int>(F.dlog(d) % n));
    }
  h.k = static_cast<int>(Q);

  DesignReport rep = bgw_check(h);
  if (!rep.pass) {
    // Best-effort border normalization: retry with the infinity column
    // scaled by each group constant.
    for (int s = 0; s < n && !rep.pass; ++s) {
      for (long x = 0; x < Q; ++x) h.set(static_cast<int>(x) + 1, 0, s);
      rep = bgw_check(h);
    }
    if (!rep.pass)
      throw std::runtime_error("paley_bgw construction failed verification: " +
                               rep.summary());
  }
  return h;
}

namespace {

struct CoreSearchState {
  int q;
  GridMatrix found;
  bool ok = false;
  long long nodes = 0;
};

// Negacirculant flavor: entries +-1 at positions 1..q, zero at 0. The q+1
// negacyclic autocorrelations must vanish; partial sums prune when the
// remaining terms cannot cancel the current one.
bool core_dfs_nega(CoreSearchState& st, std::vector<int>& sgn, int t,
                   std::vector<int>& acc, std::vector<int>& rem) {
  const int q = st.q, m = q + 1;
  if (t > q) {
    std::vector<Entry> row(m, Entry(0));
    for (int j = 1; j <= q; ++j) row[j] = Entry(sgn[j]);
    GridMatrix W = negacirculant(row);
    GridMatrix G = W * W.transpose();
    GridMatrix target = Entry(q) * identity(m);
    if (G == target) {
      st.found = std::move(W);
      st.ok = true;
      return true;
    }
    return false;
  }
  for (int val = 0; val < 2; ++val) {
    ++st.nodes;
    sgn[t] = val == 0 ? 1 : -1;
    bool ok = true;
    std::vector<std::pair<int, int>> touched; // (shift, contribution)
    for (int other = 1; other < t && ok; ++other) {
      int prod = sgn[t] * sgn[other];
      int d1 = (t - other) % m;               // pair (t, other), no wrap
      int d2 = m - d1;                        // pair (other, t), wraps once
      for (auto [d, c] : {std::pair{d1, prod}, std::pair{d2 % m, -prod}}) {
        acc[d] += c;
        --rem[d];
        touched.push_back({d, c});
        if (std::abs(acc[d]) > rem[d]) { ok = false; break; }
      }
    }
    if (ok && core_dfs_nega(st, sgn, t + 1, acc, rem)) return true;
    for (auto [d, c] : touched) {
      acc[d] -= c;
      ++rem[d];
    }
  }
  return false;
}

// Omega flavor for even prime powers q in {4, 8}: entries are powers of a
// primitive (q-1)-st root of unity. Since q-1 is prime, each shift's q-1
// product residues must be exactly uniform, so counts above one prune.
bool core_dfs_omega(CoreSearchState& st, std::vector<int>& expnt, int t,
                    std::vector<std::vector<int>>& cnt) {
  const int q = st.q, m = q + 1, p = q - 1;
  if (t > q) {
    Entry omega = Entry::cyc_root(p, 1);
    std::vector<Entry> row(m, Entry(0));
    for (int j = 1; j <= q; ++j) row[j] = Entry::cyc_root(p, expnt[j]);
    GridMatrix W = omega_circulant(row, omega);
    GridMatrix G = W * W.adjoint();
    GridMatrix target = Entry(q) * identity(m);
    if (G == target) {
      st.found = std::move(W);
      st.ok = true;
      return true;
    }
    return false;
  }
  for (int val = 0; val < p; ++val) {
    ++st.nodes;
    expnt[t] = val;
    bool ok = true;
    std::vector<std::pair<int, int>> touched;
    for (int other = 1; other < t && ok; ++other) {
      int d1 = (t - other) % m;
      int d2 = (m - d1) % m;
      int r1 = ((expnt[t] - expnt[other]) % p + p) % p;       // term of shift d1
      int r2 = ((expnt[other] - expnt[t] - 1) % p + p) % p;   // wrapped term
      for (auto [d, r] : {std::pair{d1, r1}, std::pair{d2, r2}}) {
        ++cnt[d][r];
        touched.push_back({d, r});
        if (cnt[d][r] > 1) { ok = false; break; }
      }
    }
    if (ok && core_dfs_omega(st, expnt, t + 1, cnt)) return true;
    for (auto [d, r] : touched) --cnt[d][r];
  }
  return false;
}

} // namespace

GridMatrix conference_core(int q, CoreFlavor flavor) {
  long p;
  int e;
  if (q != 1 && !prime_power(q, p, e))
    throw std::invalid_argument("q must be a prime power");
  CoreSearchState st;
  st.q = q;
  if (flavor == CoreFlavor::Negacirculant) {
    if (q % 2 == 0 || q > 23)
      throw std::invalid_argument("negacirculant cores need an odd prime power q <= 23");
    std::vector<int> sgn(q + 1, 0);
    std::vector<int> acc(q + 1, 0), rem(q + 1, 0);
    // shift d has q-1 cross terms among positions 1..q
    for (int d = 1; d <= q; ++d) rem[d] = q - 1;
    core_dfs_nega(st, sgn, 1, acc, rem);
  } else {
    if (q != 4 && q != 8)
      throw std::invalid_argument("omega-circulant cores are provided for q in {4, 8}");
    std::vector<int> expnt(q + 1, 0);
    std::vector<std::vector<int>> cnt(q + 1, std::vector<int>(q - 1, 0));
    core_dfs_omega(st, expnt, 1, cnt);
  }
  if (!st.ok)
    throw std::runtime_error("conference core search exhausted after " +
                             std::to_string(st.nodes) + " nodes");
  return st.found;
}

namespace {

struct GhState {
  int m, g, target;
  long long budget, nodes = 0;
  bool aborted = false;
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<std::vector<int>>> cnt; // per earlier row, per residue
  std::optional<BgwMatrix> result;
};

void gh_row_dfs(GhState& st, std::vector<int>& row, int t) {
  if (st.aborted || st.result) return;
  const int r = static_cast<int>(st.rows.size());
  if (t == st.m) {
    st.rows.push_back(row);
    if (static_cast<int>(st.rows.size()) == st.m) {
      BgwMatrix h(st.m, st.g);
      for (int i = 0; i < st.m; ++i)
        for (int j = 0; j < st.m; ++j) h.set(i, j, st.rows[i][j]);
      h.k = st.m;
      st.result = std::move(h);
    } else {
      std::vector<int> next(st.m, 0);
      gh_row_dfs(st, next, 0);
    }
    if (!st.result) st.rows.pop_back();
    return;
  }
  // the first column is normalized to exponent 0
  const int vmax = t == 0 ? 0 : st.g - 1;
  for (int val = 0; val <= vmax && !st.result && !st.aborted; ++val) {
    if (++st.nodes > st.budget) {
      st.aborted = true;
      return;
    }
    row[t] = val;
    bool ok = true;
    for (int h = 0; h < r; ++h) {
      int res = ((val - st.rows[h][t]) % st.g + st.g) % st.g;
      if (++st.cnt[r][h][res] > st.target) ok = false;
    }
    if (ok) gh_row_dfs(st, row, t + 1);
    for (int h = 0; h < r; ++h) {
      int res = ((val - st.rows[h][t]) % st.g + st.g) % st.g;
      --st.cnt[r][h][res];
    }
  }
}

} // namespace

GhSearchResult gh_search(int group_order, int m, long long node_budget) {
  if (group_order < 1 || m < 1 || m % group_order != 0)
    throw std::invalid_argument("generalized Hadamard needs group_order | m");
  GhState st;
  st.m = m;
  st.g = group_order;
  st.target = m / group_order;
  st.budget = node_budget;
  st.cnt.assign(m, std::vector<std::vector<int>>(m, std::vector<int>(group_order, 0)));
  st.rows.push_back(std::vector<int>(m, 0)); // normalized first row
  if (m == 1) {
    BgwMatrix h(1, group_order);
    h.set(0, 0, 0);
    h.k = 1;
    return {h, 0, true};
  }
  std::vector<int> row(m, 0);
  gh_row_dfs(st, row, 0);
  GhSearchResult out;
  out.nodes = st.nodes;
  if (st.result) {
    DesignReport rep = bgw_check(*st.result);
    if (!rep.pass)
      throw std::logic_error("gh_search produced an invalid matrix: " + rep.summary());
    out.matrix = std::move(st.result);
  }
  out.exhausted = !out.matrix && !st.aborted;
  return out;
}

BgwMatrix gh_import(const std::string& path) {
  BgwMatrix h = parse_bgw_file(path);
  DesignReport rep = bgw_check(h);
  if (!rep.pass || rep.param("k") != h.v || rep.param("lambda") != h.v)
    throw std::runtime_error("imported file is not a generalized Hadamard matrix: " +
                             rep.summary());
  return h;
}

BgwRep BgwRep::nega_shift(int n) {
  BgwRep r;
  r.kind = Kind::NegaShift;
  r.n = n;
  return r;
}

BgwRep BgwRep::omega_shift(int n, const Entry& omega, int omega_order) {
  BgwRep r;
  r.kind = Kind::OmegaShift;
  r.n = n;
  r.omega = omega;
  r.omega_order = omega_order;
  return r;
}

BgwRep BgwRep::complex_roots() {
  BgwRep r;
  r.kind = Kind::ComplexRoots;
  return r;
}

GridMatrix expand_bgw(const BgwMatrix& h, const BgwRep& rep) {
  if (rep.kind == BgwRep::Kind::ComplexRoots) {
    GridMatrix out(h.v, h.v, EntryKind::cyclotomic(h.group_order));
    for (int i = 0; i < h.v; ++i)
      for (int j = 0; j < h.v; ++j) {
        int e = h.at(i, j);
        if (e >= 0) out.set(i, j, Entry::cyc_root(h.group_order, e));
      }
    return out;
  }
  int rep_order;
  GridMatrix shift;
  if (rep.kind == BgwRep::Kind::NegaShift) {
    rep_order = 2 * rep.n;
    shift = nega_shift(rep.n);
  } else {
    rep_order = rep.omega_order * rep.n;
    shift = omega_shift(rep.n, rep.omega);
  }
  if (rep_order != h.group_order)
    throw std::invalid_argument("representation group order " + std::to_string(rep_order) +
                                " does not match BGW group order " +
                                std::to_string(h.group_order));
  std::vector<GridMatrix> powers(h.group_order);
  powers[0] = identity(rep.n);
  for (int e = 1; e < h.group_order; ++e) powers[e] = powers[e - 1] * shift;
  GridMatrix zero = zero_matrix(rep.n, rep.n);
  std::vector<std::vector<GridMatrix>> blocks(h.v, std::vector<GridMatrix>(h.v, zero));
  for (int i = 0; i < h.v; ++i)
    for (int j = 0; j < h.v; ++j) {
      int e = h.at(i, j);
      if (e >= 0) blocks[i][j] = powers[e];
    }
  return block_compose(blocks);
}

void write_bgw(std::ostream& os, const BgwMatrix& h) {
  os << "bgw " << h.v << ' ' << h.group_order << '\n';
  for (int i = 0; i < h.v; ++i) {
    for (int j = 0; j < h.v; ++j) {
      if (j) os << ' ';
      int e = h.at(i, j);
      if (e < 0)
        os << '.';
      else
        os << e;
    }
    os << '\n';
  }
}

void write_bgw_file(const std::string& path, const BgwMatrix& h) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_bgw(os, h);
}

BgwMatrix parse_bgw(std::istream& is) {
  std::string magic;
  int v, g;
  if (!(is >> magic >> v >> g) || magic != "bgw" || v <= 0 || g <= 0)
    throw std::invalid_argument("malformed bgw header");
  BgwMatrix h(v, g);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      std::string tok;
      if (!(is >> tok)) throw std::invalid_argument("truncated bgw body");
      if (tok == ".") continue;
      int e = std::stoi(tok);
      if (e < 0 || e >= g) throw std::invalid_argument("bgw exponent out of range");
      h.set(i, j, e);
    }
  int k = 0;
  for (int j = 0; j < v; ++j)
    if (h.at(0, j) >= 0) ++k;
  h.k = k;
  return h;
}

BgwMatrix parse_bgw_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open bgw file: " + path);
  return parse_bgw(is);
}

} // namespace qbw
