#include "qbw/search.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qbw/galois.hpp"
#include "qbw/verify.hpp"

namespace qbw {

namespace {

GridMatrix from_adjacency(int v, const std::vector<std::vector<int>>& adj) {
  GridMatrix a(v, v);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j)
      if (adj[i][j]) a.set(i, j, Entry(1));
  return a;
}

GridMatrix paley_graph(long q) {
  long p;
  int e;
  if (!prime_power(q, p, e) || q % 4 != 1)
    throw std::invalid_argument("paley graph needs a prime power q = 1 (mod 4)");
  FiniteField f = FiniteField::gf(p, e);
  int v = static_cast<int>(q);
  std::vector<std::vector<int>> adj(v, std::vector<int>(v, 0));
  for (int x = 0; x < v; ++x)
    for (int y = 0; y < v; ++y) {
      if (x == y) continue;
      if (f.dlog(f.sub(x, y)) % 2 == 0) adj[x][y] = 1;
    }
  return from_adjacency(v, adj);
}

GridMatrix triangular_graph(int m) {
  if (m < 4) throw std::invalid_argument("triangular(m) needs m >= 4");
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) pts.push_back({a, b});
  int v = static_cast<int>(pts.size());
  std::vector<std::vector<int>> adj(v, std::vector<int>(v, 0));
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      if (i == j) continue;
      auto [a, b] = pts[i];
      auto [c, d] = pts[j];
      if (a == c || a == d || b == c || b == d) adj[i][j] = 1;
    }
  return from_adjacency(v, adj);
}

GridMatrix lattice_graph(int m) {
  if (m < 2) throw std::invalid_argument("lattice(m) needs m >= 2");
  int v = m * m;
  std::vector<std::vector<int>> adj(v, std::vector<int>(v, 0));
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      if (i == j) continue;
      if (i / m == j / m || i % m == j % m) adj[i][j] = 1;
    }
  return from_adjacency(v, adj);
}

GridMatrix clebsch_graph() {
  int v = 16;
  std::vector<std::vector<int>> adj(v, std::vector<int>(v, 0));
  for (int x = 0; x < v; ++x)
    for (int y = 0; y < v; ++y) {
      int d = x ^ y;
      if (!d) continue;
      int w = __builtin_popcount(static_cast<unsigned>(d));
      if (w == 1 || d == 15) adj[x][y] = 1;
    }
  return from_adjacency(v, adj);
}

GridMatrix shrikhande_graph() {
  int v = 16;
  std::vector<std::vector<int>> adj(v, std::vector<int>(v, 0));
  const int dx[] = {1, 3, 0, 0, 1, 3}, dy[] = {0, 0, 1, 3, 1, 3};
  for (int x = 0; x < v; ++x)
    for (int t = 0; t < 6; ++t) {
      int a = x / 4, b = x % 4;
      int y = ((a + dx[t]) % 4) * 4 + (b + dy[t]) % 4;
      adj[x][y] = adj[y][x] = 1;
    }
  return from_adjacency(v, adj);
}

} // namespace

GridMatrix srg_fixture(const std::string& name) {
  GridMatrix a;
  auto args = [&](const std::string& head) -> std::optional<std::string> {
    if (name.rfind(head + "(", 0) == 0 && name.back() == ')')
      return name.substr(head.size() + 1, name.size() - head.size() - 2);
    return std::nullopt;
  };
  if (name == "clebsch") {
    a = clebsch_graph();
  } else if (name == "shrikhande") {
    a = shrikhande_graph();
  } else if (auto q = args("paley")) {
    a = paley_graph(std::stol(*q));
  } else if (auto m = args("triangular")) {
    a = triangular_graph(std::stoi(*m));
  } else if (auto m = args("lattice")) {
    a = lattice_graph(std::stoi(*m));
  } else if (auto inner = args("complement")) {
    GridMatrix g = srg_fixture(*inner);
    a = all_ones(g.rows(), g.rows()) - identity(g.rows()) - g;
  } else {
    throw std::invalid_argument("unknown srg fixture: " + name);
  }
  DesignReport rep = srg_check(a);
  if (!rep.pass)
    throw std::logic_error("fixture " + name + " failed srg certification");
  return a;
}

namespace {

struct Cell {
  int i, j;
};

struct Term {
  int pair;   // index into pair state
  int c1, c2; // cells (i,l) and (j,l); residue = val(c1) - val(c2)
};

struct PairState {
  int target = 0;     // balanced mode: required count per residue
  int remaining = 0;  // unassigned terms
  int deficit = 0;    // balanced mode: sum over residues of (target - count)+
  double re = 0, im = 0; // weighing mode partial sum
};

struct Searcher {
  const SearchProblem& prob;
  int v, n;
  bool balanced;
  std::vector<Cell> cells;
  std::vector<int> first_free;          // first non-normalized cell index
  std::vector<std::vector<Term>> by_cell; // terms closed by each cell
  std::vector<PairState> pairs;
  std::vector<std::vector<int>> counts; // balanced: per pair residue counts
  std::vector<int> value;               // exponent per cell, -1 unassigned
  std::vector<double> cosv, sinv;
  long long nodes = 0;
  bool aborted = false;
  std::optional<std::vector<int>> solution;

  explicit Searcher(const SearchProblem& p) : prob(p) {
    v = p.adjacency.rows();
    n = p.roots;
    balanced = p.mode == SearchMode::Balanced;
  }

  bool normalized(const Cell& c) const {
    return prob.symmetric ? c.i == 0 : (c.i == 0 || c.j == 0);
  }

  void build() {
    std::vector<std::vector<int>> adj(v, std::vector<int>(v, 0));
    for (int i = 0; i < v; ++i)
      for (int j = 0; j < v; ++j)
        if (!prob.adjacency.at(i, j).is_zero()) adj[i][j] = 1;
    std::vector<std::vector<int>> cell_id(v, std::vector<int>(v, -1));
    for (int i = 0; i < v; ++i)
      for (int j = prob.symmetric ? i + 1 : 0; j < v; ++j) {
        if (!adj[i][j]) continue;
        if (prob.symmetric) {
          cell_id[i][j] = cell_id[j][i] = static_cast<int>(cells.size());
          cells.push_back({i, j});
        } else {
          cell_id[i][j] = static_cast<int>(cells.size());
          cells.push_back({i, j});
        }
      }
    by_cell.assign(cells.size(), {});
    for (int i = 0; i < v; ++i)
      for (int j = i + 1; j < v; ++j) {
        int shared = 0;
        for (int l = 0; l < v; ++l)
          if (adj[i][l] && adj[j][l]) ++shared;
        if (shared == 0) continue;
        if (balanced && shared % n != 0)
          throw std::invalid_argument(
              "pair profile size is not divisible by the root order");
        PairState ps;
        ps.remaining = shared;
        if (balanced) {
          ps.target = shared / n;
          ps.deficit = shared;
        }
        int pid = static_cast<int>(pairs.size());
        pairs.push_back(ps);
        for (int l = 0; l < v; ++l) {
          if (!adj[i][l] || !adj[j][l]) continue;
          int c1 = cell_id[i][l], c2 = cell_id[j][l];
          by_cell[std::max(c1, c2)].push_back({pid, c1, c2});
        }
      }
    counts.assign(pairs.size(), std::vector<int>(balanced ? n : 0, 0));
    value.assign(cells.size(), -1);
    cosv.resize(n);
    sinv.resize(n);
    for (int t = 0; t < n; ++t) {
      cosv[t] = std::cos(2.0 * M_PI * t / n);
      sinv[t] = std::sin(2.0 * M_PI * t / n);
    }
  }

  bool place(int cell, int val, std::vector<Term const*>& touched) {
    value[cell] = val;
    bool ok = true;
    for (const Term& t : by_cell[cell]) {
      if (value[t.c1] < 0 || value[t.c2] < 0) continue;
      PairState& ps = pairs[t.pair];
      int res = ((value[t.c1] - value[t.c2]) % n + n) % n;
      touched.push_back(&t);
      --ps.remaining;
      if (balanced) {
        int& c = counts[t.pair][res];
        if (c < ps.target) --ps.deficit;
        ++c;
        if (c > ps.target || ps.deficit > ps.remaining) ok = false;
      } else {
        ps.re += cosv[res];
        ps.im += sinv[res];
        double norm = ps.re * ps.re + ps.im * ps.im;
        double rem = static_cast<double>(ps.remaining) + 1e-9;
        if (norm > rem * rem) ok = false;
      }
      if (!ok) break;
    }
    return ok;
  }

  void unplace(int cell, const std::vector<Term const*>& touched) {
    for (const Term* t : touched) {
      PairState& ps = pairs[t->pair];
      int res = ((value[t->c1] - value[t->c2]) % n + n) % n;
      ++ps.remaining;
      if (balanced) {
        int& c = counts[t->pair][res];
        --c;
        if (c < ps.target) ++ps.deficit;
      } else {
        ps.re -= cosv[res];
        ps.im -= sinv[res];
      }
    }
    value[cell] = -1;
  }

  bool dfs(std::size_t cell) {
    if (aborted) return false;
    if (cell == cells.size()) {
      solution = value;
      return true;
    }
    int hi = normalized(cells[cell]) ? 0 : n - 1;
    std::vector<Term const*> touched;
    for (int val = 0; val <= hi; ++val) {
      if (++nodes > prob.budget) {
        aborted = true;
        return false;
      }
      touched.clear();
      bool ok = place(static_cast<int>(cell), val, touched);
      if (ok && dfs(cell + 1)) return true;
      unplace(static_cast<int>(cell), touched);
      if (aborted) return false;
    }
    return false;
  }
};

} // namespace

SearchOutcome search_signing(const SearchProblem& problem) {
  if (!problem.adjacency.is_square() || !problem.adjacency.is_zero_one())
    throw std::invalid_argument("search needs a 0/1 adjacency matrix");
  if (problem.symmetric && !problem.adjacency.is_symmetric())
    throw std::invalid_argument("symmetric search needs a symmetric adjacency");
  if (problem.roots < 1) throw std::invalid_argument("root order must be positive");

  auto t0 = std::chrono::steady_clock::now();
  Searcher s(problem);
  s.build();
  bool found = s.dfs(0);
  SearchOutcome out;
  out.nodes = s.nodes;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (found) {
    const int v = s.v, n = s.n;
    GridMatrix w(v, v, n <= 2 ? EntryKind::integer() : EntryKind::cyclotomic(n));
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
      Entry e = Entry::cyc_root(n, (*s.solution)[c]);
      w.set(s.cells[c].i, s.cells[c].j, e);
      if (problem.symmetric) w.set(s.cells[c].j, s.cells[c].i, e);
    }
    // never trust the search: re-certify from scratch
    if (problem.mode == SearchMode::Balanced) {
      DesignReport rep = srg_balanced_check(w, problem.adjacency, n);
      if (!rep.pass)
        throw std::logic_error("search returned an uncertified balanced signing");
    } else {
      DesignReport rep = is_weighing(w);
      if (!rep.pass || abs_matrix(w) != problem.adjacency)
        throw std::logic_error("search returned an uncertified weighing signing");
    }
    out.status = SearchOutcome::Status::Found;
    out.signing = std::move(w);
  } else if (s.aborted) {
    out.status = SearchOutcome::Status::BudgetExceeded;
  } else {
    out.status = SearchOutcome::Status::ExhaustedNo;
  }
  return out;
}

std::vector<DesignReport> verify_fixture_signings(const std::string& fixtures_dir) {
  struct FigureSpec {
    const char* file;
    int weight;
    int roots;
    bool balanced_expected;
  };
  const FigureSpec figs[] = {
      {"fig_w40_12.qbw", 12, 2, true},
      {"fig_srg_16_5_0_2.qbw", 5, 2, true},
      {"fig_srg_16_9_4_6.qbw", 9, 2, true},
      {"fig_srg_28_12_6_4.qbw", 12, 2, true},
      {"fig_srg_16_6_2_2.qbw", 6, 4, false},
  };
  std::vector<DesignReport> out;
  for (const FigureSpec& f : figs) {
    GridMatrix w = parse_qbw_file(fixtures_dir + "/" + f.file);
    DesignReport wrep = is_weighing(w);
    wrep.notes.push_back(f.file);
    wrep.pass = wrep.pass && wrep.param("k") == f.weight;
    out.push_back(wrep);

    GridMatrix a = abs_matrix(w);
    DesignReport srg = srg_check(a);
    srg.notes.push_back(f.file);
    out.push_back(srg);

    DesignReport bal = srg_balanced_check(w, a, f.roots);
    bal.notes.push_back(f.file);
    bal.notes.push_back(f.balanced_expected ? "expected PASS" : "expected FAIL");
    bal.pass = bal.pass == f.balanced_expected;
    out.push_back(bal);
  }
  return out;
}

} // namespace qbw
