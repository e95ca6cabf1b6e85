#include "qbw/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qbw {

namespace {

bool all_unit_or_zero(const GridMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_unit_or_zero(m.at(i, j))) return false;
  return true;
}

// -1 for zero entries, otherwise the exponent t with entry = zeta_n^t, or
// -2 when the entry is not an n-th root of unity.
std::vector<int> root_exponents(const GridMatrix& w, int n) {
  std::vector<Entry> roots(n);
  for (int t = 0; t < n; ++t) roots[t] = Entry::cyc_root(n, t);
  std::vector<int> exps(static_cast<std::size_t>(w.rows()) * w.cols(), -2);
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) {
      const Entry& e = w.at(i, j);
      std::size_t idx = static_cast<std::size_t>(i) * w.cols() + j;
      if (e.is_zero()) {
        exps[idx] = -1;
        continue;
      }
      for (int t = 0; t < n; ++t)
        if (e == roots[t]) {
          exps[idx] = t;
          break;
        }
    }
  return exps;
}

long long int_value(const Entry& e) {
  return static_cast<long long>(e.integer_value());
}

} // namespace

DesignReport is_weighing(const GridMatrix& w) {
  DesignReport rep;
  rep.kind = "weighing";
  if (!w.is_square()) throw std::invalid_argument("weighing check needs a square matrix");
  if (!all_unit_or_zero(w)) {
    rep.notes.push_back("entry is not unit-or-zero");
    return rep;
  }
  const int v = w.rows();
  GridMatrix adj = w.adjoint();
  GridMatrix gram = w * adj;
  Entry k = gram.at(0, 0);
  rep.pass = true;
  for (int i = 0; i < v && rep.pass; ++i)
    for (int j = 0; j < v; ++j) {
      const Entry& e = gram.at(i, j);
      if (i == j ? e != k : !e.is_zero()) {
        rep.fail_at(i, j);
        break;
      }
    }
  if (rep.pass && !(k.is_integer() && k.integer_value() >= 0)) {
    rep.pass = false;
    rep.notes.push_back("diagonal is not a nonnegative integer");
  }
  if (rep.pass) {
    GridMatrix gram2 = adj * w;
    for (int i = 0; i < v && rep.pass; ++i)
      for (int j = 0; j < v; ++j) {
        const Entry& e = gram2.at(i, j);
        if (i == j ? e != k : !e.is_zero()) {
          rep.fail_at(i, j);
          rep.notes.push_back("W*W deviates");
          break;
        }
      }
  }
  rep.with_param("v", v);
  if (rep.pass) rep.with_param("k", int_value(k));
  return rep;
}

DesignReport quasi_balanced_profile(const GridMatrix& w) {
  DesignReport rep;
  rep.kind = "quasi-balanced";
  if (!w.is_square()) throw std::invalid_argument("profile needs a square matrix");
  if (!all_unit_or_zero(w)) {
    rep.notes.push_back("entry is not unit-or-zero");
    return rep;
  }
  GridMatrix b = abs_matrix(w);
  GridMatrix bt = b.transpose();
  GridMatrix g1 = b * bt;
  GridMatrix g2 = bt * b;
  if (g1 != g2) {
    rep.notes.push_back("|W| does not commute with |W|^T");
    for (int i = 0; i < b.rows() && !rep.witness; ++i)
      for (int j = 0; j < b.cols(); ++j)
        if (g1.at(i, j) != g2.at(i, j)) {
          rep.fail_at(i, j);
          break;
        }
    return rep;
  }
  std::set<long long> values;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (i != j) values.insert(int_value(g1.at(i, j)));
  rep.value_set.assign(values.begin(), values.end());
  rep.pass = values.size() <= 2;
  if (!rep.pass) rep.notes.push_back("more than two off-diagonal products");
  rep.with_param("v", w.rows());
  return rep;
}

DesignReport srg_check(const GridMatrix& a) {
  DesignReport rep;
  rep.kind = "srg";
  if (!a.is_square()) throw std::invalid_argument("srg check needs a square matrix");
  if (!a.is_symmetric()) throw std::invalid_argument("srg check needs a symmetric matrix");
  if (!a.has_zero_diagonal()) throw std::invalid_argument("srg check needs a zero diagonal");
  if (!a.is_zero_one()) {
    rep.notes.push_back("entries are not 0/1");
    return rep;
  }
  const int v = a.rows();
  GridMatrix s = a * a;
  long long k = int_value(s.at(0, 0));
  long long lambda = -1, mu = -1;
  rep.pass = true;
  for (int i = 0; i < v && rep.pass; ++i)
    for (int j = 0; j < v; ++j) {
      long long val = int_value(s.at(i, j));
      if (i == j) {
        if (val != k) { rep.fail_at(i, j); break; }
      } else if (!a.at(i, j).is_zero()) {
        if (lambda < 0) lambda = val;
        if (val != lambda) { rep.fail_at(i, j); break; }
      } else {
        if (mu < 0) mu = val;
        if (val != mu) { rep.fail_at(i, j); break; }
      }
    }
  if (!rep.pass) return rep;
  if (lambda < 0) rep.notes.push_back("lambda undefined (empty graph)");
  if (mu < 0) rep.notes.push_back("mu undefined (complete graph)");
  rep.with_param("v", v).with_param("k", k).with_param("lambda", lambda)
      .with_param("mu", mu);
  if (lambda >= 0 && mu >= 0) {
    // integer eigenvalues, when the quadratic splits over Z
    long long tr = lambda - mu, det = k - mu;
    long long disc = tr * tr + 4 * det;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(disc)));
    while (r * r > disc) --r;
    while ((r + 1) * (r + 1) <= disc) ++r;
    if (r * r == disc && (tr + r) % 2 == 0) {
      rep.with_param("s", (tr + r) / 2).with_param("t", (tr - r) / 2);
    }
  }
  return rep;
}

DesignReport gdd_check(const GridMatrix& a, int m, int n) {
  DesignReport rep;
  rep.kind = "sgdd";
  const int v = a.rows();
  if (!a.is_square() || v != m * n)
    throw std::invalid_argument("gdd check needs a square matrix of order m*n");
  if (!a.is_zero_one()) {
    rep.notes.push_back("entries are not 0/1");
    return rep;
  }
  GridMatrix at = a.transpose();
  GridMatrix g1 = a * at;
  GridMatrix g2 = at * a;
  if (g1 != g2) {
    rep.notes.push_back("A A^T != A^T A");
    for (int i = 0; i < v && !rep.witness; ++i)
      for (int j = 0; j < v; ++j)
        if (g1.at(i, j) != g2.at(i, j)) { rep.fail_at(i, j); break; }
    return rep;
  }
  long long k = int_value(g1.at(0, 0));
  long long l1 = -1, l2 = -1;
  rep.pass = true;
  for (int i = 0; i < v && rep.pass; ++i)
    for (int j = 0; j < v; ++j) {
      long long val = int_value(g1.at(i, j));
      if (i == j) {
        if (val != k) { rep.fail_at(i, j); break; }
      } else if (i / n == j / n) {
        if (l1 < 0) l1 = val;
        if (val != l1) { rep.fail_at(i, j); break; }
      } else {
        if (l2 < 0) l2 = val;
        if (val != l2) { rep.fail_at(i, j); break; }
      }
    }
  if (!rep.pass) return rep;
  if (l1 < 0) rep.notes.push_back("lambda1 undefined (group size 1)");
  if (l2 < 0) rep.notes.push_back("lambda2 undefined (single group)");
  rep.with_param("v", v).with_param("k", k).with_param("m", m).with_param("n", n)
      .with_param("lambda1", l1).with_param("lambda2", l2);
  return rep;
}

DesignReport ddg_check(const GridMatrix& a, int m, int n) {
  DesignReport rep = gdd_check(a, m, n);
  rep.kind = "ddg";
  if (!rep.pass) return rep;
  if (!a.is_symmetric()) {
    rep.pass = false;
    rep.notes.push_back("adjacency is not symmetric");
  }
  if (!a.has_zero_diagonal()) {
    rep.pass = false;
    rep.notes.push_back("diagonal is not zero");
  }
  return rep;
}

DesignReport deza_check(const GridMatrix& a) {
  DesignReport rep;
  rep.kind = "deza";
  if (!a.is_square() || !a.is_symmetric() || !a.has_zero_diagonal() || !a.is_zero_one()) {
    rep.notes.push_back("input is not a loopless symmetric 0/1 adjacency");
    return rep;
  }
  const int v = a.rows();
  GridMatrix s = a * a;
  long long k = int_value(s.at(0, 0));
  for (int i = 0; i < v; ++i)
    if (int_value(s.at(i, i)) != k) {
      rep.fail_at(i, i);
      rep.notes.push_back("degree is not constant");
      return rep;
    }
  std::set<long long> values;
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j)
      if (i != j) values.insert(int_value(s.at(i, j)));
  rep.value_set.assign(values.begin(), values.end());
  if (values.size() > 2) {
    rep.notes.push_back("more than two off-diagonal values of A^2");
    return rep;
  }
  rep.pass = true;
  long long b = rep.value_set.empty() ? 0 : rep.value_set.back();
  long long aa = rep.value_set.empty() ? 0 : rep.value_set.front();
  if (values.size() < 2) rep.notes.push_back("two values collapse");
  rep.with_param("v", v).with_param("k", k).with_param("b", b).with_param("a", aa);
  return rep;
}

DesignReport balanced_signing_check(const GridMatrix& w, int n) {
  DesignReport rep;
  rep.kind = "balanced-signing";
  if (!w.is_square()) throw std::invalid_argument("signing check needs a square matrix");
  if (n < 1) throw std::invalid_argument("root order must be positive");
  const int v = w.rows();
  std::vector<int> exps = root_exponents(w, n);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j)
      if (exps[static_cast<std::size_t>(i) * v + j] == -2) {
        rep.fail_at(i, j);
        rep.notes.push_back("entry outside the n-th roots of unity");
        return rep;
      }
  std::vector<std::vector<int>> support(v);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j)
      if (exps[static_cast<std::size_t>(i) * v + j] >= 0) support[i].push_back(j);
  rep.pass = true;
  std::vector<int> count(n);
  for (int i = 0; i < v && rep.pass; ++i)
    for (int j = i + 1; j < v; ++j) {
      std::fill(count.begin(), count.end(), 0);
      int total = 0;
      for (int l : support[i]) {
        int ej = exps[static_cast<std::size_t>(j) * v + l];
        if (ej < 0) continue;
        int ei = exps[static_cast<std::size_t>(i) * v + l];
        ++count[((ei - ej) % n + n) % n];
        ++total;
      }
      if (total % n != 0) { rep.fail_at(i, j); break; }
      for (int t = 0; t < n; ++t)
        if (count[t] * n != total) { rep.fail_at(i, j); break; }
      if (!rep.pass) break;
    }
  rep.with_param("v", v).with_param("n", n);
  return rep;
}

DesignReport srg_balanced_check(const GridMatrix& w, const GridMatrix& a, int n) {
  DesignReport rep;
  rep.kind = "srg-balanced";
  if (abs_matrix(w) != a) {
    rep.notes.push_back("|W| differs from the given adjacency");
    return rep;
  }
  DesignReport srg = srg_check(a);
  if (!srg.pass) {
    rep.notes.push_back("adjacency is not strongly regular");
    return rep;
  }
  long long lambda = srg.param("lambda"), mu = srg.param("mu");
  rep.with_param("v", srg.param("v")).with_param("k", srg.param("k"))
      .with_param("lambda", lambda).with_param("mu", mu).with_param("n", n);
  if (lambda < 0 || mu < 0) {
    rep.notes.push_back("degenerate graph");
    return rep;
  }
  if (lambda % n != 0 || mu % n != 0) {
    rep.notes.push_back("divisibility obstruction: n does not divide lambda and mu");
    return rep;
  }
  DesignReport prof = balanced_signing_check(w, n);
  rep.pass = prof.pass;
  rep.witness = prof.witness;
  for (const std::string& note : prof.notes) rep.notes.push_back(note);
  return rep;
}

DesignReport siamese_check(const std::vector<GridMatrix>& family) {
  DesignReport rep;
  rep.kind = "siamese";
  if (family.empty()) {
    rep.notes.push_back("empty family");
    return rep;
  }
  const int v = family[0].rows();
  std::vector<GridMatrix> abs;
  std::vector<long long> params;
  for (const GridMatrix& w : family) {
    if (w.rows() != v || w.cols() != v) {
      rep.notes.push_back("members differ in order");
      return rep;
    }
    if (!all_unit_or_zero(w)) {
      rep.notes.push_back("entry is not unit-or-zero");
      return rep;
    }
    abs.push_back(abs_matrix(w));
    DesignReport srg = srg_check(abs.back());
    if (!srg.pass) {
      rep.notes.push_back("member is not strongly regular");
      return rep;
    }
    std::vector<long long> p{srg.param("v"), srg.param("k"), srg.param("lambda"),
                             srg.param("mu")};
    if (params.empty()) params = p;
    if (p != params) {
      rep.notes.push_back("members have unequal srg parameters");
      return rep;
    }
  }
  // common pairwise edge intersection
  GridMatrix shared(v, v);
  auto hadamard = [&](const GridMatrix& x, const GridMatrix& y) {
    GridMatrix r(v, v);
    for (int i = 0; i < v; ++i)
      for (int j = 0; j < v; ++j)
        if (!x.at(i, j).is_zero() && !y.at(i, j).is_zero()) r.set(i, j, Entry(1));
    return r;
  };
  if (family.size() == 1) {
    shared = abs[0];
  } else {
    bool first = true;
    for (std::size_t l = 0; l < abs.size(); ++l)
      for (std::size_t t = l + 1; t < abs.size(); ++t) {
        GridMatrix inter = hadamard(abs[l], abs[t]);
        if (first) {
          shared = inter;
          first = false;
        } else if (inter != shared) {
          rep.notes.push_back("pairwise intersections are not all equal");
          return rep;
        }
      }
  }
  // shared part must be a disjoint union of equal-size cliques
  std::vector<int> comp(v, -1);
  int ncomp = 0;
  for (int i = 0; i < v; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < v; ++y)
        if (!shared.at(x, y).is_zero() && comp[y] < 0) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  std::vector<int> size(ncomp, 0);
  for (int i = 0; i < v; ++i) ++size[comp[i]];
  int clique = size[0];
  for (int c = 0; c < ncomp; ++c)
    if (size[c] != clique) {
      rep.notes.push_back("shared components have unequal sizes");
      return rep;
    }
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      bool expect = i != j && comp[i] == comp[j];
      if (expect != !shared.at(i, j).is_zero()) {
        rep.fail_at(i, j);
        rep.notes.push_back("shared part is not a union of cliques");
        return rep;
      }
    }
  // union identity: sum of (A_l - S) plus S covers K_v exactly
  GridMatrix total = shared;
  for (const GridMatrix& a : abs) total = total + (a - shared);
  if (total != all_ones(v, v) - identity(v)) {
    rep.notes.push_back("members do not decompose the complete graph");
    return rep;
  }
  rep.pass = true;
  rep.with_param("v", v).with_param("members", static_cast<long long>(family.size()))
      .with_param("cliques", ncomp).with_param("clique_size", clique);
  for (long long p : params) rep.params.push_back(p);
  rep.param_names.insert(rep.param_names.end(), {"srg_v", "srg_k", "srg_lambda", "srg_mu"});
  return rep;
}

} // namespace qbw
