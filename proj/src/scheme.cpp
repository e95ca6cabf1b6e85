#include "qbw/scheme.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "qbw/verify.hpp"

namespace qbw {

namespace {

// Splits a (0,+-1) matrix into disjoint 0/1 parts W = W1 - W2.
void split_signed(const GridMatrix& w, GridMatrix& w1, GridMatrix& w2) {
  const int v = w.rows();
  w1 = GridMatrix(v, v);
  w2 = GridMatrix(v, v);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      const Entry& e = w.at(i, j);
      if (e.is_zero()) continue;
      if (e == Entry(1))
        w1.set(i, j, Entry(1));
      else if (e == Entry(-1))
        w2.set(i, j, Entry(1));
      else
        throw std::invalid_argument("scheme builders need a (0,+-1) matrix");
    }
}

GridMatrix group_blocks(int m, int n) { return kron(identity(m), all_ones(n, n)); }

// [[0, M],[M^T, 0]] on two copies of 2v points.
GridMatrix off_diag(const GridMatrix& m) {
  GridMatrix zero = zero_matrix(m.rows(), m.cols());
  return block_compose({{zero, m}, {m.transpose(), zero}});
}

GridMatrix on_diag(const GridMatrix& m) {
  GridMatrix zero = zero_matrix(m.rows(), m.cols());
  return block_compose({{m, zero}, {zero, m}});
}

// Common classes A_0, A_1 and the two signed mixing classes
//   [[0, I2 x W1 + P x W2], ...] and [[0, I2 x W2 + P x W1], ...].
struct SignedPieces {
  GridMatrix a0, a1, mix1, mix2;
};

SignedPieces signed_pieces(const GridMatrix& w) {
  GridMatrix w1, w2;
  split_signed(w, w1, w2);
  const int v = w.rows();
  GridMatrix p = back_identity(2); // the 2x2 swap
  GridMatrix i2 = identity(2);
  SignedPieces out;
  out.a0 = identity(4 * v);
  out.a1 = on_diag(kron(p, identity(v)));
  out.mix1 = off_diag(kron(i2, w1) + kron(p, w2));
  out.mix2 = off_diag(kron(i2, w2) + kron(p, w1));
  return out;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

} // namespace

SchemeData build_srg_scheme(const GridMatrix& w) {
  require(w.kind().ring == Ring::Integer, "signed SRG scheme needs a (0,+-1) matrix");
  require(is_weighing(w).pass, "W is not a weighing matrix");
  GridMatrix a = abs_matrix(w);
  require(srg_check(a).pass, "|W| is not strongly regular");
  const int v = w.rows();
  SignedPieces sp = signed_pieces(w);
  GridMatrix j2 = all_ones(2, 2);
  GridMatrix co = all_ones(v, v) - identity(v) - a;

  SchemeData s;
  s.points = 4 * v;
  s.classes = {sp.a0,
               sp.a1,
               on_diag(kron(j2, a)),
               on_diag(kron(j2, co)),
               off_diag(kron(j2, identity(v))),
               sp.mix1,
               sp.mix2,
               off_diag(kron(j2, co))};
  return s;
}

namespace {

SchemeData build_gdd_scheme(const GridMatrix& w, int m, int n, bool case1) {
  require(w.kind().ring == Ring::Integer, "signed SGDD scheme needs a (0,+-1) matrix");
  require(is_weighing(w).pass, "W is not a weighing matrix");
  GridMatrix a = abs_matrix(w);
  const int v = w.rows();
  require(v == m * n, "order must equal m*n");
  DesignReport gdd = gdd_check(a, m, n);
  require(gdd.pass, "|W| is not a symmetric group divisible design");
  long long k = gdd.param("k");
  require(k < v, "k < v required");
  GridMatrix jmn = group_blocks(m, n);
  GridMatrix prod = a * jmn;
  GridMatrix prod2 = jmn * a;
  GridMatrix expect = case1
      ? Entry(k / m) * all_ones(v, v)
      : Entry(k / (m - 1)) * (all_ones(v, v) - jmn);
  if (case1)
    require(k % m == 0, "k/m must be integral");
  else
    require(k % (m - 1) == 0, "k/(m-1) must be integral");
  require(prod == expect && prod2 == expect,
          "|W| J_{m,n} block-regularity property fails");

  SignedPieces sp = signed_pieces(w);
  GridMatrix j2 = all_ones(2, 2);
  SchemeData s;
  s.points = 4 * v;
  s.classes = {sp.a0,
               sp.a1,
               on_diag(kron(j2, jmn - identity(v))),
               on_diag(kron(j2, all_ones(v, v) - jmn)),
               sp.mix1,
               sp.mix2};
  if (case1) {
    s.classes.push_back(off_diag(kron(j2, all_ones(v, v) - a)));
  } else {
    s.classes.push_back(off_diag(kron(j2, all_ones(v, v) - a - jmn)));
    s.classes.push_back(off_diag(kron(j2, jmn)));
  }
  return s;
}

} // namespace

SchemeData build_gdd_scheme_case1(const GridMatrix& w, int m, int n) {
  return build_gdd_scheme(w, m, n, true);
}

SchemeData build_gdd_scheme_case2(const GridMatrix& w, int m, int n) {
  return build_gdd_scheme(w, m, n, false);
}

DesignReport verify_scheme(SchemeData& s) {
  DesignReport rep;
  rep.kind = "scheme";
  const int d1 = s.dim();
  const int x = s.points;
  s.verified = false;
  if (d1 == 0 || x == 0) {
    rep.notes.push_back("empty scheme");
    return rep;
  }
  for (const GridMatrix& a : s.classes) {
    if (a.rows() != x || a.cols() != x || !a.is_zero_one()) {
      rep.notes.push_back("class is not a 0/1 matrix on the point set");
      return rep;
    }
    if (!a.is_symmetric()) {
      for (int i = 0; i < x && !rep.witness; ++i)
        for (int j = i + 1; j < x; ++j)
          if (a.at(i, j) != a.at(j, i)) {
            rep.fail_at(i, j);
            break;
          }
      rep.notes.push_back("class is not symmetric");
      return rep;
    }
  }
  if (s.classes[0] != identity(x)) {
    rep.notes.push_back("A_0 is not the identity");
    return rep;
  }
  // partition of J and the class-id map
  std::vector<int> cls(static_cast<std::size_t>(x) * x, -1);
  for (int c = 0; c < d1; ++c)
    for (int i = 0; i < x; ++i)
      for (int j = 0; j < x; ++j) {
        if (s.classes[c].at(i, j).is_zero()) continue;
        std::size_t idx = static_cast<std::size_t>(i) * x + j;
        if (cls[idx] != -1) {
          rep.fail_at(i, j);
          rep.notes.push_back("classes overlap");
          return rep;
        }
        cls[idx] = c;
      }
  for (std::size_t idx = 0; idx < cls.size(); ++idx)
    if (cls[idx] < 0) {
      rep.fail_at(static_cast<int>(idx) / x, static_cast<int>(idx) % x);
      rep.notes.push_back("classes do not cover all pairs");
      return rep;
    }

  s.valencies.assign(d1, 0);
  for (int c = 0; c < d1; ++c) {
    long long row0 = 0;
    for (int j = 0; j < x; ++j)
      if (!s.classes[c].at(0, j).is_zero()) ++row0;
    for (int i = 1; i < x; ++i) {
      long long w = 0;
      for (int j = 0; j < x; ++j)
        if (!s.classes[c].at(i, j).is_zero()) ++w;
      if (w != row0) {
        rep.fail_at(i, 0);
        rep.notes.push_back("class valency is not constant");
        return rep;
      }
    }
    s.valencies[c] = row0;
  }

  s.tensor.assign(d1, std::vector<std::vector<long long>>(
                          d1, std::vector<long long>(d1, 0)));
  for (int i = 0; i < d1; ++i)
    for (int j = i; j < d1; ++j) {
      GridMatrix prod = s.classes[i] * s.classes[j];
      std::vector<long long> fiber(d1, -1);
      for (int r = 0; r < x; ++r)
        for (int c = 0; c < x; ++c) {
          long long val = static_cast<long long>(prod.at(r, c).integer_value());
          int k = cls[static_cast<std::size_t>(r) * x + c];
          if (fiber[k] < 0) fiber[k] = val;
          if (fiber[k] != val) {
            rep.fail_at(r, c);
            rep.notes.push_back("product A_" + std::to_string(i) + " A_" +
                                std::to_string(j) + " is not constant on class " +
                                std::to_string(k));
            return rep;
          }
        }
      for (int k = 0; k < d1; ++k) {
        long long val = fiber[k] < 0 ? 0 : fiber[k];
        s.tensor[i][j][k] = val;
        s.tensor[j][i][k] = val;
      }
    }

  s.verified = true;
  rep.pass = true;
  rep.with_param("points", x).with_param("classes", d1);
  return rep;
}

Eigen::MatrixXd intersection_matrix(const SchemeData& s, int i) {
  const int d1 = s.dim();
  Eigen::MatrixXd b(d1, d1);
  for (int j = 0; j < d1; ++j)
    for (int k = 0; k < d1; ++k) b(j, k) = static_cast<double>(s.tensor[i][j][k]);
  return b;
}

EigenPair eigenmatrices(const SchemeData& s) {
  if (!s.verified) throw std::invalid_argument("eigenmatrices need a verified scheme");
  const int d1 = s.dim();
  // Left-multiplication matrices L_i = B_i^T on the class basis; columns of
  // Q are their common eigenvectors with eigenvalues P_{mi}.
  std::vector<Eigen::MatrixXd> reg(d1);
  for (int i = 0; i < d1; ++i) reg[i] = intersection_matrix(s, i).transpose();

  // Fixed documented coefficient sets: powers of pi, then powers of e as the
  // retry. Both are generic for the separation of the common eigenspaces.
  const double bases[2] = {M_PI, std::exp(1.0)};
  for (double base : bases) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d1, d1);
    double c = 1.0;
    for (int i = 0; i < d1; ++i, c *= base) m += c * reg[i];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) continue;
    // demand real, separated eigenvalues
    double scale = m.cwiseAbs().maxCoeff();
    bool ok = true;
    for (int i = 0; i < d1 && ok; ++i)
      if (std::abs(solver.eigenvalues()(i).imag()) > 1e-8 * scale) ok = false;
    for (int i = 0; i < d1 && ok; ++i)
      for (int j = i + 1; j < d1 && ok; ++j)
        if (std::abs(solver.eigenvalues()(i).real() - solver.eigenvalues()(j).real()) <
            1e-7 * std::max(1.0, scale))
          ok = false;
    if (!ok) continue;

    EigenPair out;
    out.P.resize(d1, d1);
    for (int mrow = 0; mrow < d1; ++mrow) {
      Eigen::VectorXd w = solver.eigenvectors().col(mrow).real();
      int pivot = 0;
      for (int i = 1; i < d1; ++i)
        if (std::abs(w(i)) > std::abs(w(pivot))) pivot = i;
      for (int i = 0; i < d1; ++i) {
        Eigen::VectorXd lw = reg[i] * w;
        out.P(mrow, i) = lw(pivot) / w(pivot);
      }
    }
    out.Q = s.points * out.P.inverse();
    return out;
  }
  throw std::runtime_error("defective generic combination in eigenmatrix computation");
}

namespace {

EigenPair closed_form_srg(double k, double sv, double tv) {
  double den = k + sv * tv;
  double vtx = (k - sv) * (k - tv) / den;
  double c = -2.0 * k * (sv + 1.0) * (tv + 1.0) / den; // = 2(v-1-k)
  double rk = std::sqrt(k);
  EigenPair e;
  e.P.resize(8, 8);
  auto row = [&](int m, std::initializer_list<double> vals) {
    int i = 0;
    for (double val : vals) e.P(m, i++) = val;
  };
  row(0, {1, 1, 2 * k, c, 2, k, k, c});
  row(1, {1, 1, 2 * k, c, -2, -k, -k, -c});
  row(2, {1, 1, 2 * sv, -2 * (sv + 1), 2, sv, sv, -2 * (sv + 1)});
  row(3, {1, 1, 2 * sv, -2 * (sv + 1), -2, -sv, -sv, 2 * (sv + 1)});
  row(4, {1, 1, 2 * tv, -2 * (tv + 1), 2, tv, tv, -2 * (tv + 1)});
  row(5, {1, 1, 2 * tv, -2 * (tv + 1), -2, -tv, -tv, 2 * (tv + 1)});
  row(6, {1, -1, 0, 0, 0, rk, -rk, 0});
  row(7, {1, -1, 0, 0, 0, -rk, rk, 0});

  double q0 = k * (k - tv) * (tv + 1) / ((tv - sv) * den);
  double q1 = k * (k - sv) * (sv + 1) / ((sv - tv) * den);
  double q2 = (k - sv) * (k - tv) / den;
  double q3 = sv * (tv + 1) * (tv - k) / ((sv - tv) * den);
  double q4 = (k - sv) * (sv + 1) * tv / ((sv - tv) * den);
  double q5 = sv * (k - tv) * (tv + 1) / ((sv - tv) * den);
  double q6 = q2 / rk;
  e.Q.resize(8, 8);
  auto qrow = [&](int i, std::initializer_list<double> vals) {
    int j = 0;
    for (double val : vals) e.Q(i, j++) = val;
  };
  qrow(0, {1, 1, q0, q0, q1, q1, q2, q2});
  qrow(1, {1, 1, q0, q0, q1, q1, -q2, -q2});
  qrow(2, {1, 1, q3, q3, q4, q4, 0, 0});
  qrow(3, {1, 1, (tv - k) / (sv - tv), (tv - k) / (sv - tv), (k - sv) / (sv - tv),
           (k - sv) / (sv - tv), 0, 0});
  qrow(4, {1, -1, q0, -q0, q1, -q1, 0, 0});
  qrow(5, {1, -1, q3, q5, q4, -q4, q6, -q6});
  qrow(6, {1, -1, q3, q5, q4, -q4, -q6, q6});
  qrow(7, {1, -1, (tv - k) / (sv - tv), (k - tv) / (sv - tv), (k - sv) / (sv - tv),
           (sv - k) / (sv - tv), 0, 0});
  (void)vtx;
  return e;
}

EigenPair closed_form_gdd1(double k, double m, double n) {
  double rk = std::sqrt(k);
  double ee = std::sqrt(k * (m * n - k)) / std::sqrt(m * (n - 1));
  EigenPair e;
  e.P.resize(7, 7);
  auto row = [&](int r, std::initializer_list<double> vals) {
    int i = 0;
    for (double val : vals) e.P(r, i++) = val;
  };
  row(0, {1, 1, 2 * (n - 1), 2 * (m - 1) * n, k, k, 2 * (m * n - k)});
  row(1, {1, -1, 0, 0, rk, -rk, 0});
  row(2, {1, 1, 2 * (n - 1), -2 * n, 0, 0, 0});
  row(3, {1, -1, 0, 0, -rk, rk, 0});
  row(4, {1, 1, 2 * (n - 1), 2 * (m - 1) * n, -k, -k, 2 * (k - m * n)});
  row(5, {1, 1, -2, 0, ee, ee, -2 * ee});
  row(6, {1, 1, -2, 0, -ee, -ee, 2 * ee});

  double g = std::sqrt(m * (n - 1) * (m * n - k)) / rk;
  double h = std::sqrt(k * m * (n - 1)) / std::sqrt(m * n - k);
  e.Q.resize(7, 7);
  auto qrow = [&](int r, std::initializer_list<double> vals) {
    int i = 0;
    for (double val : vals) e.Q(r, i++) = val;
  };
  qrow(0, {1, m * n, 2 * (m - 1), m * n, 1, m * (n - 1), m * (n - 1)});
  qrow(1, {1, -m * n, 2 * (m - 1), -m * n, 1, m * (n - 1), m * (n - 1)});
  qrow(2, {1, 0, 2 * (m - 1), 0, 1, -m, -m});
  qrow(3, {1, 0, -2, 0, 1, 0, 0});
  qrow(4, {1, m * n / rk, 0, -m * n / rk, -1, g, -g});
  qrow(5, {1, -m * n / rk, 0, m * n / rk, -1, g, -g});
  qrow(6, {1, 0, 0, 0, -1, -h, h});
  return e;
}

EigenPair closed_form_gdd2(double k, double m, double n) {
  double rk = std::sqrt(k);
  double f = std::sqrt(k * (m * n - n - k)) / std::sqrt((m - 1) * (n - 1));
  EigenPair e;
  e.P.resize(8, 8);
  auto row = [&](int r, std::initializer_list<double> vals) {
    int i = 0;
    for (double val : vals) e.P(r, i++) = val;
  };
  row(0, {1, 1, 2 * (n - 1), 2 * (m - 1) * n, k, k, 2 * (m * n - n - k), 2 * n});
  row(1, {1, -1, 0, 0, rk, -rk, 0, 0});
  row(2, {1, 1, 2 * (n - 1), -2 * n, k / (1 - m), k / (1 - m),
          2 * (k - m * n + n) / (m - 1), 2 * n});
  row(3, {1, 1, 2 * (n - 1), -2 * n, k / (m - 1), k / (m - 1),
          -2 * (k - m * n + n) / (m - 1), -2 * n});
  row(4, {1, -1, 0, 0, -rk, rk, 0, 0});
  row(5, {1, 1, 2 * (n - 1), 2 * (m - 1) * n, -k, -k, 2 * (k - m * n + n), -2 * n});
  row(6, {1, 1, -2, 0, -f, -f, 2 * f, 0});
  row(7, {1, 1, -2, 0, f, f, -2 * f, 0});

  double g = m * std::sqrt((n - 1) * (m * n - n - k)) / std::sqrt(k * (m - 1));
  double h = m * std::sqrt(k * (n - 1)) / std::sqrt((m - 1) * (m * n - n - k));
  e.Q.resize(8, 8);
  auto qrow = [&](int r, std::initializer_list<double> vals) {
    int i = 0;
    for (double val : vals) e.Q(r, i++) = val;
  };
  qrow(0, {1, m * n, m - 1, m - 1, m * n, 1, m * (n - 1), m * (n - 1)});
  qrow(1, {1, -m * n, m - 1, m - 1, -m * n, 1, m * (n - 1), m * (n - 1)});
  qrow(2, {1, 0, m - 1, m - 1, 0, 1, -m, -m});
  qrow(3, {1, 0, -1, -1, 0, 1, 0, 0});
  qrow(4, {1, m * n / rk, -1, 1, -m * n / rk, -1, -g, g});
  qrow(5, {1, -m * n / rk, -1, 1, m * n / rk, -1, -g, g});
  qrow(6, {1, 0, -1, 1, 0, -1, h, -h});
  qrow(7, {1, 0, m - 1, -(m - 1), 0, -1, 0, 0});
  return e;
}

} // namespace

EigenPair closed_form_eigenmatrices(SchemeFamily family, double a, double b, double c) {
  switch (family) {
    case SchemeFamily::Srg: return closed_form_srg(a, b, c);
    case SchemeFamily::Gdd1: return closed_form_gdd1(a, b, c);
    case SchemeFamily::Gdd2: return closed_form_gdd2(a, b, c);
  }
  throw std::logic_error("unreachable");
}

DesignReport compare_closed_form(const EigenPair& e, SchemeFamily family, double a,
                                 double b, double c) {
  DesignReport rep;
  rep.kind = "eigenmatrices";
  EigenPair cf = closed_form_eigenmatrices(family, a, b, c);
  const int d1 = static_cast<int>(e.P.rows());
  if (cf.P.rows() != d1) {
    rep.notes.push_back("class count differs from the family's");
    return rep;
  }
  const double tol = 1e-6;
  // duality sanity on the closed form itself
  double x = cf.P.row(0).sum();
  if (((cf.P * cf.Q) - x * Eigen::MatrixXd::Identity(d1, d1)).cwiseAbs().maxCoeff() >
      tol * std::max(1.0, x)) {
    rep.notes.push_back("closed form fails P Q = |X| I");
    return rep;
  }
  // row m of numeric P can play closed-form row r iff both P rows and the
  // corresponding Q columns agree entrywise
  std::vector<std::vector<int>> options(d1);
  for (int m = 0; m < d1; ++m)
    for (int r = 0; r < d1; ++r) {
      bool ok = true;
      for (int i = 0; i < d1 && ok; ++i)
        if (std::abs(e.P(m, i) - cf.P(r, i)) > tol) ok = false;
      for (int i = 0; i < d1 && ok; ++i)
        if (std::abs(e.Q(i, m) - cf.Q(i, r)) > tol) ok = false;
      if (ok) options[m].push_back(r);
    }
  std::vector<int> assign(d1, -1), used(d1, 0);
  auto match = [&](auto&& self, int m) -> bool {
    if (m == d1) return true;
    for (int r : options[m]) {
      if (used[r]) continue;
      used[r] = 1;
      assign[m] = r;
      if (self(self, m + 1)) return true;
      used[r] = 0;
    }
    return false;
  };
  rep.pass = match(match, 0);
  if (!rep.pass) {
    rep.notes.push_back("no row bijection onto the closed form within 1e-6");
    return rep;
  }
  std::string perm = "row map";
  for (int m = 0; m < d1; ++m) perm += " " + std::to_string(assign[m]);
  rep.notes.push_back(perm);
  return rep;
}

namespace {

GridMatrix read_block(const GridMatrix& big, int r0, int c0, int size) {
  GridMatrix b(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      const Entry& e = big.at(r0 + i, c0 + j);
      if (!e.is_zero()) b.set(i, j, e);
    }
  return b;
}

} // namespace

GridMatrix extract_from_scheme(const SchemeData& s, SchemeFamily family) {
  const int expected = family == SchemeFamily::Gdd1 ? 7 : 8;
  if (s.dim() != expected)
    throw std::invalid_argument("scheme class count does not match the family");
  if (s.points % 4 != 0)
    throw std::invalid_argument("scheme point count is not 4v");
  const int v = s.points / 4;
  // builder order fingerprint: A_1 is the doubled swap matching
  GridMatrix a1 = on_diag(kron(back_identity(2), identity(v)));
  if (s.classes[1] != a1)
    throw std::invalid_argument("scheme classes are not in builder order");

  const int w1_class = family == SchemeFamily::Srg ? 5 : 4;
  GridMatrix w1 = read_block(s.classes[w1_class], 0, 2 * v, v);
  GridMatrix w2 = read_block(s.classes[w1_class + 1], 0, 2 * v, v);
  GridMatrix w = w1 - w2;
  // converse proof identity (A_5 - A_6)^2 = 2k(A_0 - A_1) (A_4, A_5 for the
  // gdd families)
  GridMatrix diff = s.classes[w1_class] - s.classes[w1_class + 1];
  DesignReport wrep = is_weighing(w);
  if (!wrep.pass)
    throw std::invalid_argument("extracted matrix is not a weighing matrix");
  long long k = wrep.param("k");
  if (diff * diff != Entry(2 * k) * (s.classes[0] - s.classes[1]))
    throw std::invalid_argument("scheme fails the converse square identity");

  GridMatrix a = abs_matrix(w);
  if (family == SchemeFamily::Srg) {
    if (!srg_check(a).pass)
      throw std::invalid_argument("extracted support is not strongly regular");
    return w;
  }
  // group sizes recoverable from A_2 = J_2 x (J_{m,n} - I) doubled
  GridMatrix a2block = read_block(s.classes[2], 0, 0, v);
  int n = 0;
  for (int j = 0; j < v; ++j)
    if (!a2block.at(0, j).is_zero()) ++n;
  ++n; // group contains the point itself
  if (n < 1 || v % n != 0)
    throw std::invalid_argument("scheme group structure is malformed");
  int m = v / n;
  if (s.classes[2] != on_diag(kron(all_ones(2, 2), group_blocks(m, n) - identity(v))))
    throw std::invalid_argument("scheme classes are not in builder order");
  DesignReport gdd = gdd_check(a, m, n);
  if (!gdd.pass)
    throw std::invalid_argument("extracted support is not a symmetric GDD");
  GridMatrix jmn = group_blocks(m, n);
  GridMatrix expect = family == SchemeFamily::Gdd1
      ? Entry(gdd.param("k") / m) * all_ones(v, v)
      : Entry(gdd.param("k") / (m - 1)) * (all_ones(v, v) - jmn);
  if (a * jmn != expect || jmn * a != expect)
    throw std::invalid_argument("extracted support fails the block-regularity property");
  return w;
}

void write_scheme(std::ostream& os, const SchemeData& s) {
  os << "scheme " << s.points << ' ' << s.dim() << '\n';
  for (const GridMatrix& a : s.classes) write_qbw(os, a);
}

void write_scheme_file(const std::string& path, const SchemeData& s) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_scheme(os, s);
}

SchemeData parse_scheme(std::istream& is) {
  std::string magic;
  int points, d1;
  if (!(is >> magic >> points >> d1) || magic != "scheme" || points <= 0 || d1 <= 0)
    throw std::invalid_argument("malformed scheme header");
  SchemeData s;
  s.points = points;
  for (int i = 0; i < d1; ++i) s.classes.push_back(parse_qbw(is));
  return s;
}

SchemeData parse_scheme_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open scheme file: " + path);
  return parse_scheme(is);
}

} // namespace qbw
