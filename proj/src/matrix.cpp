#include "qbw/matrix.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qbw {

GridMatrix::GridMatrix(int rows, int cols, EntryKind kind)
    : rows_(rows), cols_(cols), kind_(kind),
      data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

void GridMatrix::set(int i, int j, Entry v) {
  kind_ = join(kind_, v.kind());
  data_[static_cast<std::size_t>(i) * cols_ + j] = std::move(v);
}

bool GridMatrix::operator==(const GridMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != rhs.data_[i]) return false;
  return true;
}

bool GridMatrix::is_zero() const {
  for (const Entry& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool GridMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool GridMatrix::is_zero_one() const {
  for (const Entry& e : data_)
    if (!e.is_zero() && e != Entry(1)) return false;
  return true;
}

bool GridMatrix::has_zero_diagonal() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    if (!at(i, i).is_zero()) return false;
  return true;
}

GridMatrix GridMatrix::transpose() const {
  GridMatrix t(cols_, rows_, kind_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      t.set(j, i, at(i, j));
  return t;
}

GridMatrix GridMatrix::adjoint() const {
  GridMatrix t(cols_, rows_, kind_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      t.set(j, i, entry_conj(at(i, j)));
  return t;
}

GridMatrix operator+(const GridMatrix& a, const GridMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix shape mismatch in addition");
  GridMatrix r(a.rows_, a.cols_, join(a.kind_, b.kind_));
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    r.data_[i] = a.data_[i] + b.data_[i];
  return r;
}

GridMatrix operator-(const GridMatrix& a, const GridMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix shape mismatch in subtraction");
  GridMatrix r(a.rows_, a.cols_, join(a.kind_, b.kind_));
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    r.data_[i] = a.data_[i] - b.data_[i];
  return r;
}

GridMatrix GridMatrix::operator-() const {
  GridMatrix r(rows_, cols_, kind_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

GridMatrix operator*(const Entry& s, const GridMatrix& m) {
  GridMatrix r(m.rows_, m.cols_, join(s.kind(), m.kind_));
  for (std::size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = s * m.data_[i];
  return r;
}

namespace {

// Integer matrices multiply through machine words when a conservative bound
// on the intermediate values allows it; beyond that, schoolbook over Int.
bool try_int64_product(const GridMatrix& a, const GridMatrix& b, GridMatrix& out) {
  const long long cap = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> av(static_cast<std::size_t>(a.rows()) * a.cols());
  std::vector<long long> bv(static_cast<std::size_t>(b.rows()) * b.cols());
  long long amax = 0, bmax = 0;
  auto load = [](const GridMatrix& m, std::vector<long long>& v, long long& mx) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        const Entry& e = m.at(i, j);
        const Int& x = e.integer_value();
        if (x < std::numeric_limits<long long>::min() / 2 ||
            x > std::numeric_limits<long long>::max() / 2)
          return false;
        long long w = static_cast<long long>(x);
        v[static_cast<std::size_t>(i) * m.cols() + j] = w;
        mx = std::max(mx, w < 0 ? -w : w);
      }
    return true;
  };
  if (!load(a, av, amax) || !load(b, bv, bmax)) return false;
  if (amax > 0 && bmax > 0 && amax > cap / bmax / std::max(1, a.cols())) return false;

  out = GridMatrix(a.rows(), b.cols(), EntryKind::integer());
  std::vector<long long> acc(b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int l = 0; l < a.cols(); ++l) {
      long long x = av[static_cast<std::size_t>(i) * a.cols() + l];
      if (x == 0) continue;
      const long long* brow = &bv[static_cast<std::size_t>(l) * b.cols()];
      for (int j = 0; j < b.cols(); ++j) acc[j] += x * brow[j];
    }
    for (int j = 0; j < b.cols(); ++j)
      if (acc[j] != 0) out.set(i, j, Entry(acc[j]));
  }
  return true;
}

} // namespace

GridMatrix operator*(const GridMatrix& a, const GridMatrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix shape mismatch in multiplication");
  EntryKind k = join(a.kind_, b.kind_);
  if (k.ring == Ring::Integer) {
    GridMatrix fast;
    if (try_int64_product(a, b, fast)) return fast;
  }
  GridMatrix r(a.rows_, b.cols_, k);
  for (int i = 0; i < a.rows_; ++i)
    for (int l = 0; l < a.cols_; ++l) {
      const Entry& x = a.at(i, l);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Entry& y = b.at(l, j);
        if (y.is_zero()) continue;
        r.data_[static_cast<std::size_t>(i) * b.cols_ + j] += x * y;
      }
    }
  return r;
}

GridMatrix identity(int n) {
  GridMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Entry(1));
  return m;
}

GridMatrix all_ones(int rows, int cols) {
  GridMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, Entry(1));
  return m;
}

GridMatrix zero_matrix(int rows, int cols, EntryKind kind) {
  return GridMatrix(rows, cols, kind);
}

GridMatrix back_identity(int n) {
  GridMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, n - 1 - i, Entry(1));
  return m;
}

GridMatrix cyclic_shift(int n) {
  std::vector<Entry> row(n, Entry(0));
  if (n == 1)
    row[0] = Entry(1);
  else
    row[1] = Entry(1);
  return circulant(row);
}

GridMatrix circulant(const std::vector<Entry>& first_row) {
  return omega_circulant(first_row, Entry(1));
}

GridMatrix nega_shift(int n) {
  return omega_shift(n, Entry(-1));
}

GridMatrix negacirculant(const std::vector<Entry>& first_row) {
  return omega_circulant(first_row, Entry(-1));
}

GridMatrix omega_shift(int n, const Entry& omega) {
  std::vector<Entry> row(n, Entry(0));
  if (n == 1)
    row[0] = omega;
  else
    row[1] = Entry(1);
  return omega_circulant(row, omega);
}

GridMatrix omega_circulant(const std::vector<Entry>& first_row, const Entry& omega) {
  if (first_row.empty()) throw std::invalid_argument("empty first row");
  if (!is_unit_or_zero(omega) || omega.is_zero())
    throw std::invalid_argument("shift factor must be a unit");
  int n = static_cast<int>(first_row.size());
  GridMatrix m(n, n);
  std::vector<Entry> row = first_row;
  for (int i = 0;; ++i) {
    for (int j = 0; j < n; ++j) m.set(i, j, row[j]);
    if (i + 1 == n) break;
    // shift right one position; the wrapped entry picks up the factor omega
    std::vector<Entry> next(n);
    next[0] = omega * row[n - 1];
    for (int j = 1; j < n; ++j) next[j] = row[j - 1];
    row = std::move(next);
  }
  return m;
}

GridMatrix kron(const GridMatrix& a, const GridMatrix& b) {
  GridMatrix r(a.rows() * b.rows(), a.cols() * b.cols(), join(a.kind(), b.kind()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Entry& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q) {
          const Entry& y = b.at(p, q);
          if (y.is_zero()) continue;
          r.set(i * b.rows() + p, j * b.cols() + q, x * y);
        }
    }
  return r;
}

GridMatrix block_compose(const std::vector<std::vector<GridMatrix>>& blocks) {
  if (blocks.empty() || blocks[0].empty())
    throw std::invalid_argument("empty block matrix");
  int brows = blocks[0][0].rows(), bcols = blocks[0][0].cols();
  std::size_t width = blocks[0].size();
  for (const auto& row : blocks) {
    if (row.size() != width) throw std::invalid_argument("ragged block rows");
    for (const auto& blk : row)
      if (blk.rows() != brows || blk.cols() != bcols)
        throw std::invalid_argument("blocks must share a uniform size");
  }
  GridMatrix r(static_cast<int>(blocks.size()) * brows,
               static_cast<int>(width) * bcols);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi)
    for (std::size_t bj = 0; bj < width; ++bj) {
      const GridMatrix& blk = blocks[bi][bj];
      for (int i = 0; i < brows; ++i)
        for (int j = 0; j < bcols; ++j) {
          const Entry& e = blk.at(i, j);
          if (!e.is_zero())
            r.set(static_cast<int>(bi) * brows + i,
                  static_cast<int>(bj) * bcols + j, e);
        }
    }
  return r;
}

GridMatrix abs_matrix(const GridMatrix& m) {
  GridMatrix r(m.rows(), m.cols(), EntryKind::integer());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Entry& e = m.at(i, j);
      if (e.is_zero()) continue;
      if (!is_unit_or_zero(e))
        throw std::domain_error("abs_matrix requires unit-or-zero entries");
      r.set(i, j, Entry(1));
    }
  return r;
}

GridMatrix mat_pow(const GridMatrix& m, int e) {
  if (!m.is_square()) throw std::invalid_argument("matrix power needs a square matrix");
  if (e < 0) throw std::invalid_argument("negative matrix power");
  GridMatrix acc = identity(m.rows());
  GridMatrix base = m;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return acc;
}

std::string kind_tag(EntryKind kind) {
  switch (kind.ring) {
    case Ring::Integer: return "int";
    case Ring::Cyclotomic: return "cyc:" + std::to_string(kind.order);
    case Ring::Quaternionic: return "quat:" + std::to_string(kind.order);
  }
  throw std::logic_error("unreachable");
}

EntryKind parse_kind_tag(const std::string& tag) {
  if (tag == "int") return EntryKind::integer();
  auto colon = tag.find(':');
  if (colon != std::string::npos) {
    int n = std::stoi(tag.substr(colon + 1));
    std::string head = tag.substr(0, colon);
    if (head == "cyc") return EntryKind::cyclotomic(n);
    if (head == "quat") return EntryKind::quaternionic(n);
  }
  throw std::invalid_argument("unknown matrix kind tag: " + tag);
}

void write_qbw(std::ostream& os, const GridMatrix& m) {
  os << "qbw " << m.rows() << ' ' << m.cols() << " kind=" << kind_tag(m.kind()) << '\n';
  int order = std::max(m.kind().order, 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << entry_token(m.at(i, j), order);
    }
    os << '\n';
  }
}

void write_qbw_file(const std::string& path, const GridMatrix& m) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_qbw(os, m);
}

GridMatrix parse_qbw(std::istream& is) {
  std::string magic, kindword;
  int rows, cols;
  if (!(is >> magic >> rows >> cols >> kindword) || magic != "qbw" ||
      kindword.rfind("kind=", 0) != 0)
    throw std::invalid_argument("malformed qbw header");
  EntryKind kind = parse_kind_tag(kindword.substr(5));
  GridMatrix m(rows, cols, kind);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      std::string tok;
      if (!(is >> tok)) throw std::invalid_argument("truncated qbw matrix body");
      Entry e = parse_entry_token(tok);
      if (join(e.kind(), kind) != kind)
        throw std::invalid_argument("entry token " + tok + " outside declared kind " +
                                    kind_tag(kind));
      m.set(i, j, std::move(e));
    }
  return m;
}

GridMatrix parse_qbw_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open qbw file: " + path);
  return parse_qbw(is);
}

} // namespace qbw
