#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qbw/entry.hpp"

namespace qbw {

// Dense row-major matrix over the exact entry rings. Values are immutable in
// spirit: the mutating interface exists only for construction, and every
// operation returns a fresh matrix. The declared kind is the join of all
// entry kinds; individual entries may be stored in a narrower ring.
class GridMatrix {
public:
  GridMatrix() : rows_(0), cols_(0) {}
  GridMatrix(int rows, int cols, EntryKind kind = EntryKind::integer());

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  EntryKind kind() const { return kind_; }

  const Entry& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  void set(int i, int j, Entry v);

  bool operator==(const GridMatrix& rhs) const;
  bool operator!=(const GridMatrix& rhs) const { return !(*this == rhs); }

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_zero_one() const;
  bool has_zero_diagonal() const;

  GridMatrix transpose() const;
  // Conjugate transpose; for quaternionic matrices this is the reversal
  // anti-automorphism applied entrywise with transposition.
  GridMatrix adjoint() const;

  friend GridMatrix operator+(const GridMatrix& a, const GridMatrix& b);
  friend GridMatrix operator-(const GridMatrix& a, const GridMatrix& b);
  friend GridMatrix operator*(const GridMatrix& a, const GridMatrix& b);
  GridMatrix operator-() const;
  friend GridMatrix operator*(const Entry& s, const GridMatrix& m);

private:
  int rows_, cols_;
  EntryKind kind_ = EntryKind::integer();
  std::vector<Entry> data_;
};

GridMatrix identity(int n);
GridMatrix all_ones(int rows, int cols);
GridMatrix zero_matrix(int rows, int cols, EntryKind kind = EntryKind::integer());

// Anti-diagonal permutation matrix of order n.
GridMatrix back_identity(int n);

// Plain cyclic shift matrix (first row e_1) and circulant developed from a
// first row.
GridMatrix cyclic_shift(int n);
GridMatrix circulant(const std::vector<Entry>& first_row);

// Nega-shift matrix N of order n (wrap entry -1) and negacirculant developed
// from a first row: row i+1 is row i shifted right with the wrapped entry
// negated. N generates a cyclic group of order 2n with g^{-1} = g^T and
// -g = g^n.
GridMatrix nega_shift(int n);
GridMatrix negacirculant(const std::vector<Entry>& first_row);

// omega-shift matrix U of order n (wrap entry omega, a root of unity) and
// omega-circulant developed from a first row. U generates a cyclic group of
// order |omega| * n with omega*U = U^n.
GridMatrix omega_shift(int n, const Entry& omega);
GridMatrix omega_circulant(const std::vector<Entry>& first_row, const Entry& omega);

GridMatrix kron(const GridMatrix& a, const GridMatrix& b);

// Assemble from a matrix of uniformly sized blocks; ragged inputs are
// rejected.
GridMatrix block_compose(const std::vector<std::vector<GridMatrix>>& blocks);

// Entrywise absolute value: requires every entry unit-or-zero; the result is
// the 0/1 integer support matrix.
GridMatrix abs_matrix(const GridMatrix& m);

// Integer power with exact arithmetic (e >= 0).
GridMatrix mat_pow(const GridMatrix& m, int e);

// Text format "QBW v1": header `qbw <rows> <cols> kind=<int|cyc:n|quat:n>`,
// then one line per row of whitespace separated entry tokens. Writing
// re-emits canonical tokens; parsing is bit-exact.
std::string kind_tag(EntryKind kind);
EntryKind parse_kind_tag(const std::string& tag);
void write_qbw(std::ostream& os, const GridMatrix& m);
void write_qbw_file(const std::string& path, const GridMatrix& m);
GridMatrix parse_qbw(std::istream& is);
GridMatrix parse_qbw_file(const std::string& path);

} // namespace qbw
