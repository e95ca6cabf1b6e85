#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbw/integer.hpp"

namespace qbw {

// Scalar rings, ordered by inclusion: Z is a subring of every Z[zeta_n],
// and each Z[zeta_n] sits inside its quaternion extension Z[zeta_n]<k>.
enum class Ring : std::uint8_t { Integer, Cyclotomic, Quaternionic };

// The ring a matrix (or entry) lives in. Kinds form a join semilattice:
// Integer <= Cyclotomic(n) <= Quaternionic(n), and cyclotomic orders join
// by lcm.
struct EntryKind {
  Ring ring = Ring::Integer;
  int order = 1; // root-of-unity order; always 1 for Integer

  static EntryKind integer() { return {Ring::Integer, 1}; }
  static EntryKind cyclotomic(int n);
  static EntryKind quaternionic(int n);

  bool operator==(const EntryKind&) const = default;
};

// Least upper bound of two kinds. Throws std::domain_error when the joined
// cyclotomic order would exceed the configured cap.
EntryKind join(EntryKind a, EntryKind b);

// Cap on the cyclotomic order reachable through cross-order arithmetic
// (lcm embedding). Default 360.
int cyclotomic_order_cap();
void set_cyclotomic_order_cap(int cap);

// Euler phi and the n-th cyclotomic polynomial (monic, coefficients low to
// high). Polynomials are computed once per order by iterated exact division
// of x^n - 1 and cached.
int euler_phi(int n);
const std::vector<Int>& cyclotomic_polynomial(int n);

// An exact scalar: either a rational integer, an element of Z[zeta_n] in the
// canonical power basis modulo the n-th cyclotomic polynomial, or a
// quaternionic element a + k*b with cyclotomic a, b subject to
//
//   k^2 = -1,   k*z = conj(z)*k   for every cyclotomic z.
//
// Representations are canonical: results demote to the integer kind whenever
// the residue is constant, and drop the k-part when it vanishes, so equality
// is coefficient comparison after common-order embedding.
class Entry {
public:
  Entry() : order_(1), quat_(false), a_(1) {}
  Entry(long v) : order_(1), quat_(false), a_{Int(v)} {}
  Entry(Int v) : order_(1), quat_(false), a_{std::move(v)} {}

  // zeta_n^j, reduced to canonical form. Requires n >= 1, 0 <= j < n.
  static Entry cyc_root(int n, int j);
  // The quaternion unit k.
  static Entry quaternion_unit();
  // a + k*b for cyclotomic a, b.
  static Entry quaternion(const Entry& a, const Entry& b);

  EntryKind kind() const;
  int order() const { return order_; }
  bool is_quaternionic() const { return quat_; }
  bool is_zero() const;
  bool is_integer() const { return !quat_ && order_ == 1; }
  // Requires is_integer().
  const Int& integer_value() const;

  // Cyclotomic part (the whole value unless quaternionic) and k-part in the
  // power basis of Z[zeta_order]. b-part is all zero unless quaternionic.
  const std::vector<Int>& part_a() const { return a_; }
  std::vector<Int> part_b() const;

  // The same value re-expressed in Z[zeta_n] for a multiple n of order().
  Entry embedded(int n) const;

  Entry operator-() const;
  Entry& operator+=(const Entry& rhs);
  Entry& operator-=(const Entry& rhs);
  Entry& operator*=(const Entry& rhs);

  friend Entry operator+(Entry lhs, const Entry& rhs) { return lhs += rhs; }
  friend Entry operator-(Entry lhs, const Entry& rhs) { return lhs -= rhs; }
  friend Entry operator*(Entry lhs, const Entry& rhs) { return lhs *= rhs; }

  bool operator==(const Entry& rhs) const;
  bool operator!=(const Entry& rhs) const { return !(*this == rhs); }

private:
  int order_;
  bool quat_;
  std::vector<Int> a_;
  std::vector<Int> b_; // empty unless quat_

  void normalize();
  friend Entry entry_conj(const Entry&);
};

// Ring anti-automorphism: complex conjugation on cyclotomics extended by
// conj(a + k b) = conj(a) - k b. Fixes integers; an involution.
Entry entry_conj(const Entry& x);

// True iff x = 0 or x * conj(x) = 1.
bool is_unit_or_zero(const Entry& x);

// Token grammar shared with the matrix file format:
//   0 | [-]1 | [-]i | [-]k | [-]w{n}^{j} | [-]w{n}^{j}*k
// where i abbreviates w4^1 and a bare "-" parses as -1. w{n}^{j}*k denotes
// the product zeta_n^j * k taken left to right.
Entry parse_entry_token(std::string_view token);

// Canonical token for a unit-or-zero entry, written relative to root order
// n (the matrix kind's order). Throws std::domain_error for entries the
// grammar cannot express.
std::string entry_token(const Entry& x, int n);

} // namespace qbw
