#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qbw/matrix.hpp"
#include "qbw/report.hpp"

namespace qbw {

// Balanced generalized weighing matrix over a cyclic group C_g in exponent
// form: cell -1 stands for the zero entry, otherwise the cell holds the
// group exponent in [0, g).
struct BgwMatrix {
  int v = 0;           // order
  int group_order = 0; // cyclic group C_g
  int k = 0;           // verified row weight
  std::vector<int> cells;

  BgwMatrix() = default;
  BgwMatrix(int order, int g)
      : v(order), group_order(g), cells(static_cast<std::size_t>(order) * order, -1) {}

  int at(int i, int j) const { return cells[static_cast<std::size_t>(i) * v + j]; }
  void set(int i, int j, int e) { cells[static_cast<std::size_t>(i) * v + j] = e; }
};

// From-scratch verification of the BGW axioms: constant positive row weight
// k and, for every pair of distinct rows, each group element appearing
// exactly lambda/g times in the quotient multiset over shared support.
DesignReport bgw_check(const BgwMatrix& h);

// W_{ji} = g^{g/2} W_{ij} for i != j on shared support, zero diagonal.
bool skew_check(const BgwMatrix& h);
bool symmetric_check(const BgwMatrix& h);

// Classical-parameter family member: a verified BGW(Q+1, Q, Q-1) over C_n
// for a prime power Q and n | Q-1, indexed by the projective line over
// GF(Q). Skew when (Q-1)/n is odd, symmetric when even or Q is even.
BgwMatrix paley_bgw(long Q, int n);

enum class CoreFlavor {
  Negacirculant, // entries 0, +-1; odd prime power q
  OmegaCirculant // entries 0 or (q-1)-st roots of unity; even prime power q
};

// Depth-first search for a W(q+1, q) of the requested circulant type with
// zero diagonal; deterministic order, first solution returned. Throws
// std::runtime_error (with the explored node count) when the search space is
// exhausted.
GridMatrix conference_core(int q, CoreFlavor flavor = CoreFlavor::Negacirculant);

// Generalized Hadamard source: BGW(m, m, m) over C_g. Search mode normalizes
// the first row and column to exponent 0, explores candidate rows in
// lexicographic order and prunes on per-pair residue counters.
struct GhSearchResult {
  std::optional<BgwMatrix> matrix;
  long long nodes = 0;
  bool exhausted = false; // proven nonexistent within the normalized tree
};
GhSearchResult gh_search(int group_order, int m, long long node_budget);
BgwMatrix gh_import(const std::string& path);

// Expansion of exponents into matrix or scalar representations.
struct BgwRep {
  enum class Kind { NegaShift, OmegaShift, ComplexRoots } kind;
  int n = 0;          // shift-matrix order (unused for ComplexRoots)
  Entry omega;        // OmegaShift wrap factor
  int omega_order = 0;

  static BgwRep nega_shift(int n);
  static BgwRep omega_shift(int n, const Entry& omega, int omega_order);
  static BgwRep complex_roots();
};
GridMatrix expand_bgw(const BgwMatrix& h, const BgwRep& rep);

// Exponent file format: header `bgw <v> <group_order>`, then rows of tokens
// `.` (zero cell) or decimal exponents.
void write_bgw(std::ostream& os, const BgwMatrix& h);
void write_bgw_file(const std::string& path, const BgwMatrix& h);
BgwMatrix parse_bgw(std::istream& is);
BgwMatrix parse_bgw_file(const std::string& path);

} // namespace qbw
