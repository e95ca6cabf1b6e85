#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbw/matrix.hpp"
#include "qbw/report.hpp"

namespace qbw {

// Named strongly regular graph generators used by the signing searches:
//   paley(q)           q = 1 (mod 4) prime power
//   triangular(m)      Johnson T(m)
//   lattice(m)         rook's graph L_2(m)
//   clebsch            SRG(16, 5, 0, 2)
//   shrikhande         SRG(16, 6, 2, 2)
//   complement(name)   complement of any of the above
// Every fixture is re-certified through srg_check before being returned.
GridMatrix srg_fixture(const std::string& name);

enum class SearchMode { Balanced, WeighingOnly };

struct SearchProblem {
  GridMatrix adjacency;
  int roots = 2;
  SearchMode mode = SearchMode::Balanced;
  bool symmetric = true;          // assign each edge once, mirrored
  long long budget = 1000000000;  // node limit
};

struct SearchOutcome {
  enum class Status { Found, ExhaustedNo, BudgetExceeded } status;
  std::optional<GridMatrix> signing;
  long long nodes = 0;
  double seconds = 0.0;
};

// Depth-first search for a signing of the adjacency support over the n-th
// roots of unity. Cells are filled in lexicographic order, values in
// increasing root exponent; entries incident to vertex 0 are normalized to
// the unit 1. Balanced mode requires every row-pair product multiset to be
// uniform over R_n; weighing mode only requires W W* = k I. Outcomes are
// re-certified from scratch before being reported.
SearchOutcome search_signing(const SearchProblem& problem);

// Parses and certifies the shipped appendix signings; any failure other than
// the documented srg-balanced failure of the R_4 signing is an error.
std::vector<DesignReport> verify_fixture_signings(const std::string& fixtures_dir);

} // namespace qbw
