#pragma once

#include <vector>

#include "qbw/matrix.hpp"
#include "qbw/report.hpp"

namespace qbw {

// W W* = k I (and W* W = k I), entries unit-or-zero. Recovers k.
DesignReport is_weighing(const GridMatrix& w);

// |W| commutes with |W|^T and |W||W|^T has at most two distinct off-diagonal
// values. The report carries the value set in increasing order.
DesignReport quasi_balanced_profile(const GridMatrix& w);

// A^2 = k I + lambda A + mu (J - I - A) for symmetric 0/1 A with zero
// diagonal. Recovers (v, k, lambda, mu) and the integer eigenvalues (k, s, t)
// when they are integral. Degenerate graphs (complete, empty) pass with a
// note instead of failing.
DesignReport srg_check(const GridMatrix& a);

// A A^T = A^T A = k I + lambda1 (J_{m,n} - I) + lambda2 (J - J_{m,n})
// against the canonical group partition into m consecutive classes of size
// n. Recovers (v, k, m, n, lambda1, lambda2).
DesignReport gdd_check(const GridMatrix& a, int m, int n);

// gdd_check plus symmetry and zero diagonal (divisible design graph).
DesignReport ddg_check(const GridMatrix& a, int m, int n);

// A^2 = k I + b X + a (J - I - X) for some symmetric 0/1 X with zero
// diagonal, b >= a: the off-diagonal entries of A^2 take at most two values.
DesignReport deza_check(const GridMatrix& a);

// Uniform pair-profile check: for every pair of distinct rows, the multiset
// S_ij = { W_il * conj(W_jl) : both nonzero } contains each n-th root of
// unity the same number of times. This is the srg-balanced property when
// |W| is a strongly regular graph (counts lambda/n on edges, mu/n off), and
// the analogous block-regular property for group divisible signings.
DesignReport balanced_signing_check(const GridMatrix& w, int n);

// srg-balanced: requires |W| = A, A a verified SRG with n | lambda and
// n | mu (divisibility failure is reported as a structural NO), then the
// uniform profile above.
DesignReport srg_balanced_check(const GridMatrix& w, const GridMatrix& a, int n);

// Siamese family: every |W_l| an SRG with equal parameters, pairwise edge
// intersections all equal to one clique spread S (disjoint complete graphs
// of a common size), and sum_l (|W_l| - S) + S = J - I.
DesignReport siamese_check(const std::vector<GridMatrix>& family);

} // namespace qbw
