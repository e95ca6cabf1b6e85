#pragma once

#include <Eigen/Dense>

#include "qbw/matrix.hpp"
#include "qbw/report.hpp"

namespace qbw {

// Symmetric association scheme: classes A_0..A_d as 0/1 matrices plus the
// intersection-number tensor p_{ij}^k once verified. Class matrices are
// stored in builder block order; the converse extraction contracts on that
// order.
struct SchemeData {
  int points = 0;
  std::vector<GridMatrix> classes;
  std::vector<std::vector<std::vector<long long>>> tensor; // p[i][j][k]
  std::vector<long long> valencies;
  bool verified = false;

  int dim() const { return static_cast<int>(classes.size()); } // d + 1
};

// First and second eigenmatrices computed numerically from the intersection
// matrices (rows of P in the solver's order; Q = |X| P^{-1}).
struct EigenPair {
  Eigen::MatrixXd P, Q;
};

enum class SchemeFamily { Srg, Gdd1, Gdd2 };

// Eight classes on 4v points from a (0,+-1) weighing matrix W = W1 - W2
// whose support is a strongly regular graph.
SchemeData build_srg_scheme(const GridMatrix& w);

// Seven classes on 4v points from a signed symmetric group divisible design
// with |W| J_{m,n} = J_{m,n} |W| = (k/m) J.
SchemeData build_gdd_scheme_case1(const GridMatrix& w, int m, int n);

// Eight classes on 4v points, the case |W| J_{m,n} = (k/(m-1)) (J - J_{m,n}).
SchemeData build_gdd_scheme_case2(const GridMatrix& w, int m, int n);

// Recomputes every product A_i A_j exactly, extracts p_{ij}^k and checks the
// scheme axioms; on success fills the tensor and valencies.
DesignReport verify_scheme(SchemeData& s);

// Intersection matrix B_i with (B_i)_{jk} = p_{ij}^k.
Eigen::MatrixXd intersection_matrix(const SchemeData& s, int i);

// P from the simultaneous eigenvectors of the intersection matrices (generic
// real combination with fixed documented coefficients, refined per matrix);
// Q = |X| P^{-1}. Requires a verified scheme.
EigenPair eigenmatrices(const SchemeData& s);

// The paper families' symbolic eigenmatrices, instantiated. Parameters:
// Srg -> (k, s, t); Gdd1/Gdd2 -> (k, m, n).
EigenPair closed_form_eigenmatrices(SchemeFamily family, double a, double b, double c);

// Matches numeric rows of P (and the corresponding columns of Q) against the
// closed form by bijection within tolerance 1e-6.
DesignReport compare_closed_form(const EigenPair& e, SchemeFamily family, double a,
                                 double b, double c);

// Converse direction: reads W1 and W2 back out of the scheme stored in
// builder block order, returns W = W1 - W2 after certifying the family's
// defining checks. Throws on parameter or structure mismatch.
GridMatrix extract_from_scheme(const SchemeData& s, SchemeFamily family);

// Scheme file: header `scheme <|X|> <d+1>` followed by each class in QBW
// format.
void write_scheme(std::ostream& os, const SchemeData& s);
void write_scheme_file(const std::string& path, const SchemeData& s);
SchemeData parse_scheme(std::istream& is);
SchemeData parse_scheme_file(const std::string& path);

} // namespace qbw
