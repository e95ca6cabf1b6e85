#pragma once

#include <map>
#include <string>
#include <vector>

#include "qbw/bgw.hpp"
#include "qbw/matrix.hpp"

namespace qbw {

// Provenance record for a constructed matrix; constructions are
// deterministic functions of their ingredients, so replaying a recipe
// reproduces the output byte for byte.
struct ConstructionRecipe {
  std::string family;
  std::map<std::string, long long> parameters;
  std::vector<std::string> ingredients;
};

struct SiameseFamily {
  GridMatrix w;                   // = members[0]
  std::vector<GridMatrix> members;
};

// q = 3 (mod 4): quasi-balanced W(1+q+q^2+q^3, q+q^2) whose support is an
// SRG(1+q+q^2+q^3, q+q^2, q-1, q+1), together with the 1+q Siamese members
// sharing the 1+q^2 diagonal cliques of size 1+q.
SiameseFamily cons1(int q);

// q = 1 (mod 4): the same block recipe over R_4, diagonal blocks i*C.
GridMatrix cons2(int q);

// even q: quaternion W(1+q+q^2+q^3, 1+q^3); diagonal blocks k*I, off-diagonal
// C H_ij R over the (q-1)-st roots of unity.
GridMatrix cons_pp(int q);

// Generalized Hadamard H = BGW(m,m,m) over C_{2n} and a balanced weighing
// C2 = W(n,k') over {+-1}: blocks N^{c_ij} C2. |W| is an
// SGDD(mn, mk', m, n, m l', (m/n) k'^2) with |W| J_{m,n} = J_{m,n} |W| = k' J.
GridMatrix gdd1(const BgwMatrix& h, const GridMatrix& c2);

// H = BGW(m+1, m, m-1) over C_{2n} with zero diagonal: blocks
// (1-delta_ij) N^{c_ij} C2; |W| is an SGDD((m+1)n, mk', m+1, n, ml', ((m-1)/n)k'^2).
GridMatrix gdd2(const BgwMatrix& h, const GridMatrix& c2);

// As gdd2 with a negacirculant C2 and blocks N^{c_ij} C2 R; a skew H makes
// the output symmetric, hence a divisible design graph.
GridMatrix gdd3(const BgwMatrix& h, const GridMatrix& c2);

} // namespace qbw
