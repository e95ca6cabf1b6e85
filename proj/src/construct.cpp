#include "qbw/construct.hpp"

#include <stdexcept>

#include "qbw/verify.hpp"

namespace qbw {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error("ingredient verification failure: " + what);
}

// Shared skeleton of the two odd-q constructions: diagonal blocks D, block
// (i, j) = N^{c_ij} R for i != j, over the nega-shift group of order 2(q+1).
GridMatrix odd_q_blocks(int q, const BgwMatrix& h, const GridMatrix& diag, int shift_offset) {
  const int n = q + 1;
  GridMatrix r = back_identity(n);
  GridMatrix shift = nega_shift(n);
  std::vector<GridMatrix> pow(2 * n);
  pow[0] = identity(n);
  for (int e = 1; e < 2 * n; ++e) pow[e] = pow[e - 1] * shift;
  std::vector<std::vector<GridMatrix>> blocks(h.v, std::vector<GridMatrix>(h.v, diag));
  for (int i = 0; i < h.v; ++i)
    for (int j = 0; j < h.v; ++j) {
      if (i == j) continue;
      int c = h.at(i, j);
      require(c >= 0, "BGW has an off-diagonal zero cell");
      blocks[i][j] = pow[(c + shift_offset) % (2 * n)] * r;
    }
  return block_compose(blocks);
}

} // namespace

SiameseFamily cons1(int q) {
  if (q % 4 != 3 || !(q == 3 || q == 7 || q == 11))
    throw std::invalid_argument("cons1 needs q in {3, 7, 11}");
  BgwMatrix h = paley_bgw(static_cast<long>(q) * q, 2 * (q + 1));
  require(skew_check(h), "paley BGW is not skew");
  GridMatrix c = conference_core(q, CoreFlavor::Negacirculant);
  SiameseFamily fam;
  for (int l = 0; l <= q; ++l)
    fam.members.push_back(odd_q_blocks(q, h, c, l));
  fam.w = fam.members[0];
  return fam;
}

GridMatrix cons2(int q) {
  if (q % 4 != 1 || !(q == 5 || q == 13))
    throw std::invalid_argument("cons2 needs q in {5, 13}");
  BgwMatrix h = paley_bgw(static_cast<long>(q) * q, 2 * (q + 1));
  require(symmetric_check(h), "paley BGW is not symmetric");
  GridMatrix c = conference_core(q, CoreFlavor::Negacirculant);
  GridMatrix ic = Entry::cyc_root(4, 1) * c;
  return odd_q_blocks(q, h, ic, 0);
}

GridMatrix cons_pp(int q) {
  if (q != 4 && q != 8) throw std::invalid_argument("cons_pp needs q in {4, 8}");
  const int n = q + 1;
  BgwMatrix h = paley_bgw(static_cast<long>(q) * q, q * q - 1);
  require(symmetric_check(h), "paley BGW is not symmetric");
  GridMatrix c = conference_core(q, CoreFlavor::OmegaCirculant);
  Entry omega = Entry::cyc_root(q - 1, 1);
  GridMatrix u = omega_shift(n, omega);
  std::vector<GridMatrix> pow(h.group_order);
  pow[0] = identity(n);
  for (int e = 1; e < h.group_order; ++e) pow[e] = pow[e - 1] * u;
  GridMatrix r = back_identity(n);
  GridMatrix diag = Entry::quaternion_unit() * identity(n);
  std::vector<std::vector<GridMatrix>> blocks(h.v, std::vector<GridMatrix>(h.v, diag));
  for (int i = 0; i < h.v; ++i)
    for (int j = 0; j < h.v; ++j) {
      if (i == j) continue;
      int e = h.at(i, j);
      require(e >= 0, "BGW has an off-diagonal zero cell");
      blocks[i][j] = c * pow[e] * r;
    }
  return block_compose(blocks);
}

namespace {

// Validates the +-1 weighing ingredient shared by the three gdd recipes and
// returns its order n.
int check_c2(const GridMatrix& c2) {
  require(c2.is_square(), "C2 is not square");
  require(c2.kind().ring == Ring::Integer, "C2 must be a (0,+-1) matrix");
  DesignReport w = is_weighing(c2);
  require(w.pass, "C2 is not a weighing matrix");
  DesignReport prof = quasi_balanced_profile(c2);
  require(prof.pass && prof.value_set.size() <= 1, "C2 is not balanced");
  return c2.rows();
}

GridMatrix gdd_blocks(const BgwMatrix& h, const GridMatrix& c2, bool post_r) {
  const int n = c2.rows();
  require(h.group_order == 2 * n, "BGW group order must be twice the order of C2");
  GridMatrix shift = nega_shift(n);
  std::vector<GridMatrix> pow(2 * n);
  pow[0] = identity(n);
  for (int e = 1; e < 2 * n; ++e) pow[e] = pow[e - 1] * shift;
  GridMatrix r = back_identity(n);
  GridMatrix zero = zero_matrix(n, n);
  std::vector<std::vector<GridMatrix>> blocks(h.v, std::vector<GridMatrix>(h.v, zero));
  for (int i = 0; i < h.v; ++i)
    for (int j = 0; j < h.v; ++j) {
      int e = h.at(i, j);
      if (e < 0) continue;
      GridMatrix blk = pow[e] * c2;
      if (post_r) blk = blk * r;
      blocks[i][j] = blk;
    }
  return block_compose(blocks);
}

} // namespace

GridMatrix gdd1(const BgwMatrix& h, const GridMatrix& c2) {
  int n = check_c2(c2);
  DesignReport rep = bgw_check(h);
  require(rep.pass && rep.param("k") == h.v && rep.param("lambda") == h.v,
          "H is not a generalized Hadamard matrix");
  require(h.group_order == 2 * n, "BGW group order must be twice the order of C2");
  return gdd_blocks(h, c2, false);
}

GridMatrix gdd2(const BgwMatrix& h, const GridMatrix& c2) {
  int n = check_c2(c2);
  DesignReport rep = bgw_check(h);
  require(rep.pass && rep.param("k") == h.v - 1 && rep.param("lambda") == h.v - 2,
          "H is not a BGW(m+1, m, m-1)");
  for (int i = 0; i < h.v; ++i)
    require(h.at(i, i) < 0, "H must have a zero diagonal");
  require(h.group_order == 2 * n, "BGW group order must be twice the order of C2");
  return gdd_blocks(h, c2, false);
}

GridMatrix gdd3(const BgwMatrix& h, const GridMatrix& c2) {
  int n = check_c2(c2);
  std::vector<Entry> first_row(n);
  for (int j = 0; j < n; ++j) first_row[j] = c2.at(0, j);
  require(c2 == negacirculant(first_row), "C2 must be negacirculant");
  DesignReport rep = bgw_check(h);
  require(rep.pass && rep.param("k") == h.v - 1 && rep.param("lambda") == h.v - 2,
          "H is not a BGW(m+1, m, m-1)");
  require(skew_check(h), "H must be skew");
  GridMatrix w = gdd_blocks(h, c2, true);
  if (!abs_matrix(w).is_symmetric())
    throw std::runtime_error("gdd3 output support is not symmetric");
  return w;
}

} // namespace qbw
