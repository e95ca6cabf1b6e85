#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "qbw/bgw.hpp"
#include "qbw/fixtures.hpp"
#include "qbw/verify.hpp"

using namespace qbw;

namespace {

// independent recount of the BGW condition for one pair of rows
bool pair_uniform(const BgwMatrix& h, int i, int r) {
  std::vector<int> cnt(h.group_order, 0);
  int shared = 0;
  for (int j = 0; j < h.v; ++j) {
    int a = h.at(i, j), b = h.at(r, j);
    if (a < 0 || b < 0) continue;
    ++shared;
    ++cnt[((a - b) % h.group_order + h.group_order) % h.group_order];
  }
  for (int t = 0; t < h.group_order; ++t)
    if (cnt[t] * h.group_order != shared) return false;
  return true;
}

} // namespace

TEST_CASE("paley BGW(10, 9, 8) over C8 is skew and uniform") {
  BgwMatrix h = paley_bgw(9, 8);
  CHECK(h.v == 10);
  CHECK(h.group_order == 8);
  DesignReport rep = bgw_check(h);
  CHECK(rep.pass);
  CHECK(rep.param("k") == 9);
  CHECK(rep.param("lambda") == 8);
  CHECK(skew_check(h));
  CHECK_FALSE(symmetric_check(h));
  // all 45 pairs, recounted independently
  for (int i = 0; i < h.v; ++i)
    for (int r = i + 1; r < h.v; ++r) CHECK(pair_uniform(h, i, r));
}

TEST_CASE("paley BGW(26, 25, 24) over C12 is symmetric") {
  BgwMatrix h = paley_bgw(25, 12);
  CHECK(bgw_check(h).pass);
  CHECK(symmetric_check(h));
  CHECK_FALSE(skew_check(h));
}

TEST_CASE("paley BGW(17, 16, 15) over C15 is symmetric") {
  BgwMatrix h = paley_bgw(16, 15);
  DesignReport rep = bgw_check(h);
  CHECK(rep.pass);
  CHECK(rep.param("v") == 17);
  CHECK(rep.param("k") == 16);
  CHECK(rep.param("lambda") == 15);
  CHECK(symmetric_check(h));
}

TEST_CASE("paley symmetry class matches the parity of (Q-1)/n") {
  struct Case { long q; int n; bool skew; };
  const Case cases[] = {{9, 8, true}, {25, 12, false}, {49, 16, true}, {16, 15, false}};
  for (const Case& c : cases) {
    BgwMatrix h = paley_bgw(c.q, c.n);
    CHECK(bgw_check(h).pass);
    CHECK(skew_check(h) == c.skew);
    CHECK(symmetric_check(h) == !c.skew);
  }
  CHECK_THROWS_AS(paley_bgw(9, 5), std::invalid_argument);
  CHECK_THROWS_AS(paley_bgw(12, 1), std::invalid_argument);
}

TEST_CASE("verified BGW survives simultaneous row/column permutations") {
  BgwMatrix h = paley_bgw(9, 8);
  std::mt19937 rng(17);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<int> perm(h.v);
    for (int i = 0; i < h.v; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    BgwMatrix g(h.v, h.group_order);
    for (int i = 0; i < h.v; ++i)
      for (int j = 0; j < h.v; ++j) g.set(i, j, h.at(perm[i], perm[j]));
    g.k = h.k;
    CHECK(bgw_check(g).pass);
  }
}

TEST_CASE("negacirculant conference core") {
  GridMatrix c = conference_core(3);
  // deterministic first solution: first row (0, 1, 1, -1)
  CHECK(c.at(0, 0) == Entry(0));
  CHECK(c.at(0, 1) == Entry(1));
  CHECK(c.at(0, 2) == Entry(1));
  CHECK(c.at(0, 3) == Entry(-1));
  CHECK(is_weighing(c).pass);
  CHECK(is_weighing(c).param("k") == 3);

  GridMatrix w2 = conference_core(1);
  CHECK(w2.rows() == 2);
  CHECK(w2.at(0, 1) == Entry(1));
  CHECK(w2.at(1, 0) == Entry(-1));

  for (int q : {5, 7, 11}) {
    GridMatrix core = conference_core(q);
    CHECK(core.has_zero_diagonal());
    DesignReport rep = is_weighing(core);
    CHECK(rep.pass);
    CHECK(rep.param("k") == q);
  }
}

TEST_CASE("omega-circulant conference cores for even q") {
  for (int q : {4, 8}) {
    GridMatrix c = conference_core(q, CoreFlavor::OmegaCirculant);
    CHECK(c.rows() == q + 1);
    CHECK(c.has_zero_diagonal());
    DesignReport rep = is_weighing(c);
    CHECK(rep.pass);
    CHECK(rep.param("k") == q);
    CHECK(c.kind() == EntryKind::cyclotomic(q - 1));
  }
  // the printed W(5,4) over the third roots is itself valid and omega-circulant
  GridMatrix paper_c = parse_qbw_file(fixture_path("fig_c5_omega.qbw"));
  CHECK(is_weighing(paper_c).pass);
  std::vector<Entry> first_row;
  for (int j = 0; j < 5; ++j) first_row.push_back(paper_c.at(0, j));
  CHECK(paper_c == omega_circulant(first_row, Entry::cyc_root(3, 1)));
}

TEST_CASE("generalized Hadamard search") {
  GhSearchResult r2 = gh_search(2, 2, 1000);
  REQUIRE(r2.matrix.has_value());
  CHECK(r2.matrix->at(0, 0) == 0);
  CHECK(r2.matrix->at(0, 1) == 0);
  CHECK(r2.matrix->at(1, 0) == 0);
  CHECK(r2.matrix->at(1, 1) == 1);

  // no GH of order 4 over C4 exists; the normalized tree is tiny
  GhSearchResult r4 = gh_search(4, 4, 1000000);
  CHECK_FALSE(r4.matrix.has_value());
  CHECK(r4.exhausted);

  GhSearchResult r44 = gh_search(2, 4, 100000);
  REQUIRE(r44.matrix.has_value());
  CHECK(bgw_check(*r44.matrix).pass);
}

TEST_CASE("generalized Hadamard fixture imports and verifies") {
  BgwMatrix h = gh_import(fixture_path("gh16_c4.bgw"));
  CHECK(h.v == 16);
  CHECK(h.group_order == 4);
  DesignReport rep = bgw_check(h);
  CHECK(rep.pass);
  CHECK(rep.param("k") == 16);
  CHECK(rep.param("lambda") == 16);
}

TEST_CASE("expansion into matrix representations") {
  BgwMatrix h2(2, 2);
  h2.set(0, 0, 0);
  h2.set(0, 1, 0);
  h2.set(1, 0, 0);
  h2.set(1, 1, 1);
  h2.k = 2;
  GridMatrix c = expand_bgw(h2, BgwRep::complex_roots());
  CHECK(c.at(0, 0) == Entry(1));
  CHECK(c.at(1, 1) == Entry(-1));

  BgwMatrix h = paley_bgw(9, 8);
  GridMatrix e = expand_bgw(h, BgwRep::nega_shift(4));
  CHECK(e.rows() == 40);
  // 9 signed-permutation blocks per block row: one nonzero per scalar row
  // from each, so the expansion is a weighing matrix of weight 9
  for (int i = 0; i < 40; ++i) {
    int weight = 0;
    for (int j = 0; j < 40; ++j)
      if (!e.at(i, j).is_zero()) ++weight;
    CHECK(weight == 9);
  }
  CHECK(is_weighing(e).pass);
  CHECK(is_weighing(e).param("k") == 9);

  BgwMatrix h16 = paley_bgw(16, 15);
  GridMatrix e16 = expand_bgw(h16, BgwRep::omega_shift(5, Entry::cyc_root(3, 1), 3));
  CHECK(e16.rows() == 85);
  CHECK(e16.kind() == EntryKind::cyclotomic(3));

  CHECK_THROWS_AS(expand_bgw(h, BgwRep::nega_shift(3)), std::invalid_argument);
}

TEST_CASE("expansion is a homomorphism on exponents") {
  GridMatrix n4 = nega_shift(4);
  for (int e1 = 0; e1 < 8; ++e1)
    for (int e2 = 0; e2 < 8; ++e2)
      CHECK(mat_pow(n4, (e1 + e2) % 8) == mat_pow(n4, e1) * mat_pow(n4, e2));
}

TEST_CASE("bgw_check rejects degenerate matrices") {
  BgwMatrix empty(3, 2);
  DesignReport rep = bgw_check(empty);
  CHECK_FALSE(rep.pass);

  BgwMatrix h = paley_bgw(9, 8);
  BgwMatrix t(h.v, h.group_order);
  for (int i = 0; i < h.v; ++i)
    for (int j = 0; j < h.v; ++j) t.set(i, j, h.at(j, i));
  t.k = h.k;
  CHECK(bgw_check(t).pass); // transpose of a BGW from this family stays a BGW
  BgwMatrix s = paley_bgw(25, 12);
  CHECK(symmetric_check(s));
}

TEST_CASE("bgw text format round trips") {
  BgwMatrix h = paley_bgw(9, 8);
  std::ostringstream os;
  write_bgw(os, h);
  std::istringstream is(os.str());
  BgwMatrix back = parse_bgw(is);
  CHECK(back.v == h.v);
  CHECK(back.group_order == h.group_order);
  CHECK(back.cells == h.cells);
  CHECK(back.k == 9);
}
