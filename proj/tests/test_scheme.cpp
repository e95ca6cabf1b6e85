#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qbw/construct.hpp"
#include "qbw/fixtures.hpp"
#include "qbw/scheme.hpp"
#include "qbw/search.hpp"
#include "qbw/verify.hpp"

using namespace qbw;

namespace {

SchemeData verified_srg_scheme() {
  SchemeData s = build_srg_scheme(cons1(3).w);
  REQUIRE(verify_scheme(s).pass);
  return s;
}

SchemeData verified_gdd1_scheme() {
  BgwMatrix h = gh_import(fixture_path("gh16_c4.bgw"));
  GridMatrix w = gdd1(h, negacirculant({Entry(0), Entry(1)}));
  SchemeData s = build_gdd_scheme_case1(w, 16, 2);
  REQUIRE(verify_scheme(s).pass);
  return s;
}

SchemeData verified_gdd2_scheme() {
  GridMatrix w = gdd2(paley_bgw(9, 8), conference_core(3));
  SchemeData s = build_gdd_scheme_case2(w, 10, 4);
  REQUIRE(verify_scheme(s).pass);
  return s;
}

void check_tensor_identities(const SchemeData& s) {
  const int d1 = s.dim();
  long long x = s.points;
  // p symmetric in the lower indices; row sums against valencies; the
  // triangle identity k_k p_{ij}^k = k_i p_{kj}^i
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j) {
      long long prodsum = 0;
      for (int k = 0; k < d1; ++k) {
        CHECK(s.tensor[i][j][k] == s.tensor[j][i][k]);
        CHECK(s.tensor[i][j][k] >= 0);
        prodsum += s.tensor[i][j][k] * s.valencies[k];
        CHECK(s.valencies[k] * s.tensor[i][j][k] ==
              s.valencies[i] * s.tensor[k][j][i]);
      }
      CHECK(prodsum == s.valencies[i] * s.valencies[j]);
    }
  long long total = 0;
  for (long long k : s.valencies) total += k;
  CHECK(total == x);
}

Eigen::MatrixXd matrix_from(const std::vector<std::vector<long long>>& rows) {
  Eigen::MatrixXd m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[0].size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = static_cast<double>(rows[i][j]);
  return m;
}

} // namespace

TEST_CASE("elementary schemes") {
  GridMatrix a = srg_fixture("paley(13)");
  SchemeData s;
  s.points = 13;
  s.classes = {identity(13), a, all_ones(13, 13) - identity(13) - a};
  CHECK(verify_scheme(s).pass);
  CHECK(s.dim() == 3);

  SchemeData t;
  t.points = 5;
  t.classes = {identity(5), all_ones(5, 5) - identity(5)};
  CHECK(verify_scheme(t).pass);

  // corrupting one class entry must fail with a witness
  SchemeData bad = s;
  GridMatrix c = bad.classes[1];
  c.set(0, 1, c.at(0, 1).is_zero() ? Entry(1) : Entry(0));
  bad.classes[1] = c;
  DesignReport rep = verify_scheme(bad);
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness.has_value());
}

TEST_CASE("signed SRG scheme on 160 points") {
  SchemeData s = verified_srg_scheme();
  CHECK(s.points == 160);
  CHECK(s.dim() == 8);
  CHECK(s.valencies == std::vector<long long>{1, 1, 24, 54, 2, 12, 12, 54});
  check_tensor_identities(s);

  // B_5 as displayed, instantiated at (k, lambda, mu) = (12, 2, 4)
  Eigen::MatrixXd b5 = intersection_matrix(s, 5);
  Eigen::MatrixXd expect = matrix_from({{0, 0, 0, 0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 0, 0, 1, 0},
                                        {0, 0, 0, 0, 12, 2, 2, 4},
                                        {0, 0, 0, 0, 0, 9, 9, 8},
                                        {0, 0, 1, 0, 0, 0, 0, 0},
                                        {12, 0, 1, 2, 0, 0, 0, 0},
                                        {0, 12, 1, 2, 0, 0, 0, 0},
                                        {0, 0, 9, 8, 0, 0, 0, 0}});
  CHECK((b5 - expect).cwiseAbs().maxCoeff() == 0.0);

  // converse identity (A_5 - A_6)^2 = 2k (A_0 - A_1)
  GridMatrix diff = s.classes[5] - s.classes[6];
  CHECK(diff * diff == Entry(24) * (s.classes[0] - s.classes[1]));
}

TEST_CASE("gdd scheme, case kJ/m, on 128 points") {
  SchemeData s = verified_gdd1_scheme();
  CHECK(s.points == 128);
  CHECK(s.dim() == 7);
  CHECK(s.valencies == std::vector<long long>{1, 1, 2, 60, 16, 16, 32});
  check_tensor_identities(s);

  Eigen::MatrixXd b4 = intersection_matrix(s, 4);
  Eigen::MatrixXd expect = matrix_from({{0, 0, 0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 0, 1, 0},
                                        {0, 0, 0, 0, 0, 0, 1},
                                        {0, 0, 0, 0, 15, 15, 15},
                                        {16, 0, 0, 4, 0, 0, 0},
                                        {0, 16, 0, 4, 0, 0, 0},
                                        {0, 0, 16, 8, 0, 0, 0}});
  CHECK((b4 - expect).cwiseAbs().maxCoeff() == 0.0);

  GridMatrix diff = s.classes[4] - s.classes[5];
  CHECK(diff * diff == Entry(32) * (s.classes[0] - s.classes[1]));
}

TEST_CASE("gdd scheme, case k(J-J_mn)/(m-1), on 160 points") {
  SchemeData s = verified_gdd2_scheme();
  CHECK(s.points == 160);
  CHECK(s.dim() == 8);
  CHECK(s.valencies == std::vector<long long>{1, 1, 6, 72, 27, 27, 18, 8});
  check_tensor_identities(s);

  Eigen::MatrixXd b4 = intersection_matrix(s, 4);
  Eigen::MatrixXd expect = matrix_from({{0, 0, 0, 0, 1, 0, 0, 0},
                                        {0, 0, 0, 0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 2, 2, 3, 0},
                                        {0, 0, 0, 0, 24, 24, 24, 27},
                                        {27, 0, 9, 9, 0, 0, 0, 0},
                                        {0, 27, 9, 9, 0, 0, 0, 0},
                                        {0, 0, 9, 6, 0, 0, 0, 0},
                                        {0, 0, 0, 3, 0, 0, 0, 0}});
  CHECK((b4 - expect).cwiseAbs().maxCoeff() == 0.0);

  GridMatrix diff = s.classes[4] - s.classes[5];
  CHECK(diff * diff == Entry(54) * (s.classes[0] - s.classes[1]));
}

TEST_CASE("eigenmatrices match the closed forms") {
  struct Case {
    SchemeData s;
    SchemeFamily fam;
    double a, b, c;
  };
  std::vector<Case> cases;
  cases.push_back({verified_srg_scheme(), SchemeFamily::Srg, 12, 2, -4});
  cases.push_back({verified_gdd1_scheme(), SchemeFamily::Gdd1, 16, 16, 2});
  cases.push_back({verified_gdd2_scheme(), SchemeFamily::Gdd2, 27, 10, 4});

  for (Case& c : cases) {
    EigenPair e = eigenmatrices(c.s);
    const int d1 = c.s.dim();

    // duality and normalization
    Eigen::MatrixXd pq = e.P * e.Q;
    CHECK((pq - c.s.points * Eigen::MatrixXd::Identity(d1, d1)).cwiseAbs().maxCoeff() <
          1e-6);
    for (int m = 0; m < d1; ++m) CHECK(std::abs(e.P(m, 0) - 1.0) < 1e-9);

    // multiplicities: row 0 of Q, positive integers summing to |X|
    double total = 0;
    for (int m = 0; m < d1; ++m) {
      double mult = e.Q(0, m);
      CHECK(mult > 0);
      CHECK(std::abs(mult - std::round(mult)) < 1e-6);
      total += mult;
    }
    CHECK(std::abs(total - c.s.points) < 1e-6);

    DesignReport cmp = compare_closed_form(e, c.fam, c.a, c.b, c.c);
    CHECK(cmp.pass);
  }
}

TEST_CASE("closed forms fail on wrong parameters") {
  SchemeData s = verified_gdd1_scheme();
  EigenPair e = eigenmatrices(s);
  CHECK_FALSE(compare_closed_form(e, SchemeFamily::Gdd1, 16, 8, 4).pass);
}

TEST_CASE("converse round trips") {
  GridMatrix w_srg = cons1(3).w;
  SchemeData s1 = build_srg_scheme(w_srg);
  REQUIRE(verify_scheme(s1).pass);
  CHECK(extract_from_scheme(s1, SchemeFamily::Srg) == w_srg);

  BgwMatrix h = gh_import(fixture_path("gh16_c4.bgw"));
  GridMatrix w_g1 = gdd1(h, negacirculant({Entry(0), Entry(1)}));
  SchemeData s2 = build_gdd_scheme_case1(w_g1, 16, 2);
  REQUIRE(verify_scheme(s2).pass);
  CHECK(extract_from_scheme(s2, SchemeFamily::Gdd1) == w_g1);

  GridMatrix w_g2 = gdd2(paley_bgw(9, 8), conference_core(3));
  SchemeData s3 = build_gdd_scheme_case2(w_g2, 10, 4);
  REQUIRE(verify_scheme(s3).pass);
  CHECK(extract_from_scheme(s3, SchemeFamily::Gdd2) == w_g2);

  // permuted classes are rejected
  SchemeData perm = s1;
  std::swap(perm.classes[1], perm.classes[4]);
  REQUIRE(verify_scheme(perm).pass); // still a scheme, but not builder order
  CHECK_THROWS_AS(extract_from_scheme(perm, SchemeFamily::Srg), std::invalid_argument);
  CHECK_THROWS_AS(extract_from_scheme(s2, SchemeFamily::Srg), std::invalid_argument);
}

TEST_CASE("scheme files round trip") {
  SchemeData s = verified_gdd1_scheme();
  std::ostringstream os;
  write_scheme(os, s);
  std::istringstream is(os.str());
  SchemeData back = parse_scheme(is);
  CHECK(back.points == s.points);
  REQUIRE(back.dim() == s.dim());
  for (int i = 0; i < s.dim(); ++i) CHECK(back.classes[i] == s.classes[i]);
  CHECK(verify_scheme(back).pass);
}
