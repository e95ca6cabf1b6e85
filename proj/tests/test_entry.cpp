#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qbw/entry.hpp"

using namespace qbw;

namespace {

// Independent oracle for the quaternion ring: a + k b maps to the 2x2
// cyclotomic matrix [[a, -conj(b)], [b, conj(a)]]. Multiplication,
// conjugation (matrix adjoint) and norms must commute with the map.
struct Model {
  Entry m[2][2];

  static Model of(const Entry& a, const Entry& b) {
    Model md;
    md.m[0][0] = a;
    md.m[0][1] = -entry_conj(b);
    md.m[1][0] = b;
    md.m[1][1] = entry_conj(a);
    return md;
  }

  Model mul(const Model& o) const {
    Model r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    return r;
  }

  Model adjoint() const {
    Model r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] = entry_conj(m[j][i]);
    return r;
  }

  bool operator==(const Model& o) const {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (m[i][j] != o.m[i][j]) return false;
    return true;
  }
};

Model model_of(const Entry& x) {
  Entry a(0), b(0);
  {
    const auto& ap = x.part_a();
    auto bp = x.part_b();
    for (std::size_t i = 0; i < ap.size(); ++i) {
      if (ap[i] != 0) a += Entry(ap[i]) * Entry::cyc_root(x.order(), static_cast<int>(i));
      if (bp[i] != 0) b += Entry(bp[i]) * Entry::cyc_root(x.order(), static_cast<int>(i));
    }
  }
  return Model::of(a, b);
}

Entry random_cyclotomic(std::mt19937& rng) {
  static const int orders[] = {1, 3, 4, 5, 12};
  std::uniform_int_distribution<int> ord(0, 4), coeff(-3, 3);
  int n = orders[ord(rng)];
  Entry e(0);
  for (int i = 0; i < euler_phi(n); ++i)
    e += Entry(coeff(rng)) * Entry::cyc_root(n, i);
  return e;
}

Entry random_quaternionic(std::mt19937& rng) {
  return random_cyclotomic(rng) +
         Entry::quaternion_unit() * random_cyclotomic(rng);
}

} // namespace

TEST_CASE("cyclotomic roots reduce to canonical residues") {
  CHECK(Entry::cyc_root(1, 0) == Entry(1));
  CHECK(Entry::cyc_root(4, 2) == Entry(-1));
  CHECK(Entry::cyc_root(3, 1) + Entry::cyc_root(3, 2) == Entry(-1));
  CHECK(Entry::cyc_root(2, 1) == Entry(-1));
  CHECK_THROWS_AS(Entry::cyc_root(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(Entry::cyc_root(0, 0), std::invalid_argument);
}

TEST_CASE("sum of all n-th roots vanishes") {
  for (int n : {2, 3, 4, 5, 6, 8, 12, 15}) {
    Entry sum(0);
    for (int j = 0; j < n; ++j) sum += Entry::cyc_root(n, j);
    CHECK(sum == Entry(0));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("quaternion defining relations") {
  Entry k = Entry::quaternion_unit();
  CHECK(k * k == Entry(-1));
  CHECK(entry_conj(k) == -k);

  // k z = conj(z) k, so z k has a pure k-part equal to conj(z)
  Entry z = Entry::cyc_root(3, 1);
  Entry lhs = k * z;
  Entry rhs = Entry::quaternion(Entry(0), Entry::cyc_root(3, 2));
  CHECK(lhs == Entry::quaternion(Entry(0), z));
  CHECK(z * k == rhs);
  CHECK(model_of(z * k) == model_of(z).mul(model_of(k)));
}

TEST_CASE("inverse roots multiply to one") {
  CHECK(Entry::cyc_root(4, 1) * Entry::cyc_root(4, 3) == Entry(1));
  CHECK(Entry::cyc_root(15, 7) * Entry::cyc_root(15, 8) == Entry(1));
}

TEST_CASE("cross-order products respect the lcm cap") {
  Entry a = Entry::cyc_root(16, 1), b = Entry::cyc_root(27, 1);
  CHECK_THROWS_AS(a * b, std::domain_error); // lcm 432 > 360
  set_cyclotomic_order_cap(432);
  CHECK((a * b).order() == 432);
  set_cyclotomic_order_cap(360);
}

TEST_CASE("conjugation") {
  CHECK(entry_conj(Entry::cyc_root(4, 1)) == Entry::cyc_root(4, 3));
  CHECK(entry_conj(Entry::cyc_root(4, 1)) == -Entry::cyc_root(4, 1));
  CHECK(entry_conj(Entry(7)) == Entry(7));

  Entry x = Entry(1) + Entry::quaternion_unit() * Entry::cyc_root(3, 1);
  Entry xc = entry_conj(x);
  CHECK(xc == Entry(1) - Entry::quaternion_unit() * Entry::cyc_root(3, 1));
  CHECK(entry_conj(xc) == x);
  // norm 2 through the matrix oracle
  Model nm = model_of(x).mul(model_of(xc));
  CHECK(nm == Model::of(Entry(2), Entry(0)));
  CHECK(x * xc == Entry(2));
}

TEST_CASE("is_unit_or_zero") {
  CHECK(is_unit_or_zero(Entry(0)));
  CHECK(is_unit_or_zero(Entry::cyc_root(3, 1) + Entry::cyc_root(3, 2)));
  CHECK_FALSE(is_unit_or_zero(Entry(1) + Entry::cyc_root(4, 1)));
  CHECK(is_unit_or_zero(Entry::quaternion_unit()));
  CHECK(is_unit_or_zero(Entry::quaternion(Entry(0), Entry::cyc_root(3, 2))));
  CHECK_FALSE(is_unit_or_zero(Entry(1) + Entry::quaternion_unit()));
}

TEST_CASE("vanishing sums of p-th roots have equal coefficients") {
  // exhaustive over a in {0..3}^p for p in {2, 3, 5}
  for (int p : {2, 3, 5}) {
    int total = 1;
    for (int i = 0; i < p; ++i) total *= 4;
    for (int mask = 0; mask < total; ++mask) {
      int digits[5];
      int m = mask;
      bool equal = true;
      for (int i = 0; i < p; ++i) {
        digits[i] = m % 4;
        m /= 4;
        if (digits[i] != digits[0]) equal = false;
      }
      Entry sum(0);
      for (int i = 0; i < p; ++i)
        sum += Entry(digits[i]) * Entry::cyc_root(p, i);
      CHECK(sum.is_zero() == equal);
    }
  }
}

TEST_CASE("quaternion arithmetic agrees with the 2x2 matrix model") {
  std::mt19937 rng(20240901);
  for (int iter = 0; iter < 10000; ++iter) {
    Entry x = random_quaternionic(rng), y = random_quaternionic(rng);
    CHECK(model_of(x * y) == model_of(x).mul(model_of(y)));
    CHECK(model_of(entry_conj(x)) == model_of(x).adjoint());
  }
}

TEST_CASE("conjugation is an anti-automorphism") {
  std::mt19937 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    Entry x = random_quaternionic(rng), y = random_quaternionic(rng);
    CHECK(entry_conj(x * y) == entry_conj(y) * entry_conj(x));
    CHECK(entry_conj(x + y) == entry_conj(x) + entry_conj(y));
  }
}

TEST_CASE("multiplication is associative and distributive") {
  std::mt19937 rng(123);
  for (int iter = 0; iter < 200; ++iter) {
    Entry x = random_quaternionic(rng), y = random_quaternionic(rng),
          z = random_quaternionic(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("entry tokens round trip") {
  struct Case {
    const char* tok;
    int order; // root order the token is written against
  };
  const Case cases[] = {{"0", 3},      {"1", 3},       {"-1", 3},     {"i", 4},
                        {"-i", 4},     {"k", 3},       {"-k", 3},     {"w3^1", 3},
                        {"-w3^2", 3},  {"w3^1*k", 3},  {"-w3^2*k", 3}, {"w15^11", 15}};
  for (const Case& c : cases) {
    Entry e = parse_entry_token(c.tok);
    CHECK(entry_token(e, c.order) == c.tok);
    CHECK(parse_entry_token(entry_token(e, c.order)) == e);
  }
  CHECK(parse_entry_token("-") == Entry(-1));
  CHECK(parse_entry_token("w4^1") == parse_entry_token("i"));
  CHECK(entry_token(Entry::cyc_root(2, 1), 2) == "-1");
  CHECK_THROWS_AS(parse_entry_token("w3^7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_entry_token("x"), std::invalid_argument);
  CHECK_THROWS_AS(entry_token(Entry(1) + Entry::cyc_root(4, 1), 4), std::domain_error);
}

TEST_CASE("kind join semilattice") {
  EntryKind i = EntryKind::integer();
  EntryKind c4 = EntryKind::cyclotomic(4);
  EntryKind c6 = EntryKind::cyclotomic(6);
  EntryKind q3 = EntryKind::quaternionic(3);
  CHECK(join(i, c4) == c4);
  CHECK(join(c4, c6) == EntryKind::cyclotomic(12));
  CHECK(join(c4, q3) == EntryKind::quaternionic(12));
  CHECK(join(i, i) == i);
  CHECK_THROWS_AS(join(EntryKind::cyclotomic(32), EntryKind::cyclotomic(27)),
                  std::domain_error);
}
