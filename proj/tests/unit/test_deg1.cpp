#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "slicelab/deg1.hpp"

using namespace slicelab;

namespace {

MultilinearPoly linear(const std::vector<GroupElement>& a, const GroupElement& c, const GroupSpec& spec) {
  MultilinearPoly p(static_cast<int>(a.size()), spec);
  for (std::size_t i = 0; i < a.size(); ++i) p.add_term(bit_of(static_cast<int>(i) + 1), a[i]);
  p.add_term(0, c);
  return p;
}

// Minimum over every coefficient vector and constant, skipping polynomials
// that vanish on the slice.
Rational brute_linear_min(int n, int k, const GroupSpec& spec) {
  std::uint64_t total = 1;
  for (int i = 0; i <= n; ++i) total *= spec.order();
  Rational best(2);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    std::vector<GroupElement> a;
    for (int i = 0; i < n; ++i) {
      a.push_back(spec.element(rest % spec.order()));
      rest /= spec.order();
    }
    MultilinearPoly p = linear(a, spec.element(rest), spec);
    Rational f = oracle::nonvanish(p, k);
    if (!f.is_zero()) best = std::min(best, f);
  }
  return best;
}

// Probability that each bucket of a uniform labelled partition is constant,
// by listing every arrangement of bucket labels over the positions.
Rational brute_bucket_probability(const std::vector<int>& frequencies, int m) {
  std::vector<int> values;
  for (std::size_t v = 0; v < frequencies.size(); ++v) values.insert(values.end(), frequencies[v] * m, static_cast<int>(v));
  const int buckets = static_cast<int>(values.size()) / m;
  std::vector<int> labels;
  for (int b = 0; b < buckets; ++b) labels.insert(labels.end(), m, b);
  long good = 0, total = 0;
  do {
    ++total;
    std::vector<int> seen(static_cast<std::size_t>(buckets), -1);
    bool ok = true;
    for (std::size_t i = 0; i < labels.size() && ok; ++i) {
      int& s = seen[static_cast<std::size_t>(labels[i])];
      if (s == -1) s = values[i];
      ok = s == values[i];
    }
    good += ok ? 1 : 0;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return Rational(BigInt(good), BigInt(total));
}

}  // namespace

TEST_CASE("linear non-vanishing fractions") {
  GroupSpec z2 = GroupSpec::cyclic(2);
  CHECK(linear_nonvanish_fraction(MultilinearPoly::parse("x1 + x2 + 1", 8, z2), 4) == Rational(3, 7));
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k < n; ++k) CHECK(linear_nonvanish_fraction(MultilinearPoly::parse("x1", n, z2), k) == Rational(k, n));
  }
  GroupSpec z5 = GroupSpec::cyclic(5);
  std::vector<GroupElement> same(6, z5.scalar(2));
  CHECK(linear_nonvanish_fraction(same, z5.zero(), z5, 3) == Rational(1));
  CHECK_THROWS_AS(linear_nonvanish_fraction(same, z5.scalar(4), z5, 3), Error);
  CHECK_THROWS_AS(linear_nonvanish_fraction(MultilinearPoly::parse("x1x2", 4, z2), 2), Error);
  CHECK_THROWS_AS(linear_nonvanish_fraction(same, z5.zero(), z5, 7), Error);
}

TEST_CASE("subset-sum counting agrees with enumeration") {
  Rng rng(21);
  for (auto spec : {GroupSpec::cyclic(2), GroupSpec::cyclic(5), GroupSpec::parse("Z2xZ2"), GroupSpec::cyclic(6)}) {
    for (int trial = 0; trial < 25; ++trial) {
      int n = 2 + static_cast<int>(rng.below(9));
      int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
      MultilinearPoly p = oracle::random_poly(n, 1, spec, rng);
      Rational expected = oracle::nonvanish(p, k);
      if (expected.is_zero()) {
        CHECK_THROWS_AS(linear_nonvanish_fraction(p, k), Error);
        continue;
      }
      CHECK(linear_nonvanish_fraction(p, k) == expected);
      // Relabelling the variables leaves the fraction unchanged.
      int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      CHECK(linear_nonvanish_fraction(swap_variables(p, i, j), k) == expected);
      // x -> 1 - x exchanges slice k with slice n - k.
      CHECK(linear_nonvanish_fraction(negate_all_vars(p), n - k) == expected);
    }
  }
}

TEST_CASE("degree-one bound and not-all-equal") {
  CHECK(deg1_bound(8, 4) == Rational(3, 8));
  CHECK(deg1_bound(4, 1) == Rational(0));
  CHECK(deg1_bound(10, 3) == Rational(1, 5));
  CHECK(deg1_bound(10, 7) == Rational(1, 5));
  CHECK_THROWS_AS(deg1_bound(4, 4), Error);
  GroupSpec z3 = GroupSpec::cyclic(3);
  CHECK_FALSE(nae({z3.scalar(1), z3.scalar(1)}));
  CHECK(nae({z3.scalar(1), z3.scalar(2), z3.scalar(1)}));
  CHECK_FALSE(nae({z3.zero()}));
  CHECK_THROWS_AS(nae({}), Error);
}

TEST_CASE("extremal scan") {
  Deg1Scan s = deg1_extremal_scan(8, 4, GroupSpec::cyclic(2));
  CHECK(s.min == Rational(3, 7));
  CHECK(s.bound == Rational(3, 8));
  CHECK(s.witness.str() == "1*x1 + 1*x2 + 1");
  CHECK(s.holds);
  CHECK(s.asserted);
  CHECK(linear_nonvanish_fraction(s.witness, 4) == s.min);

  Deg1Scan z3 = deg1_extremal_scan(9, 3, GroupSpec::cyclic(3));
  CHECK(z3.min >= Rational(2, 9));
  CHECK(z3.holds);

  Deg1Scan small = deg1_extremal_scan(6, 3, GroupSpec::cyclic(2), ScanMode::report);
  CHECK_FALSE(small.asserted);
  CHECK_FALSE(deg1_extremal_scan(6, 3, GroupSpec::cyclic(2)).asserted);

  struct Case {
    int n, k;
    const char* group;
  };
  for (Case c : {Case{5, 2, "Z3"}, Case{4, 2, "Z2xZ2"}, Case{6, 3, "Z2"}, Case{4, 1, "Z5"}, Case{5, 2, "Z4"}}) {
    GroupSpec spec = GroupSpec::parse(c.group);
    Deg1Scan r = deg1_extremal_scan(c.n, c.k, spec, ScanMode::report);
    CHECK(r.min == brute_linear_min(c.n, c.k, spec));
    CHECK(oracle::nonvanish(r.witness, c.k) == r.min);
  }
  CHECK_THROWS_AS(deg1_extremal_scan(6, 0, GroupSpec::cyclic(2)), Error);
  CHECK_THROWS_AS(deg1_extremal_scan(30, 15, GroupSpec::cyclic(97)), GuardError);
}

TEST_CASE("balanced binary scan value") {
  for (int n = 4; n <= 14; n += 2) {
    Deg1Scan s = deg1_extremal_scan(n, n / 2, GroupSpec::cyclic(2), ScanMode::report);
    CHECK(s.min == Rational(1, 2) - Rational(1, 2 * (n - 1)));
  }
}

TEST_CASE("all buckets constant") {
  CHECK(all_bad_bucket_probability({1, 1}, 2) == Rational(1, 3));
  CHECK(all_bad_bucket_probability({3}, 4) == Rational(1));
  for (auto [f, m] : std::vector<std::pair<std::vector<int>, int>>{
           {{1, 1}, 2}, {{1, 2}, 2}, {{2, 1}, 3}, {{1, 1, 1}, 2}, {{1, 1}, 4}}) {
    CHECK(all_bad_bucket_probability(f, m) == brute_bucket_probability(f, m));
  }
  CHECK_THROWS_AS(all_bad_bucket_probability({}, 2), Error);
  CHECK_THROWS_AS(all_bad_bucket_probability({1, 0}, 2), Error);
  CHECK_THROWS_AS(all_bad_bucket_probability({1}, 0), Error);
}
