#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "slicelab/goodslices.hpp"

using namespace slicelab;

namespace {

// k is good exactly when every coefficient C(k - i, d - i), 0 <= i <= d, is a
// unit mod p; this checks the digit rule against plain binomials.
bool good_by_binomials(std::int64_t k, std::int64_t d, std::int64_t p) {
  for (std::int64_t i = 0; i <= d; ++i) {
    if (binomial(k - i, d - i) % BigInt(p) == 0) return false;
  }
  return true;
}

// Weight-k points of P restricted to T, counted over all 2k-subsets T by
// evaluating the restricted polynomial.
Rational survival_by_restriction(const MultilinearPoly& p, int k) {
  const int n = p.n();
  long survive = 0, total = 0;
  for (Mask t : oracle::weight_class(n, 2 * k)) {
    std::vector<int> coords;
    for (int i = 1; i <= n; ++i) {
      if (t & bit_of(i)) coords.push_back(i);
    }
    ++total;
    MultilinearPoly r = restrict_to_coordinates(p, coords);
    bool nonzero = false;
    for (Mask x : oracle::weight_class(2 * k, k)) nonzero = nonzero || !oracle::eval(r, x).is_zero();
    survive += nonzero ? 1 : 0;
  }
  return Rational(BigInt(survive), BigInt(total));
}

}  // namespace

TEST_CASE("p-ary digits") {
  PAryDigits a = PAryDigits::of(10, 2);
  CHECK(a.digits == std::vector<int>{0, 1, 0, 1});
  CHECK(a.value() == 10);
  CHECK(a.digit(9) == 0);
  CHECK(PAryDigits::of(0, 3).digits.empty());
  CHECK(PAryDigits::of(100, 7).digits == std::vector<int>{2, 0, 2});
  for (std::int64_t v = 0; v < 500; v += 7) CHECK(PAryDigits::of(v, 5).value() == v);
  CHECK_THROWS_AS(PAryDigits::of(-1, 2), Error);
  CHECK_THROWS_AS(PAryDigits::of(3, 1), Error);
}

TEST_CASE("primality") {
  std::vector<std::int64_t> primes;
  for (std::int64_t v = -3; v < 60; ++v) {
    if (is_prime(v)) primes.push_back(v);
  }
  CHECK(primes == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59});
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1000001));
}

TEST_CASE("Lucas binomials agree with exact binomials") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t a = 0; a < 60; ++a) {
      for (std::int64_t b = 0; b < 60; ++b) {
        BigInt expected = binomial(a, b) % BigInt(p);
        CHECK(BigInt(lucas_binom_mod_p(a, b, p)) == expected);
      }
    }
  }
  CHECK_THROWS_AS(lucas_binom_mod_p(5, 2, 4), Error);
  CHECK_THROWS_AS(lucas_binom_mod_p(-1, 0, 2), Error);
}

TEST_CASE("good slices") {
  CHECK(is_good_slice(7, 3, 2));
  CHECK_FALSE(is_good_slice(10, 3, 2));
  CHECK_FALSE(is_good_slice(3, 2, 2));
  CHECK(is_good_slice(3, 1, 2));
  CHECK_FALSE(is_good_slice(5, 1, 5));
  CHECK(is_good_slice(9, 0, 3));
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t d = 0; d <= 12; ++d) {
      for (std::int64_t k = d; k <= 80; ++k) CHECK(is_good_slice(k, d, p) == good_by_binomials(k, d, p));
    }
  }
  CHECK_THROWS_AS(is_good_slice(2, 3, 2), Error);
  CHECK_THROWS_AS(is_good_slice(5, 1, 6), Error);
}

TEST_CASE("good shifts") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t d = 0; d <= 10; ++d) {
      for (std::int64_t k = 3 * d; k <= 90; ++k) {
        std::int64_t c = find_good_shift(k, d, p);
        CHECK(c >= 0);
        CHECK(c <= 2 * d);
        CHECK(k - c >= d);
        CHECK(is_good_slice(k - c, d, p));
        if (is_good_slice(k, d, p)) CHECK(c == 0);
      }
    }
  }
  CHECK_THROWS_AS(find_good_shift(1, 2, 2), Error);
}

TEST_CASE("spanning identity") {
  SpanningReport r = verify_spanning_identity(8, 3, 2, 2, 2, 0b1);
  CHECK(r.identity_holds);
  CHECK(r.degree == 1);
  CHECK(r.coefficient == 2);
  CHECK_FALSE(r.invertible);
  SpanningReport s = verify_spanning_identity(8, 3, 1, 2, 4, 0);
  CHECK(s.identity_holds);
  CHECK(s.coefficient == 3);
  CHECK(s.invertible);
  for (int k = 2; k <= 6; ++k) {
    for (Mask m : {Mask{0}, Mask{0b1}, Mask{0b101}}) {
      SpanningReport t = verify_spanning_identity(9, k, 2, 3, 9, m);
      CHECK(t.identity_holds);
      CHECK(t.coefficient_mod_p == binomial(k - t.degree, 2 - t.degree) % 3);
    }
  }
  CHECK_THROWS_AS(verify_spanning_identity(8, 3, 2, 2, 6, 0), Error);
  CHECK_THROWS_AS(verify_spanning_identity(8, 3, 1, 2, 2, 0b11), Error);
  CHECK_THROWS_AS(verify_spanning_identity(16, 4, 2, 2, 2, 0), GuardError);
}

TEST_CASE("restrictions to a balanced slice") {
  GroupSpec z2 = GroupSpec::cyclic(2);
  auto p = MultilinearPoly::parse("x1x2 + x3", 8, z2);
  Restriction a = random_restriction_to_balanced(p, 2, 11);
  Restriction b = random_restriction_to_balanced(p, 2, 11);
  CHECK(a.coordinates == b.coordinates);
  CHECK(a.poly == b.poly);
  CHECK(a.coordinates.size() == 4);
  CHECK(std::is_sorted(a.coordinates.begin(), a.coordinates.end()));
  CHECK(a.poly == restrict_to_coordinates(p, a.coordinates));
  CHECK_THROWS_AS(random_restriction_to_balanced(p, 5, 1), Error);
  CHECK_THROWS_AS(restrict_to_coordinates(p, {1, 1}), Error);
  CHECK_THROWS_AS(restrict_to_coordinates(p, {9}), Error);

  CHECK(restriction_survival_probability(MultilinearPoly::parse("x1", 4, z2), 1) == Rational(1, 2));
  CHECK(restriction_survival_probability(MultilinearPoly::parse("1", 6, z2), 2) == Rational(1));
  Rng rng(4);
  for (auto spec : {GroupSpec::cyclic(2), GroupSpec::cyclic(3)}) {
    for (int trial = 0; trial < 15; ++trial) {
      int n = 4 + static_cast<int>(rng.below(5));
      int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2)));
      MultilinearPoly q = oracle::random_poly(n, 2, spec, rng);
      CHECK(restriction_survival_probability(q, k) == survival_by_restriction(q, k));
    }
  }
}

TEST_CASE("survival floor on good slices") {
  Rng rng(8);
  GroupSpec z2 = GroupSpec::cyclic(2);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 6 + static_cast<int>(rng.below(4));
    int d = 1 + static_cast<int>(rng.below(2));
    int k = d + static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2 - d + 1)));
    if (!is_good_slice(k, d, 2)) continue;
    MultilinearPoly q = oracle::random_poly(n, d, z2, rng);
    if (is_zero_on_slice(q, k)) continue;
    double floor = std::pow(2.0 * k / n, d) * (1.0 - static_cast<double>(d * d) / (2.0 * k));
    CHECK(restriction_survival_probability(q, k).to_double() >= floor - 1e-12);
  }
}

TEST_CASE("fixing coordinates to one") {
  GroupSpec z3 = GroupSpec::cyclic(3);
  auto p = MultilinearPoly::parse("x1", 4, z3);
  Descent one = fix_ones_descent(p, 2, 1, 3);
  REQUIRE(one.chosen.size() == 1);
  CHECK(one.slice == 1);
  CHECK(one.poly.n() == 3);
  CHECK(one.poly == restrict(p, one.chosen[0], 1));
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    MultilinearPoly q = oracle::random_poly(7, 3, z3, rng);
    Descent a = fix_ones_descent(q, 4, 3, trial);
    Descent b = fix_ones_descent(q, 4, 3, trial);
    CHECK(a.chosen == b.chosen);
    CHECK(a.slice == 1);
    // Values on the lower slice are values of q with the chosen coordinates set.
    for (Mask y : oracle::weight_class(4, 1)) {
      Mask x = 0;
      int next = 0;
      std::vector<int> rest;
      for (int i = 1; i <= 7; ++i) {
        if (std::find(a.chosen.begin(), a.chosen.end(), i) == a.chosen.end()) rest.push_back(i);
      }
      for (int c : a.chosen) x |= bit_of(c);
      for (int i : rest) {
        if (y & (Mask{1} << next)) x |= bit_of(i);
        ++next;
      }
      CHECK(oracle::eval(a.poly, y) == oracle::eval(q, x));
    }
  }
  CHECK_THROWS_AS(fix_ones_descent(p, 2, 3, 1), Error);
  CHECK_THROWS_AS(fix_ones_descent(p, 2, 0, 1), Error);
}

TEST_CASE("bad indices") {
  GroupSpec z2 = GroupSpec::cyclic(2);
  CHECK(bad_indices(MultilinearPoly::parse("x1x2", 4, z2), 2) == std::vector<int>{3, 4});
  CHECK(bad_indices(MultilinearPoly::parse("x1", 4, z2), 2).empty());
  CHECK(bad_indices(MultilinearPoly(4, z2), 2) == std::vector<int>{1, 2, 3, 4});
  CHECK(bad_indices(MultilinearPoly::parse("x6x7x8", 8, z2), 3).size() == 5);
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 5 + static_cast<int>(rng.below(5));
    int d = 1 + static_cast<int>(rng.below(3));
    if (2 * d > n) continue;
    int k = d + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2 * d + 1)));
    MultilinearPoly q = oracle::random_poly(n, d, z2, rng);
    if (is_zero_on_slice(q, k)) continue;
    auto bad = bad_indices(q, k);
    CHECK(static_cast<std::int64_t>(bad.size()) <= max_bad_indices(n, k, d));
    for (int s : bad) {
      for (Mask x : oracle::weight_class(n, k)) {
        if (x & bit_of(s)) CHECK(oracle::eval(q, x).is_zero());
      }
    }
  }
}

TEST_CASE("non-root counting inequality") {
  NonrootsReport r = check_nonroots_inequality(10000, 100, 2);
  CHECK(r.ell == 1000);
  CHECK(r.holds);
  CHECK_FALSE(r.in_asymptotic_range);
  CHECK(check_nonroots_inequality(10000, 100, 1).in_asymptotic_range);
  CHECK_FALSE(check_nonroots_inequality(8, 3, 3).in_asymptotic_range);
  CHECK(check_nonroots_inequality(50, 49, 1).ell == 7);
  CHECK_THROWS_AS(check_nonroots_inequality(0, 1, 1), Error);
  CHECK(max_bad_indices(8, 3, 3) == 5);
  CHECK(max_bad_indices(8, 3, 1) == 2);
}
