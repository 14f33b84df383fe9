#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "slicelab/goodslices.hpp"
#include "slicelab/slices.hpp"

using namespace slicelab;

namespace {

// Minimum nonvanish fraction and distinct-function count over every
// coefficient vector on the given monomials, by direct enumeration.
struct BruteSearch {
  Rational min = Rational(2);
  std::size_t functions = 0;
};

BruteSearch brute_search(int n, int k, const std::vector<Mask>& monomials, const GroupSpec& spec) {
  const auto points = oracle::weight_class(n, k);
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < monomials.size(); ++j) total *= spec.order();
  std::set<std::vector<std::uint64_t>> seen;
  BruteSearch out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    MultilinearPoly p(n, spec);
    std::uint64_t rest = idx;
    for (Mask m : monomials) {
      p.set_coeff(m, spec.element(rest % spec.order()));
      rest /= spec.order();
    }
    std::vector<std::uint64_t> values;
    long nonzero = 0;
    for (Mask x : points) {
      GroupElement v = oracle::eval(p, x);
      values.push_back(spec.index(v));
      nonzero += v.is_zero() ? 0 : 1;
    }
    seen.insert(values);
    if (nonzero == 0) continue;
    Rational f(BigInt(nonzero), BigInt(static_cast<long>(points.size())));
    if (f < out.min) out.min = f;
  }
  out.functions = seen.size();
  return out;
}

std::vector<Mask> monomials_of_degree_at_most(int n, int d) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (popcount(m) <= d) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("slice enumeration") {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto pts = slice_masks(n, k);
      CHECK(pts == oracle::weight_class(n, k));
      CHECK(BigInt(static_cast<long>(pts.size())) == binomial(n, k));
    }
  }
  auto pts = enumerate_slice(4, 2);
  CHECK(pts.front().str() == "1100");
  CHECK(pts.back().str() == "0011");
  CHECK_THROWS_AS(slice_masks(4, 5), Error);
  CHECK_THROWS_AS(slice_masks(31, 2), Error);
}

TEST_CASE("nonvanishing fractions") {
  GroupSpec z2 = GroupSpec::cyclic(2);
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) CHECK(nonvanish_fraction(MultilinearPoly::parse("x1", n, z2), k) == Rational(k, n));
  }
  CHECK(nonvanish_fraction(MultilinearPoly::parse("x1 + x2 + 1", 8, z2), 4) == Rational(3, 7));
  CHECK(nonvanish_fraction(MultilinearPoly::parse("x1", 8, z2), 4) == Rational(1, 2));
  CHECK_THROWS_AS(nonvanish_fraction(MultilinearPoly::parse("x1 + x2 + x3 + x4", 4, z2), 2), Error);
  CHECK(nonvanish_fraction(RationalPoly::parse("x1 - x2", 4), 2) == Rational(2, 3));
  CHECK_THROWS_AS(nonvanish_fraction(RationalPoly::parse("x1 + x2 + x3 + x4 - 1", 4), 1), Error);

  Rng rng(17);
  for (auto spec : {GroupSpec::cyclic(3), GroupSpec::parse("Z2xZ2")}) {
    for (int trial = 0; trial < 30; ++trial) {
      int n = 3 + static_cast<int>(rng.below(5));
      int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
      MultilinearPoly p = oracle::random_poly(n, 2, spec, rng);
      if (is_zero_on_slice(p, k)) continue;
      CHECK(nonvanish_fraction(p, k) == oracle::nonvanish(p, k));
    }
  }
}

TEST_CASE("distance bounds") {
  CHECK(suboptimal_bound(4, 2, 1) == Rational(1, 3));
  CHECK(suboptimal_bound(6, 3, 2) == Rational(1, 10));
  CHECK(suboptimal_bound(8, 4, 0) == Rational(1));
  MainBound b = main_bound(8, 4, 1, Rational(1, 2));
  REQUIRE(b.exact.has_value());
  CHECK(*b.exact == Rational(1, 4));
  CHECK(b.value == doctest::Approx(0.25));
  MainBound irrational = main_bound(8, 2, 1, Rational(1, 2));
  CHECK_FALSE(irrational.exact.has_value());
  CHECK(irrational.leading == Rational(1, 4));
  CHECK(irrational.value == doctest::Approx(0.25 * (1 - 1 / std::sqrt(2.0))));
}

TEST_CASE("extremal search matches brute force") {
  struct Case {
    int n, k, d;
    const char* group;
  };
  for (Case c : {Case{4, 2, 1, "Z3"}, Case{4, 2, 1, "Z2xZ2"}, Case{5, 2, 2, "Z2"}, Case{5, 1, 1, "Z4"}, Case{4, 1, 1, "Z5"}}) {
    GroupSpec spec = GroupSpec::parse(c.group);
    BruteSearch brute = brute_search(c.n, c.k, monomials_of_degree_at_most(c.n, c.d), spec);
    ExtremalResult pruned = extremal_min_fraction(c.n, c.k, c.d, spec);
    ExtremalResult full = extremal_min_fraction(c.n, c.k, c.d, spec, SearchMode::full, false);
    CHECK(pruned.min == brute.min);
    CHECK(full.min == brute.min);
    CHECK(nonvanish_fraction(pruned.witness, c.k) == pruned.min);
    CHECK(pruned.witness.degree() <= c.d);
    CHECK(count_degree_d_functions(c.n, c.k, c.d, spec) == BigInt(static_cast<long>(brute.functions)));
    CHECK(distinct_functions(c.n, c.k, c.d, spec).size() + 1 == brute.functions);
  }
}

TEST_CASE("extremal minimum respects the sub-optimal bound") {
  for (const char* g : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
    GroupSpec spec = GroupSpec::parse(g);
    for (int n = 2; n <= 5; ++n) {
      for (int d = 1; 2 * d <= n; ++d) {
        for (int k = d; k <= n - d; ++k) {
          if (spec.order() > 2 && n == 5 && d == 2) continue;
          CHECK(extremal_min_fraction(n, k, d, spec).min >= suboptimal_bound(n, k, d));
        }
      }
    }
  }
}

TEST_CASE("homogeneous search") {
  GroupSpec z2 = GroupSpec::cyclic(2);
  ExtremalResult h = extremal_min_fraction(6, 3, 1, z2, SearchMode::homogeneous);
  for (const auto& [m, c] : h.witness.coeffs()) CHECK(popcount(m) == 1);
  BruteSearch brute = brute_search(6, 3, {1, 2, 4, 8, 16, 32}, z2);
  CHECK(h.min == brute.min);
  CHECK_THROWS_AS(extremal_min_fraction(6, 2, 1, z2, SearchMode::homogeneous), Error);
  CHECK_THROWS_AS(extremal_min_fraction(6, 3, 1, GroupSpec::cyclic(6), SearchMode::homogeneous), Error);
  CHECK(count_degree_d_functions(4, 2, 1, z2, SearchMode::homogeneous) == 8);
  CHECK(count_degree_d_functions(4, 2, 1, z2) == 16);
}

TEST_CASE("search guards") {
  GroupSpec z2 = GroupSpec::cyclic(2);
  CHECK_THROWS_AS(extremal_min_fraction(10, 5, 3, z2), GuardError);
  CHECK_THROWS_AS(count_degree_d_functions(10, 5, 3, z2), GuardError);
  CHECK_THROWS_AS(extremal_min_fraction(4, 5, 1, z2), Error);
  CHECK_THROWS_AS(extremal_min_fraction(4, 2, -1, z2), Error);
}

TEST_CASE("distinct functions carry their values") {
  GroupSpec z3 = GroupSpec::cyclic(3);
  auto fs = distinct_functions(4, 2, 1, z3);
  auto points = slice_masks(4, 2);
  std::set<std::vector<std::uint32_t>> values;
  for (const auto& f : fs) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      CHECK(f.values[i] == z3.index(oracle::eval(f.poly, points[i])));
    }
    values.insert(f.values);
  }
  CHECK(values.size() == fs.size());
}

TEST_CASE("whole-cube fraction meets the polynomial identity bound") {
  GroupSpec z2 = GroupSpec::cyclic(2);
  CHECK(cube_nonvanish_fraction(MultilinearPoly::parse("x1x2", 3, z2), 2) == Rational(1, 4));
  CHECK_THROWS_AS(cube_nonvanish_fraction(MultilinearPoly::parse("x1x2", 3, z2), 1), Error);
  CHECK_THROWS_AS(cube_nonvanish_fraction(MultilinearPoly(3, z2), 1), Error);
  Rng rng(23);
  for (auto spec : {GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::parse("Z2xZ3")}) {
    for (int trial = 0; trial < 40; ++trial) {
      int n = 1 + static_cast<int>(rng.below(7));
      MultilinearPoly p = oracle::random_poly(n, 3, spec, rng);
      if (p.is_zero()) continue;
      long hits = 0;
      for (Mask x = 0; x < (Mask{1} << n); ++x) hits += oracle::eval(p, x).is_zero() ? 0 : 1;
      Rational f = cube_nonvanish_fraction(p, 3);
      CHECK(f == Rational(BigInt(hits), BigInt(1L << n)));
      CHECK(f >= Rational(1, 1L << p.degree()));
    }
  }
}

TEST_CASE("monomial listing") {
  CHECK(monomials_up_to(4, 2).size() == 11);
  CHECK(monomials_up_to(4, 2, true).size() == 6);
  CHECK(monomials_up_to(4, 0) == std::vector<Mask>{0});
  auto ms = monomials_up_to(5, 3);
  for (std::size_t i = 1; i < ms.size(); ++i) {
    int a = popcount(ms[i - 1]), b = popcount(ms[i]);
    CHECK((a < b || (a == b && ms[i - 1] < ms[i])));
  }
}
