#include <doctest.h>

#include <cstdlib>

#include "slicelab/algebra.hpp"

using namespace slicelab;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational(BigInt(4), BigInt(-6)).str() == "-2/3");
  CHECK(Rational(BigInt(4), BigInt(-6)).denominator() == 3);
}

TEST_CASE("rational arithmetic and ordering") {
  Rational a = Rational::parse("2/3");
  Rational b = Rational::parse("-1/4");
  CHECK((a + b).str() == "5/12");
  CHECK((a * b).str() == "-1/6");
  CHECK((a / b).str() == "-8/3");
  CHECK(b < a);
  CHECK(b.abs() == Rational::parse("1/4"));
  CHECK(a.pow(-2).str() == "9/4");
  CHECK(a.pow(0) == Rational(1));
  CHECK(a.to_double() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(0).pow(-1), Error);
  CHECK_THROWS_AS(rat(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("rational order agrees with cross multiplication") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    long p1 = static_cast<long>(rng.below(41)) - 20, q1 = static_cast<long>(rng.below(20)) + 1;
    long p2 = static_cast<long>(rng.below(41)) - 20, q2 = static_cast<long>(rng.below(20)) + 1;
    Rational a{BigInt(p1), BigInt(q1)}, b{BigInt(p2), BigInt(q2)};
    CHECK((a < b) == (p1 * q2 < p2 * q1));
    CHECK((a == b) == (p1 * q2 == p2 * q1));
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-2, 1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK_THROWS_AS(factorial(-1), Error);
  CHECK(big_pow(3, 4) == 81);
  for (long n = 1; n < 40; ++n) {
    for (long k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
  BigInt power = 1;
  for (unsigned long e = 0; e < 50; ++e) {
    CHECK(big_pow(7, e) == power);
    power *= 7;
  }
}

TEST_CASE("group parsing and elements") {
  GroupSpec g = GroupSpec::parse("Z2xZ3");
  CHECK(g.orders() == std::vector<std::int64_t>{2, 3});
  CHECK(g.order() == 6);
  CHECK(g.rank() == 2);
  CHECK_FALSE(g.is_cyclic());
  CHECK(GroupSpec::parse("z8") == GroupSpec::cyclic(8));
  CHECK(g.element(1) == g.make({1, 0}));
  CHECK(g.element(2) == g.make({0, 1}));
  CHECK(g.make({3, -1}).str() == "(1,2)");
  CHECK(g.scalar(5).str() == "(1,2)");
  CHECK(g.parse_element("(1,2)") == g.make({1, 2}));
  CHECK(g.parse_element("4") == g.make({0, 1}));
  CHECK(GroupSpec::cyclic(5).parse_element("3").str() == "3");
  CHECK(g.zero().is_zero());
}

TEST_CASE("group errors") {
  CHECK_THROWS_AS(GroupSpec::parse("Z1"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("Y2"), Error);
  CHECK_THROWS_AS(GroupSpec::parse(""), Error);
  CHECK_THROWS_AS(GroupSpec(std::vector<std::int64_t>{}), Error);
  GroupSpec g = GroupSpec::parse("Z2xZ3");
  CHECK_THROWS_AS(g.make({1}), Error);
  CHECK_THROWS_AS(g.element(6), Error);
  CHECK_THROWS_AS(g.check(GroupElement{{1, 3}}), Error);
  CHECK_THROWS_AS(g.parse_element("(1,2"), Error);
  CHECK_THROWS_AS(GroupTable(GroupSpec::cyclic(5000)), GuardError);
}

TEST_CASE("group arithmetic matches residue arithmetic") {
  GroupSpec g = GroupSpec::parse("Z4xZ3xZ5");
  GroupTable table(g);
  for (std::uint64_t a = 0; a < g.order(); ++a) {
    CHECK(g.index(g.element(a)) == a);
    for (std::uint64_t b = 0; b < g.order(); b += 7) {
      GroupElement x = g.element(a), y = g.element(b);
      GroupElement s = group_add(g, x, y);
      for (std::size_t r = 0; r < g.rank(); ++r) {
        CHECK(s.residues[r] == (x.residues[r] + y.residues[r]) % g.orders()[r]);
      }
      CHECK(table.add(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)) == g.index(s));
      CHECK(group_sub(g, s, y) == x);
    }
    CHECK(group_add(g, g.element(a), group_neg(g, g.element(a))).is_zero());
    CHECK(table.add(static_cast<std::uint32_t>(a), table.neg(static_cast<std::uint32_t>(a))) == 0);
  }
  GroupElement x = g.make({3, 2, 4});
  CHECK(group_scalar_mul(g, 3, x) == group_add(g, x, group_add(g, x, x)));
  CHECK(group_scalar_mul(g, -1, x) == group_neg(g, x));
  CHECK(group_scalar_mul(g, 60, x).is_zero());
}

TEST_CASE("work guards honour the override") {
  CHECK_NOTHROW(require_work(10, 100, "small"));
  CHECK_THROWS_AS(require_work(1000, 100, "large"), GuardError);
  setenv("SLICELAB_MAX_WORK", "5000", 1);
  CHECK(work_limit(100) == 5000);
  CHECK_NOTHROW(require_work(1000, 100, "large"));
  unsetenv("SLICELAB_MAX_WORK");
  CHECK(work_limit(100) == 100);
}

TEST_CASE("seeded generator is reproducible and in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(1);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) {
    auto v = c.below(7);
    REQUIRE(v < 7);
    ++seen[v];
  }
  for (int s : seen) CHECK(s > 800);
}

TEST_CASE("parallel chunks cover the range once for any thread count") {
  for (std::size_t threads : {std::size_t{1}, std::size_t{3}, std::size_t{0}}) {
    set_thread_count(threads);
    std::vector<int> hits(1000, 0);
    std::vector<std::uint64_t> chunk_begin(16, 0);
    parallel_chunks(1000, 16, [&](std::size_t c, std::uint64_t b, std::uint64_t e) {
      chunk_begin[c] = b;
      for (auto i = b; i < e; ++i) ++hits[i];
    });
    for (int h : hits) CHECK(h == 1);
    for (std::size_t c = 1; c < 16; ++c) CHECK(chunk_begin[c] > chunk_begin[c - 1]);
  }
  set_thread_count(0);
}
