#include "slicelab/deg1.hpp"

#include <algorithm>
#include <numeric>

namespace slicelab {

namespace {

BigInt multinomial(const std::vector<long>& parts) {
  BigInt r = 1;
  long total = 0;
  for (long p : parts) {
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

// counts[s] = number of k-subsets whose coefficient sum is element s, for a
// coefficient multiset given as multiplicities per element index.
std::vector<BigInt> subset_sum_counts(const GroupTable& table, const std::vector<int>& multiplicity, int k) {
  const std::uint32_t g = table.size();
  // dp[j * g + s]: ways to choose j elements so far with sum s.
  std::vector<BigInt> dp(static_cast<std::size_t>(k + 1) * g, 0);
  dp[0] = 1;
  for (std::uint32_t v = 0; v < g; ++v) {
    const int f = multiplicity[v];
    if (f == 0) continue;
    std::vector<BigInt> next(dp.size(), 0);
    // Sums of r copies of v.
    std::vector<std::uint32_t> shift(static_cast<std::size_t>(f) + 1, 0);
    for (int r = 1; r <= f; ++r) shift[static_cast<std::size_t>(r)] = table.add(shift[static_cast<std::size_t>(r - 1)], v);
    for (int j = 0; j <= k; ++j) {
      for (std::uint32_t s = 0; s < g; ++s) {
        const BigInt& ways = dp[static_cast<std::size_t>(j) * g + s];
        if (ways == 0) continue;
        for (int r = 0; r <= f && j + r <= k; ++r) {
          std::uint32_t t = table.add(s, shift[static_cast<std::size_t>(r)]);
          next[static_cast<std::size_t>(j + r) * g + t] += ways * binomial(f, r);
        }
      }
    }
    dp = std::move(next);
  }
  return std::vector<BigInt>(dp.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(k) * g), dp.end());
}

Rational fraction_from_counts(const GroupTable& table, const std::vector<BigInt>& counts, std::uint32_t constant,
                              const BigInt& total) {
  const BigInt& bad = counts[table.neg(constant)];
  return Rational(total - bad, total);
}

}  // namespace

Rational linear_nonvanish_fraction(const std::vector<GroupElement>& a, const GroupElement& c, const GroupSpec& spec,
                                   int k) {
  const int n = static_cast<int>(a.size());
  if (k < 0 || k > n) throw Error("linear_nonvanish_fraction: k out of range");
  GroupTable table(spec);
  std::vector<int> multiplicity(table.size(), 0);
  for (const auto& x : a) ++multiplicity[spec.index(x)];
  auto counts = subset_sum_counts(table, multiplicity, k);
  Rational r = fraction_from_counts(table, counts, static_cast<std::uint32_t>(spec.index(c)), binomial(n, k));
  if (r.is_zero()) throw Error("linear_nonvanish_fraction: polynomial vanishes identically on the slice");
  return r;
}

Rational linear_nonvanish_fraction(const MultilinearPoly& p, int k) {
  if (p.degree() > 1) throw Error("linear_nonvanish_fraction: polynomial has degree above 1");
  std::vector<GroupElement> a;
  for (int i = 1; i <= p.n(); ++i) a.push_back(p.coeff(bit_of(i)));
  return linear_nonvanish_fraction(a, p.coeff(0), p.spec(), k);
}

Rational deg1_bound(int n, int k) {
  if (k < 1 || k > n - 1) throw Error("deg1_bound: requires 1 <= k <= n - 1");
  return Rational(std::min(k, n - k) - 1, n);
}

bool nae(const std::vector<GroupElement>& a) {
  if (a.empty()) throw Error("nae: empty sequence");
  return std::any_of(a.begin(), a.end(), [&](const GroupElement& x) { return !(x == a.front()); });
}

Deg1Scan deg1_extremal_scan(int n, int k, const GroupSpec& spec, ScanMode mode) {
  if (n < 2 || n > kMaxVariables) throw Error("deg1_extremal_scan: n out of range");
  if (k < 1 || k > n - 1) throw Error("deg1_extremal_scan: requires 1 <= k <= n - 1");
  const std::uint64_t g = spec.order();
  BigInt space = binomial(static_cast<long>(n + g - 1), static_cast<long>(g - 1)) * BigInt(static_cast<unsigned long>(g));
  require_work(space.fits_ulong_p() ? space.get_ui() : UINT64_MAX, std::uint64_t{1} << 22,
               "deg1_extremal_scan (multisets x constants)");
  GroupTable table(spec);
  const BigInt total = binomial(n, k);

  Deg1Scan best{Rational(2), {}, spec.zero(), MultilinearPoly(n, spec), deg1_bound(n, k), false, false, 0};
  std::vector<int> multiplicity(g, 0);
  std::vector<int> best_multiplicity;
  std::uint32_t best_constant = 0;

  // Compositions of n into g parts, each part taken in descending order.
  auto visit = [&]() {
    ++best.multisets;
    auto counts = subset_sum_counts(table, multiplicity, k);
    for (std::uint32_t c = 0; c < g; ++c) {
      Rational r = fraction_from_counts(table, counts, c, total);
      if (r.is_zero()) continue;
      if (r < best.min) {
        best.min = r;
        best_multiplicity = multiplicity;
        best_constant = c;
      }
    }
  };
  auto recurse = [&](auto&& self, std::uint32_t v, int remaining) -> void {
    if (v + 1 == g) {
      multiplicity[v] = remaining;
      visit();
      return;
    }
    for (int f = remaining; f >= 0; --f) {
      multiplicity[v] = f;
      self(self, v + 1, remaining - f);
    }
  };
  recurse(recurse, 0, n);

  // Witness: highest element index on x1 onward, zero coefficients last.
  for (std::uint32_t v = static_cast<std::uint32_t>(g); v-- > 0;) {
    for (int r = 0; r < best_multiplicity[v]; ++r) best.coefficients.push_back(spec.element(v));
  }
  best.constant = spec.element(best_constant);
  for (int i = 1; i <= n; ++i) best.witness.add_term(bit_of(i), best.coefficients[static_cast<std::size_t>(i - 1)]);
  best.witness.add_term(0, best.constant);
  best.holds = best.min >= best.bound;
  best.asserted = mode == ScanMode::assert_bound && n >= 8;
  return best;
}

Rational all_bad_bucket_probability(const std::vector<int>& frequencies, int m) {
  if (frequencies.empty() || m < 1) throw Error("all_bad_bucket_probability: need frequencies and m >= 1");
  std::vector<long> small, large;
  for (int f : frequencies) {
    if (f < 1) throw Error("all_bad_bucket_probability: frequencies must be positive");
    small.push_back(f);
    large.push_back(static_cast<long>(f) * m);
  }
  return Rational(multinomial(small), multinomial(large));
}

}  // namespace slicelab
