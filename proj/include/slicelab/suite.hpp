#pragma once

// Desk-scale verification checks. Each check enumerates a parameter grid,
// compares exact quantities, and records any failing instance.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slicelab/algebra.hpp"

namespace slicelab {

struct CheckResult {
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::uint64_t instances = 0;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> failures;  // the first few failing instances

  void fail(const std::string& message);
  void fact(const std::string& key, const std::string& value) { facts.emplace_back(key, value); }
};

CheckResult check_gamma_golden();
/// Closed-form edge weights against matching-and-flip enumeration.
CheckResult check_weight_oracle(const std::vector<int>& ns);
CheckResult check_walk_matrix(const std::vector<int>& ns);
/// Exact eigenvectors, float spectrum, trace identity, lambda_t <= Pr[t-good].
CheckResult check_spectrum(const std::vector<int>& ns);
CheckResult check_interlacing(const std::vector<int>& ns);
/// pair_hit >= rho 2^{-d} for every nonzero degree <= 2 function over Z2 at
/// n = family_n, and for `random_count` seeded random degree <= 3
/// polynomials at n = random_n (skipped when 0).
CheckResult check_lower_bound(int family_n, int random_n, int random_count, std::uint64_t seed);
/// Exhaustive minimum on the balanced slice over Z2 against C(n-2d, n/2-d)/C(n, n/2).
CheckResult check_balanced_distance(const std::vector<int>& ns, const std::vector<int>& ds);
CheckResult check_deg1(const std::vector<int>& ns, const std::vector<std::string>& groups);
CheckResult check_good_slices(int max_k, int max_d, int shift_max_k, int shift_max_d,
                              const std::vector<std::int64_t>& primes);

struct WilsonInstance {
  int n, k, d;
  std::int64_t q;
};
/// Function counts against q^{C(n,d)} and homogeneous-basis round trips.
CheckResult check_wilson(const std::vector<WilsonInstance>& instances);
CheckResult check_restrictions(int max_n, std::uint64_t seed);
CheckResult check_covers(int max_n, int points_per_slice, std::uint64_t seed);
/// Double-path influence equality at each n in ns (every degree <= 2
/// function over Z2), influence floors and total influence at family_n.
CheckResult check_influence(const std::vector<int>& ns, int family_n);

/// Every check at parameters capped by max_n; deterministic for a seed.
std::vector<CheckResult> run_suite(int max_n, std::uint64_t seed);

}  // namespace slicelab
