#pragma once

// p-ary digit arithmetic, Lucas binomials, (d,p)-good slices and the
// restriction reductions that move a polynomial between slices.

#include <cstdint>
#include <vector>

#include "slicelab/polynomial.hpp"

namespace slicelab {

/// Little-endian base-p digits of a non-negative integer.
struct PAryDigits {
  std::int64_t base = 2;
  std::vector<int> digits;  // empty for zero

  static PAryDigits of(std::int64_t value, std::int64_t base);
  std::int64_t value() const;
  /// Digit j, zero beyond the most significant one.
  int digit(std::size_t j) const { return j < digits.size() ? digits[j] : 0; }
};

bool is_prime(std::int64_t p);

/// C(a, b) mod p as the product of digitwise binomials.
std::int64_t lucas_binom_mod_p(std::int64_t a, std::int64_t b, std::int64_t p);

/// k is (d,p)-good when its digits agree with d's below d's leading digit
/// position l and dominate at l. Every k is (0,p)-good.
bool is_good_slice(std::int64_t k, std::int64_t d, std::int64_t p);

/// Returns c in [0, 2d] with k - c (d,p)-good and k - c >= d. Throws Error
/// when the construction leaves that range.
std::int64_t find_good_shift(std::int64_t k, std::int64_t d, std::int64_t p);

struct SpanningReport {
  int degree = 0;          // |I|
  BigInt coefficient;      // C(k - |I|, d - |I|)
  std::int64_t coefficient_mod_p = 0;
  bool identity_holds = false;
  bool invertible = false;
};

/// Checks sum_{T >= I, |T| = d} x^T = C(k-|I|, d-|I|) x^I pointwise on the
/// slice of weight k, and whether the coefficient is a unit modulo p (hence
/// modulo q, a power of p).
SpanningReport verify_spanning_identity(int n, int k, int d, std::int64_t p, std::int64_t q, Mask monomial);

struct Restriction {
  MultilinearPoly poly;
  std::vector<int> coordinates;  // original labels, increasing
};

/// Keeps a seeded uniform 2k-subset T of the coordinates (renumbered in
/// increasing order) and sets every other variable to 0.
Restriction random_restriction_to_balanced(const MultilinearPoly& p, int k, std::uint64_t seed);

/// Restriction of P to the given coordinate set, all others set to 0.
MultilinearPoly restrict_to_coordinates(const MultilinearPoly& p, const std::vector<int>& coordinates);

/// Exact fraction of 2k-subsets T for which the restriction is nonzero on
/// the balanced slice of its 2k variables.
Rational restriction_survival_probability(const MultilinearPoly& p, int k);

struct Descent {
  MultilinearPoly poly;     // on n - c variables, to be read on slice k - c
  std::vector<int> chosen;  // original labels in the order they were fixed
  int slice = 0;
};

/// Sets c seeded uniformly random remaining coordinates to 1, one at a time.
Descent fix_ones_descent(const MultilinearPoly& p, int k, int c, std::uint64_t seed);

/// Coordinates s such that P vanishes on every weight-k point with x_s = 1.
std::vector<int> bad_indices(const MultilinearPoly& p, int k);

struct NonrootsReport {
  std::int64_t ell = 0;  // floor(n / sqrt(k))
  bool holds = false;    // C(n - ell, k) < C(n - 2d, k - d)
  bool in_asymptotic_range = false;  // n^{1/4} <= k <= n/2 and d <= k^{0.1}
};

NonrootsReport check_nonroots_inequality(std::int64_t n, std::int64_t k, std::int64_t d);

/// Largest l with C(n - l, k) >= C(n - 2d, k - d): no nonzero degree-d
/// polynomial on the slice can have more bad indices than this.
std::int64_t max_bad_indices(std::int64_t n, std::int64_t k, std::int64_t d);

}  // namespace slicelab
