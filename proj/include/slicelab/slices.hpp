#pragma once

// Slice enumeration, exact non-vanishing fractions, the distance bounds as
// computable quantities, and exhaustive searches over low-degree polynomials.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "slicelab/polynomial.hpp"

namespace slicelab {

/// Points of weight k in increasing mask order. Requires 0 <= k <= n <= 30.
std::vector<SlicePoint> enumerate_slice(int n, int k);
std::vector<Mask> slice_masks(int n, int k);

/// |{x in slice k : P(x) != 0}| / C(n,k). Throws Error if P vanishes on the slice.
Rational nonvanish_fraction(const MultilinearPoly& p, int k);
Rational nonvanish_fraction(const RationalPoly& p, int k);

/// C(n-2d, k-d) / C(n,k).
Rational suboptimal_bound(int n, int k, int d);

struct MainBound {
  Rational leading;               // (t/n)^d
  std::optional<Rational> exact;  // (t/n)^d (1 - t^{-eps}) when t^{eps} is rational
  double value = 0;               // the same quantity in floating point
};

/// (t/n)^d (1 - t^{-eps}) with t = min(k, n-k).
MainBound main_bound(int n, int k, int d, const Rational& eps);

enum class SearchMode { full, homogeneous };

struct ExtremalResult {
  Rational min;
  MultilinearPoly witness;
  std::uint64_t count_searched = 0;
};

/// Exact minimum of nonvanish_fraction over every polynomial of degree <= d
/// (or homogeneous of degree d) that does not vanish on slice k, with the
/// first minimizer in enumeration order. With `prune`, cyclic groups of
/// prime order fix the first nonzero coefficient to 1.
ExtremalResult extremal_min_fraction(int n, int k, int d, const GroupSpec& spec,
                                     SearchMode mode = SearchMode::full, bool prune = true);

/// Number of distinct functions on slice k given by polynomials of degree
/// <= d (or homogeneous of degree d).
BigInt count_degree_d_functions(int n, int k, int d, const GroupSpec& spec, SearchMode mode = SearchMode::full);

struct SliceFunction {
  MultilinearPoly poly;  // first representative in enumeration order, of least degree
  std::vector<std::uint32_t> values;  // group element index per point of slice_masks(n, k)
};

/// One representative per distinct nonzero function on slice k of degree
/// <= d, in order of first appearance.
std::vector<SliceFunction> distinct_functions(int n, int k, int d, const GroupSpec& spec);

/// Fraction of the whole cube {0,1}^n where P is nonzero. Requires
/// deg(P) <= d and P nonzero somewhere.
Rational cube_nonvanish_fraction(const MultilinearPoly& p, int d);

/// Monomials of degree <= d (or exactly d), ordered by degree then mask.
std::vector<Mask> monomials_up_to(int n, int d, bool homogeneous = false);

}  // namespace slicelab
