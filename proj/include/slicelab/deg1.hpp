#pragma once

// Linear polynomials a_1 x_1 + ... + a_n x_n + c on a slice: exact
// non-vanishing probabilities by subset-sum counting over the group.

#include <cstdint>
#include <vector>

#include "slicelab/polynomial.hpp"

namespace slicelab {

/// Fraction of k-subsets A of [n] with sum_{i in A} a_i + c != 0. Throws
/// Error when that sum is zero for every A.
Rational linear_nonvanish_fraction(const std::vector<GroupElement>& a, const GroupElement& c, const GroupSpec& spec,
                                   int k);

/// The same for a polynomial of degree at most 1.
Rational linear_nonvanish_fraction(const MultilinearPoly& p, int k);

/// (min(k, n-k) - 1) / n.
Rational deg1_bound(int n, int k);

/// True iff at least two entries differ.
bool nae(const std::vector<GroupElement>& a);

enum class ScanMode { assert_bound, report };

struct Deg1Scan {
  Rational min;
  std::vector<GroupElement> coefficients;  // a_1..a_n of the first minimizer
  GroupElement constant;
  MultilinearPoly witness;
  Rational bound;
  bool holds = false;     // min >= bound
  bool asserted = false;  // the bound applies (assert mode and n >= 8)
  std::uint64_t multisets = 0;
};

/// Minimum of linear_nonvanish_fraction over all linear polynomials that do
/// not vanish on slice k. Coefficient multisets are scanned with the
/// multiplicity of the zero element descending, constants in element order.
Deg1Scan deg1_extremal_scan(int n, int k, const GroupSpec& spec, ScanMode mode = ScanMode::assert_bound);

/// Probability that every bucket of a uniform partition of [n] into k
/// labelled buckets of size m is constant, for a coefficient multiset with
/// value multiplicities f_1 m, ..., f_l m (k = sum f_i, n = k m):
/// multinomial(k; f) / multinomial(n; f m).
Rational all_bad_bucket_probability(const std::vector<int>& frequencies, int m);

}  // namespace slicelab
