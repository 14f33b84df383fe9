#pragma once

// Influences of slice functions under coordinate transpositions, junta
// supports, and exact hyperplane covers of a slice minus one point.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "slicelab/polynomial.hpp"

namespace slicelab {

/// Inf_ij(f) = (1/4) Pr_x[f(x) != f(x with x_i and x_j exchanged)] on slice k.
/// Requires i != j.
Rational influence(const MultilinearPoly& f, int i, int j, int k);
Rational influence(const RationalPoly& f, int i, int j, int k);

/// The same value through the difference polynomial f - f^{(ij)}.
Rational influence_via_difference(const MultilinearPoly& f, int i, int j, int k);
Rational influence_via_difference(const RationalPoly& f, int i, int j, int k);

struct InfluenceTable {
  int n = 0;
  int k = 0;
  std::map<std::pair<int, int>, Rational> inf;  // i < j
  Rational total;                               // (1/n) sum of entries
};

InfluenceTable influence_table(const MultilinearPoly& f, int k);
InfluenceTable influence_table(const RationalPoly& f, int k);

struct InfluenceBoundReport {
  Rational floor;             // the minimum non-vanishing fraction used as the bound
  Rational min_positive;      // smallest nonzero influence (0 when all vanish)
  int positive_pairs = 0;
  bool matches_difference = true;  // Inf_ij = (1/4) nonvanish(f - f^{(ij)})
  bool holds = true;               // every nonzero Inf_ij >= floor / 4
};

/// Checks every nonzero influence against floor / 4. Without an explicit
/// floor, group-valued f uses the exhaustive minimum over degree-d
/// polynomials on slice k.
InfluenceBoundReport influence_lower_bound_check(const MultilinearPoly& f, int d, int k,
                                                 const std::optional<Rational>& floor = std::nullopt);
/// Rational-valued f uses C(n-2d, k-d)/C(n,k) unless a floor is given.
InfluenceBoundReport influence_lower_bound_check(const RationalPoly& f, int d, int k,
                                                 const std::optional<Rational>& floor = std::nullopt);

/// Least J such that f is invariant under every permutation fixing J
/// pointwise: the complement of the largest class of coordinates with
/// pairwise zero influence (ties drop the class with the largest least
/// element). Increasing.
std::vector<int> junta_support(const InfluenceTable& table);
std::vector<int> junta_support(const MultilinearPoly& f, int k);
std::vector<int> junta_support(const RationalPoly& f, int k);

/// Greedy maximal matching on the graph of pairs with positive influence,
/// scanning pairs in lexicographic order.
std::vector<std::pair<int, int>> influence_matching(const InfluenceTable& table);

struct TotalInfluenceReport {
  Rational total;
  int degree = 0;
  bool holds = false;  // total <= d
};

TotalInfluenceReport total_influence_degree_check(const RationalPoly& f, int d, int k);
TotalInfluenceReport total_influence_degree_check(const MultilinearPoly& f, int d, int k);

enum class Field { rationals, binary };

/// The affine form sum_i coeffs[i] x_{i+1} + constant, read over `field`.
struct LinearForm {
  std::vector<Rational> coeffs;
  Rational constant;
  Field field = Field::rationals;

  bool vanishes_at(const SlicePoint& x) const;
  std::string str() const;
};

/// min(k, n-k) forms whose zero sets cover the slice except for a.
std::vector<LinearForm> hyperplane_cover(int n, int k, const SlicePoint& a, Field field = Field::rationals);

/// Every slice point other than a is a zero of some form and a is a zero of none.
bool verify_cover(int n, int k, const SlicePoint& a, const std::vector<LinearForm>& forms);

/// True when C(n-2m, k-m) > 1, which rules out covering the slice minus one
/// point with m hyperplanes. Returns false for m >= min(k, n-k).
bool cover_impossibility(int n, int k, int m);

}  // namespace slicelab
