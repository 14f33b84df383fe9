#pragma once

// The matching walk on the balanced slice: a point u of weight n/2 moves to
// v by pairing its 1-coordinates with its 0-coordinates through a uniform
// perfect matching and flipping both ends of a uniform subset of pairs.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "slicelab/polynomial.hpp"

namespace slicelab {

/// A perfect matching between the 1-coordinates and the 0-coordinates of u.
/// Edge kappa (0-based here, labelled kappa + 1 in flip strings) is
/// (one_coordinate, zero_coordinate), both 1-based.
class Matching {
 public:
  /// Edges in label order; each pair may list its endpoints in either order.
  static Matching from_edges(const SlicePoint& u, const std::vector<std::pair<int, int>>& edges);
  /// pairing[kappa] is the 0-coordinate matched to the kappa-th smallest 1-coordinate.
  static Matching from_pairing(const SlicePoint& u, const std::vector<int>& pairing);

  const SlicePoint& base() const { return u_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

 private:
  SlicePoint u_;
  std::vector<std::pair<int, int>> edges_;
};

/// Flips both endpoints of edge kappa whenever bit kappa of `flips` is set
/// (a flip string "a_1 a_2 ..." parses with SlicePoint::parse to this mask).
SlicePoint gamma_map(const SlicePoint& u, const Matching& m, Mask flips);

/// Closed form 1 / (2^{n/2} C(n/2, D)) for two balanced points at distance 2D.
Rational edge_weight(const SlicePoint& u, const SlicePoint& v);

/// Pr over all matchings and flip strings that gamma_map(u, ., .) = v, by enumeration.
Rational enumerated_edge_weight(const SlicePoint& u, const SlicePoint& v);

/// The transition matrix of the walk, built by enumerating every matching
/// and flip string from every row. Entries are counts over a common
/// denominator (n/2)! 2^{n/2}.
class WalkMatrix {
 public:
  int n() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Mask>& points() const { return points_; }
  std::int64_t count(std::size_t i, std::size_t j) const { return counts_[i * points_.size() + j]; }
  std::int64_t denominator() const { return denominator_; }
  Rational at(std::size_t i, std::size_t j) const;
  /// Row index of a balanced point; throws Error for foreign points.
  std::size_t index_of(Mask point) const;

 private:
  friend WalkMatrix build_walk_matrix(int n);
  int n_ = 0;
  std::vector<Mask> points_;
  std::vector<std::int64_t> counts_;
  std::vector<std::int32_t> rank_;  // mask -> row, -1 off the slice
  std::int64_t denominator_ = 1;
};

/// Requires n even and C(n, n/2) <= 4096.
WalkMatrix build_walk_matrix(int n);

struct WalkInvariants {
  bool symmetric = true;
  bool stochastic = true;         // every row sums to exactly 1
  bool distance_dependent = true;
  bool diagonal = true;           // W[u,u] = 1/2^{n/2}
  bool matches_closed_form = true;
  bool all() const { return symmetric && stochastic && distance_dependent && diagonal && matches_closed_form; }
};

WalkInvariants check_walk_invariants(const WalkMatrix& w);

/// (1/n') sum_{u,v in S} W[u,v] for S given by row membership.
Rational pair_hit_probability(const WalkMatrix& w, const std::vector<bool>& member);
Rational pair_hit_probability(const WalkMatrix& w, const std::vector<SlicePoint>& set);

struct LowerBoundReport {
  int degree = 0;
  Rational density;   // rho = |S| / n'
  Rational pair_hit;
  Rational bound;     // rho / 2^d
  bool holds = false;
};

/// Checks pair_hit(S) >= rho 2^{-d} for the nonzero set S of P on the balanced slice.
LowerBoundReport verify_lower_bound(const MultilinearPoly& p, int d);
LowerBoundReport verify_lower_bound(const WalkMatrix& w, const std::vector<bool>& nonzero, int d);

/// f_t = (x1 - x2)(x3 - x4)...(x_{2t-1} - x_{2t}) on the balanced slice, in slice order.
std::vector<int> f_t_vector(int n, int t);

/// lambda_t = E[f_t(v)] for v one walk step from u = 1010...10.
Rational eigenvalue_exact(int n, int t);

struct SpectrumReport {
  int n = 0;
  std::vector<Rational> lambdas;         // t = 0..n/2
  std::vector<BigInt> multiplicities;    // C(n,t) - C(n,t-1)
  std::vector<double> eigenvalues;       // full W, descending
  Rational mu_exact;                     // largest |lambda_t| over t >= 1
  double mu = 0;                         // max(|mu_2|, |mu_n'|) from the float spectrum
  double max_deviation = 0;              // float vs exact multiset
  bool eigenvectors_exact = false;       // W f_t = lambda_t f_t for every t
  bool trace_identity = false;
  bool float_matches = false;            // max_deviation <= 1e-9
};

SpectrumReport spectrum(int n);
SpectrumReport spectrum(const WalkMatrix& w);

/// Eigenvalues of W in descending order (symmetric float solver).
std::vector<double> float_eigenvalues(const WalkMatrix& w);

struct MatchingStats {
  Rational good;
  Rational self_good;
};

/// Exact Pr[t-good] and Pr[t-self-good] for a uniform matching between the
/// odd and the even coordinates.
MatchingStats matching_stats(int n, int t);

struct MonteCarloReport {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  Rational estimate;
  double low = 0;   // 95% Wilson interval
  double high = 0;
};

MonteCarloReport monte_carlo_pair_hit(int n, const std::function<bool(Mask)>& member, std::uint64_t samples,
                                      std::uint64_t seed);

}  // namespace slicelab
