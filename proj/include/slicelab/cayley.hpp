#pragma once

// The weighted Cayley graph on even-weight strings of {0,1}^n whose induced
// subgraph on the balanced slice is the matching walk. Generators are all
// even-weight strings y (the zero string included) with weight
// 1 / (2^{n/2} C(n/2, |y|/2)); characters are indexed by subsets of [n-1].

#include <vector>

#include "slicelab/walk.hpp"

namespace slicelab {

/// Weight of generator y; throws Error when |y| is odd.
Rational cayley_generator_weight(int n, Mask y);

/// Eigenvalue sum_y w(y) (-1)^{|y & A|} for A a subset of [n-1]. Requires n even, n <= 16.
Rational cayley_eigenvalue(int n, Mask subset);

/// The eigenvalue of the empty character: sum_D C(n, 2D) / (2^{n/2} C(n/2, D)).
Rational mu_empty(int n);

struct InterlacingReport {
  int n = 0;
  bool odd_half = false;         // n/2 odd
  double walk_second = 0;        // second largest eigenvalue of W
  double walk_min = 0;
  double walk_mu = 0;
  Rational cayley_second;        // second largest over all characters
  Rational cayley_min;
  Rational cayley_max_nontrivial;  // max |mu'_A| over nonempty A
  bool upper = false;            // walk_second <= cayley_second (+1e-9)
  bool lower = false;            // cayley_min <= walk_min (+1e-9)
  bool mu_bound = false;         // walk_mu <= cayley_max_nontrivial (+1e-9)
  bool induced_submatrix = false;  // W[u,v] = w(u xor v) for all balanced u, v
  bool all() const { return upper && lower && mu_bound && induced_submatrix; }
};

InterlacingReport verify_interlacing(int n);
InterlacingReport verify_interlacing(const WalkMatrix& w);

/// Pr_{x ~ D}[ ||x| - n/2| > threshold ] where D is the generator
/// distribution normalized by mu_empty. Requires n even, n <= 40.
Rational dist_D_tail(int n, int threshold);

}  // namespace slicelab
