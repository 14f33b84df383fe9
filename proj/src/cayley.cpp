#include "slicelab/cayley.hpp"

#include <algorithm>
#include <cmath>

namespace slicelab {

namespace {

constexpr double kTolerance = 1e-9;

void require_even(int n, int max_n, const char* what) {
  if (n < 2 || n % 2 != 0) throw Error(std::string(what) + ": n must be even and positive");
  if (n > max_n) throw GuardError(std::string(what) + ": n must be at most " + std::to_string(max_n));
}

Rational class_weight(int m, int delta) {
  return Rational(BigInt(1), big_pow(2, static_cast<unsigned long>(m)) * binomial(m, delta));
}

}  // namespace

Rational cayley_generator_weight(int n, Mask y) {
  require_even(n, kMaxVariables, "cayley_generator_weight");
  if ((y & ~full_mask(n)) != 0) throw Error("cayley_generator_weight: string longer than n");
  int w = popcount(y);
  if (w % 2 != 0) throw Error("cayley_generator_weight: generators have even weight");
  return class_weight(n / 2, w / 2);
}

Rational cayley_eigenvalue(int n, Mask subset) {
  require_even(n, 16, "cayley_eigenvalue");
  if ((subset & ~full_mask(n - 1)) != 0) throw Error("cayley_eigenvalue: A must be a subset of [n-1]");
  const int m = n / 2;
  // Signed number of generators in each weight class.
  std::vector<std::int64_t> signed_count(static_cast<std::size_t>(m) + 1, 0);
  for (Mask y = 0; y < (Mask{1} << n); ++y) {
    int w = popcount(y);
    if (w % 2 != 0) continue;
    signed_count[static_cast<std::size_t>(w / 2)] += popcount(y & subset) % 2 == 0 ? 1 : -1;
  }
  Rational sum = 0;
  for (int delta = 0; delta <= m; ++delta) {
    sum += Rational(signed_count[static_cast<std::size_t>(delta)]) * class_weight(m, delta);
  }
  return sum;
}

Rational mu_empty(int n) {
  require_even(n, kMaxVariables, "mu_empty");
  const int m = n / 2;
  Rational sum = 0;
  for (int delta = 0; delta <= m; ++delta) sum += Rational(binomial(n, 2 * delta)) * class_weight(m, delta);
  return sum;
}

InterlacingReport verify_interlacing(const WalkMatrix& w) {
  const int n = w.n();
  require_even(n, 12, "verify_interlacing");
  const int m = n / 2;
  InterlacingReport r;
  r.n = n;
  r.odd_half = m % 2 != 0;

  std::vector<double> walk = float_eigenvalues(w);
  r.walk_second = walk.size() >= 2 ? walk[1] : walk[0];
  r.walk_min = walk.back();
  r.walk_mu = walk.size() >= 2 ? std::max(std::abs(walk[1]), std::abs(walk.back())) : 0.0;

  std::vector<Rational> cayley;
  Rational max_nontrivial = 0;
  for (Mask a = 0; a < (Mask{1} << (n - 1)); ++a) {
    Rational mu = cayley_eigenvalue(n, a);
    if (a != 0) max_nontrivial = std::max(max_nontrivial, mu.abs());
    cayley.push_back(mu);
  }
  std::sort(cayley.begin(), cayley.end(), std::greater<>());
  r.cayley_second = cayley.size() >= 2 ? cayley[1] : cayley[0];
  r.cayley_min = cayley.back();
  r.cayley_max_nontrivial = max_nontrivial;

  r.upper = r.walk_second <= r.cayley_second.to_double() + kTolerance;
  r.lower = r.cayley_min.to_double() <= r.walk_min + kTolerance;
  r.mu_bound = r.walk_mu <= r.cayley_max_nontrivial.to_double() + kTolerance;

  r.induced_submatrix = true;
  for (std::size_t i = 0; i < w.size() && r.induced_submatrix; ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      Mask y = w.points()[i] ^ w.points()[j];
      if (w.at(i, j) != cayley_generator_weight(n, y)) {
        r.induced_submatrix = false;
        break;
      }
    }
  }
  return r;
}

InterlacingReport verify_interlacing(int n) {
  require_even(n, 12, "verify_interlacing");
  return verify_interlacing(build_walk_matrix(n));
}

Rational dist_D_tail(int n, int threshold) {
  require_even(n, 40, "dist_D_tail");
  const int m = n / 2;
  Rational tail = 0;
  for (int delta = 0; delta <= m; ++delta) {
    if (std::abs(2 * delta - m) > threshold) tail += Rational(binomial(n, 2 * delta)) * class_weight(m, delta);
  }
  return tail / mu_empty(n);
}

}  // namespace slicelab
