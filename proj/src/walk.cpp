#include "slicelab/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "slicelab/slices.hpp"

namespace slicelab {

namespace {

// (n/2)! 2^{n/2} at n = 12: the largest walk enumeration allowed by default.
constexpr std::uint64_t kStepLimit = 46080;

void require_balanced(const SlicePoint& u, const char* what) {
  if (u.n <= 0 || u.n % 2 != 0) throw Error(std::string(what) + ": n must be positive and even");
  if (u.weight() != u.n / 2) throw Error(std::string(what) + ": point " + u.str() + " is not balanced");
}

void require_even(int n, const char* what) {
  if (n < 2 || n % 2 != 0 || n > kMaxVariables) throw Error(std::string(what) + ": n must be even and positive");
}

std::uint64_t steps_per_point(int n) {
  int m = n / 2;
  BigInt total = factorial(m) * big_pow(2, static_cast<unsigned long>(m));
  return total.fits_ulong_p() ? total.get_ui() : UINT64_MAX;
}

// Calls visit(v) for every (matching, flip string) pair from u: matchings as
// permutations of the 0-coordinates in lexicographic order, flip strings in
// Gray-code order.
template <class Visit>
void for_each_step(int n, Mask u, Visit&& visit) {
  std::vector<int> ones, zeros;
  for (int i = 0; i < n; ++i) ((u >> i) & 1U ? ones : zeros).push_back(i);
  const std::size_t m = ones.size();
  std::vector<Mask> pair(m);
  do {
    for (std::size_t k = 0; k < m; ++k) pair[k] = (Mask{1} << ones[k]) | (Mask{1} << zeros[k]);
    Mask v = u;
    visit(v);
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << m); ++g) {
      v ^= pair[static_cast<std::size_t>(__builtin_ctzll(g))];
      visit(v);
    }
  } while (std::next_permutation(zeros.begin(), zeros.end()));
}

int f_t_value(Mask x, int t) {
  int value = 1;
  for (int i = 0; i < t && value != 0; ++i) {
    int a = static_cast<int>((x >> (2 * i)) & 1U), b = static_cast<int>((x >> (2 * i + 1)) & 1U);
    value *= a - b;
  }
  return value;
}

Mask alternating_point(int n) {
  Mask u = 0;
  for (int i = 0; i < n; i += 2) u |= Mask{1} << i;
  return u;
}

}  // namespace

// ---------------------------------------------------------------- matchings

Matching Matching::from_edges(const SlicePoint& u, const std::vector<std::pair<int, int>>& edges) {
  require_balanced(u, "matching");
  if (edges.size() != static_cast<std::size_t>(u.n / 2)) {
    throw Error("matching: expected " + std::to_string(u.n / 2) + " edges, got " + std::to_string(edges.size()));
  }
  Matching m;
  m.u_ = u;
  Mask used = 0;
  for (auto [a, b] : edges) {
    if (a < 1 || a > u.n || b < 1 || b > u.n) throw Error("matching: coordinate out of range");
    if (u.get(a) == u.get(b)) {
      throw Error("matching: edge (" + std::to_string(a) + "," + std::to_string(b) +
                  ") does not join a 1-coordinate to a 0-coordinate");
    }
    if ((used & (bit_of(a) | bit_of(b))) != 0) throw Error("matching: coordinate used twice");
    used |= bit_of(a) | bit_of(b);
    m.edges_.emplace_back(u.get(a) ? a : b, u.get(a) ? b : a);
  }
  return m;
}

Matching Matching::from_pairing(const SlicePoint& u, const std::vector<int>& pairing) {
  require_balanced(u, "matching");
  std::vector<std::pair<int, int>> edges;
  std::size_t kappa = 0;
  for (int i = 1; i <= u.n; ++i) {
    if (!u.get(i)) continue;
    if (kappa >= pairing.size()) throw Error("matching: pairing is too short");
    edges.emplace_back(i, pairing[kappa++]);
  }
  if (kappa != pairing.size()) throw Error("matching: pairing is too long");
  return from_edges(u, edges);
}

SlicePoint gamma_map(const SlicePoint& u, const Matching& m, Mask flips) {
  require_balanced(u, "gamma_map");
  if (!(m.base() == u)) throw Error("gamma_map: matching was built for a different point");
  if ((flips >> m.size()) != 0) throw Error("gamma_map: flip string longer than n/2");
  SlicePoint v = u;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if ((flips >> k) & 1U) v.bits ^= bit_of(m.edges()[k].first) | bit_of(m.edges()[k].second);
  }
  return v;
}

Rational edge_weight(const SlicePoint& u, const SlicePoint& v) {
  require_balanced(u, "edge_weight");
  require_balanced(v, "edge_weight");
  if (u.n != v.n) throw Error("edge_weight: points have different lengths");
  const int m = u.n / 2;
  const int delta = distance(u, v) / 2;
  return Rational(BigInt(1), big_pow(2, static_cast<unsigned long>(m)) * binomial(m, delta));
}

Rational enumerated_edge_weight(const SlicePoint& u, const SlicePoint& v) {
  require_balanced(u, "enumerated_edge_weight");
  require_balanced(v, "enumerated_edge_weight");
  if (u.n != v.n) throw Error("enumerated_edge_weight: points have different lengths");
  require_work(steps_per_point(u.n), kStepLimit, "enumerated_edge_weight");
  std::int64_t hits = 0, total = 0;
  for_each_step(u.n, u.bits, [&](Mask w) {
    ++total;
    hits += w == v.bits;
  });
  return Rational(BigInt(hits), BigInt(total));
}

// ---------------------------------------------------------------- walk matrix

Rational WalkMatrix::at(std::size_t i, std::size_t j) const {
  return Rational(BigInt(count(i, j)), BigInt(denominator_));
}

std::size_t WalkMatrix::index_of(Mask point) const {
  if (point >= rank_.size() || rank_[point] < 0) throw Error("walk: point is not on the balanced slice");
  return static_cast<std::size_t>(rank_[point]);
}

WalkMatrix build_walk_matrix(int n) {
  require_even(n, "build_walk_matrix");
  BigInt size = binomial(n, n / 2);
  if (size > 4096) throw GuardError("build_walk_matrix: C(n, n/2) exceeds 4096");
  std::uint64_t per_row = steps_per_point(n);
  require_work(per_row, kStepLimit, "build_walk_matrix");
  WalkMatrix w;
  w.n_ = n;
  w.points_ = slice_masks(n, n / 2);
  w.denominator_ = static_cast<std::int64_t>(per_row);
  w.rank_.assign(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < w.points_.size(); ++i) w.rank_[w.points_[i]] = static_cast<std::int32_t>(i);
  const std::size_t N = w.points_.size();
  w.counts_.assign(N * N, 0);
  parallel_chunks(N, std::min<std::size_t>(N, 64), [&](std::size_t, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) {
      std::int64_t* row = &w.counts_[i * N];
      for_each_step(n, w.points_[i], [&](Mask v) { ++row[w.rank_[v]]; });
    }
  });
  return w;
}

WalkInvariants check_walk_invariants(const WalkMatrix& w) {
  WalkInvariants r;
  const std::size_t N = w.size();
  const int n = w.n(), m = n / 2;
  // Closed-form weight per distance class, scaled to the common denominator.
  std::vector<std::int64_t> closed(static_cast<std::size_t>(m) + 1, -1);
  std::vector<std::int64_t> observed(static_cast<std::size_t>(m) + 1, -1);
  const Mask base = w.points()[0];
  for (std::size_t j = 0; j < N; ++j) {
    auto delta = static_cast<std::size_t>(popcount(base ^ w.points()[j]) / 2);
    if (closed[delta] >= 0) continue;
    Rational scaled = edge_weight(SlicePoint{n, base}, SlicePoint{n, w.points()[j]}) * Rational(w.denominator());
    closed[delta] = scaled.denominator() == 1 ? scaled.numerator().get_si() : -2;
  }
  const std::int64_t diagonal = w.denominator() >> m;  // denominator / 2^m
  for (std::size_t i = 0; i < N; ++i) {
    std::int64_t row_sum = 0;
    for (std::size_t j = 0; j < N; ++j) {
      std::int64_t c = w.count(i, j);
      row_sum += c;
      if (c != w.count(j, i)) r.symmetric = false;
      auto delta = static_cast<std::size_t>(popcount(w.points()[i] ^ w.points()[j]) / 2);
      if (observed[delta] < 0) observed[delta] = c;
      if (observed[delta] != c) r.distance_dependent = false;
      if (closed[delta] != c) r.matches_closed_form = false;
    }
    if (row_sum != w.denominator()) r.stochastic = false;
    if (w.count(i, i) != diagonal) r.diagonal = false;
  }
  return r;
}

Rational pair_hit_probability(const WalkMatrix& w, const std::vector<bool>& member) {
  if (member.size() != w.size()) throw Error("pair_hit_probability: membership vector has the wrong length");
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i]) rows.push_back(i);
  }
  BigInt total = 0;
  for (auto i : rows) {
    std::int64_t s = 0;
    for (auto j : rows) s += w.count(i, j);
    total += BigInt(static_cast<long>(s));
  }
  return Rational(total, BigInt(w.denominator()) * BigInt(static_cast<unsigned long>(w.size())));
}

Rational pair_hit_probability(const WalkMatrix& w, const std::vector<SlicePoint>& set) {
  std::vector<bool> member(w.size(), false);
  for (const auto& x : set) {
    if (x.n != w.n()) throw Error("pair_hit_probability: point " + x.str() + " has the wrong length");
    member[w.index_of(x.bits)] = true;
  }
  return pair_hit_probability(w, member);
}

LowerBoundReport verify_lower_bound(const WalkMatrix& w, const std::vector<bool>& nonzero, int d) {
  if (d < 0) throw Error("verify_lower_bound: d must be non-negative");
  auto size = static_cast<long>(std::count(nonzero.begin(), nonzero.end(), true));
  if (size == 0) throw Error("verify_lower_bound: polynomial vanishes on the balanced slice");
  LowerBoundReport r;
  r.degree = d;
  r.density = Rational(BigInt(size), BigInt(static_cast<unsigned long>(w.size())));
  r.pair_hit = pair_hit_probability(w, nonzero);
  r.bound = r.density * Rational(BigInt(1), big_pow(2, static_cast<unsigned long>(d)));
  r.holds = r.pair_hit >= r.bound;
  return r;
}

LowerBoundReport verify_lower_bound(const MultilinearPoly& p, int d) {
  if (p.degree() > d) throw Error("verify_lower_bound: polynomial degree exceeds d");
  WalkMatrix w = build_walk_matrix(p.n());
  std::vector<bool> nonzero(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) nonzero[i] = !evaluate(p, SlicePoint{p.n(), w.points()[i]}).is_zero();
  return verify_lower_bound(w, nonzero, d);
}

// ---------------------------------------------------------------- spectrum

std::vector<int> f_t_vector(int n, int t) {
  require_even(n, "f_t_vector");
  if (t < 0 || t > n / 2) throw Error("f_t_vector: t must be in 0..n/2");
  std::vector<int> out;
  for (Mask x : slice_masks(n, n / 2)) out.push_back(f_t_value(x, t));
  return out;
}

Rational eigenvalue_exact(int n, int t) {
  require_even(n, "eigenvalue_exact");
  if (t < 0 || t > n / 2) throw Error("eigenvalue_exact: t must be in 0..n/2");
  require_work(steps_per_point(n), kStepLimit, "eigenvalue_exact");
  std::int64_t sum = 0, total = 0;
  for_each_step(n, alternating_point(n), [&](Mask v) {
    sum += f_t_value(v, t);
    ++total;
  });
  return Rational(BigInt(sum), BigInt(total));
}

std::vector<double> float_eigenvalues(const WalkMatrix& w) {
  const auto N = static_cast<Eigen::Index>(w.size());
  Eigen::MatrixXd a(N, N);
  const double den = static_cast<double>(w.denominator());
  for (Eigen::Index i = 0; i < N; ++i) {
    for (Eigen::Index j = 0; j < N; ++j) {
      a(i, j) = static_cast<double>(w.count(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) / den;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("spectrum: eigensolver did not converge");
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + N);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

SpectrumReport spectrum(const WalkMatrix& w) {
  const int n = w.n(), m = n / 2;
  SpectrumReport r;
  r.n = n;
  std::vector<Rational> multiset;
  Rational trace = 0;
  r.eigenvectors_exact = true;
  for (int t = 0; t <= m; ++t) {
    Rational lambda = eigenvalue_exact(n, t);
    BigInt mult = binomial(n, t) - binomial(n, t - 1);
    r.lambdas.push_back(lambda);
    r.multiplicities.push_back(mult);
    trace += lambda * Rational(mult);
    for (BigInt c = 0; c < mult; ++c) multiset.push_back(lambda);

    std::vector<int> f = f_t_vector(n, t);
    for (std::size_t i = 0; i < w.size() && r.eigenvectors_exact; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < w.size(); ++j) s += w.count(i, j) * f[j];
      if (Rational(BigInt(s), BigInt(w.denominator())) != lambda * Rational(f[i])) r.eigenvectors_exact = false;
    }
  }
  r.trace_identity = trace == Rational(binomial(n, m), big_pow(2, static_cast<unsigned long>(m)));

  std::sort(multiset.begin(), multiset.end(), std::greater<>());
  if (multiset.size() >= 2) {
    r.mu_exact = std::max(multiset[1].abs(), multiset.back().abs());
  }
  r.eigenvalues = float_eigenvalues(w);
  if (r.eigenvalues.size() >= 2) r.mu = std::max(std::abs(r.eigenvalues[1]), std::abs(r.eigenvalues.back()));
  if (multiset.size() == r.eigenvalues.size()) {
    for (std::size_t i = 0; i < multiset.size(); ++i) {
      r.max_deviation = std::max(r.max_deviation, std::abs(multiset[i].to_double() - r.eigenvalues[i]));
    }
    r.float_matches = r.max_deviation <= 1e-9;
  }
  return r;
}

SpectrumReport spectrum(int n) { return spectrum(build_walk_matrix(n)); }

// ---------------------------------------------------------------- matchings

MatchingStats matching_stats(int n, int t) {
  require_even(n, "matching_stats");
  const int m = n / 2;
  if (t < 1 || t > m) throw Error("matching_stats: t must be in 1..n/2");
  BigInt perms = factorial(m);
  require_work(perms.fits_ulong_p() ? perms.get_ui() : UINT64_MAX, 720, "matching_stats");
  // sigma(i) = j when the odd coordinate 2i-1 is matched to 2j.
  std::vector<int> sigma(static_cast<std::size_t>(m)), inverse(static_cast<std::size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 0);
  const int needed = (t + 1) / 2;  // every t/2-subset of [t] meets a fixed point
  std::int64_t good = 0, self_good = 0, total = 0;
  do {
    ++total;
    for (int i = 0; i < m; ++i) inverse[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
    bool is_good = true;
    int moved = 0;
    for (int i = 0; i < t; ++i) {
      auto ui = static_cast<std::size_t>(i);
      if (sigma[ui] >= t && inverse[ui] >= t) is_good = false;
      if (sigma[ui] != i) ++moved;
    }
    if (!is_good) continue;
    ++good;
    if (moved < needed) ++self_good;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return MatchingStats{Rational(BigInt(good), BigInt(total)), Rational(BigInt(self_good), BigInt(total))};
}

MonteCarloReport monte_carlo_pair_hit(int n, const std::function<bool(Mask)>& member, std::uint64_t samples,
                                      std::uint64_t seed) {
  require_even(n, "monte_carlo_pair_hit");
  if (samples == 0) throw Error("monte_carlo_pair_hit: samples must be positive");
  Rng rng(seed);
  const int m = n / 2;
  std::vector<int> labels(static_cast<std::size_t>(n));
  MonteCarloReport r;
  r.samples = samples;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::iota(labels.begin(), labels.end(), 0);
    rng.shuffle(labels);
    std::vector<int> ones(labels.begin(), labels.begin() + m), zeros(labels.begin() + m, labels.end());
    std::sort(ones.begin(), ones.end());
    std::sort(zeros.begin(), zeros.end());
    Mask x = 0;
    for (int i : ones) x |= Mask{1} << i;
    rng.shuffle(zeros);
    Mask y = x;
    for (int k = 0; k < m; ++k) {
      if (rng.bit()) y ^= (Mask{1} << ones[static_cast<std::size_t>(k)]) | (Mask{1} << zeros[static_cast<std::size_t>(k)]);
    }
    if (member(x) && member(y)) ++r.hits;
  }
  r.estimate = Rational(BigInt(static_cast<unsigned long>(r.hits)), BigInt(static_cast<unsigned long>(samples)));
  const double z = 1.959963984540054;
  const double N = static_cast<double>(samples);
  const double p = static_cast<double>(r.hits) / N;
  const double denom = 1 + z * z / N;
  const double center = (p + z * z / (2 * N)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / N + z * z / (4 * N * N)) / denom;
  r.low = std::max(0.0, center - half);
  r.high = std::min(1.0, center + half);
  return r;
}

}  // namespace slicelab
