#include "slicelab/slices.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "slicelab/goodslices.hpp"

namespace slicelab {

namespace {

constexpr std::uint64_t kSearchLimit = std::uint64_t{1} << 26;
constexpr std::size_t kChunks = 64;

std::uint64_t checked_count(const BigInt& value) {
  return value.fits_ulong_p() ? value.get_ui() : UINT64_MAX;
}

// Prime p with q = p^l, or 0 if q is not a prime power.
std::int64_t prime_of_power(std::int64_t q) {
  for (std::int64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      while (q % f == 0) q /= f;
      return q == 1 ? f : 0;
    }
  }
  return q;
}

// Exhaustive search space: coefficient vectors over `monomials`, evaluated
// at the points of one slice. Digit j of a configuration is the group
// element index of the coefficient of monomials[j]; digit 0 is least
// significant.
struct Space {
  int n = 0;
  int k = 0;
  GroupSpec spec;
  GroupTable table;
  std::vector<Mask> monomials;
  std::vector<Mask> points;
  std::vector<std::vector<std::uint32_t>> incidence;  // points containing each monomial
  std::vector<std::vector<std::uint64_t>> incidence_bits;
  std::vector<std::uint32_t> step_delta;  // element(a + 1) - element(a), cyclically
  bool binary = false;
  std::size_t words = 0;

  Space(int n_, int k_, const GroupSpec& spec_, std::vector<Mask> monos)
      : n(n_), k(k_), spec(spec_), table(spec_), monomials(std::move(monos)) {
    points = slice_masks(n, k);
    binary = spec.is_cyclic() && spec.orders()[0] == 2;
    words = (points.size() + 63) / 64;
    incidence.resize(monomials.size());
    incidence_bits.assign(monomials.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      for (std::size_t pt = 0; pt < points.size(); ++pt) {
        if ((monomials[j] & ~points[pt]) == 0) {
          incidence[j].push_back(static_cast<std::uint32_t>(pt));
          incidence_bits[j][pt / 64] |= std::uint64_t{1} << (pt % 64);
        }
      }
    }
    std::uint32_t q = table.size();
    step_delta.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) step_delta[a] = table.sub((a + 1) % q, a);
  }

  std::uint32_t radix() const { return table.size(); }

  MultilinearPoly poly(const std::vector<std::uint32_t>& digits) const {
    MultilinearPoly p(n, spec);
    for (std::size_t j = 0; j < digits.size(); ++j) {
      if (digits[j] != 0) p.set_coeff(monomials[j], spec.element(digits[j]));
    }
    return p;
  }
};

// Number of configurations of the digits lo..N-1, or UINT64_MAX on overflow.
std::uint64_t free_count(const Space& s, std::size_t lo) {
  BigInt total = big_pow(s.radix(), static_cast<unsigned long>(s.monomials.size() - lo));
  return checked_count(total);
}

// Binary groups: the evaluation vector is a bitset and each digit change is
// one XOR with the monomial's incidence row.
struct BinaryState {
  std::vector<std::uint64_t> eval;
  std::int64_t nonzero = 0;

  void toggle(const std::vector<std::uint64_t>& row) {
    for (std::size_t w = 0; w < eval.size(); ++w) {
      std::uint64_t before = eval[w];
      eval[w] ^= row[w];
      nonzero += __builtin_popcountll(eval[w]) - __builtin_popcountll(before);
    }
  }
  void append_key(std::string& key) const {
    key.assign(reinterpret_cast<const char*>(eval.data()), eval.size() * sizeof(std::uint64_t));
  }
  std::uint32_t value(std::size_t pt) const { return (eval[pt / 64] >> (pt % 64)) & 1U; }
};

struct GeneralState {
  std::vector<std::uint32_t> eval;
  std::int64_t nonzero = 0;

  void add(const GroupTable& table, const std::vector<std::uint32_t>& pts, std::uint32_t delta) {
    for (auto pt : pts) {
      std::uint32_t before = eval[pt];
      std::uint32_t after = table.add(before, delta);
      eval[pt] = after;
      nonzero += (after != 0) - (before != 0);
    }
  }
  void append_key(std::string& key) const {
    key.resize(eval.size() * 2);
    for (std::size_t i = 0; i < eval.size(); ++i) {
      key[2 * i] = static_cast<char>(eval[i] & 0xFF);
      key[2 * i + 1] = static_cast<char>(eval[i] >> 8);
    }
  }
  std::uint32_t value(std::size_t pt) const { return eval[pt]; }
};

// Visits configurations [begin, end) of the odometer over digits lo..N-1,
// with digits below lo held at `base`. visit(digits, state) sees every
// configuration in increasing index order.
template <class Visit>
void walk_range(const Space& s, std::size_t lo, const std::vector<std::uint32_t>& base, std::uint64_t begin,
                std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  const std::size_t N = s.monomials.size();
  const std::uint32_t q = s.radix();
  std::vector<std::uint32_t> digits = base;
  std::uint64_t rest = begin;
  for (std::size_t j = lo; j < N; ++j) {
    digits[j] = static_cast<std::uint32_t>(rest % q);
    rest /= q;
  }

  auto run = [&](auto& state, auto&& change_digit) {
    for (std::uint64_t idx = begin;; ++idx) {
      visit(digits, state);
      if (idx + 1 == end) break;
      for (std::size_t j = lo; j < N; ++j) {
        std::uint32_t a = digits[j];
        change_digit(state, j, a);
        digits[j] = a + 1 == q ? 0 : a + 1;
        if (digits[j] != 0) break;
      }
    }
  };

  if (s.binary) {
    BinaryState state;
    state.eval.assign(s.words, 0);
    for (std::size_t j = 0; j < N; ++j) {
      if (digits[j] != 0) state.toggle(s.incidence_bits[j]);
    }
    run(state, [&](BinaryState& st, std::size_t j, std::uint32_t) { st.toggle(s.incidence_bits[j]); });
  } else {
    GeneralState state;
    state.eval.assign(s.points.size(), 0);
    for (std::size_t j = 0; j < N; ++j) {
      if (digits[j] != 0) state.add(s.table, s.incidence[j], digits[j]);
    }
    state.nonzero = std::count_if(state.eval.begin(), state.eval.end(), [](std::uint32_t v) { return v != 0; });
    run(state, [&](GeneralState& st, std::size_t j, std::uint32_t a) {
      st.add(s.table, s.incidence[j], s.step_delta[a]);
    });
  }
}

void check_search_size(const Space& s, const std::string& what) {
  BigInt total = big_pow(s.radix(), static_cast<unsigned long>(s.monomials.size()));
  require_work(checked_count(total), kSearchLimit, what + " (|G|^#monomials)");
}

void check_slice_args(int n, int k, int d) {
  if (n < 0 || n > 30) throw Error("slice: n must be in 0..30");
  if (k < 0 || k > n) throw Error("slice: k must be in 0..n");
  if (d < 0) throw Error("slice: d must be non-negative");
}

}  // namespace

std::vector<Mask> slice_masks(int n, int k) {
  if (n < 0 || n > 30) throw Error("enumerate_slice: n must be in 0..30");
  if (k < 0 || k > n) throw Error("enumerate_slice: k = " + std::to_string(k) + " outside 0.." + std::to_string(n));
  std::vector<Mask> out;
  out.reserve(checked_count(binomial(n, k)));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  for (Mask x = full_mask(k); x < (Mask{1} << n); x = next_same_weight(x)) out.push_back(x);
  return out;
}

std::vector<SlicePoint> enumerate_slice(int n, int k) {
  std::vector<SlicePoint> out;
  for (Mask m : slice_masks(n, k)) out.push_back(SlicePoint{n, m});
  return out;
}

Rational nonvanish_fraction(const MultilinearPoly& p, int k) {
  auto points = slice_masks(p.n(), k);
  long nonzero = 0;
  for (Mask x : points) nonzero += evaluate(p, SlicePoint{p.n(), x}).is_zero() ? 0 : 1;
  if (nonzero == 0) throw Error("nonvanish_fraction: polynomial vanishes identically on the slice");
  return Rational(BigInt(nonzero), BigInt(static_cast<unsigned long>(points.size())));
}

Rational nonvanish_fraction(const RationalPoly& p, int k) {
  auto points = slice_masks(p.n(), k);
  long nonzero = 0;
  for (Mask x : points) nonzero += evaluate(p, SlicePoint{p.n(), x}).is_zero() ? 0 : 1;
  if (nonzero == 0) throw Error("nonvanish_fraction: polynomial vanishes identically on the slice");
  return Rational(BigInt(nonzero), BigInt(static_cast<unsigned long>(points.size())));
}

Rational suboptimal_bound(int n, int k, int d) {
  if (d < 0 || d > k || k > n - d) throw Error("suboptimal_bound: requires d <= k <= n - d");
  return Rational(binomial(n - 2 * d, k - d), binomial(n, k));
}

MainBound main_bound(int n, int k, int d, const Rational& eps) {
  if (d < 0 || d > k || k > n - d) throw Error("main_bound: requires d <= k <= n - d");
  if (eps.sign() <= 0) throw Error("main_bound: eps must be positive");
  const long t = std::min(k, n - k);
  MainBound b;
  b.leading = Rational(t, n).pow(d);
  // t^{a/b} is rational exactly when t is a perfect b-th power.
  BigInt a = eps.numerator(), den = eps.denominator();
  if (den.fits_ulong_p() && a.fits_ulong_p()) {
    BigInt root;
    BigInt tt = t;
    if (mpz_root(root.get_mpz_t(), tt.get_mpz_t(), den.get_ui()) != 0) {
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), root.get_mpz_t(), a.get_ui());
      b.exact = b.leading * (Rational(1) - Rational(BigInt(1), power));
    }
  }
  long double tail = std::pow(static_cast<long double>(t), -static_cast<long double>(eps.to_double()));
  b.value = static_cast<double>(static_cast<long double>(b.leading.to_double()) * (1.0L - tail));
  return b;
}

std::vector<Mask> monomials_up_to(int n, int d, bool homogeneous) {
  std::vector<Mask> out;
  for (int deg = homogeneous ? d : 0; deg <= std::min(d, n); ++deg) {
    if (deg == 0) {
      out.push_back(0);
      continue;
    }
    for (Mask m = full_mask(deg); m < (Mask{1} << n); m = next_same_weight(m)) out.push_back(m);
  }
  return out;
}

ExtremalResult extremal_min_fraction(int n, int k, int d, const GroupSpec& spec, SearchMode mode, bool prune) {
  check_slice_args(n, k, d);
  const bool homogeneous = mode == SearchMode::homogeneous;
  if (homogeneous) {
    for (auto q : spec.orders()) {
      std::int64_t p = prime_of_power(q);
      if (p == 0) throw Error("extremal: homogeneous mode needs prime-power cyclic factors, got Z" + std::to_string(q));
      if (k < d || !is_good_slice(k, d, p)) {
        throw Error("extremal: homogeneous mode requires k = " + std::to_string(k) + " to be (" + std::to_string(d) +
                    "," + std::to_string(p) + ")-good");
      }
    }
  }
  BigInt points_count = binomial(n, k);
  require_work(checked_count(points_count), std::uint64_t{1} << 20, "extremal: slice size");
  Space s(n, k, spec, monomials_up_to(n, d, homogeneous));
  check_search_size(s, "extremal search");

  const std::size_t N = s.monomials.size();
  const bool use_prune = prune && spec.is_cyclic() && is_prime(spec.orders()[0]) && spec.orders()[0] > 2;

  struct Range {
    std::size_t lo;
    std::vector<std::uint32_t> base;
    std::uint64_t size;
  };
  std::vector<Range> ranges;
  if (use_prune) {
    for (std::size_t j = 0; j < N; ++j) {
      std::vector<std::uint32_t> base(N, 0);
      base[j] = 1;
      ranges.push_back({j + 1, base, free_count(s, j + 1)});
    }
  } else {
    ranges.push_back({0, std::vector<std::uint32_t>(N, 0), free_count(s, 0)});
  }

  struct Best {
    std::int64_t nonzero = -1;
    std::vector<std::uint32_t> digits;
  };
  Best best;
  std::uint64_t searched = 0;
  for (const auto& r : ranges) {
    std::size_t chunks = r.size >= 4096 ? kChunks : 1;
    std::vector<Best> per_chunk(chunks);
    parallel_chunks(r.size, chunks, [&](std::size_t c, std::uint64_t b, std::uint64_t e) {
      Best& local = per_chunk[c];
      walk_range(s, r.lo, r.base, b, e, [&](const std::vector<std::uint32_t>& digits, const auto& st) {
        if (st.nonzero > 0 && (local.nonzero < 0 || st.nonzero < local.nonzero)) {
          local.nonzero = st.nonzero;
          local.digits = digits;
        }
      });
    });
    for (auto& local : per_chunk) {
      if (local.nonzero > 0 && (best.nonzero < 0 || local.nonzero < best.nonzero)) best = std::move(local);
    }
    searched += r.size;
  }
  if (best.nonzero < 0) throw Error("extremal: every polynomial in the search space vanishes on the slice");
  return ExtremalResult{Rational(BigInt(static_cast<long>(best.nonzero)), points_count), s.poly(best.digits), searched};
}

BigInt count_degree_d_functions(int n, int k, int d, const GroupSpec& spec, SearchMode mode) {
  check_slice_args(n, k, d);
  require_work(checked_count(binomial(n, k)), std::uint64_t{1} << 20, "count_degree_d_functions: slice size");
  Space s(n, k, spec, monomials_up_to(n, d, mode == SearchMode::homogeneous));
  check_search_size(s, "count_degree_d_functions");
  std::unordered_set<std::string> seen;
  std::string key;
  walk_range(s, 0, std::vector<std::uint32_t>(s.monomials.size(), 0), 0, free_count(s, 0),
             [&](const std::vector<std::uint32_t>&, const auto& st) {
               st.append_key(key);
               seen.insert(key);
             });
  return BigInt(static_cast<unsigned long>(seen.size()));
}

std::vector<SliceFunction> distinct_functions(int n, int k, int d, const GroupSpec& spec) {
  check_slice_args(n, k, d);
  require_work(checked_count(binomial(n, k)), std::uint64_t{1} << 20, "distinct_functions: slice size");
  Space s(n, k, spec, monomials_up_to(n, d));
  check_search_size(s, "distinct_functions");
  std::unordered_set<std::string> seen;
  std::vector<SliceFunction> out;
  std::string key;
  walk_range(s, 0, std::vector<std::uint32_t>(s.monomials.size(), 0), 0, free_count(s, 0),
             [&](const std::vector<std::uint32_t>& digits, const auto& st) {
               if (st.nonzero == 0) return;
               st.append_key(key);
               if (!seen.insert(key).second) return;
               SliceFunction f{s.poly(digits), std::vector<std::uint32_t>(s.points.size())};
               for (std::size_t pt = 0; pt < s.points.size(); ++pt) f.values[pt] = st.value(pt);
               out.push_back(std::move(f));
             });
  return out;
}

Rational cube_nonvanish_fraction(const MultilinearPoly& p, int d) {
  const int n = p.n();
  if (n > 24) throw GuardError("cube_nonvanish_fraction: n must be at most 24");
  if (p.degree() > d) throw Error("cube_nonvanish_fraction: polynomial degree exceeds d");
  const std::size_t size = std::size_t{1} << n;
  std::vector<bool> nonzero(size, false);
  // Zeta transform over subsets, one cyclic factor at a time.
  for (std::size_t r = 0; r < p.spec().rank(); ++r) {
    const std::int64_t q = p.spec().orders()[r];
    std::vector<std::int64_t> f(size, 0);
    for (const auto& [m, c] : p.coeffs()) f[m] = c.residues[r];
    for (int i = 0; i < n; ++i) {
      for (std::size_t x = 0; x < size; ++x) {
        if (x & (std::size_t{1} << i)) f[x] = (f[x] + f[x ^ (std::size_t{1} << i)]) % q;
      }
    }
    for (std::size_t x = 0; x < size; ++x) {
      if (f[x] != 0) nonzero[x] = true;
    }
  }
  long count = std::count(nonzero.begin(), nonzero.end(), true);
  if (count == 0) throw Error("cube_nonvanish_fraction: polynomial is the zero function");
  return Rational(BigInt(count), BigInt(static_cast<unsigned long>(size)));
}

}  // namespace slicelab
