#include "slicelab/goodslices.hpp"

#include <algorithm>
#include <numeric>

namespace slicelab {

namespace {

void require_prime(std::int64_t p, const char* what) {
  if (!is_prime(p)) throw Error(std::string(what) + ": p = " + std::to_string(p) + " is not prime");
}

std::int64_t isqrt(std::int64_t v) {
  BigInt r;
  BigInt x = v;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r.get_si();
}

// Nonzero points of P on slice k, as masks.
std::vector<Mask> nonzero_points(const MultilinearPoly& p, int k) {
  const int n = p.n();
  BigInt size = binomial(n, k);
  require_work(size.fits_ulong_p() ? size.get_ui() : UINT64_MAX, std::uint64_t{1} << 24, "slice enumeration");
  std::vector<Mask> out;
  if (k == 0) {
    if (!evaluate(p, SlicePoint{n, 0}).is_zero()) out.push_back(0);
    return out;
  }
  for (Mask x = full_mask(k); x < (Mask{1} << n); x = next_same_weight(x)) {
    if (!evaluate(p, SlicePoint{n, x}).is_zero()) out.push_back(x);
  }
  return out;
}

}  // namespace

PAryDigits PAryDigits::of(std::int64_t value, std::int64_t base) {
  if (value < 0) throw Error("digits: value must be non-negative");
  if (base < 2) throw Error("digits: base must be at least 2");
  PAryDigits d;
  d.base = base;
  while (value > 0) {
    d.digits.push_back(static_cast<int>(value % base));
    value /= base;
  }
  return d;
}

std::int64_t PAryDigits::value() const {
  std::int64_t v = 0;
  for (std::size_t j = digits.size(); j-- > 0;) v = v * base + digits[j];
  return v;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t f = 2; f * f <= p; ++f) {
    if (p % f == 0) return false;
  }
  return true;
}

std::int64_t lucas_binom_mod_p(std::int64_t a, std::int64_t b, std::int64_t p) {
  require_prime(p, "lucas_binom_mod_p");
  if (a < 0 || b < 0) throw Error("lucas_binom_mod_p: arguments must be non-negative");
  if (b > a) return 0;
  PAryDigits da = PAryDigits::of(a, p), db = PAryDigits::of(b, p);
  std::int64_t r = 1;
  for (std::size_t j = 0; j < da.digits.size(); ++j) {
    int x = da.digit(j), y = db.digit(j);
    if (y > x) return 0;
    BigInt digit_binom = binomial(x, y) % BigInt(p);
    r = r * digit_binom.get_si() % p;
  }
  return r;
}

bool is_good_slice(std::int64_t k, std::int64_t d, std::int64_t p) {
  require_prime(p, "is_good_slice");
  if (d < 0) throw Error("is_good_slice: d must be non-negative");
  if (k < d) throw Error("is_good_slice: k = " + std::to_string(k) + " is below d = " + std::to_string(d));
  if (d == 0) return true;
  PAryDigits a = PAryDigits::of(k, p), b = PAryDigits::of(d, p);
  std::size_t lead = b.digits.size() - 1;
  for (std::size_t j = 0; j < lead; ++j) {
    if (a.digit(j) != b.digit(j)) return false;
  }
  return a.digit(lead) >= b.digit(lead);
}

std::int64_t find_good_shift(std::int64_t k, std::int64_t d, std::int64_t p) {
  require_prime(p, "find_good_shift");
  if (d < 0 || k < d) throw Error("find_good_shift: requires 0 <= d <= k");
  if (d == 0) return 0;
  PAryDigits b = PAryDigits::of(d, p);
  std::size_t lead = b.digits.size() - 1;
  std::int64_t block = 1;
  for (std::size_t j = 0; j < lead; ++j) block *= p;

  // Match the digits below the leading position, then borrow at it if needed.
  std::int64_t c1 = ((k - d) % block + block) % block;
  std::int64_t k1 = k - c1;
  std::int64_t u = k1 >= 0 ? PAryDigits::of(k1, p).digit(lead) : 0;
  std::int64_t c2 = u >= b.digit(lead) ? 0 : (u + 1) * block;
  std::int64_t c = c1 + c2;

  if (c > 2 * d || k - c < d || !is_good_slice(k - c, d, p)) {
    throw Error("find_good_shift: construction gives c = " + std::to_string(c) + " for k = " + std::to_string(k) +
                ", d = " + std::to_string(d) + ", p = " + std::to_string(p) + ", which is not a valid shift");
  }
  return c;
}

SpanningReport verify_spanning_identity(int n, int k, int d, std::int64_t p, std::int64_t q, Mask monomial) {
  require_prime(p, "verify_spanning_identity");
  if (d < 0 || d > k || k > n - d) throw Error("verify_spanning_identity: requires d <= k <= n - d");
  if (n > 14) throw GuardError("verify_spanning_identity: n must be at most 14");
  if ((monomial & ~full_mask(n)) != 0) throw Error("verify_spanning_identity: monomial outside the variables");
  std::int64_t rest = q;
  while (rest > 1 && rest % p == 0) rest /= p;
  if (q < p || rest != 1) throw Error("verify_spanning_identity: q must be a power of p");
  SpanningReport r;
  r.degree = popcount(monomial);
  if (r.degree > d) throw Error("verify_spanning_identity: monomial degree exceeds d");
  r.coefficient = binomial(k - r.degree, d - r.degree);
  r.coefficient_mod_p = lucas_binom_mod_p(k - r.degree, d - r.degree, p);
  r.invertible = r.coefficient_mod_p != 0;

  // Left side at x: the number of d-sets T with I <= T <= x, i.e. C(|x| - |I|, d - |I|) when I <= x.
  r.identity_holds = true;
  for (Mask x = full_mask(k); x < (Mask{1} << n); x = k == 0 ? (Mask{1} << n) : next_same_weight(x)) {
    BigInt lhs = 0;
    if ((monomial & ~x) == 0) {
      Mask free = x & ~monomial;
      int extra = d - r.degree;
      if (extra == 0) {
        lhs = 1;
      } else {
        for (Mask t = free; t != 0; t = (t - 1) & free) {
          if (popcount(t) == extra) lhs += 1;
        }
      }
    }
    BigInt rhs = (monomial & ~x) == 0 ? r.coefficient : BigInt(0);
    if (lhs != rhs) {
      r.identity_holds = false;
      break;
    }
  }
  return r;
}

MultilinearPoly restrict_to_coordinates(const MultilinearPoly& p, const std::vector<int>& coordinates) {
  std::vector<int> coords = coordinates;
  std::sort(coords.begin(), coords.end());
  if (std::adjacent_find(coords.begin(), coords.end()) != coords.end()) {
    throw Error("restrict_to_coordinates: repeated coordinate");
  }
  Mask keep = 0;
  for (int c : coords) {
    if (c < 1 || c > p.n()) throw Error("restrict_to_coordinates: coordinate out of range");
    keep |= bit_of(c);
  }
  MultilinearPoly out(static_cast<int>(coords.size()), p.spec());
  for (const auto& [m, c] : p.coeffs()) {
    if ((m & ~keep) != 0) continue;
    Mask renamed = 0;
    for (std::size_t idx = 0; idx < coords.size(); ++idx) {
      if (m & bit_of(coords[idx])) renamed |= bit_of(static_cast<int>(idx) + 1);
    }
    out.add_term(renamed, c);
  }
  return out;
}

Restriction random_restriction_to_balanced(const MultilinearPoly& p, int k, std::uint64_t seed) {
  const int n = p.n();
  if (k < 0 || 2 * k > n) throw Error("random_restriction_to_balanced: requires 0 <= k <= n/2");
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  Rng rng(seed);
  rng.shuffle(labels);
  std::vector<int> chosen(labels.begin(), labels.begin() + 2 * k);
  std::sort(chosen.begin(), chosen.end());
  return Restriction{restrict_to_coordinates(p, chosen), chosen};
}

Rational restriction_survival_probability(const MultilinearPoly& p, int k) {
  const int n = p.n();
  if (k < 0 || 2 * k > n) throw Error("restriction_survival_probability: requires 0 <= k <= n/2");
  BigInt subsets = binomial(n, 2 * k);
  if (subsets > 1000000) throw GuardError("restriction_survival_probability: C(n,2k) exceeds 10^6");
  // The restriction to T is nonzero on its balanced slice iff some nonzero
  // weight-k point of P lies inside T.
  std::vector<Mask> nonzero = nonzero_points(p, k);
  std::uint64_t survive = 0;
  auto covered = [&](Mask t) {
    return std::any_of(nonzero.begin(), nonzero.end(), [t](Mask x) { return (x & ~t) == 0; });
  };
  if (k == 0) {
    survive = nonzero.empty() ? 0 : 1;
  } else {
    for (Mask t = full_mask(2 * k); t < (Mask{1} << n); t = next_same_weight(t)) {
      if (covered(t)) ++survive;
    }
  }
  return Rational(BigInt(static_cast<unsigned long>(survive)), subsets);
}

Descent fix_ones_descent(const MultilinearPoly& p, int k, int c, std::uint64_t seed) {
  if (k < 0 || k > p.n()) throw Error("fix_ones_descent: k out of range");
  if (c < 1 || c > k) throw Error("fix_ones_descent: c must be in 1..k");
  Rng rng(seed);
  std::vector<int> remaining(static_cast<std::size_t>(p.n()));
  std::iota(remaining.begin(), remaining.end(), 1);
  Descent out{p, {}, k};
  for (int step = 0; step < c; ++step) {
    auto pos = static_cast<std::size_t>(rng.below(remaining.size()));
    out.chosen.push_back(remaining[pos]);
    out.poly = restrict(out.poly, static_cast<int>(pos) + 1, 1);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pos));
    --out.slice;
  }
  return out;
}

std::vector<int> bad_indices(const MultilinearPoly& p, int k) {
  std::vector<Mask> nonzero = nonzero_points(p, k);
  Mask touched = 0;
  for (Mask x : nonzero) touched |= x;
  std::vector<int> bad;
  for (int s = 1; s <= p.n(); ++s) {
    if ((touched & bit_of(s)) == 0) bad.push_back(s);
  }
  return bad;
}

NonrootsReport check_nonroots_inequality(std::int64_t n, std::int64_t k, std::int64_t d) {
  if (n < 1 || k < 1 || d < 0) throw Error("check_nonroots_inequality: requires n, k >= 1 and d >= 0");
  NonrootsReport r;
  // floor(n / sqrt(k)) = floor(sqrt(n^2 / k)) = isqrt(floor(n^2 / k)).
  r.ell = isqrt(n * n / k);
  r.holds = binomial(n - r.ell, k) < binomial(n - 2 * d, k - d);
  BigInt k4 = BigInt(k) * k * k * k;
  BigInt d10;
  mpz_ui_pow_ui(d10.get_mpz_t(), static_cast<unsigned long>(d), 10);
  r.in_asymptotic_range = k4 >= n && 2 * k <= n && d10 <= k;
  return r;
}

std::int64_t max_bad_indices(std::int64_t n, std::int64_t k, std::int64_t d) {
  BigInt floor_count = binomial(n - 2 * d, k - d);
  std::int64_t ell = 0;
  while (ell + 1 <= n && binomial(n - ell - 1, k) >= floor_count) ++ell;
  return ell;
}

}  // namespace slicelab
