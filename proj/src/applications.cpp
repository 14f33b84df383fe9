#include "slicelab/applications.hpp"

#include <algorithm>

#include "slicelab/slices.hpp"

namespace slicelab {

namespace {

void check_pair(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw Error("influence: coordinates must be in 1..n");
  if (i == j) throw Error("influence: i and j must differ");
}

template <class Poly>
Rational direct_influence(const Poly& f, int i, int j, int k) {
  check_pair(f.n(), i, j);
  auto points = slice_masks(f.n(), k);
  long differ = 0;
  for (Mask x : points) {
    Mask y = swap_bits(x, i, j);
    if (y == x) continue;
    if (!(evaluate(f, SlicePoint{f.n(), x}) == evaluate(f, SlicePoint{f.n(), y}))) ++differ;
  }
  return Rational(BigInt(differ), BigInt(4) * BigInt(static_cast<unsigned long>(points.size())));
}

template <class Poly>
InfluenceTable build_table(const Poly& f, int k) {
  InfluenceTable t;
  t.n = f.n();
  t.k = k;
  Rational sum = 0;
  for (int i = 1; i <= f.n(); ++i) {
    for (int j = i + 1; j <= f.n(); ++j) {
      Rational v = influence(f, i, j, k);
      t.inf.emplace(std::pair{i, j}, v);
      sum += v;
    }
  }
  t.total = f.n() == 0 ? Rational(0) : sum / Rational(f.n());
  return t;
}

template <class Poly>
InfluenceBoundReport bound_check(const Poly& f, int d, int k, const Rational& floor) {
  if (f.degree() > d) throw Error("influence_lower_bound_check: degree of f exceeds d");
  InfluenceBoundReport r;
  r.floor = floor;
  const Rational quarter_floor = floor / Rational(4);
  for (int i = 1; i <= f.n(); ++i) {
    for (int j = i + 1; j <= f.n(); ++j) {
      Rational v = influence(f, i, j, k);
      if (v != influence_via_difference(f, i, j, k)) r.matches_difference = false;
      if (v.is_zero()) continue;
      ++r.positive_pairs;
      if (r.min_positive.is_zero() || v < r.min_positive) r.min_positive = v;
      if (v < quarter_floor) r.holds = false;
    }
  }
  return r;
}

}  // namespace

Rational influence(const MultilinearPoly& f, int i, int j, int k) { return direct_influence(f, i, j, k); }
Rational influence(const RationalPoly& f, int i, int j, int k) { return direct_influence(f, i, j, k); }

Rational influence_via_difference(const MultilinearPoly& f, int i, int j, int k) {
  check_pair(f.n(), i, j);
  MultilinearPoly g = f - swap_variables(f, i, j);
  if (is_zero_on_slice(g, k)) return Rational(0);
  return nonvanish_fraction(g, k) / Rational(4);
}

Rational influence_via_difference(const RationalPoly& f, int i, int j, int k) {
  check_pair(f.n(), i, j);
  RationalPoly g = f - swap_variables(f, i, j);
  auto points = slice_masks(f.n(), k);
  bool any = std::any_of(points.begin(), points.end(),
                         [&](Mask x) { return !evaluate(g, SlicePoint{f.n(), x}).is_zero(); });
  if (!any) return Rational(0);
  return nonvanish_fraction(g, k) / Rational(4);
}

InfluenceTable influence_table(const MultilinearPoly& f, int k) { return build_table(f, k); }
InfluenceTable influence_table(const RationalPoly& f, int k) { return build_table(f, k); }

InfluenceBoundReport influence_lower_bound_check(const MultilinearPoly& f, int d, int k,
                                                 const std::optional<Rational>& floor) {
  Rational bound = floor ? *floor : extremal_min_fraction(f.n(), k, d, f.spec()).min;
  return bound_check(f, d, k, bound);
}

InfluenceBoundReport influence_lower_bound_check(const RationalPoly& f, int d, int k,
                                                 const std::optional<Rational>& floor) {
  Rational bound = floor ? *floor : suboptimal_bound(f.n(), k, d);
  return bound_check(f, d, k, bound);
}

std::vector<int> junta_support(const InfluenceTable& table) {
  const int n = table.n;
  // Zero influence is an equivalence relation: (ik) = (ij)(jk)(ij).
  std::vector<int> cls(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    if (cls[static_cast<std::size_t>(i)] != 0) continue;
    cls[static_cast<std::size_t>(i)] = i;
    for (int j = i + 1; j <= n; ++j) {
      if (table.inf.at({i, j}).is_zero()) cls[static_cast<std::size_t>(j)] = i;
    }
  }
  // Drop the largest class; on ties the one with the largest least element.
  std::vector<int> size(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) ++size[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])];
  int dropped = 0;
  for (int c = 1; c <= n; ++c) {
    if (size[static_cast<std::size_t>(c)] > 0 && size[static_cast<std::size_t>(c)] >= size[static_cast<std::size_t>(dropped)]) {
      dropped = c;
    }
  }
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (cls[static_cast<std::size_t>(i)] != dropped) out.push_back(i);
  }
  return out;
}

std::vector<int> junta_support(const MultilinearPoly& f, int k) { return junta_support(influence_table(f, k)); }
std::vector<int> junta_support(const RationalPoly& f, int k) { return junta_support(influence_table(f, k)); }

std::vector<std::pair<int, int>> influence_matching(const InfluenceTable& table) {
  Mask used = 0;
  std::vector<std::pair<int, int>> out;
  for (const auto& [pair, v] : table.inf) {
    Mask ends = bit_of(pair.first) | bit_of(pair.second);
    if (v.is_zero() || (used & ends) != 0) continue;
    used |= ends;
    out.push_back(pair);
  }
  return out;
}

TotalInfluenceReport total_influence_degree_check(const RationalPoly& f, int d, int k) {
  if (f.degree() > d) throw Error("total_influence_degree_check: degree of f exceeds d");
  TotalInfluenceReport r;
  r.total = influence_table(f, k).total;
  r.degree = d;
  r.holds = r.total <= Rational(d);
  return r;
}

TotalInfluenceReport total_influence_degree_check(const MultilinearPoly& f, int d, int k) {
  if (f.degree() > d) throw Error("total_influence_degree_check: degree of f exceeds d");
  TotalInfluenceReport r;
  r.total = influence_table(f, k).total;
  r.degree = d;
  r.holds = r.total <= Rational(d);
  return r;
}

// ---------------------------------------------------------------- covers

bool LinearForm::vanishes_at(const SlicePoint& x) const {
  if (static_cast<int>(coeffs.size()) != x.n) throw Error("linear form: dimension mismatch");
  Rational v = constant;
  for (int i = 0; i < x.n; ++i) {
    if ((x.bits >> i) & 1U) v += coeffs[static_cast<std::size_t>(i)];
  }
  if (field == Field::rationals) return v.is_zero();
  if (v.denominator() != 1) throw Error("linear form: non-integral value over F_2");
  return v.numerator() % 2 == 0;
}

std::string LinearForm::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c.is_zero()) continue;
    std::string var = "x" + std::to_string(i + 1);
    if (out.empty()) {
      out += c == Rational(1) ? var : (c == Rational(-1) ? "-" + var : c.str() + "*" + var);
    } else if (c.sign() < 0) {
      out += " - " + (c.abs() == Rational(1) ? var : c.abs().str() + "*" + var);
    } else {
      out += " + " + (c == Rational(1) ? var : c.str() + "*" + var);
    }
  }
  if (!constant.is_zero() || out.empty()) {
    if (out.empty()) {
      out = constant.str();
    } else {
      out += constant.sign() < 0 ? " - " + constant.abs().str() : " + " + constant.str();
    }
  }
  return out + " = 0";
}

std::vector<LinearForm> hyperplane_cover(int n, int k, const SlicePoint& a, Field field) {
  if (a.n != n || a.weight() != k) throw Error("hyperplane_cover: point is not on the slice");
  if (k < 1 || k > n - 1) throw Error("hyperplane_cover: requires 1 <= k <= n - 1");
  std::vector<LinearForm> forms;
  const bool low = 2 * k <= n;
  for (int i = 1; i <= n; ++i) {
    // x_i = 0 for each 1-coordinate of a when k <= n/2, else 1 - x_i = 0 for each 0-coordinate.
    if (a.get(i) != low) continue;
    LinearForm f{std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)), Rational(low ? 0 : 1), field};
    f.coeffs[static_cast<std::size_t>(i - 1)] = low ? Rational(1) : Rational(-1);
    forms.push_back(std::move(f));
  }
  return forms;
}

bool verify_cover(int n, int k, const SlicePoint& a, const std::vector<LinearForm>& forms) {
  if (n > 16) throw GuardError("verify_cover: n must be at most 16");
  for (Mask x : slice_masks(n, k)) {
    SlicePoint p{n, x};
    bool covered = std::any_of(forms.begin(), forms.end(), [&](const LinearForm& f) { return f.vanishes_at(p); });
    if (covered == (x == a.bits)) return false;
  }
  return true;
}

bool cover_impossibility(int n, int k, int m) {
  if (m < 0) throw Error("cover_impossibility: m must be non-negative");
  if (k < 0 || k > n) throw Error("cover_impossibility: k out of range");
  if (m >= std::min(k, n - k)) return false;
  return binomial(n - 2 * m, k - m) > 1;
}

}  // namespace slicelab
