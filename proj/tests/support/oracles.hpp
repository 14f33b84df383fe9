#pragma once

// Brute-force oracles and random generators shared by the unit tests. The
// oracles avoid the library's enumeration helpers: they scan every mask of
// {0,1}^n and test variables one at a time.

#include <cstdint>
#include <vector>

#include "slicelab/polynomial.hpp"

namespace oracle {

using slicelab::GroupElement;
using slicelab::GroupSpec;
using slicelab::Mask;
using slicelab::MultilinearPoly;
using slicelab::Rational;
using slicelab::Rng;
using slicelab::SlicePoint;

inline std::vector<Mask> weight_class(int n, int k) {
  std::vector<Mask> out;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    int w = 0;
    for (int i = 0; i < n; ++i) w += static_cast<int>((x >> i) & 1U);
    if (w == k) out.push_back(x);
  }
  return out;
}

inline bool contains_all(Mask x, Mask monomial, int n) {
  for (int i = 0; i < n; ++i) {
    if (((monomial >> i) & 1U) && !((x >> i) & 1U)) return false;
  }
  return true;
}

inline GroupElement eval(const MultilinearPoly& p, Mask x) {
  GroupElement sum = p.spec().zero();
  for (const auto& [m, c] : p.coeffs()) {
    if (contains_all(x, m, p.n())) sum = slicelab::group_add(p.spec(), sum, c);
  }
  return sum;
}

inline Rational nonvanish(const MultilinearPoly& p, int k) {
  auto points = weight_class(p.n(), k);
  long hits = 0;
  for (Mask x : points) hits += eval(p, x).is_zero() ? 0 : 1;
  return Rational(slicelab::BigInt(hits), slicelab::BigInt(static_cast<long>(points.size())));
}

/// Each monomial of degree <= d present with probability 1/2, nonzero coefficient.
inline MultilinearPoly random_poly(int n, int d, const GroupSpec& spec, Rng& rng) {
  MultilinearPoly p(n, spec);
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (slicelab::popcount(m) > d || !rng.bit()) continue;
    p.set_coeff(m, spec.element(1 + rng.below(spec.order() - 1)));
  }
  return p;
}

inline SlicePoint random_point(int n, int k, Rng& rng) {
  std::vector<int> labels;
  for (int i = 0; i < n; ++i) labels.push_back(i);
  rng.shuffle(labels);
  SlicePoint x{n, 0};
  for (int j = 0; j < k; ++j) x.bits |= Mask{1} << labels[static_cast<std::size_t>(j)];
  return x;
}

}  // namespace oracle
