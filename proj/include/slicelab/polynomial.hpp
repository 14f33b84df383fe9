#pragma once

// Multilinear polynomials over {0,1}^n with Abelian-group (or rational)
// coefficients, and points of Boolean slices.
//
// Variables are x1..xn; the monomial prod_{i in S} x_i is stored under the
// mask with bit (i-1) set for every i in S. Points use the same convention,
// and print as x1 x2 ... xn left to right ("1100" has x1 = x2 = 1).

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "slicelab/algebra.hpp"

namespace slicelab {

using Mask = std::uint64_t;

inline constexpr int kMaxVariables = 62;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask bit_of(int variable) { return Mask{1} << (variable - 1); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

/// Next larger mask with the same popcount (Gosper's hack). The caller
/// stops once the result reaches 1 << n.
inline Mask next_same_weight(Mask m) {
  Mask c = m & (~m + 1);
  Mask r = m + c;
  return (((r ^ m) >> 2) / c) | r;
}

/// A point of {0,1}^n; a member of the slice {0,1}^n_k when weight() == k.
struct SlicePoint {
  int n = 0;
  Mask bits = 0;

  int weight() const { return popcount(bits); }
  /// Value of x_i, 1-based.
  bool get(int i) const { return (bits >> (i - 1)) & 1U; }
  std::string str() const;
  /// Parses a 0/1 string, first character is x1.
  static SlicePoint parse(std::string_view text);

  friend bool operator==(const SlicePoint&, const SlicePoint&) = default;
  friend auto operator<=>(const SlicePoint&, const SlicePoint&) = default;
};

/// Hamming distance.
inline int distance(const SlicePoint& a, const SlicePoint& b) { return popcount(a.bits ^ b.bits); }

/// Swaps coordinates i and j (1-based) of a mask.
Mask swap_bits(Mask m, int i, int j);

class MultilinearPoly {
 public:
  MultilinearPoly(int n, GroupSpec spec);

  /// Parses terms such as "1*x1x2 + 1" or "(1,2)*x3 - x1". A bare integer
  /// coefficient is broadcast to every cyclic factor; an omitted coefficient
  /// means 1.
  static MultilinearPoly parse(std::string_view text, int n, const GroupSpec& spec);

  int n() const { return n_; }
  const GroupSpec& spec() const { return spec_; }
  const std::map<Mask, GroupElement>& coeffs() const { return coeffs_; }

  GroupElement coeff(Mask monomial) const;
  /// Adds c to the coefficient of `monomial`; zero results are erased.
  void add_term(Mask monomial, const GroupElement& c);
  void set_coeff(Mask monomial, const GroupElement& c);

  /// Largest monomial size with a nonzero coefficient; 0 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  std::string str() const;

  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

 private:
  void check_mask(Mask monomial) const;

  int n_;
  GroupSpec spec_;
  std::map<Mask, GroupElement> coeffs_;
};

/// Multilinear polynomial with rational coefficients.
class RationalPoly {
 public:
  explicit RationalPoly(int n);
  static RationalPoly parse(std::string_view text, int n);

  int n() const { return n_; }
  const std::map<Mask, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(Mask monomial) const;
  void add_term(Mask monomial, const Rational& c);
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  std::string str() const;

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  int n_;
  std::map<Mask, Rational> coeffs_;
};

/// Sum of the coefficients of all monomials contained in the 1-set of x.
GroupElement evaluate(const MultilinearPoly& p, const SlicePoint& x);
Rational evaluate(const RationalPoly& p, const SlicePoint& x);

/// Sets x_i := b and returns the polynomial on the remaining n-1 variables
/// (variables above i shift down by one).
MultilinearPoly restrict(const MultilinearPoly& p, int i, int b);

/// P'(x) = P(1 - x_1, ..., 1 - x_n).
MultilinearPoly negate_all_vars(const MultilinearPoly& p);

/// P with variables x_i and x_j exchanged.
MultilinearPoly swap_variables(const MultilinearPoly& p, int i, int j);
RationalPoly swap_variables(const RationalPoly& p, int i, int j);

MultilinearPoly operator+(const MultilinearPoly& a, const MultilinearPoly& b);
MultilinearPoly operator-(const MultilinearPoly& a, const MultilinearPoly& b);
RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);

/// Rewrites P over the degree-d homogeneous monomials only, preserving its
/// values on the slice {0,1}^n_k. Requires Z_q with q a power of the prime p,
/// deg(P) <= d, d <= k <= n - d and k (d,p)-good.
std::map<Mask, GroupElement> to_homogeneous_basis(const MultilinearPoly& p, int k, int d, std::int64_t prime);

/// True iff P evaluates to zero on every point of weight k.
bool is_zero_on_slice(const MultilinearPoly& p, int k);

}  // namespace slicelab
