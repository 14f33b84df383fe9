#pragma once

// Exact arithmetic foundations: arbitrary-precision rationals and finite
// Abelian groups presented as products of cyclic groups.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "slicelab/runtime.hpp"

namespace slicelab {

using BigInt = mpz_class;

/// Exact reduced fraction. The denominator is always positive and coprime
/// to the numerator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p/q" or "p" in decimal, with an optional leading '-'.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// Canonical "p/q" form; integers print without a denominator.
  std::string str() const;

  Rational abs() const;
  /// Integer power; negative exponents invert (the value must then be nonzero).
  Rational pow(long exponent) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(0) - a; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

/// rat(num, den): canonical reduced rational; throws Error on den == 0.
Rational rat(const BigInt& num, const BigInt& den);

/// Binomial coefficient C(n, k); zero when k < 0, n < 0 or k > n.
BigInt binomial(long n, long k);
BigInt factorial(long n);
BigInt big_pow(long base, unsigned long exponent);

/// Element of a finite Abelian group: one residue per cyclic factor.
struct GroupElement {
  std::vector<std::int64_t> residues;

  bool is_zero() const;
  /// "3" for a single factor, "(1,2)" for several.
  std::string str() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finite Abelian group Z_{q_1} x ... x Z_{q_r}.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> orders);
  static GroupSpec cyclic(std::int64_t order) { return GroupSpec({order}); }
  /// Parses "Z2", "z2xZ3", "Z8" (case-insensitive, 'x' separator).
  static GroupSpec parse(std::string_view text);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  bool is_cyclic() const { return orders_.size() == 1; }
  /// |G|; throws GuardError if it does not fit in 62 bits.
  std::uint64_t order() const;
  std::string str() const;

  GroupElement zero() const;
  /// Reduces arbitrary integers into an element (one per factor).
  GroupElement make(const std::vector<std::int64_t>& values) const;
  /// The integer m broadcast to every factor, reduced.
  GroupElement scalar(std::int64_t m) const;
  /// Parses "3" (broadcast) or "(1,2)".
  GroupElement parse_element(std::string_view text) const;
  /// Mixed-radix indexing of the elements, first factor least significant.
  GroupElement element(std::uint64_t index) const;
  std::uint64_t index(const GroupElement& e) const;
  /// Throws Error unless e has the right length and reduced residues.
  void check(const GroupElement& e) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::int64_t> orders_;
};

GroupElement group_add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement group_neg(const GroupSpec& spec, const GroupElement& a);
GroupElement group_sub(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
/// m * a; negative m means repeated inverse.
GroupElement group_scalar_mul(const GroupSpec& spec, std::int64_t m, const GroupElement& a);

/// Dense addition table over element indices, for inner loops of
/// exhaustive searches. Limited to groups with at most 4096 elements.
class GroupTable {
 public:
  explicit GroupTable(const GroupSpec& spec);

  std::uint32_t size() const { return size_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return table_[a * size_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }
  const GroupSpec& spec() const { return spec_; }

 private:
  GroupSpec spec_;
  std::uint32_t size_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> neg_;
};

}  // namespace slicelab
