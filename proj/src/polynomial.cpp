#include "slicelab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

#include "slicelab/goodslices.hpp"

namespace slicelab {

namespace {

struct RawTerm {
  bool negative = false;
  std::string coeff;  // empty when omitted
  Mask mask = 0;
};

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

Mask parse_monomial(const std::string& s, int n) {
  Mask mask = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 'x' && s[i] != 'X') throw Error("polynomial: bad monomial '" + s + "'");
    std::size_t j = ++i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i || j - i > 3) throw Error("polynomial: bad variable in '" + s + "'");
    int v = std::stoi(s.substr(i, j - i));
    if (v < 1 || v > n) {
      throw Error("polynomial: variable x" + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    mask |= bit_of(v);
    i = j;
    if (i < s.size() && s[i] == '*') ++i;
  }
  return mask;
}

bool is_monomial_token(const std::string& s) { return !s.empty() && (s[0] == 'x' || s[0] == 'X'); }

// Splits "c*x1x2 + x3 - (1,2)*x4" into signed terms. Separators inside
// parentheses are ignored; a sign directly after a separator folds into it.
std::vector<RawTerm> split_terms(std::string_view text, int n) {
  if (n < 0 || n > kMaxVariables) throw Error("polynomial: n must be in 0.." + std::to_string(kMaxVariables));
  std::string s = strip_spaces(text);
  if (s.empty()) throw Error("polynomial: empty text");
  std::vector<RawTerm> terms;
  std::string current;
  bool negative = false;
  int depth = 0;
  auto flush = [&] {
    if (current.empty()) throw Error("polynomial: dangling operator in '" + s + "'");
    RawTerm term;
    term.negative = negative;
    std::size_t star = current.find('*');
    std::string head = current.substr(0, star);
    if (is_monomial_token(head)) {
      term.mask = parse_monomial(current, n);
    } else {
      term.coeff = head;
      if (star != std::string::npos) {
        std::string rest = current.substr(star + 1);
        if (!is_monomial_token(rest)) throw Error("polynomial: bad term '" + current + "'");
        term.mask = parse_monomial(rest, n);
      }
    }
    terms.push_back(std::move(term));
    current.clear();
    negative = false;
  };
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw Error("polynomial: unbalanced parentheses in '" + s + "'");
    if (depth == 0 && (c == '+' || c == '-')) {
      if (current.empty()) {
        if (c == '-') negative = !negative;
        continue;
      }
      flush();
      negative = (c == '-');
      continue;
    }
    current += c;
  }
  if (depth != 0) throw Error("polynomial: unbalanced parentheses in '" + s + "'");
  flush();
  return terms;
}

std::string monomial_str(Mask mask) {
  std::string out;
  for (int i = 1; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out += "x" + std::to_string(i);
  }
  return out;
}

// Degree descending, then mask ascending.
template <class Map>
std::vector<typename Map::const_iterator> print_order(const Map& coeffs) {
  std::vector<typename Map::const_iterator> items;
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) items.push_back(it);
  std::stable_sort(items.begin(), items.end(), [](auto a, auto b) {
    int da = popcount(a->first), db = popcount(b->first);
    return da != db ? da > db : a->first < b->first;
  });
  return items;
}

Mask drop_variable(Mask m, int i) {
  Mask low = m & (bit_of(i) - 1);
  Mask high = (m >> i) << (i - 1);
  return low | high;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t q) {
  std::int64_t g = q, x = 0, r = a % q, y = 1;
  while (r != 0) {
    std::int64_t t = g / r;
    std::tie(g, r) = std::pair{r, g - t * r};
    std::tie(x, y) = std::pair{y, x - t * y};
  }
  if (g != 1) return 0;
  return ((x % q) + q) % q;
}

}  // namespace

// ---------------------------------------------------------------- points

std::string SlicePoint::str() const {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((bits >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

SlicePoint SlicePoint::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxVariables)) throw Error("point: too many coordinates");
  SlicePoint p;
  p.n = static_cast<int>(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      p.bits |= Mask{1} << i;
    } else if (text[i] != '0') {
      throw Error("point: expected a 0/1 string, got '" + std::string(text) + "'");
    }
  }
  return p;
}

Mask swap_bits(Mask m, int i, int j) {
  Mask bi = (m >> (i - 1)) & 1U, bj = (m >> (j - 1)) & 1U;
  if (bi == bj) return m;
  return m ^ bit_of(i) ^ bit_of(j);
}

// ---------------------------------------------------------------- group polynomials

MultilinearPoly::MultilinearPoly(int n, GroupSpec spec) : n_(n), spec_(std::move(spec)) {
  if (n < 0 || n > kMaxVariables) throw Error("polynomial: n must be in 0.." + std::to_string(kMaxVariables));
}

MultilinearPoly MultilinearPoly::parse(std::string_view text, int n, const GroupSpec& spec) {
  MultilinearPoly p(n, spec);
  if (strip_spaces(text) == "0") return p;
  for (const auto& t : split_terms(text, n)) {
    GroupElement c = t.coeff.empty() ? spec.scalar(1) : spec.parse_element(t.coeff);
    if (t.negative) c = group_neg(spec, c);
    p.add_term(t.mask, c);
  }
  return p;
}

void MultilinearPoly::check_mask(Mask monomial) const {
  if ((monomial & ~full_mask(n_)) != 0) {
    throw Error("polynomial: monomial uses a variable beyond x" + std::to_string(n_));
  }
}

GroupElement MultilinearPoly::coeff(Mask monomial) const {
  auto it = coeffs_.find(monomial);
  return it == coeffs_.end() ? spec_.zero() : it->second;
}

void MultilinearPoly::add_term(Mask monomial, const GroupElement& c) {
  check_mask(monomial);
  GroupElement sum = group_add(spec_, coeff(monomial), c);
  if (sum.is_zero()) {
    coeffs_.erase(monomial);
  } else {
    coeffs_[monomial] = std::move(sum);
  }
}

void MultilinearPoly::set_coeff(Mask monomial, const GroupElement& c) {
  check_mask(monomial);
  spec_.check(c);
  if (c.is_zero()) {
    coeffs_.erase(monomial);
  } else {
    coeffs_[monomial] = c;
  }
}

int MultilinearPoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : coeffs_) d = std::max(d, popcount(m));
  return d;
}

std::string MultilinearPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it : print_order(coeffs_)) {
    if (!out.empty()) out += " + ";
    out += it->second.str();
    if (it->first != 0) out += "*" + monomial_str(it->first);
  }
  return out;
}

// ---------------------------------------------------------------- rational polynomials

RationalPoly::RationalPoly(int n) : n_(n) {
  if (n < 0 || n > kMaxVariables) throw Error("polynomial: n must be in 0.." + std::to_string(kMaxVariables));
}

RationalPoly RationalPoly::parse(std::string_view text, int n) {
  RationalPoly p(n);
  if (strip_spaces(text) == "0") return p;
  for (const auto& t : split_terms(text, n)) {
    Rational c = t.coeff.empty() ? Rational(1) : Rational::parse(t.coeff);
    p.add_term(t.mask, t.negative ? -c : c);
  }
  return p;
}

Rational RationalPoly::coeff(Mask monomial) const {
  auto it = coeffs_.find(monomial);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void RationalPoly::add_term(Mask monomial, const Rational& c) {
  if ((monomial & ~full_mask(n_)) != 0) {
    throw Error("polynomial: monomial uses a variable beyond x" + std::to_string(n_));
  }
  Rational sum = coeff(monomial) + c;
  if (sum.is_zero()) {
    coeffs_.erase(monomial);
  } else {
    coeffs_[monomial] = sum;
  }
}

int RationalPoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : coeffs_) d = std::max(d, popcount(m));
  return d;
}

std::string RationalPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it : print_order(coeffs_)) {
    const Rational& c = it->second;
    if (out.empty()) {
      out += c.str();
    } else {
      out += c.sign() < 0 ? " - " + c.abs().str() : " + " + c.str();
    }
    if (it->first != 0) out += "*" + monomial_str(it->first);
  }
  return out;
}

// ---------------------------------------------------------------- operations

GroupElement evaluate(const MultilinearPoly& p, const SlicePoint& x) {
  if (x.n != p.n()) {
    throw Error("evaluate: point has " + std::to_string(x.n) + " coordinates, polynomial has " +
                std::to_string(p.n()) + " variables");
  }
  GroupElement sum = p.spec().zero();
  const auto& orders = p.spec().orders();
  for (const auto& [m, c] : p.coeffs()) {
    if ((m & ~x.bits) != 0) continue;
    for (std::size_t r = 0; r < orders.size(); ++r) {
      sum.residues[r] += c.residues[r];
      if (sum.residues[r] >= orders[r]) sum.residues[r] -= orders[r];
    }
  }
  return sum;
}

Rational evaluate(const RationalPoly& p, const SlicePoint& x) {
  if (x.n != p.n()) throw Error("evaluate: dimension mismatch");
  Rational sum;
  for (const auto& [m, c] : p.coeffs()) {
    if ((m & ~x.bits) == 0) sum += c;
  }
  return sum;
}

MultilinearPoly restrict(const MultilinearPoly& p, int i, int b) {
  if (i < 1 || i > p.n()) throw Error("restrict: variable index " + std::to_string(i) + " out of range");
  if (b != 0 && b != 1) throw Error("restrict: value must be 0 or 1");
  MultilinearPoly out(p.n() - 1, p.spec());
  for (const auto& [m, c] : p.coeffs()) {
    bool has = (m & bit_of(i)) != 0;
    if (has && b == 0) continue;
    out.add_term(drop_variable(m & ~bit_of(i), i), c);
  }
  return out;
}

MultilinearPoly negate_all_vars(const MultilinearPoly& p) {
  // prod_{i in S} (1 - x_i) = sum_{T subset S} (-1)^{|T|} x^T
  MultilinearPoly out(p.n(), p.spec());
  for (const auto& [m, c] : p.coeffs()) {
    GroupElement neg = group_neg(p.spec(), c);
    for (Mask t = m;; t = (t - 1) & m) {
      out.add_term(t, popcount(t) % 2 == 0 ? c : neg);
      if (t == 0) break;
    }
  }
  return out;
}

MultilinearPoly swap_variables(const MultilinearPoly& p, int i, int j) {
  if (i < 1 || i > p.n() || j < 1 || j > p.n()) throw Error("swap_variables: index out of range");
  MultilinearPoly out(p.n(), p.spec());
  for (const auto& [m, c] : p.coeffs()) out.add_term(swap_bits(m, i, j), c);
  return out;
}

RationalPoly swap_variables(const RationalPoly& p, int i, int j) {
  if (i < 1 || i > p.n() || j < 1 || j > p.n()) throw Error("swap_variables: index out of range");
  RationalPoly out(p.n());
  for (const auto& [m, c] : p.coeffs()) out.add_term(swap_bits(m, i, j), c);
  return out;
}

MultilinearPoly operator+(const MultilinearPoly& a, const MultilinearPoly& b) {
  if (a.n() != b.n() || !(a.spec() == b.spec())) throw Error("polynomial: operands do not conform");
  MultilinearPoly out = a;
  for (const auto& [m, c] : b.coeffs()) out.add_term(m, c);
  return out;
}

MultilinearPoly operator-(const MultilinearPoly& a, const MultilinearPoly& b) {
  if (a.n() != b.n() || !(a.spec() == b.spec())) throw Error("polynomial: operands do not conform");
  MultilinearPoly out = a;
  for (const auto& [m, c] : b.coeffs()) out.add_term(m, group_neg(b.spec(), c));
  return out;
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  if (a.n() != b.n()) throw Error("polynomial: operands do not conform");
  RationalPoly out = a;
  for (const auto& [m, c] : b.coeffs()) out.add_term(m, -c);
  return out;
}

std::map<Mask, GroupElement> to_homogeneous_basis(const MultilinearPoly& p, int k, int d, std::int64_t prime) {
  const int n = p.n();
  if (!p.spec().is_cyclic()) throw Error("to_homogeneous_basis: the group must be cyclic Z_q");
  const std::int64_t q = p.spec().orders()[0];
  if (!is_prime(prime)) throw Error("to_homogeneous_basis: p = " + std::to_string(prime) + " is not prime");
  std::int64_t rest = q;
  while (rest % prime == 0) rest /= prime;
  if (rest != 1) throw Error("to_homogeneous_basis: q = " + std::to_string(q) + " is not a power of " + std::to_string(prime));
  if (d < 0 || d > k || k > n - d) throw Error("to_homogeneous_basis: requires d <= k <= n - d");
  if (p.degree() > d) throw Error("to_homogeneous_basis: polynomial degree exceeds d");
  if (!is_good_slice(k, d, prime)) {
    throw Error("to_homogeneous_basis: k = " + std::to_string(k) + " is not (" + std::to_string(d) + "," +
                std::to_string(prime) + ")-good");
  }

  std::map<Mask, GroupElement> out;
  auto add = [&](Mask m, const GroupElement& c) {
    auto it = out.find(m);
    GroupElement sum = it == out.end() ? c : group_add(p.spec(), it->second, c);
    if (sum.is_zero()) {
      if (it != out.end()) out.erase(it);
    } else {
      out[m] = sum;
    }
  };
  const Mask all = full_mask(n);
  for (const auto& [mask, c] : p.coeffs()) {
    int i = popcount(mask);
    if (i == d) {
      add(mask, c);
      continue;
    }
    // On the slice, sum_{T >= I, |T| = d} x^T = C(k-i, d-i) x^I.
    BigInt fold = binomial(k - i, d - i) % BigInt(q);
    std::int64_t inv = inverse_mod(fold.get_si(), q);
    if (inv == 0) {
      throw Error("to_homogeneous_basis: C(" + std::to_string(k - i) + "," + std::to_string(d - i) +
                  ") is not invertible modulo " + std::to_string(q));
    }
    GroupElement scaled = group_scalar_mul(p.spec(), inv, c);
    // Enumerate (d-i)-subsets of the complement of I by ranking into its bit positions.
    std::vector<int> free_bits;
    for (int b = 0; b < n; ++b) {
      if (((all & ~mask) >> b) & 1U) free_bits.push_back(b);
    }
    const int extra = d - i;
    const int f = static_cast<int>(free_bits.size());
    for (Mask sel = full_mask(extra); sel < (Mask{1} << f); sel = next_same_weight(sel)) {
      Mask t = mask;
      for (int b = 0; b < f; ++b) {
        if ((sel >> b) & 1U) t |= Mask{1} << free_bits[static_cast<std::size_t>(b)];
      }
      add(t, scaled);
    }
  }
  return out;
}

bool is_zero_on_slice(const MultilinearPoly& p, int k) {
  const int n = p.n();
  if (k < 0 || k > n) throw Error("is_zero_on_slice: k out of range");
  if (p.is_zero()) return true;
  BigInt size = binomial(n, k);
  require_work(size.fits_ulong_p() ? size.get_ui() : UINT64_MAX, std::uint64_t{1} << 26, "is_zero_on_slice");
  if (k == 0) return evaluate(p, SlicePoint{n, 0}).is_zero();
  for (Mask x = full_mask(k); x < (Mask{1} << n); x = next_same_weight(x)) {
    if (!evaluate(p, SlicePoint{n, x}).is_zero()) return false;
  }
  return true;
}

}  // namespace slicelab
