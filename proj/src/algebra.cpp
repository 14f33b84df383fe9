#include "slicelab/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace slicelab {

namespace {

std::int64_t reduce(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::int64_t parse_int64(const std::string& s, std::string_view context) {
  if (!is_integer_literal(s)) throw Error(std::string(context) + ": not an integer: '" + s + "'");
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw Error(std::string(context) + ": integer out of range: '" + s + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational rat(const BigInt& num, const BigInt& den) { return Rational(num, den); }

Rational Rational::parse(std::string_view text) {
  std::string s = trim(text);
  auto slash = s.find('/');
  std::string num = trim(s.substr(0, slash));
  std::string den = slash == std::string::npos ? "1" : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error("rational: cannot parse '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  return Rational(BigInt(num), BigInt(den));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error("rational: zero to a negative power");
    return Rational(1) / pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational: division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw Error("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt big_pow(long base, unsigned long exponent) {
  BigInt r;
  BigInt b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
  return r;
}

// ---------------------------------------------------------------- groups

bool GroupElement::is_zero() const {
  return std::all_of(residues.begin(), residues.end(), [](std::int64_t r) { return r == 0; });
}

std::string GroupElement::str() const {
  if (residues.size() == 1) return std::to_string(residues[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(residues[i]);
  }
  return out + ")";
}

GroupSpec::GroupSpec(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw Error("group: at least one cyclic factor is required");
  for (auto q : orders_) {
    if (q < 2) throw Error("group: every cyclic order must be at least 2, got " + std::to_string(q));
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::string s = trim(text);
  std::vector<std::int64_t> orders;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t sep = pos;
    while (sep < s.size() && s[sep] != 'x' && s[sep] != 'X') ++sep;
    std::string factor = trim(std::string_view(s).substr(pos, sep - pos));
    if (factor.size() < 2 || (factor[0] != 'Z' && factor[0] != 'z')) {
      throw Error("group: cannot parse factor '" + factor + "' in '" + s + "'");
    }
    orders.push_back(parse_int64(factor.substr(1), "group"));
    if (sep == s.size()) break;
    pos = sep + 1;
  }
  return GroupSpec(std::move(orders));
}

std::uint64_t GroupSpec::order() const {
  std::uint64_t total = 1;
  for (auto q : orders_) {
    if (total > (std::numeric_limits<std::uint64_t>::max() >> 2) / static_cast<std::uint64_t>(q)) {
      throw GuardError("group: order of " + str() + " is too large");
    }
    total *= static_cast<std::uint64_t>(q);
  }
  return total;
}

std::string GroupSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += "x";
    out += "Z" + std::to_string(orders_[i]);
  }
  return out;
}

GroupElement GroupSpec::zero() const { return GroupElement{std::vector<std::int64_t>(orders_.size(), 0)}; }

GroupElement GroupSpec::make(const std::vector<std::int64_t>& values) const {
  if (values.size() != orders_.size()) {
    throw Error("group: element has " + std::to_string(values.size()) + " residues, " + str() +
                " needs " + std::to_string(orders_.size()));
  }
  GroupElement e;
  e.residues.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) e.residues[i] = reduce(values[i], orders_[i]);
  return e;
}

GroupElement GroupSpec::scalar(std::int64_t m) const {
  return make(std::vector<std::int64_t>(orders_.size(), m));
}

GroupElement GroupSpec::parse_element(std::string_view text) const {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw Error("group: unbalanced parentheses in '" + s + "'");
    std::vector<std::int64_t> values;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      values.push_back(parse_int64(trim(body.substr(pos, comma - pos)), "group element"));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return make(values);
  }
  return scalar(parse_int64(s, "group element"));
}

GroupElement GroupSpec::element(std::uint64_t index) const {
  GroupElement e;
  e.residues.resize(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    auto q = static_cast<std::uint64_t>(orders_[i]);
    e.residues[i] = static_cast<std::int64_t>(index % q);
    index /= q;
  }
  if (index != 0) throw Error("group: element index out of range");
  return e;
}

std::uint64_t GroupSpec::index(const GroupElement& e) const {
  check(e);
  std::uint64_t idx = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    idx = idx * static_cast<std::uint64_t>(orders_[i]) + static_cast<std::uint64_t>(e.residues[i]);
  }
  return idx;
}

void GroupSpec::check(const GroupElement& e) const {
  if (e.residues.size() != orders_.size()) {
    throw Error("group: element " + e.str() + " does not conform to " + str());
  }
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (e.residues[i] < 0 || e.residues[i] >= orders_[i]) {
      throw Error("group: residue " + std::to_string(e.residues[i]) + " not reduced modulo " +
                  std::to_string(orders_[i]));
    }
  }
}

GroupElement group_add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  spec.check(a);
  spec.check(b);
  GroupElement r;
  r.residues.resize(a.residues.size());
  for (std::size_t i = 0; i < a.residues.size(); ++i) {
    r.residues[i] = (a.residues[i] + b.residues[i]) % spec.orders()[i];
  }
  return r;
}

GroupElement group_neg(const GroupSpec& spec, const GroupElement& a) {
  spec.check(a);
  GroupElement r;
  r.residues.resize(a.residues.size());
  for (std::size_t i = 0; i < a.residues.size(); ++i) {
    r.residues[i] = reduce(-a.residues[i], spec.orders()[i]);
  }
  return r;
}

GroupElement group_sub(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  return group_add(spec, a, group_neg(spec, b));
}

GroupElement group_scalar_mul(const GroupSpec& spec, std::int64_t m, const GroupElement& a) {
  spec.check(a);
  GroupElement r;
  r.residues.resize(a.residues.size());
  for (std::size_t i = 0; i < a.residues.size(); ++i) {
    std::int64_t q = spec.orders()[i];
    // Reduce m first so the product cannot overflow.
    __int128 prod = static_cast<__int128>(reduce(m, q)) * a.residues[i];
    r.residues[i] = static_cast<std::int64_t>(prod % q);
  }
  return r;
}

GroupTable::GroupTable(const GroupSpec& spec) : spec_(spec) {
  std::uint64_t n = spec.order();
  if (n > 4096) throw GuardError("group table: |G| = " + std::to_string(n) + " exceeds 4096");
  size_ = static_cast<std::uint32_t>(n);
  table_.resize(static_cast<std::size_t>(size_) * size_);
  neg_.resize(size_);
  std::vector<GroupElement> elems;
  elems.reserve(size_);
  for (std::uint32_t i = 0; i < size_; ++i) elems.push_back(spec.element(i));
  for (std::uint32_t a = 0; a < size_; ++a) {
    neg_[a] = static_cast<std::uint32_t>(spec.index(group_neg(spec, elems[a])));
    for (std::uint32_t b = 0; b < size_; ++b) {
      table_[a * size_ + b] = static_cast<std::uint32_t>(spec.index(group_add(spec, elems[a], elems[b])));
    }
  }
}

}  // namespace slicelab
