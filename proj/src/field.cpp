#include "mateq/field.hpp"

#include <limits>
#include <utility>

namespace mateq {
namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t reduce_mod(std::int64_t value, std::int64_t p) {
  std::int64_t r = value % p;
  return r < 0 ? r + p : r;
}

// Modular inverse of a (nonzero residue) mod prime p via extended Euclid.
std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return reduce_mod(old_s, p);
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::gf(std::int64_t p) {
  if (p < 2 || p > kMaxModulus) {
    throw Error(ErrorCode::ValidationError,
                "prime-field modulus must satisfy 2 <= p <= 2^31, got " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::ValidationError,
                "prime-field modulus must be prime, got " + std::to_string(p));
  }
  FieldSpec f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

std::string FieldSpec::name() const {
  return kind == Kind::rationals ? "Q" : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::zero(const FieldSpec& field) {
  Scalar s;
  s.field_ = field;
  return s;
}

Scalar Scalar::one(const FieldSpec& field) {
  Scalar s;
  s.field_ = field;
  if (field.is_prime_field()) {
    s.residue_ = 1 % field.p;
  } else {
    s.rational_value_ = 1;
  }
  return s;
}

Scalar Scalar::from_integer(std::int64_t value, const FieldSpec& field) {
  Scalar s;
  s.field_ = field;
  if (field.is_prime_field()) {
    s.residue_ = reduce_mod(value, field.p);
  } else {
    s.rational_value_ = value;
  }
  return s;
}

Scalar Scalar::rational(Rational value) {
  Scalar s;
  s.rational_value_ = std::move(value);
  return s;
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  // Divide rather than construct from the pair: the pair constructor insists
  // on a positive denominator, while division canonicalizes any sign.
  return rational(Rational(num) / Rational(den));
}

Scalar Scalar::residue(std::int64_t value, const FieldSpec& field) {
  if (!field.is_prime_field()) {
    throw Error(ErrorCode::ValidationError, "residue construction requires a prime field");
  }
  return from_integer(value, field);
}

bool Scalar::is_zero() const noexcept {
  return field_.is_prime_field() ? residue_ == 0 : rational_value_.is_zero();
}

bool Scalar::is_one() const noexcept {
  return field_.is_prime_field() ? residue_ == 1 % field_.p : rational_value_ == 1;
}

const Rational& Scalar::rational_value() const {
  if (field_.is_prime_field()) {
    throw Error(ErrorCode::FieldMismatch, "rational_value on a prime-field scalar");
  }
  return rational_value_;
}

std::int64_t Scalar::residue_value() const {
  if (!field_.is_prime_field()) {
    throw Error(ErrorCode::FieldMismatch, "residue_value on a rational scalar");
  }
  return residue_;
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) {
    throw Error(ErrorCode::FieldMismatch,
                "operands live in " + a.field_.name() + " and " + b.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime_field()) {
    r.residue_ = residue_ == 0 ? 0 : field_.p - residue_;
  } else {
    r.rational_value_ = -rational_value_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + field_.name());
  }
  Scalar r = *this;
  if (field_.is_prime_field()) {
    r.residue_ = inverse_mod(residue_, field_.p);
  } else {
    r.rational_value_ = 1 / rational_value_;
  }
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar r = a;
  if (a.field_.is_prime_field()) {
    r.residue_ = (a.residue_ + b.residue_) % a.field_.p;
  } else {
    r.rational_value_ = a.rational_value_ + b.rational_value_;
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar r = a;
  if (a.field_.is_prime_field()) {
    r.residue_ = reduce_mod(a.residue_ - b.residue_, a.field_.p);
  } else {
    r.rational_value_ = a.rational_value_ - b.rational_value_;
  }
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar r = a;
  if (a.field_.is_prime_field()) {
    r.residue_ = (a.residue_ * b.residue_) % a.field_.p;
  } else {
    r.rational_value_ = a.rational_value_ * b.rational_value_;
  }
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_prime_field() ? a.residue_ == b.residue_
                                   : a.rational_value_ == b.rational_value_;
}

int Scalar::compare(const Scalar& other) const {
  require_same_field(*this, other);
  if (field_.is_prime_field()) {
    if (residue_ < other.residue_) return -1;
    return residue_ == other.residue_ ? 0 : 1;
  }
  if (rational_value_ < other.rational_value_) return -1;
  return rational_value_ == other.rational_value_ ? 0 : 1;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) {
    return std::to_string(residue_);
  }
  std::string s = numerator(rational_value_).str();
  if (denominator(rational_value_) != 1) {
    s += "/" + denominator(rational_value_).str();
  }
  return s;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& field) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.erase(body.begin());
  }
  const auto slash = body.find('/');

  if (field.is_prime_field()) {
    if (slash != std::string::npos) {
      throw Error(ErrorCode::ParseError,
                  "prime-field entry must be an integer, got \"" + text + "\"");
    }
    if (!all_digits(body)) {
      throw Error(ErrorCode::ParseError, "malformed integer \"" + text + "\"");
    }
    BigInt v(body);
    BigInt r = v % field.p;
    auto residue = r.convert_to<std::int64_t>();
    if (negative) residue = -residue;
    return from_integer(residue, field);
  }

  std::string num = slash == std::string::npos ? body : body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational \"" + text + "\"");
  }
  BigInt n(num), d(den);
  if (d.is_zero()) {
    throw Error(ErrorCode::ParseError, "zero denominator in \"" + text + "\"");
  }
  if (negative) n = -n;
  return rational(Rational(n, d));
}

std::vector<Scalar> enumerate_field(const FieldSpec& field) {
  if (!field.is_prime_field()) {
    throw Error(ErrorCode::NotEnumerable, "the rationals are infinite");
  }
  constexpr std::int64_t kEnumerationGuard = 1'000'000;
  if (field.p > kEnumerationGuard) {
    throw Error(ErrorCode::CapExceeded,
                "refusing to materialize " + std::to_string(field.p) + " field elements");
  }
  std::vector<Scalar> elements;
  elements.reserve(static_cast<std::size_t>(field.p));
  for (std::int64_t v = 0; v < field.p; ++v) {
    elements.push_back(Scalar::from_integer(v, field));
  }
  return elements;
}

}  // namespace mateq
