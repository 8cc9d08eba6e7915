#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "mateq/errors.hpp"

namespace mateq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Tag describing which field scalars live in: the rationals, or GF(p).
struct FieldSpec {
  enum class Kind { rationals, prime };

  Kind kind = Kind::rationals;
  std::int64_t p = 0;  ///< modulus; meaningful only when kind == prime

  /// The field of rational numbers.
  [[nodiscard]] static FieldSpec rationals() noexcept { return FieldSpec{}; }

  /// The prime field GF(p). Requires 2 <= p <= 2^31 and p prime
  /// (ValidationError otherwise).
  [[nodiscard]] static FieldSpec gf(std::int64_t p);

  [[nodiscard]] bool is_prime_field() const noexcept { return kind == Kind::prime; }

  /// Display name: "Q" or "GF(p)".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// An immutable field element tagged with its FieldSpec. Arithmetic between
/// scalars of different fields throws FieldMismatch; division by zero throws
/// DivisionByZero. Rational values are always kept in lowest terms with a
/// positive denominator; prime-field values are canonical residues in [0, p).
class Scalar {
 public:
  /// Rational zero (so containers of Scalar are constructible).
  Scalar() : field_(FieldSpec::rationals()) {}

  [[nodiscard]] static Scalar zero(const FieldSpec& field);
  [[nodiscard]] static Scalar one(const FieldSpec& field);

  /// The image of an integer in the given field.
  [[nodiscard]] static Scalar from_integer(std::int64_t value, const FieldSpec& field);

  /// An exact rational (field tag: rationals).
  [[nodiscard]] static Scalar rational(Rational value);

  /// num/den as a rational; den must be nonzero (DivisionByZero).
  [[nodiscard]] static Scalar rational(std::int64_t num, std::int64_t den);

  /// The canonical residue of value mod p in GF(p); field must be a prime field.
  [[nodiscard]] static Scalar residue(std::int64_t value, const FieldSpec& field);

  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_one() const noexcept;

  /// Underlying rational value; requires the rational field.
  [[nodiscard]] const Rational& rational_value() const;
  /// Canonical residue in [0, p); requires a prime field.
  [[nodiscard]] std::int64_t residue_value() const;

  [[nodiscard]] Scalar operator-() const;
  [[nodiscard]] Scalar inverse() const;  ///< DivisionByZero on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order within one field (rationals by value, residues by value);
  /// used for deterministic sorting. FieldMismatch across fields.
  [[nodiscard]] int compare(const Scalar& other) const;

  /// Canonical text: "a" or "a/b" for rationals, the residue digits for GF(p).
  [[nodiscard]] std::string to_string() const;

  /// Parse canonical text in the given field. Accepts optional leading '-',
  /// integer or "a/b" (rationals; zero denominator is a ParseError), and any
  /// integer (prime fields; reduced mod p). ParseError on malformed text.
  [[nodiscard]] static Scalar parse(const std::string& text, const FieldSpec& field);

 private:
  static void require_same_field(const Scalar& a, const Scalar& b);

  FieldSpec field_;
  Rational rational_value_{};     // rationals only
  std::int64_t residue_ = 0;      // prime fields only
};

/// All p elements of a prime field, canonical residues ascending from 0.
/// NotEnumerable for the rationals. Intended for small p: materializes a vector.
[[nodiscard]] std::vector<Scalar> enumerate_field(const FieldSpec& field);

}  // namespace mateq
