#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cpv {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Exact persistence parameter: a rational number or one of the two
/// symbolic infinities. Arithmetic with an infinite operand follows the
/// extended-real rules; the indeterminate forms (inf - inf) throw.
class Scalar {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  Scalar() = default;
  Scalar(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(v) {}  // NOLINT
  Scalar(long long v) : value_(v) {}  // NOLINT
  Scalar(Rational v) : value_(std::move(v)) {}  // NOLINT
  Scalar(long long num, long long den);

  static Scalar neg_inf() { return Scalar(Kind::NegInf); }
  static Scalar pos_inf() { return Scalar(Kind::PosInf); }

  /// Accepts "p/q", "p", "-inf", "inf" (also "+inf"). Floats are rejected.
  static Scalar parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }

  /// Throws InvalidArgument when called on an infinity.
  const Rational& value() const;

  /// "p/q" in lowest terms with q > 0, or "-inf" / "inf".
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  explicit Scalar(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Endpoint distance used by matchings: |a - b| on finite values, 0 between
/// equal infinities, +inf between an infinity and anything else.
Scalar endpoint_gap(const Scalar& a, const Scalar& b);

Scalar abs(const Scalar& s);
Scalar midpoint(const Scalar& a, const Scalar& b);

/// Largest integer not exceeding a finite scalar.
Integer floor(const Scalar& s);
bool is_integer(const Scalar& s);

}  // namespace cpv
