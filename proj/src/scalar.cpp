#include "cpv/scalar.hpp"

#include "cpv/error.hpp"

#include <cctype>
#include <ostream>

namespace cpv {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) {
    throw Error(ErrorKind::Parse, "not an exact rational: '" + std::string(whole) + "'");
  }
  const Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

}  // namespace

Scalar::Scalar(long long num, long long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  value_ = Rational(num, den);
}

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(Rational(parse_integer(text, text)));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!is_digits(den_text)) {
    throw Error(ErrorKind::Parse, "bad denominator in '" + std::string(text) + "'");
  }
  const Integer den(std::string{den_text});
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Scalar(Rational(num, den));
}

const Rational& Scalar::value() const {
  if (!is_finite()) throw Error(ErrorKind::InvalidArgument, "value() of an infinite scalar");
  return value_;
}

std::string Scalar::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    case Kind::Finite: break;
  }
  return boost::multiprecision::numerator(value_).str() + "/" +
         boost::multiprecision::denominator(value_).str();
}

Scalar Scalar::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    case Kind::Finite: break;
  }
  return Scalar(Rational(-value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (is_finite() && rhs.is_finite()) {
    value_ += rhs.value_;
    return *this;
  }
  if (!is_finite() && !rhs.is_finite() && kind_ != rhs.kind_) {
    throw Error(ErrorKind::InvalidArgument, "inf + -inf is undefined");
  }
  if (is_finite()) *this = rhs;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_finite() && rhs.is_finite()) {
    value_ *= rhs.value_;
    return *this;
  }
  const int sa = is_finite() ? (value_ > 0) - (value_ < 0) : (is_pos_inf() ? 1 : -1);
  const int sb = rhs.is_finite() ? (rhs.value_ > 0) - (rhs.value_ < 0) : (rhs.is_pos_inf() ? 1 : -1);
  if (sa == 0 || sb == 0) throw Error(ErrorKind::InvalidArgument, "0 * inf is undefined");
  *this = sa * sb > 0 ? pos_inf() : neg_inf();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (!rhs.is_finite()) throw Error(ErrorKind::InvalidArgument, "division by an infinity");
  if (rhs.value_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (is_finite()) {
    value_ /= rhs.value_;
  } else if (rhs.value_ < 0) {
    *this = -*this;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar endpoint_gap(const Scalar& a, const Scalar& b) {
  if (a.is_finite() && b.is_finite()) return abs(a - b);
  if (a.kind() == b.kind()) return Scalar(0);
  return Scalar::pos_inf();
}

Scalar abs(const Scalar& s) {
  if (!s.is_finite()) return Scalar::pos_inf();
  return s.value() < 0 ? -s : s;
}

Scalar midpoint(const Scalar& a, const Scalar& b) { return (a + b) / Scalar(2); }

Integer floor(const Scalar& s) {
  const Rational& v = s.value();
  const Integer num = boost::multiprecision::numerator(v);
  const Integer den = boost::multiprecision::denominator(v);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

bool is_integer(const Scalar& s) {
  return s.is_finite() && boost::multiprecision::denominator(s.value()) == 1;
}

}  // namespace cpv
