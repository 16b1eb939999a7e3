#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tverberg {

using Integer = boost::multiprecision::cpp_int;

/// Exact fraction, always kept in lowest terms with positive denominator.
/// Every geometric predicate in this library runs on this type; there is
/// no floating-point code path anywhere.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT: implicit by design
  Rational(long value) : value_(value) {}
  Rational(long long value) : value_(value) {}
  Rational(Integer value) : value_(std::move(value)) {}

  /// Builds numerator/denominator in canonical form. Throws
  /// std::domain_error on a zero denominator.
  Rational(Integer numerator, Integer denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    value_ = Backend(std::move(numerator), std::move(denominator));
  }
  Rational(long long numerator, long long denominator)
      : Rational(Integer(numerator), Integer(denominator)) {}

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  /// -1, 0 or +1.
  int sign() const { return value_.sign(); }

  Rational operator-() const { return Rational(Backend(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// "p/q", or just "p" for integers.
  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) {
      s += '/';
      s += denominator().str();
    }
    return s;
  }

  /// Accepts "p" and "p/q" with optional sign on either part; no whitespace.
  static std::optional<Rational> try_parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      auto num = parse_integer(text);
      if (!num) return std::nullopt;
      return Rational(std::move(*num));
    }
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(std::move(*num), std::move(*den));
  }

  /// Like try_parse but throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text) {
    auto r = try_parse(text);
    if (!r) throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    return *r;
  }

 private:
  using Backend = boost::multiprecision::cpp_rational;

  explicit Rational(Backend v) : value_(std::move(v)) {}

  static std::optional<Integer> parse_integer(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') i = 1;
    if (i == text.size()) return std::nullopt;
    for (std::size_t k = i; k < text.size(); ++k) {
      if (text[k] < '0' || text[k] > '9') return std::nullopt;
    }
    // The big-integer constructor does not take an explicit '+', so the sign
    // is applied here.
    try {
      Integer value{std::string(text.substr(i))};
      if (text[0] == '-') value = -value;
      return value;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  Backend value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace tverberg
