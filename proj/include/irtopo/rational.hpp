#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "irtopo/error.hpp"

namespace irtopo {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Text form is always "p/q" (e.g. "0/1", "3/10", "-1/2"). Parsing also
/// accepts plain integers and finite decimals ("0.3" reads as 3/10).
class QRational {
 public:
  using Value = boost::multiprecision::cpp_rational;

  QRational() = default;
  QRational(long long numerator, long long denominator = 1) {
    if (denominator == 0) throw Error(Errc::OutOfRange, "zero denominator");
    value_ = Value(numerator, denominator);
  }
  explicit QRational(Value v) : value_(std::move(v)) {}

  static QRational parse(std::string_view text) {
    auto fail = [&] { return Error(Errc::ParseError, "not a rational: \"" + std::string(text) + "\""); };
    if (text.empty()) throw fail();
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
      Value num = parse_integer(text.substr(0, slash), fail);
      Value den = parse_integer(text.substr(slash + 1), fail);
      if (den == 0) throw Error(Errc::OutOfRange, "zero denominator in \"" + std::string(text) + "\"");
      return QRational(num / den);
    }
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return QRational(parse_integer(text, fail));
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos) throw fail();
    const bool negative = !whole.empty() && whole.front() == '-';
    if (negative || (!whole.empty() && whole.front() == '+')) whole.remove_prefix(1);
    Value ipart = whole.empty() ? Value(0) : parse_integer(whole, fail);
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Value result = ipart + Value(boost::multiprecision::cpp_int(std::string(frac)), scale);
    return QRational(negative ? Value(-result) : result);
  }

  const Value& value() const { return value_; }

  std::string to_string() const {
    return boost::multiprecision::numerator(value_).str() + "/" + boost::multiprecision::denominator(value_).str();
  }

  friend QRational operator+(const QRational& a, const QRational& b) { return QRational(Value(a.value_ + b.value_)); }
  friend QRational operator-(const QRational& a, const QRational& b) { return QRational(Value(a.value_ - b.value_)); }
  friend QRational operator*(const QRational& a, const QRational& b) { return QRational(Value(a.value_ * b.value_)); }
  friend QRational operator/(const QRational& a, const QRational& b) {
    if (b.value_ == 0) throw Error(Errc::OutOfRange, "division by zero");
    return QRational(Value(a.value_ / b.value_));
  }

  friend bool operator==(const QRational& a, const QRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const QRational& a, const QRational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  template <class Fail>
  static Value parse_integer(std::string_view digits, Fail&& fail) {
    std::string_view body = digits;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (body.empty() || body.find_first_not_of("0123456789") != std::string_view::npos) throw fail();
    return Value(boost::multiprecision::cpp_int(std::string(digits.front() == '+' ? digits.substr(1) : digits)));
  }

  Value value_{0};
};

}  // namespace irtopo
