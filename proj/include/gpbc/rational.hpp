#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpbc/errors.hpp"

namespace gpbc {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Exact fraction over arbitrary-precision integers.
 *
 * Invariants: den() > 0 and gcd(num(), den()) == 1, so two equal values
 * always share one representation and == is a plain member comparison.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational& operator+=(const Rational& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    if (den_ == o.den_) {
      num_ -= o.num_;
    } else {
      num_ = num_ * o.den_ - o.num_ * den_;
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw DomainError("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) {
    a.num_ = -a.num_;
    return a;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p/q", or "p" when the value is an integer.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  // Decimal expansion rounded half away from zero to `places` digits, with
  // trailing zeros trimmed: 37/2 -> "18.5", 59/3 -> "19.666667".
  std::string decimal(int places = 6) const {
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const bool negative = num_ < 0;
    const BigInt magnitude = negative ? BigInt(-num_) : num_;
    BigInt scaled = (magnitude * scale * 2 + den_) / (den_ * 2);
    const BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
    if (frac != 0) {
      std::string digits = frac.str();
      digits.insert(0, static_cast<std::size_t>(places) - digits.size(), '0');
      while (!digits.empty() && digits.back() == '0') digits.pop_back();
      out += "." + digits;
    }
    return out;
  }

  // Accepts "p" or "p/q" with an optional leading minus sign.
  static Rational parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
      if (s.empty()) throw ParseError("empty integer in rational '" + std::string(text) + "'");
      std::size_t start = (s.front() == '-') ? 1 : 0;
      if (start == s.size()) throw ParseError("bad rational '" + std::string(text) + "'");
      for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError("bad rational '" + std::string(text) + "'");
      }
      return BigInt(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_ == 1) return;
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace gpbc
