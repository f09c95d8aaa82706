#pragma once

#include <numeric>
#include <string>

#include "kneser/error.hpp"

namespace kneser {

/// Exact fraction over 64-bit integers; throws Overflow instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long n, long long d = 1) : num_(n), den_(d) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    reduce();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {add(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_)};
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return {mul(a.num_, b.num_), mul(a.den_, b.den_)}; }
  friend Rational operator/(const Rational& a, const Rational& b) { return {mul(a.num_, b.den_), mul(a.den_, b.num_)}; }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  bool operator==(const Rational&) const = default;

 private:
  static long long mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "rational overflow");
    return out;
  }
  static long long add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "rational overflow");
    return out;
  }
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace kneser
