#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace carext {

using BigInt = boost::multiprecision::mpz_int;

/// Exact fraction, the sole numeric scalar of the library. Always in lowest
/// terms with positive denominator (the backing GMP rational canonicalizes
/// on every operation); no rounding happens anywhere.
class Rational {
public:
  Rational() = default;
  Rational(const BigInt& num, const BigInt& den)
      : v_(den == 0 ? throw std::domain_error("Rational: zero denominator")
                    : boost::multiprecision::mpq_rational(num, den)) {}
  Rational(std::int64_t n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(boost::multiprecision::mpq_rational v) : v_(std::move(v)) {}

  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_ == 0; }

  /// Serialized form "p/q", lowest terms, q > 0. Zero prints as "0/1".
  std::string str() const {
    return num().str() + "/" + den().str();
  }

  /// Parses "p/q" or a bare integer "p".
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(s), 1);
      return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  /// 2^e for any sign of e.
  static Rational pow2(std::int64_t e) {
    BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(1, p) : Rational(p, 1);
  }

private:
  boost::multiprecision::mpq_rational v_;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace carext
