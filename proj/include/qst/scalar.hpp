#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/gmp.hpp>

namespace qst {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

enum class EngineMode { exact, floating };

// Tolerance for identity checks between float-mode values.
inline constexpr double kFloatTolerance = 1e-12;

std::string_view to_string(EngineMode mode);
EngineMode parse_engine_mode(std::string_view text);

// A number that is either an exact rational or a double.
//
// Arithmetic between two exact values stays exact. As soon as a double
// takes part the result is a double; that is how float mode propagates
// from inputs through every derived quantity without a second code path.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  template <std::integral I>
  Scalar(I v) : value_(Rational(static_cast<long long>(v))) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational v) : value_(std::move(v)) {}                   // NOLINT(google-explicit-constructor)

  static Scalar ratio(long long num, long long den);
  static Scalar real(double v);

  // Accepts "p", "p/q" and, for float literals, anything std::stod takes.
  static Scalar parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const;
  double to_double() const;

  // Structural zero: exact zero, or a double equal to 0.0.
  bool is_zero() const;
  // Exact zero in exact mode, |v| <= tol in float mode.
  bool near_zero(double tol = kFloatTolerance) const;
  int sign() const;
  Scalar abs() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

  // "p" for integers, "p/q" otherwise; doubles use round-trip precision.
  std::string str() const;

 private:
  std::variant<Rational, double> value_;
};

Scalar pow(const Scalar& base, unsigned exponent);

// True when a and b agree exactly, or to within tol*(1 + max(|a|,|b|)) in float mode.
bool approx_equal(const Scalar& a, const Scalar& b, double tol = kFloatTolerance);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qst
