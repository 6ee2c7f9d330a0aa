#include "qst/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "qst/errors.hpp"

namespace qst {

std::string_view to_string(EngineMode mode) {
  return mode == EngineMode::exact ? "exact" : "float";
}

EngineMode parse_engine_mode(std::string_view text) {
  if (text == "exact") return EngineMode::exact;
  if (text == "float") return EngineMode::floating;
  throw Error("unknown engine mode '" + std::string(text) + "'");
}

Scalar Scalar::ratio(long long num, long long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Scalar(Rational(num, den));
}

Scalar Scalar::real(double v) {
  Scalar s;
  s.value_ = v;
  return s;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Rational parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Rational(boost::multiprecision::mpz_int(std::string(s)));
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error("empty number literal");

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
      throw Error("malformed rational literal '" + std::string(text) + "'");
    Rational d = parse_integer(den);
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    return Scalar(parse_integer(num) / d);
  }
  if (is_integer_literal(text)) return Scalar(parse_integer(text));

  std::string owned(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw Error("malformed number literal '" + owned + "'");
  }
  if (used != owned.size() || !std::isfinite(v)) throw Error("malformed number literal '" + owned + "'");
  return Scalar::real(v);
}

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw Error("float-mode scalar has no exact value");
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->convert_to<double>();
  return std::get<double>(value_);
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->is_zero();
  return std::get<double>(value_) == 0.0;
}

bool Scalar::near_zero(double tol) const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->is_zero();
  return std::abs(std::get<double>(value_)) <= tol;
}

int Scalar::sign() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->sign();
  double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::operator-() const {
  Scalar out;
  std::visit([&](const auto& v) { out.value_ = -v; }, value_);
  return out;
}

namespace {

template <typename Op>
void combine(std::variant<Rational, double>& lhs, const std::variant<Rational, double>& rhs, Op op) {
  if (auto* a = std::get_if<Rational>(&lhs)) {
    if (const auto* b = std::get_if<Rational>(&rhs)) {
      *a = op(*a, *b);
      return;
    }
  }
  auto as_double = [](const std::variant<Rational, double>& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return r->convert_to<double>();
    return std::get<double>(v);
  };
  lhs = op(as_double(lhs), as_double(rhs));
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  combine(value_, o.value_, [](const auto& a, const auto& b) { return a + b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  combine(value_, o.value_, [](const auto& a, const auto& b) { return a - b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  combine(value_, o.value_, [](const auto& a, const auto& b) { return a * b; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  combine(value_, o.value_, [](const auto& a, const auto& b) { return a / b; });
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = a.rational().compare(b.rational());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return a.to_double() <=> b.to_double();
}

std::string Scalar::str() const {
  if (const auto* r = std::get_if<Rational>(&value_)) {
    auto num = boost::multiprecision::numerator(*r);
    auto den = boost::multiprecision::denominator(*r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  return std::string(buf, res.ptr);
}

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  double x = a.to_double(), y = b.to_double();
  return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qst
