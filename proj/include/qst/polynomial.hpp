#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>

#include "qst/scalar.hpp"

namespace qst {

// Sparse multivariate polynomial in N variables with Scalar coefficients.
//
// Terms live in a map keyed by exponent vector, ordered by total degree
// (highest first) and then lexicographically (x0 before x1 ...). Zero
// coefficients are never stored, so two polynomials are equal iff their
// term maps are equal.
template <std::size_t N>
class BasicPolynomial {
 public:
  using Exponents = std::array<std::uint16_t, N>;

  struct GradedOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
      unsigned da = std::accumulate(a.begin(), a.end(), 0u);
      unsigned db = std::accumulate(b.begin(), b.end(), 0u);
      if (da != db) return da > db;
      return a > b;
    }
  };

  using TermMap = std::map<Exponents, Scalar, GradedOrder>;

  BasicPolynomial() = default;
  BasicPolynomial(const Scalar& c) { add_term(Exponents{}, c); }  // NOLINT(google-explicit-constructor)

  static BasicPolynomial variable(std::size_t i) {
    if (i >= N) throw std::out_of_range("polynomial variable index");
    Exponents e{};
    e[i] = 1;
    return monomial(e, Scalar(1));
  }

  static BasicPolynomial monomial(const Exponents& e, const Scalar& c) {
    BasicPolynomial p;
    p.add_term(e, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  Scalar constant_term() const { return coefficient(Exponents{}); }

  // Highest total degree; -1 for the zero polynomial.
  int degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
  }

  bool is_exact() const {
    for (const auto& [e, c] : terms_)
      if (!c.is_exact()) return false;
    return true;
  }

  void add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  BasicPolynomial& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator*(BasicPolynomial a, const Scalar& s) { return a *= s; }
  friend BasicPolynomial operator*(const Scalar& s, BasicPolynomial a) { return a *= s; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    BasicPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < N; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    return out;
  }

  BasicPolynomial operator-() const { return *this * Scalar(-1); }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) { return a.terms_ == b.terms_; }

  BasicPolynomial derivative(std::size_t i) const {
    BasicPolynomial out;
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents d = e;
      --d[i];
      out.add_term(d, c * Scalar(static_cast<int>(e[i])));
    }
    return out;
  }

  Scalar evaluate(std::span<const Scalar, N> point) const {
    Scalar sum;
    for (const auto& [e, c] : terms_) {
      Scalar term = c;
      for (std::size_t i = 0; i < N; ++i)
        if (e[i]) term *= pow(point[i], e[i]);
      sum += term;
    }
    return sum;
  }

  // Largest |coefficient| as a double; used to scale float-mode tolerances.
  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c.to_double()));
    return m;
  }

 private:
  TermMap terms_;
};

template <std::size_t N>
BasicPolynomial<N> pow(const BasicPolynomial<N>& base, unsigned exponent) {
  BasicPolynomial<N> out(Scalar(1));
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Polynomials in the four coordinates x^0..x^3.
using Polynomial = BasicPolynomial<4>;

}  // namespace qst
