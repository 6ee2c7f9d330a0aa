#pragma once

#include <array>
#include <map>
#include <string>

#include "qst/errors.hpp"
#include "qst/minkowski.hpp"
#include "qst/polynomial.hpp"

namespace qst {

// Variables 0..3 are X^0..X^3, variables 4..7 are P_0..P_3.
using PhasePolynomial = BasicPolynomial<8>;

inline constexpr unsigned kMaxInverseMassPower = 8;

class DenominatorCapExceeded : public Error {
 public:
  using Error::Error;
};

// A function on (X, P) phase space of the form
//   sum_k N_k(X, P) / (M^2)^k,   M^2 = P_nu P^nu,
// with polynomial numerators N_k and 0 <= k <= kMaxInverseMassPower.
//
// The representation is not unique (M^2 / M^2 = 1), so equality clears
// all denominators to the largest power present and compares numerators.
class PhaseFunction {
 public:
  using Parts = std::map<unsigned, PhasePolynomial>;

  PhaseFunction() = default;
  PhaseFunction(const Scalar& c) : PhaseFunction(PhasePolynomial(c)) {}  // NOLINT(google-explicit-constructor)
  explicit PhaseFunction(PhasePolynomial numerator, unsigned inverse_mass_power = 0);

  // X^mu.
  static PhaseFunction position(std::size_t mu);
  // P_mu.
  static PhaseFunction momentum(std::size_t mu);
  // P^mu = eta^{mu mu} P_mu.
  static PhaseFunction momentum_upper(std::size_t mu);
  static PhasePolynomial mass_squared_polynomial();
  // (M^2)^{-k}.
  static PhaseFunction inverse_mass_squared(unsigned k = 1);
  // Polynomial in x^mu reinterpreted as a polynomial in X^mu.
  static PhaseFunction lift(const Polynomial& p);

  const Parts& parts() const { return parts_; }
  unsigned max_inverse_power() const { return parts_.empty() ? 0 : parts_.rbegin()->first; }
  bool is_zero() const;
  bool depends_on_position() const;

  // Single numerator over (M^2)^power; power must be >= max_inverse_power().
  PhasePolynomial cleared(unsigned power) const;

  PhaseFunction& operator+=(const PhaseFunction& o);
  PhaseFunction& operator-=(const PhaseFunction& o);
  PhaseFunction& operator*=(const Scalar& s);
  PhaseFunction& operator*=(const PhaseFunction& o) { return *this = *this * o; }
  friend PhaseFunction operator+(PhaseFunction a, const PhaseFunction& b) { return a += b; }
  friend PhaseFunction operator-(PhaseFunction a, const PhaseFunction& b) { return a -= b; }
  friend PhaseFunction operator*(PhaseFunction a, const Scalar& s) { return a *= s; }
  friend PhaseFunction operator*(const Scalar& s, PhaseFunction a) { return a *= s; }
  friend PhaseFunction operator*(const PhaseFunction& a, const PhaseFunction& b);
  PhaseFunction operator-() const { return *this * Scalar(-1); }

  friend bool operator==(const PhaseFunction& a, const PhaseFunction& b) { return (a - b).is_zero(); }

  // d/dX^mu.
  PhaseFunction d_position(std::size_t mu) const;
  // d/dP_mu, including d(M^-2k)/dP_mu = -2k P^mu M^-2(k+1).
  PhaseFunction d_momentum(std::size_t mu) const;
  // d/dX_mu = eta^{mu mu} d/dX^mu.
  PhaseFunction d_position_lower(std::size_t mu) const { return d_position(mu) * Scalar(eta(mu)); }

  // Value at X (upper) and P (lower; an upper P is lowered first).
  // Throws MasslessState when P.P = 0.
  Scalar evaluate(const FourVector& position, const FourVector& momentum) const;

  std::string str() const;

 private:
  void add_part(unsigned k, const PhasePolynomial& p);
  Parts parts_;
};

// (f, g) = df/dX^mu dg/dP_mu - df/dP_mu dg/dX^mu.
PhaseFunction poisson_bracket(const PhaseFunction& f, const PhaseFunction& g);

}  // namespace qst
