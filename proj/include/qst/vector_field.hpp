#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qst/errors.hpp"
#include "qst/minkowski.hpp"
#include "qst/polynomial.hpp"

namespace qst {

// The fifteen conformal generators: translations, rotations/boosts,
// dilatation and special conformal transformations.
enum class GeneratorKind : std::uint8_t {
  P0, P1, P2, P3,
  J01, J02, J03, J12, J13, J23,
  D,
  C0, C1, C2, C3,
};

inline constexpr std::size_t kGeneratorCount = 15;

enum class GeneratorFamily { translation, rotation, dilatation, special_conformal };

constexpr std::size_t index_of(GeneratorKind k) { return static_cast<std::size_t>(k); }
constexpr GeneratorKind generator_at(std::size_t i) { return static_cast<GeneratorKind>(i); }

constexpr std::array<GeneratorKind, kGeneratorCount> all_generator_kinds() {
  std::array<GeneratorKind, kGeneratorCount> out{};
  for (std::size_t i = 0; i < kGeneratorCount; ++i) out[i] = generator_at(i);
  return out;
}

GeneratorFamily family(GeneratorKind k);
std::string_view name(GeneratorKind k);
std::optional<GeneratorKind> parse_generator_kind(std::string_view text);

GeneratorKind translation(std::size_t nu);
GeneratorKind special_conformal(std::size_t nu);
// Requires nu < rho.
GeneratorKind rotation(std::size_t nu, std::size_t rho);
// Free index nu of P_nu or C_nu.
std::size_t vector_index(GeneratorKind k);
// Index pair (nu, rho), nu < rho, of J_{nu rho}.
std::pair<std::size_t, std::size_t> rotation_indices(GeneratorKind k);

// x^mu as a polynomial.
Polynomial coordinate(std::size_t mu);
// x_mu = eta_{mu mu} x^mu.
Polynomial lowered_coordinate(std::size_t mu);
// x_rho x^rho.
Polynomial coordinate_square();

bool near_zero(const Polynomial& p, double tol = kFloatTolerance);

// An infinitesimal deformation x^mu -> x^mu + eps delta^mu(x), stored as
// four upper-index polynomial components.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::array<Polynomial, 4> components, std::string label = {})
      : components_(std::move(components)), label_(std::move(label)) {}

  const Polynomial& operator[](std::size_t mu) const { return components_[mu]; }
  Polynomial& operator[](std::size_t mu) { return components_[mu]; }
  const std::array<Polynomial, 4>& components() const { return components_; }

  const std::string& label() const { return label_; }
  VectorField with_label(std::string label) const;

  // delta_mu = eta_{mu mu} delta^mu.
  Polynomial lowered(std::size_t mu) const;
  // Componentwise partial derivative d_mu delta^nu.
  VectorField derivative(std::size_t mu) const;

  int degree() const;
  bool is_zero() const;
  bool near_zero(double tol = kFloatTolerance) const;

  // delta^mu(x) at an upper-index point.
  FourVector evaluate(const FourVector& x) const;
  // d_mu delta^nu(x), returned as [mu][nu].
  std::array<std::array<Scalar, 4>, 4> jacobian(const FourVector& x) const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const Scalar& s);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const Scalar& s) { return a *= s; }
  friend VectorField operator*(const Scalar& s, VectorField a) { return a *= s; }
  VectorField operator-() const { return *this * Scalar(-1); }

  // Labels do not take part in equality.
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.components_ == b.components_; }

 private:
  std::array<Polynomial, 4> components_{};
  std::string label_;
};

// Symmetric rank-2 field with lower indices, 10 independent components.
class SymmetricTensorField {
 public:
  const Polynomial& operator()(std::size_t mu, std::size_t nu) const { return entries_[slot(mu, nu)]; }
  Polynomial& operator()(std::size_t mu, std::size_t nu) { return entries_[slot(mu, nu)]; }

  bool is_zero() const;
  friend bool operator==(const SymmetricTensorField&, const SymmetricTensorField&) = default;

 private:
  static std::size_t slot(std::size_t mu, std::size_t nu) {
    if (mu > nu) std::swap(mu, nu);
    return mu * 4 - mu * (mu + 1) / 2 + nu;
  }
  std::array<Polynomial, 10> entries_{};
};

class NotConformal : public Error {
 public:
  NotConformal(const std::string& what, SymmetricTensorField residual)
      : Error(what), residual_(std::move(residual)) {}
  // Symmetrized derivative minus its best eta-proportional part.
  const SymmetricTensorField& residual() const { return residual_; }

 private:
  SymmetricTensorField residual_;
};

class NotInSpan : public Error {
 public:
  NotInSpan(const std::string& what, VectorField residual) : Error(what), residual_(std::move(residual)) {}
  const VectorField& residual() const { return residual_; }

 private:
  VectorField residual_;
};

using BasisCoefficients = std::array<Scalar, kGeneratorCount>;

// delta_(a,b)^mu = delta_b^nu d_nu delta_a^mu - delta_a^nu d_nu delta_b^mu.
VectorField lie_commutator(const VectorField& a, const VectorField& b);

// -(d_mu delta_nu + d_nu delta_mu), the metric change per unit eps.
SymmetricTensorField metric_variation(const VectorField& a);

// lambda with metric_variation(a) = 2 lambda eta. Throws NotConformal.
Polynomial conformal_factor(const VectorField& a);

VectorField standard_generator(GeneratorKind k);

// Exact coefficients c_k with v = sum_k c_k standard_generator(k).
// Throws NotInSpan carrying the part of v outside the span.
BasisCoefficients decompose_in_basis(const VectorField& v);

VectorField combine_basis(const BasisCoefficients& coefficients);

}  // namespace qst
