#pragma once

#include <array>
#include <vector>

#include "qst/errors.hpp"
#include "qst/light_ray.hpp"
#include "qst/minkowski.hpp"
#include "qst/vector_field.hpp"

namespace qst {

class InvalidState : public Error {
 public:
  using Error::Error;
};

// Antisymmetric J^{mu nu}, upper indices.
using AngularMomentum = std::array<std::array<Scalar, 4>, 4>;

// A field state made of several light rays. Totals are computed once, at
// construction, by summing the per-ray generator values at sigma = 0.
class EventState {
 public:
  // Requires at least two rays and alpha >= 0. Throws MasslessState when
  // the total momentum is null (all momenta parallel).
  static EventState from_rays(std::vector<LightRay> rays, Scalar alpha = Scalar(1));

  const std::vector<LightRay>& rays() const { return rays_; }
  const Scalar& alpha() const { return alpha_; }

  // P_nu, lower index.
  const FourVector& total_momentum() const { return momentum_; }
  // J^{mu nu}, upper indices.
  const AngularMomentum& angular_momentum() const { return angular_; }
  const Scalar& dilatation() const { return dilatation_; }
  // M^2 = P_nu P^nu.
  const Scalar& mass_squared() const { return mass_squared_; }

  // The alpha P_nu / M^2 correction is exact only for two rays of identical
  // dispersion; for other ray counts it is applied as an approximation.
  bool correction_is_closed_form() const { return rays_.size() == 2; }

  // Largest over ray pairs of the minimal squared Euclidean separation of
  // the two lines. Zero when every pair meets.
  Scalar intersection_residual() const;

 private:
  EventState() = default;
  std::vector<LightRay> rays_;
  Scalar alpha_;
  FourVector momentum_{{}, IndexPosition::lower};
  AngularMomentum angular_{};
  Scalar dilatation_;
  Scalar mass_squared_;
};

// X^mu = (P^mu / M^2) D - (P_nu / M^2) J^{mu nu}.
FourVector extract_position(const EventState& s);
// Same inversion from bare totals; P may carry either index position.
// Throws MasslessState when P.P = 0.
FourVector extract_position(const FourVector& momentum, const AngularMomentum& angular, const Scalar& dilatation);

struct PositionGenerators {
  AngularMomentum angular{};
  Scalar dilatation;
};

// J^{mu nu} = P^mu X^nu - P^nu X^mu and D = P_mu X^mu.
PositionGenerators generators_from_position(const FourVector& position, const FourVector& momentum);

// C^_nu = alpha P_nu / M^2, lower index.
FourVector quantum_correction(const EventState& s);

struct GeneratorDecomposition {
  GeneratorKind kind;
  // P_mu delta^mu(X) at the extracted position.
  Scalar classical;
  // Zero for P, J and D; the matching component of quantum_correction for C.
  Scalar correction;

  Scalar total() const { return classical + correction; }
};

GeneratorDecomposition decompose_generator(const EventState& s, GeneratorKind k);

}  // namespace qst
