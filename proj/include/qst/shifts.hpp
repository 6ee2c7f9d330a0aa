#pragma once

#include <array>

#include "qst/errors.hpp"
#include "qst/phase_function.hpp"
#include "qst/vector_field.hpp"

namespace qst {

using PhaseVector = std::array<PhaseFunction, 4>;
using PhaseMatrix = std::array<std::array<PhaseFunction, 4>, 4>;

// The symmetrized shift gradient is not proportional to eta.
class NotProportional : public Error {
 public:
  using Error::Error;
};

// P_mu delta^mu(X) for an arbitrary deformation.
PhaseFunction classical_phase_function(const VectorField& field);

// alpha P_nu / M^2 for C_nu, zero for every other kind.
PhaseFunction correction_phase_function(GeneratorKind k, const Scalar& alpha);

// P_mu delta_k^mu(X) plus the correction above.
PhaseFunction generator_as_phase_function(GeneratorKind k, const Scalar& alpha);

// (Delta_k, P_mu), lower mu.
PhaseVector momentum_shift(GeneratorKind k, const Scalar& alpha);

// (Delta_k, X^mu).
PhaseVector position_shift(GeneratorKind k, const Scalar& alpha);

struct ShiftReport {
  GeneratorKind kind;
  Scalar alpha;
  PhaseVector momentum;
  // (P delta(X), X^mu) and (Delta^, X^mu); they add up to position_shift.
  PhaseVector position_classical;
  PhaseVector position_correction;

  PhaseVector position() const;
  bool has_correction() const;
};

ShiftReport shift_report(GeneratorKind k, const Scalar& alpha);

// Both sides of the shift-gradient identity
//   -d/dX_mu (Delta, X^nu) = d/dP_nu (Delta, P^mu) = d^mu delta^nu(X)
// as [mu][nu] matrices, with their differences.
struct ShiftGradientConsistency {
  PhaseMatrix position_side;
  PhaseMatrix momentum_side;
  PhaseMatrix expected;
  // position_side - momentum_side.
  PhaseMatrix sides_residual;
  // position_side - expected.
  PhaseMatrix expected_residual;

  bool holds() const;
};

ShiftGradientConsistency shift_gradient_consistency(GeneratorKind k, const Scalar& alpha);
// General form for a generator phase function and its deformation.
ShiftGradientConsistency shift_gradient_consistency(const PhaseFunction& generator, const VectorField& field);

struct ShiftConformalFactor {
  // lambda from d/dX_mu (Delta, X^nu) + (mu <-> nu) = 2 eta^{mu nu} lambda.
  PhaseFunction position_side;
  // lambda from d/dP_mu (Delta, P^nu) + (mu <-> nu) = -2 eta^{mu nu} lambda.
  PhaseFunction momentum_side;
};

// Throws NotProportional when either symmetrization is not proportional
// to eta, or the two sides disagree.
ShiftConformalFactor conformal_factor_from_shifts(GeneratorKind k, const Scalar& alpha);
ShiftConformalFactor conformal_factor_from_shifts(const PhaseFunction& generator);

}  // namespace qst
