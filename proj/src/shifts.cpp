#include "qst/shifts.hpp"

namespace qst {

PhaseFunction classical_phase_function(const VectorField& field) {
  PhaseFunction out;
  for (std::size_t mu = 0; mu < 4; ++mu)
    if (!field[mu].is_zero()) out += PhaseFunction::momentum(mu) * PhaseFunction::lift(field[mu]);
  return out;
}

PhaseFunction correction_phase_function(GeneratorKind k, const Scalar& alpha) {
  if (family(k) != GeneratorFamily::special_conformal || alpha.is_zero()) return {};
  return PhaseFunction::momentum(vector_index(k)) * PhaseFunction::inverse_mass_squared(1) * alpha;
}

PhaseFunction generator_as_phase_function(GeneratorKind k, const Scalar& alpha) {
  return classical_phase_function(standard_generator(k)) + correction_phase_function(k, alpha);
}

PhaseVector momentum_shift(GeneratorKind k, const Scalar& alpha) {
  PhaseFunction delta = generator_as_phase_function(k, alpha);
  PhaseVector out;
  for (std::size_t mu = 0; mu < 4; ++mu) out[mu] = poisson_bracket(delta, PhaseFunction::momentum(mu));
  return out;
}

PhaseVector position_shift(GeneratorKind k, const Scalar& alpha) { return shift_report(k, alpha).position(); }

PhaseVector ShiftReport::position() const {
  PhaseVector out;
  for (std::size_t mu = 0; mu < 4; ++mu) out[mu] = position_classical[mu] + position_correction[mu];
  return out;
}

bool ShiftReport::has_correction() const {
  for (const auto& f : position_correction)
    if (!f.is_zero()) return true;
  return false;
}

ShiftReport shift_report(GeneratorKind k, const Scalar& alpha) {
  ShiftReport r{k, alpha, momentum_shift(k, alpha), {}, {}};
  PhaseFunction classical = classical_phase_function(standard_generator(k));
  PhaseFunction correction = correction_phase_function(k, alpha);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    PhaseFunction x = PhaseFunction::position(mu);
    r.position_classical[mu] = poisson_bracket(classical, x);
    r.position_correction[mu] = poisson_bracket(correction, x);
  }
  return r;
}

bool ShiftGradientConsistency::holds() const {
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu)
      if (!sides_residual[mu][nu].is_zero() || !expected_residual[mu][nu].is_zero()) return false;
  return true;
}

ShiftGradientConsistency shift_gradient_consistency(GeneratorKind k, const Scalar& alpha) {
  return shift_gradient_consistency(generator_as_phase_function(k, alpha), standard_generator(k));
}

ShiftGradientConsistency shift_gradient_consistency(const PhaseFunction& generator, const VectorField& field) {
  PhaseVector x_shift, p_shift_upper;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    x_shift[mu] = poisson_bracket(generator, PhaseFunction::position(mu));
    p_shift_upper[mu] = poisson_bracket(generator, PhaseFunction::momentum_upper(mu));
  }

  ShiftGradientConsistency c;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      c.position_side[mu][nu] = -x_shift[nu].d_position_lower(mu);
      c.momentum_side[mu][nu] = p_shift_upper[mu].d_momentum(nu);
      c.expected[mu][nu] = PhaseFunction::lift(field[nu].derivative(mu)) * Scalar(eta(mu));
      c.sides_residual[mu][nu] = c.position_side[mu][nu] - c.momentum_side[mu][nu];
      c.expected_residual[mu][nu] = c.position_side[mu][nu] - c.expected[mu][nu];
    }
  return c;
}

ShiftConformalFactor conformal_factor_from_shifts(GeneratorKind k, const Scalar& alpha) {
  return conformal_factor_from_shifts(generator_as_phase_function(k, alpha));
}

namespace {

// lambda with sym = sign * 2 eta lambda, or NotProportional.
PhaseFunction solve_proportional(const PhaseMatrix& sym, int sign, const char* side) {
  PhaseFunction lambda = sym[0][0] * Scalar::ratio(sign, 2);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      PhaseFunction expected = mu == nu ? lambda * Scalar(2 * sign * eta(mu)) : PhaseFunction();
      if (!(sym[mu][nu] - expected).is_zero())
        throw NotProportional(std::string(side) + " shift gradient is not proportional to eta at (" +
                              std::to_string(mu) + "," + std::to_string(nu) + ")");
    }
  return lambda;
}

}  // namespace

ShiftConformalFactor conformal_factor_from_shifts(const PhaseFunction& generator) {
  PhaseVector x_shift, p_shift_upper;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    x_shift[mu] = poisson_bracket(generator, PhaseFunction::position(mu));
    p_shift_upper[mu] = poisson_bracket(generator, PhaseFunction::momentum_upper(mu));
  }
  PhaseMatrix x_sym, p_sym;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      x_sym[mu][nu] = x_shift[nu].d_position_lower(mu) + x_shift[mu].d_position_lower(nu);
      p_sym[mu][nu] = p_shift_upper[nu].d_momentum(mu) + p_shift_upper[mu].d_momentum(nu);
    }
  ShiftConformalFactor out{solve_proportional(x_sym, 1, "position"), solve_proportional(p_sym, -1, "momentum")};
  if (!(out.position_side - out.momentum_side).is_zero())
    throw NotProportional("position-side and momentum-side conformal factors disagree");
  return out;
}

}  // namespace qst
