#include "qst/phase_function.hpp"

#include <sstream>

namespace qst {

namespace {

constexpr std::size_t kMomentumOffset = 4;

PhasePolynomial momentum_variable(std::size_t mu) { return PhasePolynomial::variable(kMomentumOffset + mu); }

void check_cap(unsigned k) {
  if (k > kMaxInverseMassPower)
    throw DenominatorCapExceeded("phase function needs (M^2)^-" + std::to_string(k) + ", above the cap of " +
                                 std::to_string(kMaxInverseMassPower));
}

}  // namespace

PhaseFunction::PhaseFunction(PhasePolynomial numerator, unsigned inverse_mass_power) {
  add_part(inverse_mass_power, numerator);
}

void PhaseFunction::add_part(unsigned k, const PhasePolynomial& p) {
  if (p.is_zero()) return;
  check_cap(k);
  auto& slot = parts_[k];
  slot += p;
  if (slot.is_zero()) parts_.erase(k);
}

PhaseFunction PhaseFunction::position(std::size_t mu) { return PhaseFunction(PhasePolynomial::variable(mu)); }

PhaseFunction PhaseFunction::momentum(std::size_t mu) { return PhaseFunction(momentum_variable(mu)); }

PhaseFunction PhaseFunction::momentum_upper(std::size_t mu) { return momentum(mu) * Scalar(eta(mu)); }

PhasePolynomial PhaseFunction::mass_squared_polynomial() {
  PhasePolynomial m2;
  for (std::size_t mu = 0; mu < 4; ++mu) m2 += momentum_variable(mu) * momentum_variable(mu) * Scalar(eta(mu));
  return m2;
}

PhaseFunction PhaseFunction::inverse_mass_squared(unsigned k) { return PhaseFunction(PhasePolynomial(Scalar(1)), k); }

PhaseFunction PhaseFunction::lift(const Polynomial& p) {
  PhasePolynomial out;
  for (const auto& [e, c] : p.terms()) {
    PhasePolynomial::Exponents lifted{};
    for (std::size_t mu = 0; mu < 4; ++mu) lifted[mu] = e[mu];
    out.add_term(lifted, c);
  }
  return PhaseFunction(out);
}

PhasePolynomial PhaseFunction::cleared(unsigned power) const {
  if (power < max_inverse_power()) throw std::invalid_argument("clearing power below the largest denominator");
  PhasePolynomial m2 = mass_squared_polynomial();
  PhasePolynomial out;
  for (const auto& [k, p] : parts_) out += p * pow(m2, power - k);
  return out;
}

bool PhaseFunction::is_zero() const {
  if (parts_.empty()) return true;
  // A single part with a nonzero numerator cannot vanish.
  if (parts_.size() == 1) return false;
  return cleared(max_inverse_power()).is_zero();
}

bool PhaseFunction::depends_on_position() const {
  for (const auto& [k, p] : parts_)
    for (const auto& [e, c] : p.terms())
      for (std::size_t mu = 0; mu < 4; ++mu)
        if (e[mu]) return true;
  return false;
}

PhaseFunction& PhaseFunction::operator+=(const PhaseFunction& o) {
  for (const auto& [k, p] : o.parts_) add_part(k, p);
  return *this;
}

PhaseFunction& PhaseFunction::operator-=(const PhaseFunction& o) {
  for (const auto& [k, p] : o.parts_) add_part(k, -p);
  return *this;
}

PhaseFunction& PhaseFunction::operator*=(const Scalar& s) {
  Parts scaled;
  for (auto& [k, p] : parts_) {
    PhasePolynomial q = p * s;
    if (!q.is_zero()) scaled.emplace(k, std::move(q));
  }
  parts_ = std::move(scaled);
  return *this;
}

PhaseFunction operator*(const PhaseFunction& a, const PhaseFunction& b) {
  PhaseFunction out;
  for (const auto& [ka, pa] : a.parts_)
    for (const auto& [kb, pb] : b.parts_) out.add_part(ka + kb, pa * pb);
  return out;
}

PhaseFunction PhaseFunction::d_position(std::size_t mu) const {
  PhaseFunction out;
  for (const auto& [k, p] : parts_) out.add_part(k, p.derivative(mu));
  return out;
}

PhaseFunction PhaseFunction::d_momentum(std::size_t mu) const {
  PhaseFunction out;
  PhasePolynomial p_upper = momentum_variable(mu) * Scalar(eta(mu));
  for (const auto& [k, p] : parts_) {
    out.add_part(k, p.derivative(kMomentumOffset + mu));
    if (k > 0) out.add_part(k + 1, p * p_upper * Scalar(-2 * static_cast<int>(k)));
  }
  return out;
}

Scalar PhaseFunction::evaluate(const FourVector& position, const FourVector& momentum) const {
  FourVector x = position.position() == IndexPosition::upper ? position : raise_index(position);
  FourVector p = momentum.position() == IndexPosition::lower ? momentum : lower_index(momentum);
  Scalar m2 = minkowski_dot(p, p);
  if (m2.near_zero()) throw MasslessState("phase function evaluated at a null total momentum");

  std::array<Scalar, 8> point;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    point[mu] = x[mu];
    point[kMomentumOffset + mu] = p[mu];
  }
  Scalar sum;
  for (const auto& [k, poly] : parts_) sum += poly.evaluate(point) / pow(m2, k);
  return sum;
}

std::string PhaseFunction::str() const {
  if (parts_.empty()) return "0";
  static constexpr const char* kVars[8] = {"X0", "X1", "X2", "X3", "P0", "P1", "P2", "P3"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, poly] : parts_) {
    for (const auto& [e, c] : poly.terms()) {
      Scalar coef = c;
      if (!first) {
        os << (coef.sign() < 0 ? " - " : " + ");
        coef = coef.abs();
      }
      first = false;
      bool bare = true;
      std::ostringstream mono;
      for (std::size_t i = 0; i < 8; ++i) {
        if (!e[i]) continue;
        mono << (bare ? "" : "*") << kVars[i];
        if (e[i] > 1) mono << '^' << e[i];
        bare = false;
      }
      if (k) {
        mono << (bare ? "" : "*") << "M2^-" << k;
        bare = false;
      }
      if (bare) {
        os << coef;
      } else {
        if (coef == Scalar(-1)) os << '-';
        else if (coef != Scalar(1)) os << coef << '*';
        os << mono.str();
      }
    }
  }
  return os.str();
}

PhaseFunction poisson_bracket(const PhaseFunction& f, const PhaseFunction& g) {
  PhaseFunction out;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    PhaseFunction fx = f.d_position(mu);
    PhaseFunction gp = g.d_momentum(mu);
    if (!fx.is_zero() && !gp.is_zero()) out += fx * gp;
    PhaseFunction fp = f.d_momentum(mu);
    PhaseFunction gx = g.d_position(mu);
    if (!fp.is_zero() && !gx.is_zero()) out -= fp * gx;
  }
  return out;
}

}  // namespace qst
