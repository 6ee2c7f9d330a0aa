#include "qst/event_state.hpp"

#include <algorithm>

namespace qst {

namespace {

Scalar euclidean_dot(const FourVector& a, const FourVector& b) {
  Scalar s;
  for (std::size_t mu = 0; mu < 4; ++mu) s += a[mu] * b[mu];
  return s;
}

// Minimal squared Euclidean distance between lines a + p s and b + q t.
Scalar line_separation(const LightRay& first, const LightRay& second) {
  FourVector w = first.origin() - second.origin();
  const FourVector& p = first.momentum();
  const FourVector& q = second.momentum();
  Scalar a = euclidean_dot(p, p), b = euclidean_dot(p, q), c = euclidean_dot(q, q);
  Scalar d = euclidean_dot(w, p), e = euclidean_dot(w, q);
  Scalar det = a * c - b * b;
  if (det.near_zero()) {
    // Parallel lines: distance from b to the line through a.
    FourVector perp = w - p * (d / a);
    return euclidean_dot(perp, perp);
  }
  Scalar s = (b * e - c * d) / det;
  Scalar t = (a * e - b * d) / det;
  FourVector gap = w + p * s - q * t;
  return euclidean_dot(gap, gap);
}

}  // namespace

EventState EventState::from_rays(std::vector<LightRay> rays, Scalar alpha) {
  if (rays.size() < 2) throw InvalidState("an event state needs at least two rays");
  if (alpha.sign() < 0) throw InvalidState("Casimir parameter alpha must be non-negative");

  EventState s;
  s.alpha_ = std::move(alpha);

  FourVector total = FourVector::zero(IndexPosition::upper);
  for (const auto& r : rays) total += r.momentum();
  s.momentum_ = lower_index(total);
  s.mass_squared_ = minkowski_dot(total, total);
  if (s.mass_squared_.near_zero())
    throw MasslessState("total momentum is null: all rays propagate in one direction");

  VectorField dilatation = standard_generator(GeneratorKind::D);
  for (const auto& r : rays) s.dilatation_ += generator_value(r, dilatation, Scalar(0));

  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = mu + 1; nu < 4; ++nu) {
      VectorField rot = standard_generator(rotation(mu, nu));
      Scalar lower;
      for (const auto& r : rays) lower += generator_value(r, rot, Scalar(0));
      Scalar upper = lower * Scalar(eta(mu) * eta(nu));
      s.angular_[mu][nu] = upper;
      s.angular_[nu][mu] = -upper;
    }

  s.rays_ = std::move(rays);
  return s;
}

Scalar EventState::intersection_residual() const {
  Scalar worst;
  for (std::size_t i = 0; i < rays_.size(); ++i)
    for (std::size_t j = i + 1; j < rays_.size(); ++j) worst = std::max(worst, line_separation(rays_[i], rays_[j]));
  return worst;
}

FourVector extract_position(const EventState& s) {
  return extract_position(s.total_momentum(), s.angular_momentum(), s.dilatation());
}

FourVector extract_position(const FourVector& momentum, const AngularMomentum& angular, const Scalar& dilatation) {
  FourVector lower = momentum.position() == IndexPosition::lower ? momentum : lower_index(momentum);
  FourVector upper = raise_index(lower);
  Scalar m2 = minkowski_dot(upper, lower);
  if (m2.near_zero()) throw MasslessState("position is undefined for a null total momentum");

  FourVector x;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Scalar v = upper[mu] * dilatation;
    for (std::size_t nu = 0; nu < 4; ++nu) v -= lower[nu] * angular[mu][nu];
    x[mu] = v / m2;
  }
  return x;
}

PositionGenerators generators_from_position(const FourVector& position, const FourVector& momentum) {
  FourVector x = position.position() == IndexPosition::upper ? position : raise_index(position);
  FourVector p = momentum.position() == IndexPosition::upper ? momentum : raise_index(momentum);
  PositionGenerators g;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) g.angular[mu][nu] = p[mu] * x[nu] - p[nu] * x[mu];
  g.dilatation = minkowski_dot(p, x);
  return g;
}

FourVector quantum_correction(const EventState& s) { return s.total_momentum() * (s.alpha() / s.mass_squared()); }

GeneratorDecomposition decompose_generator(const EventState& s, GeneratorKind k) {
  FourVector x = extract_position(s);
  VectorField field = standard_generator(k);
  GeneratorDecomposition out{k, minkowski_dot(raise_index(s.total_momentum()), field.evaluate(x)), Scalar(0)};
  if (family(k) == GeneratorFamily::special_conformal) out.correction = quantum_correction(s)[vector_index(k)];
  return out;
}

}  // namespace qst
