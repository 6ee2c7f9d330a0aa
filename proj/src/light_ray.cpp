#include "qst/light_ray.hpp"

#include <algorithm>
#include <cmath>

namespace qst {

namespace {

FourVector as_upper(const FourVector& v) {
  return v.position() == IndexPosition::upper ? v : raise_index(v);
}

bool is_null(const FourVector& p, const Scalar& residual) {
  if (residual.is_exact()) return residual.is_zero();
  double scale = std::max(1.0, p[0].to_double() * p[0].to_double());
  return std::abs(residual.to_double()) <= kFloatTolerance * scale;
}

}  // namespace

LightRay::LightRay(FourVector origin, FourVector momentum)
    : origin_(as_upper(origin)), momentum_(as_upper(momentum)) {
  Scalar residual = minkowski_dot(momentum_, momentum_);
  if (!is_null(momentum_, residual))
    throw InvalidRay("ray momentum is not null (p.p = " + residual.str() + ")", residual);
  if (!(momentum_[0] > Scalar(0))) throw InvalidRay("ray momentum must be future-pointing (p^0 > 0)", residual);
}

LightRay LightRay::unchecked(FourVector origin, FourVector momentum) {
  LightRay r;
  r.origin_ = as_upper(origin);
  r.momentum_ = as_upper(momentum);
  return r;
}

LightRay LightRay::reparametrized(const Scalar& s) const { return unchecked(propagate(*this, s), momentum_); }

LightRay LightRay::normalized() const {
  Scalar pp, xp;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    pp += momentum_[mu] * momentum_[mu];
    xp += origin_[mu] * momentum_[mu];
  }
  return reparametrized(-xp / pp);
}

FourVector propagate(const LightRay& r, const Scalar& sigma) { return r.origin() + r.momentum() * sigma; }

Scalar generator_value(const LightRay& r, const VectorField& a, const Scalar& sigma) {
  return minkowski_dot(r.momentum(), a.evaluate(propagate(r, sigma)));
}

Scalar conservation_residual(const LightRay& r, const VectorField& a, const Scalar& sigma) {
  conformal_factor(a);
  return generator_value(r, a, sigma) - generator_value(r, a, Scalar(0));
}

Scalar translation_shift(const LightRay& r, const FourVector& dxi, const VectorField& a) {
  FourVector d = as_upper(dxi);
  FourVector p_low = lower_index(r.momentum());
  auto jac = a.jacobian(r.origin());
  Scalar sum;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    if (d[mu].is_zero()) continue;
    for (std::size_t nu = 0; nu < 4; ++nu) sum += p_low[nu] * d[mu] * jac[mu][nu];
  }
  return sum;
}

LightRay infinitesimal_transform(const LightRay& r, const VectorField& a, const Scalar& eps) {
  conformal_factor(a);
  FourVector origin = r.origin() + a.evaluate(r.origin()) * eps;

  FourVector p_low = lower_index(r.momentum());
  auto jac = a.jacobian(r.origin());
  FourVector shifted = p_low;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Scalar change;
    for (std::size_t nu = 0; nu < 4; ++nu) change += p_low[nu] * jac[mu][nu];
    shifted[mu] -= eps * change;
  }
  return LightRay::unchecked(origin, raise_index(shifted));
}

}  // namespace qst
