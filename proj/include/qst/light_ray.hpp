#pragma once

#include <optional>

#include "qst/errors.hpp"
#include "qst/minkowski.hpp"
#include "qst/vector_field.hpp"

namespace qst {

// Momentum of a ray is not null, or not future-pointing.
class InvalidRay : public Error {
 public:
  InvalidRay(const std::string& what, Scalar null_residual) : Error(what), null_residual_(std::move(null_residual)) {}
  // p.p of the offending momentum.
  const Scalar& null_residual() const { return null_residual_; }

 private:
  Scalar null_residual_;
};

// A dispersionless null trajectory x = origin + momentum * sigma.
class LightRay {
 public:
  // Checks that the momentum is null (exactly, or to tolerance in float
  // mode) and future-pointing. Throws InvalidRay.
  LightRay(FourVector origin, FourVector momentum);

  // Skips the null check. Used for rays that are null only to first order
  // in a small parameter, such as the output of infinitesimal_transform.
  static LightRay unchecked(FourVector origin, FourVector momentum);

  const FourVector& origin() const { return origin_; }
  const FourVector& momentum() const { return momentum_; }

  // The same line described from origin + momentum * s.
  LightRay reparametrized(const Scalar& s) const;
  // Point of the line closest (in the Euclidean sense of the coordinates) to
  // the coordinate origin. Display only.
  LightRay normalized() const;

  friend bool operator==(const LightRay&, const LightRay&) = default;

 private:
  LightRay() = default;
  FourVector origin_;
  FourVector momentum_;
};

FourVector propagate(const LightRay& r, const Scalar& sigma);

// p_nu delta^nu at propagate(r, sigma).
Scalar generator_value(const LightRay& r, const VectorField& a, const Scalar& sigma);

// generator_value(sigma) - generator_value(0). Throws NotConformal for
// non-conformal fields.
Scalar conservation_residual(const LightRay& r, const VectorField& a, const Scalar& sigma);

// p_nu dxi^mu d_mu delta^nu(origin): first-order change of the generator
// value when the ray origin moves by dxi.
Scalar translation_shift(const LightRay& r, const FourVector& dxi, const VectorField& a);

// Active first-order transport of the ray along the deformation a:
//   origin'   = origin + eps delta_a(origin)
//   p'_mu     = p_mu - eps p_nu d_mu delta_a^nu(origin)
// Generator values then change by eps * Delta_(b,a) + O(eps^2). The
// passive (frame) transformation is the same map with -eps.
// Throws NotConformal for non-conformal fields.
LightRay infinitesimal_transform(const LightRay& r, const VectorField& a, const Scalar& eps);

}  // namespace qst
