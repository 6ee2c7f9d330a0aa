#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qst/light_ray.hpp"
#include "qst/minkowski.hpp"
#include "qst/scalar.hpp"

namespace qst {

// Seeded generator of small rationals, null momenta and rays.
//
// Rationals have numerators in [-9, 9] and denominators in {1, 2, 3}.
// Null momenta come from inverse stereographic projection of a random
// rational point, which yields a rational unit 3-vector n and so an exactly
// null p = s (1, n). In float mode every value is rounded to double after
// being drawn exactly, so both modes see the same geometry.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, EngineMode mode = EngineMode::exact) : rng_(seed), mode_(mode) {}

  EngineMode mode() const { return mode_; }

  Scalar rational();
  Scalar positive_rational();
  FourVector point();
  // Future-pointing and null.
  FourVector null_momentum();
  LightRay ray();
  // Rays that all pass through x, with no two momenta parallel. Each
  // origin sits a random affine distance from x along its ray.
  std::vector<LightRay> rays_through(const FourVector& x, std::size_t count = 2);

 private:
  Scalar exact_rational();
  Scalar finish(Scalar v) const;

  std::mt19937_64 rng_;
  EngineMode mode_;
};

}  // namespace qst
