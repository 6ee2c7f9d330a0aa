#include "qst/sampling.hpp"

#include <algorithm>
#include <array>

namespace qst {

Scalar Sampler::exact_rational() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
  int n = num(rng_);
  return Scalar::ratio(n, den(rng_));
}

Scalar Sampler::finish(Scalar v) const {
  return mode_ == EngineMode::exact ? v : Scalar::real(v.to_double());
}

Scalar Sampler::rational() { return finish(exact_rational()); }

Scalar Sampler::positive_rational() {
  std::uniform_int_distribution<int> num(1, 9), den(1, 3);
  int n = num(rng_);
  return finish(Scalar::ratio(n, den(rng_)));
}

FourVector Sampler::point() {
  std::array<Scalar, 4> c;
  for (auto& v : c) v = rational();
  return FourVector(c);
}

FourVector Sampler::null_momentum() {
  Scalar u = exact_rational(), v = exact_rational();
  Scalar r2 = u * u + v * v;
  Scalar norm = r2 + Scalar(1);
  std::array<Scalar, 3> n = {Scalar(2) * u / norm, Scalar(2) * v / norm, (r2 - Scalar(1)) / norm};
  std::array<std::size_t, 3> axes = {0, 1, 2};
  std::shuffle(axes.begin(), axes.end(), rng_);

  std::uniform_int_distribution<int> num(1, 9), den(1, 3);
  int sn = num(rng_);
  Scalar scale = Scalar::ratio(sn, den(rng_));
  std::array<Scalar, 4> p;
  p[0] = scale;
  for (std::size_t i = 0; i < 3; ++i) p[1 + axes[i]] = scale * n[i];
  if (mode_ == EngineMode::floating)
    for (auto& c : p) c = Scalar::real(c.to_double());
  return FourVector(p);
}

LightRay Sampler::ray() {
  FourVector origin = point();
  return LightRay(origin, null_momentum());
}

std::vector<LightRay> Sampler::rays_through(const FourVector& x, std::size_t count) {
  std::vector<FourVector> momenta;
  while (momenta.size() < count) {
    FourVector p = null_momentum();
    // Two future-pointing null vectors are parallel iff their product vanishes.
    bool parallel = std::any_of(momenta.begin(), momenta.end(),
                                [&](const FourVector& q) { return minkowski_dot(p, q).near_zero(); });
    if (!parallel) momenta.push_back(p);
  }
  std::vector<LightRay> rays;
  for (const auto& p : momenta) rays.push_back(LightRay(x + p * rational(), p));
  return rays;
}

}  // namespace qst
