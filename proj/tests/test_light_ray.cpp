#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qst/light_ray.hpp"
#include "qst/sampling.hpp"

using namespace qst;
using GK = GeneratorKind;

namespace {

FourVector up(Scalar a, Scalar b, Scalar c, Scalar d) { return FourVector({a, b, c, d}); }
VectorField gen(GK k) { return standard_generator(k); }

// Delta for C_nu written out by hand: 2 x_nu (p.x) - p_nu (x.x).
Scalar special_conformal_value(const FourVector& p, const FourVector& x, std::size_t nu) {
  Scalar x_low = x[nu] * Scalar(eta(nu));
  Scalar p_low = p[nu] * Scalar(eta(nu));
  return Scalar(2) * x_low * minkowski_dot(p, x) - p_low * minkowski_dot(x, x);
}

}  // namespace

TEST_CASE("ray construction validates the momentum") {
  CHECK_NOTHROW(LightRay(up(0, 0, 0, 0), up(1, 1, 0, 0)));
  CHECK_THROWS_AS(LightRay(up(0, 0, 0, 0), up(1, 2, 0, 0)), InvalidRay);
  CHECK_THROWS_AS(LightRay(up(0, 0, 0, 0), up(-1, 1, 0, 0)), InvalidRay);
  CHECK_THROWS_AS(LightRay(up(0, 0, 0, 0), up(0, 0, 0, 0)), InvalidRay);
  try {
    LightRay(up(0, 0, 0, 0), up(3, 1, 2, 0));
  } catch (const InvalidRay& e) {
    CHECK(e.null_residual() == Scalar(4));
  }
}

TEST_CASE("propagate examples") {
  LightRay r(up(0, 0, 0, 0), up(1, 1, 0, 0));
  CHECK(propagate(r, Scalar(2)) == up(2, 2, 0, 0));
  CHECK(propagate(r, Scalar(0)) == r.origin());
  LightRay s(up(1, 0, 0, 0), up(1, 0, 0, 1));
  CHECK(propagate(s, Scalar(3)) == up(4, 0, 0, 3));
}

TEST_CASE("generator_value examples") {
  LightRay r(up(0, 0, 0, 0), up(1, 1, 0, 0));
  CHECK(generator_value(r, gen(GK::D), Scalar(0)) == Scalar(0));
  for (int sigma = -3; sigma <= 3; ++sigma) CHECK(generator_value(r, gen(GK::P0), Scalar(sigma)) == Scalar(1));
  CHECK(generator_value(r, gen(GK::C0), Scalar(5)) == Scalar(0));
}

TEST_CASE("conservation_residual examples") {
  Sampler s(5);
  for (int i = 0; i < 5; ++i) CHECK(conservation_residual(s.ray(), gen(GK::D), Scalar(7)).is_zero());

  LightRay r(up(1, 2, 0, 0), up(5, 3, 4, 0));
  Scalar sigma = Scalar::ratio(11, 3);
  CHECK(conservation_residual(r, gen(GK::C2), sigma) == Scalar(0));
  // hand evaluation at both ends
  Scalar start = special_conformal_value(r.momentum(), r.origin(), 2);
  Scalar end = special_conformal_value(r.momentum(), propagate(r, sigma), 2);
  CHECK(start == end);
  CHECK(generator_value(r, gen(GK::C2), sigma) == end);

  VectorField bad({coordinate(1), Polynomial(), Polynomial(), Polynomial()});
  CHECK_THROWS_AS(conservation_residual(r, bad, Scalar(1)), NotConformal);
}

TEST_CASE("conservation holds on sampled rays for every generator") {
  Sampler s(99);
  for (int i = 0; i < 100; ++i) {
    LightRay r = s.ray();
    Scalar sigma = s.rational();
    for (auto k : all_generator_kinds()) CHECK(conservation_residual(r, gen(k), sigma).is_zero());
  }
}

TEST_CASE("translation_shift examples") {
  LightRay r(up(0, 0, 0, 0), up(1, 1, 0, 0));
  CHECK(translation_shift(r, up(1, 0, 0, 0), gen(GK::D)) == Scalar(1));

  Sampler s(17);
  for (int i = 0; i < 30; ++i) {
    LightRay ray = s.ray();
    FourVector d = s.point();
    for (auto k : all_generator_kinds()) {
      CHECK(translation_shift(ray, ray.momentum() * s.rational(), gen(k)).is_zero());
      if (family(k) == GeneratorFamily::translation) CHECK(translation_shift(ray, d, gen(k)).is_zero());
    }
  }
}

TEST_CASE("translation_shift matches a central difference") {
  // Generator values are at most quadratic in the origin, so the central
  // difference quotient is exact.
  Sampler s(23);
  for (int i = 0; i < 30; ++i) {
    LightRay ray = s.ray();
    FourVector d = s.point();
    Scalar t = Scalar::ratio(1, 7);
    for (auto k : all_generator_kinds()) {
      LightRay plus = LightRay::unchecked(ray.origin() + d * t, ray.momentum());
      LightRay minus = LightRay::unchecked(ray.origin() - d * t, ray.momentum());
      Scalar quotient = (generator_value(plus, gen(k), 0) - generator_value(minus, gen(k), 0)) / (Scalar(2) * t);
      CHECK(translation_shift(ray, d, gen(k)) == quotient);
    }
  }
}

TEST_CASE("infinitesimal_transform examples") {
  LightRay r(up(1, 2, 3, 4), up(5, 3, 4, 0));
  Scalar eps = Scalar::ratio(1, 100);

  LightRay moved = infinitesimal_transform(r, gen(GK::P2), eps);
  CHECK(moved.origin() == r.origin() + up(0, 0, 1, 0) * eps);
  CHECK(moved.momentum() == r.momentum());

  LightRay scaled = infinitesimal_transform(r, gen(GK::D), eps);
  CHECK(scaled.origin() == r.origin() * (Scalar(1) + eps));
  CHECK(scaled.momentum() == r.momentum() * (Scalar(1) - eps));

  LightRay through_origin(up(0, 0, 0, 0), up(5, 3, 4, 0));
  CHECK(infinitesimal_transform(through_origin, gen(GK::C0), eps) == through_origin);

  VectorField bad({coordinate(1), Polynomial(), Polynomial(), Polynomial()});
  CHECK_THROWS_AS(infinitesimal_transform(r, bad, eps), NotConformal);
}

TEST_CASE("transformed momentum stays null to first order") {
  Sampler s(31);
  for (int i = 0; i < 40; ++i) {
    LightRay r = s.ray();
    for (auto k : all_generator_kinds()) {
      // p'.p' is quadratic in eps: f(1) - f(-1) = 4 * (eps coefficient).
      auto square = [&](int e) {
        FourVector p = infinitesimal_transform(r, gen(k), Scalar(e)).momentum();
        return minkowski_dot(p, p);
      };
      CHECK((square(1) - square(-1)).is_zero());
    }
  }
}

TEST_CASE("generator values move by the Lie commutator to first order") {
  Sampler s(37);
  for (int i = 0; i < 15; ++i) {
    LightRay r = s.ray();
    for (auto a : all_generator_kinds())
      for (auto b : all_generator_kinds()) {
        Scalar expected = generator_value(r, lie_commutator(gen(b), gen(a)), 0);
        // residual(eps) = c1 eps + c2 eps^2 + c3 eps^3. The odd part at eps = 1
        // and 2 gives c1 + c3 and 2 c1 + 8 c3.
        auto residual = [&](int e) {
          return generator_value(infinitesimal_transform(r, gen(a), Scalar(e)), gen(b), 0) -
                 generator_value(r, gen(b), 0) - Scalar(e) * expected;
        };
        Scalar odd1 = (residual(1) - residual(-1)) / Scalar(2);
        Scalar odd2 = (residual(2) - residual(-2)) / Scalar(2);
        Scalar c1 = (Scalar(8) * odd1 - odd2) / Scalar(6);
        CHECK(c1.is_zero());
      }
  }
}

TEST_CASE("normalized ray is the same line") {
  LightRay r(up(3, 4, 0, 0), up(1, 1, 0, 0));
  LightRay n = r.normalized();
  CHECK(n.momentum() == r.momentum());
  FourVector d = n.origin() - r.origin();
  CHECK(d[0] == d[1]);
  CHECK(d[0] * Scalar(2) == Scalar(-7));
}
