#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qst/event_state.hpp"
#include "qst/sampling.hpp"

using namespace qst;
using GK = GeneratorKind;

namespace {

FourVector up(Scalar a, Scalar b, Scalar c, Scalar d) { return FourVector({a, b, c, d}); }

EventState symmetric_origin_state(Scalar alpha = Scalar(1)) {
  return EventState::from_rays({LightRay(up(0, 0, 0, 0), up(1, 1, 0, 0)), LightRay(up(0, 0, 0, 0), up(1, -1, 0, 0))},
                               alpha);
}

std::vector<LightRay> shifted(const std::vector<LightRay>& rays, const FourVector& d) {
  std::vector<LightRay> out;
  for (const auto& r : rays) out.emplace_back(r.origin() + d, r.momentum());
  return out;
}

}  // namespace

TEST_CASE("from_rays examples") {
  auto s = symmetric_origin_state();
  CHECK(s.total_momentum() == FourVector({2, 0, 0, 0}, IndexPosition::lower));
  CHECK(s.mass_squared() == Scalar(4));
  CHECK(s.dilatation() == Scalar(0));
  for (const auto& row : s.angular_momentum())
    for (const auto& v : row) CHECK(v.is_zero());

  LightRay r(up(0, 0, 0, 0), up(1, 1, 0, 0));
  CHECK_THROWS_AS(EventState::from_rays({r, r}), MasslessState);

  auto t = EventState::from_rays({LightRay(up(0, 0, 0, 0), up(1, 1, 0, 0)), LightRay(up(0, 0, 0, 0), up(2, 0, 2, 0))});
  CHECK(raise_index(t.total_momentum()) == up(3, 1, 2, 0));
  CHECK(t.mass_squared() == Scalar(4));
}

TEST_CASE("from_rays rejects malformed inputs") {
  LightRay r(up(0, 0, 0, 0), up(1, 1, 0, 0));
  CHECK_THROWS_AS(EventState::from_rays({r}), InvalidState);
  CHECK_THROWS_AS(EventState::from_rays({r, LightRay(up(0, 0, 0, 0), up(1, -1, 0, 0))}, Scalar(-1)), InvalidState);
}

TEST_CASE("extract_position examples") {
  CHECK(extract_position(symmetric_origin_state()) == up(0, 0, 0, 0));

  FourVector x = up(1, 2, 0, 0);
  auto s = EventState::from_rays({LightRay(x, up(1, 1, 0, 0)), LightRay(x, up(1, -1, 0, 0))});
  CHECK(s.dilatation() == Scalar(2));
  CHECK(s.angular_momentum()[0][1] == Scalar(4));
  CHECK(s.angular_momentum()[1][0] == Scalar(-4));
  CHECK(extract_position(s) == x);

  auto moved = EventState::from_rays(shifted(s.rays(), up(0, 0, 5, 0)));
  CHECK(extract_position(moved) == x + up(0, 0, 5, 0));
}

TEST_CASE("generators_from_position examples") {
  auto zero = generators_from_position(up(0, 0, 0, 0), up(2, 0, 0, 0));
  CHECK(zero.dilatation.is_zero());
  for (const auto& row : zero.angular)
    for (const auto& v : row) CHECK(v.is_zero());

  auto g = generators_from_position(up(1, 2, 0, 0), up(2, 0, 0, 0));
  CHECK(g.dilatation == Scalar(2));
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = mu + 1; nu < 4; ++nu)
      CHECK(g.angular[mu][nu] == Scalar(mu == 0 && nu == 1 ? 4 : 0));
}

TEST_CASE("position round trip through the generators") {
  Sampler s(41);
  int done = 0;
  while (done < 100) {
    FourVector x = s.point(), p = s.point();
    if (minkowski_dot(p, p).is_zero()) continue;
    auto g = generators_from_position(x, p);
    CHECK(extract_position(p, g.angular, g.dilatation) == x);
    CHECK(extract_position(lower_index(p), g.angular, g.dilatation) == x);
    ++done;
  }
  CHECK_THROWS_AS(extract_position(up(1, 1, 0, 0), AngularMomentum{}, Scalar(0)), MasslessState);
}

TEST_CASE("sampled intersecting states recover the intersection") {
  Sampler s(43);
  for (int i = 0; i < 100; ++i) {
    FourVector x = s.point();
    auto rays = s.rays_through(x, 2 + i % 2);
    auto state = EventState::from_rays(rays);
    CHECK(state.mass_squared() > Scalar(0));
    CHECK(extract_position(state) == x);
    CHECK(state.intersection_residual().is_zero());

    // totals do not depend on where along each ray the origin sits
    std::vector<LightRay> slid;
    for (const auto& r : rays) slid.push_back(r.reparametrized(s.rational()));
    auto other = EventState::from_rays(slid);
    CHECK(other.total_momentum() == state.total_momentum());
    CHECK(other.angular_momentum() == state.angular_momentum());
    CHECK(other.dilatation() == state.dilatation());
    CHECK(other.mass_squared() == state.mass_squared());
    CHECK(extract_position(other) == x);

    FourVector d = s.point();
    CHECK(extract_position(EventState::from_rays(shifted(rays, d))) == x + d);
  }
}

TEST_CASE("mass is positive for any pair of non-parallel rays") {
  Sampler s(47);
  for (int i = 0; i < 100; ++i) {
    LightRay a = s.ray(), b = s.ray();
    if (minkowski_dot(a.momentum(), b.momentum()).is_zero()) continue;
    CHECK(EventState::from_rays({a, b}).mass_squared() > Scalar(0));
  }
}

TEST_CASE("skew rays report a nonzero intersection residual") {
  auto s = EventState::from_rays({LightRay(up(0, 0, 0, 0), up(1, 1, 0, 0)), LightRay(up(0, 0, 1, 0), up(1, -1, 0, 0))});
  CHECK(s.intersection_residual() == Scalar(1));
  // The position is still defined, as the generator-weighted centre.
  CHECK(extract_position(s) == up(0, 0, Scalar::ratio(1, 2), 0));
}

TEST_CASE("quantum_correction examples") {
  auto s = symmetric_origin_state(Scalar(1));
  CHECK(quantum_correction(s) == FourVector({Scalar::ratio(1, 2), 0, 0, 0}, IndexPosition::lower));
  CHECK(quantum_correction(symmetric_origin_state(Scalar(0))).is_zero());
  CHECK(quantum_correction(symmetric_origin_state(Scalar(2))) == quantum_correction(s) * Scalar(2));
}

TEST_CASE("quantum correction scales as an inverse momentum") {
  Sampler s(53);
  for (int i = 0; i < 20; ++i) {
    auto rays = s.rays_through(s.point());
    Scalar k = s.positive_rational();
    std::vector<LightRay> scaled;
    for (const auto& r : rays) scaled.emplace_back(r.origin(), r.momentum() * k);
    Scalar alpha = Scalar::ratio(7, 3);
    CHECK(quantum_correction(EventState::from_rays(scaled, alpha)) ==
          quantum_correction(EventState::from_rays(rays, alpha)) * (Scalar(1) / k));
  }
}

TEST_CASE("decompose_generator examples") {
  auto s = symmetric_origin_state(Scalar(1));
  auto d = decompose_generator(s, GK::D);
  CHECK(d.classical.is_zero());
  CHECK(d.correction.is_zero());

  auto c0 = decompose_generator(s, GK::C0);
  CHECK(c0.classical.is_zero());
  CHECK(c0.correction == Scalar::ratio(1, 2));

  Sampler smp(59);
  for (int i = 0; i < 10; ++i) {
    auto state = EventState::from_rays(smp.rays_through(smp.point()), smp.positive_rational());
    for (auto k : all_generator_kinds()) {
      auto dec = decompose_generator(state, k);
      if (family(k) != GeneratorFamily::special_conformal) CHECK(dec.correction.is_zero());
    }
  }
}

TEST_CASE("classical part equals the summed ray values for linear generators") {
  Sampler s(61);
  for (int i = 0; i < 20; ++i) {
    auto state = EventState::from_rays(s.rays_through(s.point()));
    for (auto k : all_generator_kinds()) {
      if (family(k) == GeneratorFamily::special_conformal) continue;
      Scalar sum;
      for (const auto& r : state.rays()) sum += generator_value(r, standard_generator(k), 0);
      CHECK(decompose_generator(state, k).classical == sum);
    }
  }
}

TEST_CASE("float-mode states agree with exact ones within tolerance") {
  Sampler exact(67), approx(67, EngineMode::floating);
  for (int i = 0; i < 20; ++i) {
    FourVector xe = exact.point(), xf = approx.point();
    auto se = EventState::from_rays(exact.rays_through(xe));
    auto sf = EventState::from_rays(approx.rays_through(xf));
    CHECK_FALSE(sf.mass_squared().is_exact());
    CHECK(approx_equal(extract_position(sf), xf, 1e-9));
    CHECK(approx_equal(sf.mass_squared(), Scalar::real(se.mass_squared().to_double()), 1e-12));
  }
}
