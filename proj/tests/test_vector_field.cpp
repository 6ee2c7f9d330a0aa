#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qst/vector_field.hpp"

using namespace qst;
using GK = GeneratorKind;

namespace {

VectorField gen(GK k) { return standard_generator(k); }

// J_{nu rho} for any index order; J_{nu nu} = 0.
VectorField rotation_field(std::size_t nu, std::size_t rho) {
  if (nu == rho) return {};
  if (nu < rho) return gen(rotation(nu, rho));
  return -gen(rotation(rho, nu));
}

Polynomial x(std::size_t mu) { return coordinate(mu); }

}  // namespace

TEST_CASE("generator names round trip") {
  for (auto k : all_generator_kinds()) CHECK(parse_generator_kind(name(k)) == k);
  CHECK_FALSE(parse_generator_kind("J21").has_value());
}

TEST_CASE("standard generators in coordinate components") {
  CHECK(gen(GK::D) == VectorField({x(0), x(1), x(2), x(3)}));
  CHECK(gen(GK::J12) == VectorField({Polynomial(), -x(2), x(1), Polynomial()}));
  CHECK(gen(GK::J01) == VectorField({-x(1), -x(0), Polynomial(), Polynomial()}));
  Polynomial c00 = x(0) * x(0) + x(1) * x(1) + x(2) * x(2) + x(3) * x(3);
  CHECK(gen(GK::C0)[0] == c00);
  CHECK(gen(GK::C0)[1] == x(0) * x(1) * Scalar(2));
  CHECK(gen(GK::P2) == VectorField({Polynomial(), Polynomial(), Polynomial(Scalar(1)), Polynomial()}));
  for (auto k : all_generator_kinds()) CHECK(gen(k).degree() <= 2);
}

TEST_CASE("basis is linearly independent") { CHECK(oracle::basis_rank() == kGeneratorCount); }

TEST_CASE("lie_commutator examples") {
  CHECK(lie_commutator(gen(GK::D), gen(GK::P0)) == gen(GK::P0));
  CHECK(lie_commutator(gen(GK::P0), gen(GK::P1)).is_zero());
  for (std::size_t nu = 0; nu < 4; ++nu)
    for (std::size_t rho = 0; rho < 4; ++rho) {
      VectorField expected = gen(GK::D) * Scalar(2 * eta(nu, rho)) - rotation_field(nu, rho) * Scalar(2);
      CHECK(lie_commutator(gen(special_conformal(nu)), gen(translation(rho))) == expected);
    }
}

TEST_CASE("lie_commutator agrees with the composition oracle") {
  for (auto a : all_generator_kinds())
    for (auto b : all_generator_kinds())
      CHECK(lie_commutator(gen(a), gen(b)) == oracle::commutator_by_composition(gen(a), gen(b)));

  oracle::Sampler s(7);
  for (int i = 0; i < 20; ++i) {
    auto a = s.field(3), b = s.field(2);
    CHECK(lie_commutator(a, b) == oracle::commutator_by_composition(a, b));
  }
}

TEST_CASE("antisymmetry on random fields up to degree 3") {
  oracle::Sampler s(11);
  for (int i = 0; i < 50; ++i) {
    auto a = s.field(3), b = s.field(3);
    CHECK(lie_commutator(a, b) == -lie_commutator(b, a));
  }
}

TEST_CASE("closure and Jacobi over the conformal basis") {
  int pairs = 0, triples = 0;
  for (std::size_t i = 0; i < kGeneratorCount; ++i)
    for (std::size_t j = i + 1; j < kGeneratorCount; ++j) {
      auto c = lie_commutator(gen(generator_at(i)), gen(generator_at(j)));
      auto coeffs = decompose_in_basis(c);
      CHECK(combine_basis(coeffs) == c);
      auto reference = oracle::solve_in_basis(c);
      REQUIRE(reference.has_value());
      CHECK(*reference == coeffs);
      ++pairs;
      for (std::size_t k = j + 1; k < kGeneratorCount; ++k) {
        auto a = gen(generator_at(i)), b = gen(generator_at(j)), d = gen(generator_at(k));
        auto jac = lie_commutator(a, lie_commutator(b, d)) + lie_commutator(b, lie_commutator(d, a)) +
                   lie_commutator(d, lie_commutator(a, b));
        CHECK(jac.is_zero());
        ++triples;
      }
    }
  CHECK(pairs == 105);
  CHECK(triples == 455);
}

TEST_CASE("decompose_in_basis examples") {
  auto dp = decompose_in_basis(lie_commutator(gen(GK::D), gen(GK::P0)));
  for (auto k : all_generator_kinds()) CHECK(dp[index_of(k)] == Scalar(k == GK::P0 ? 1 : 0));

  auto pp = decompose_in_basis(lie_commutator(gen(GK::P0), gen(GK::P1)));
  for (const auto& c : pp) CHECK(c.is_zero());

  auto cp = decompose_in_basis(lie_commutator(gen(GK::C1), gen(GK::P2)));
  for (auto k : all_generator_kinds()) CHECK(cp[index_of(k)] == Scalar(k == GK::J12 ? -2 : 0));
}

TEST_CASE("decompose_in_basis rejects fields outside the span") {
  VectorField cubic({x(1) * x(1) * x(1), Polynomial(), Polynomial(), Polynomial()});
  CHECK_THROWS_AS(decompose_in_basis(cubic), NotInSpan);
  try {
    decompose_in_basis(VectorField({x(1), Polynomial(), Polynomial(), Polynomial()}));
    FAIL("expected NotInSpan");
  } catch (const NotInSpan& e) {
    // x^1 d_0 matches -J01 on its linear coefficient, leaving -x^0 d_1 unexplained.
    CHECK(e.residual() == VectorField({Polynomial(), -x(0), Polynomial(), Polynomial()}));
  }
}

TEST_CASE("conformal factors of the standard generators") {
  for (std::size_t nu = 0; nu < 4; ++nu) {
    CHECK(conformal_factor(gen(translation(nu))).is_zero());
    CHECK(conformal_factor(gen(special_conformal(nu))) == lowered_coordinate(nu) * Scalar(-2));
  }
  for (std::size_t nu = 0; nu < 4; ++nu)
    for (std::size_t rho = nu + 1; rho < 4; ++rho) CHECK(conformal_factor(gen(rotation(nu, rho))).is_zero());
  CHECK(conformal_factor(gen(GK::D)) == Polynomial(Scalar(-1)));
}

TEST_CASE("non-conformal field is rejected with a residual") {
  VectorField f({x(1), Polynomial(), Polynomial(), Polynomial()});
  try {
    conformal_factor(f);
    FAIL("expected NotConformal");
  } catch (const NotConformal& e) {
    CHECK(e.residual()(0, 1) == Polynomial(Scalar(-1)));
    CHECK(e.residual()(1, 0) == Polynomial(Scalar(-1)));
  }
  VectorField cubic({x(0) * x(0) * x(0), Polynomial(), Polynomial(), Polynomial()});
  CHECK_THROWS_AS(conformal_factor(cubic), NotConformal);
}

TEST_CASE("metric_variation examples") {
  CHECK(metric_variation(gen(GK::J01)).is_zero());
  CHECK(metric_variation(gen(GK::P2)).is_zero());
  auto g = metric_variation(gen(GK::D));
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) CHECK(g(mu, nu) == Polynomial(Scalar(-2 * eta(mu, nu))));
}

TEST_CASE("conformal factor is linear and matches the metric variation") {
  oracle::Sampler s(3);
  for (int trial = 0; trial < 25; ++trial) {
    BasisCoefficients c;
    for (auto& v : c) v = s.rational();
    VectorField f = combine_basis(c);
    Polynomial lambda = conformal_factor(f);
    Polynomial expected;
    for (auto k : all_generator_kinds()) expected += conformal_factor(gen(k)) * c[index_of(k)];
    CHECK(lambda == expected);

    auto g = metric_variation(f);
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (std::size_t nu = 0; nu < 4; ++nu) CHECK(g(mu, nu) == lambda * Scalar(2 * eta(mu, nu)));

    CHECK(decompose_in_basis(f) == c);
  }
}
