#include "qst/vector_field.hpp"

#include <algorithm>

namespace qst {

namespace {

constexpr std::array<std::string_view, kGeneratorCount> kNames = {
    "P0", "P1", "P2", "P3", "J01", "J02", "J03", "J12", "J13", "J23", "D", "C0", "C1", "C2", "C3"};

constexpr std::array<std::pair<std::size_t, std::size_t>, 6> kRotationPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

}  // namespace

GeneratorFamily family(GeneratorKind k) {
  auto i = index_of(k);
  if (i < 4) return GeneratorFamily::translation;
  if (i < 10) return GeneratorFamily::rotation;
  if (i == 10) return GeneratorFamily::dilatation;
  return GeneratorFamily::special_conformal;
}

std::string_view name(GeneratorKind k) { return kNames[index_of(k)]; }

std::optional<GeneratorKind> parse_generator_kind(std::string_view text) {
  auto it = std::find(kNames.begin(), kNames.end(), text);
  if (it == kNames.end()) return std::nullopt;
  return generator_at(static_cast<std::size_t>(it - kNames.begin()));
}

GeneratorKind translation(std::size_t nu) { return generator_at(nu); }
GeneratorKind special_conformal(std::size_t nu) { return generator_at(11 + nu); }

GeneratorKind rotation(std::size_t nu, std::size_t rho) {
  for (std::size_t i = 0; i < kRotationPairs.size(); ++i)
    if (kRotationPairs[i] == std::pair{nu, rho}) return generator_at(4 + i);
  throw std::invalid_argument("rotation index pair must satisfy nu < rho < 4");
}

std::size_t vector_index(GeneratorKind k) {
  switch (family(k)) {
    case GeneratorFamily::translation: return index_of(k);
    case GeneratorFamily::special_conformal: return index_of(k) - 11;
    default: throw std::invalid_argument("generator has no vector index");
  }
}

std::pair<std::size_t, std::size_t> rotation_indices(GeneratorKind k) {
  if (family(k) != GeneratorFamily::rotation) throw std::invalid_argument("not a rotation generator");
  return kRotationPairs[index_of(k) - 4];
}

Polynomial coordinate(std::size_t mu) { return Polynomial::variable(mu); }

Polynomial lowered_coordinate(std::size_t mu) { return Polynomial::variable(mu) * Scalar(eta(mu)); }

Polynomial coordinate_square() {
  Polynomial s;
  for (std::size_t mu = 0; mu < 4; ++mu) s += coordinate(mu) * lowered_coordinate(mu);
  return s;
}

bool near_zero(const Polynomial& p, double tol) {
  for (const auto& [e, c] : p.terms())
    if (!c.near_zero(tol)) return false;
  return true;
}

VectorField VectorField::with_label(std::string label) const { return VectorField(components_, std::move(label)); }

Polynomial VectorField::lowered(std::size_t mu) const { return components_[mu] * Scalar(eta(mu)); }

VectorField VectorField::derivative(std::size_t mu) const {
  std::array<Polynomial, 4> d;
  for (std::size_t nu = 0; nu < 4; ++nu) d[nu] = components_[nu].derivative(mu);
  return VectorField(std::move(d));
}

int VectorField::degree() const {
  int d = -1;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

bool VectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool VectorField::near_zero(double tol) const {
  return std::all_of(components_.begin(), components_.end(),
                     [tol](const Polynomial& p) { return qst::near_zero(p, tol); });
}

FourVector VectorField::evaluate(const FourVector& x) const {
  if (x.position() != IndexPosition::upper) throw IndexPositionError("fields are evaluated at upper-index points");
  std::array<Scalar, 4> out;
  for (std::size_t mu = 0; mu < 4; ++mu) out[mu] = components_[mu].evaluate(x.components());
  return FourVector(out);
}

std::array<std::array<Scalar, 4>, 4> VectorField::jacobian(const FourVector& x) const {
  if (x.position() != IndexPosition::upper) throw IndexPositionError("fields are evaluated at upper-index points");
  std::array<std::array<Scalar, 4>, 4> j;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) j[mu][nu] = components_[nu].derivative(mu).evaluate(x.components());
  return j;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  for (std::size_t mu = 0; mu < 4; ++mu) components_[mu] += o.components_[mu];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  for (std::size_t mu = 0; mu < 4; ++mu) components_[mu] -= o.components_[mu];
  return *this;
}

VectorField& VectorField::operator*=(const Scalar& s) {
  for (auto& c : components_) c *= s;
  return *this;
}

bool SymmetricTensorField::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

VectorField lie_commutator(const VectorField& a, const VectorField& b) {
  std::array<Polynomial, 4> out;
  for (std::size_t nu = 0; nu < 4; ++nu) {
    if (a[nu].is_zero() && b[nu].is_zero()) continue;
    for (std::size_t mu = 0; mu < 4; ++mu) {
      out[mu] += b[nu] * a[mu].derivative(nu);
      out[mu] -= a[nu] * b[mu].derivative(nu);
    }
  }
  return VectorField(std::move(out));
}

SymmetricTensorField metric_variation(const VectorField& a) {
  std::array<Polynomial, 4> low;
  for (std::size_t mu = 0; mu < 4; ++mu) low[mu] = a.lowered(mu);
  SymmetricTensorField g;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = mu; nu < 4; ++nu) g(mu, nu) = -(low[nu].derivative(mu) + low[mu].derivative(nu));
  return g;
}

Polynomial conformal_factor(const VectorField& a) {
  SymmetricTensorField g = metric_variation(a);
  Polynomial lambda = g(0, 0) * Scalar::ratio(1, 2);
  SymmetricTensorField residual;
  bool conformal = true;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = mu; nu < 4; ++nu) {
      Polynomial r = g(mu, nu);
      if (mu == nu) r -= lambda * Scalar(2 * eta(mu));
      if (!near_zero(r)) conformal = false;
      residual(mu, nu) = std::move(r);
    }
  if (!conformal) {
    std::string label = a.label().empty() ? std::string("field") : a.label();
    throw NotConformal(label + " is not conformal: symmetrized derivative is not proportional to eta",
                       std::move(residual));
  }
  return lambda;
}

VectorField standard_generator(GeneratorKind k) {
  std::array<Polynomial, 4> c;
  switch (family(k)) {
    case GeneratorFamily::translation:
      c[vector_index(k)] = Polynomial(Scalar(1));
      break;
    case GeneratorFamily::rotation: {
      auto [nu, rho] = rotation_indices(k);
      c[nu] += lowered_coordinate(rho);
      c[rho] -= lowered_coordinate(nu);
      break;
    }
    case GeneratorFamily::dilatation:
      for (std::size_t mu = 0; mu < 4; ++mu) c[mu] = coordinate(mu);
      break;
    case GeneratorFamily::special_conformal: {
      std::size_t nu = vector_index(k);
      Polynomial twice_low = lowered_coordinate(nu) * Scalar(2);
      for (std::size_t mu = 0; mu < 4; ++mu) c[mu] = twice_low * coordinate(mu);
      c[nu] -= coordinate_square();
      break;
    }
  }
  return VectorField(std::move(c), std::string(name(k)));
}

VectorField combine_basis(const BasisCoefficients& coefficients) {
  VectorField sum;
  for (std::size_t i = 0; i < kGeneratorCount; ++i)
    if (!coefficients[i].is_zero()) sum += standard_generator(generator_at(i)) * coefficients[i];
  return sum;
}

BasisCoefficients decompose_in_basis(const VectorField& v) {
  BasisCoefficients c;
  auto linear = [&](std::size_t mu, std::size_t sigma) {
    Polynomial::Exponents e{};
    e[sigma] = 1;
    return v[mu].coefficient(e);
  };

  for (std::size_t mu = 0; mu < 4; ++mu) {
    c[index_of(translation(mu))] = v[mu].constant_term();

    Polynomial::Exponents sq{};
    sq[mu] = 2;
    c[index_of(special_conformal(mu))] = v[mu].coefficient(sq) * Scalar(eta(mu));
  }
  c[index_of(GeneratorKind::D)] = linear(0, 0);
  for (std::size_t nu = 0; nu < 4; ++nu)
    for (std::size_t rho = nu + 1; rho < 4; ++rho) c[index_of(rotation(nu, rho))] = linear(nu, rho) * Scalar(eta(rho));

  VectorField residual = v - combine_basis(c);
  if (!residual.near_zero()) {
    std::string label = v.label().empty() ? std::string("field") : v.label();
    throw NotInSpan(label + " lies outside the span of the conformal generators", residual);
  }
  return c;
}

}  // namespace qst
