#include "qst/minkowski.hpp"

#include <ostream>

#include "qst/errors.hpp"

namespace qst {

bool FourVector::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

bool FourVector::is_exact() const {
  for (const auto& c : components_)
    if (!c.is_exact()) return false;
  return true;
}

FourVector& FourVector::operator+=(const FourVector& o) {
  if (o.position_ != position_) throw IndexPositionError("adding four-vectors with different index positions");
  for (std::size_t mu = 0; mu < 4; ++mu) components_[mu] += o.components_[mu];
  return *this;
}

FourVector& FourVector::operator-=(const FourVector& o) {
  if (o.position_ != position_) throw IndexPositionError("subtracting four-vectors with different index positions");
  for (std::size_t mu = 0; mu < 4; ++mu) components_[mu] -= o.components_[mu];
  return *this;
}

FourVector& FourVector::operator*=(const Scalar& s) {
  for (auto& c : components_) c *= s;
  return *this;
}

Scalar minkowski_dot(const FourVector& u, const FourVector& v) {
  Scalar sum;
  bool contract = u.position() != v.position();
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Scalar term = u[mu] * v[mu];
    if (!contract && eta(mu) < 0) term = -term;
    sum += term;
  }
  return sum;
}

namespace {

FourVector flip(const FourVector& u, IndexPosition to) {
  auto c = u.components();
  for (std::size_t i = 1; i < 4; ++i) c[i] = -c[i];
  return FourVector(c, to);
}

}  // namespace

FourVector lower_index(const FourVector& u) {
  if (u.position() != IndexPosition::upper) throw IndexPositionError("lower_index expects an upper-index vector");
  return flip(u, IndexPosition::lower);
}

FourVector raise_index(const FourVector& u) {
  if (u.position() != IndexPosition::lower) throw IndexPositionError("raise_index expects a lower-index vector");
  return flip(u, IndexPosition::upper);
}

bool approx_equal(const FourVector& a, const FourVector& b, double tol) {
  if (a.position() != b.position()) return false;
  for (std::size_t mu = 0; mu < 4; ++mu)
    if (!approx_equal(a[mu], b[mu], tol)) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const FourVector& v) {
  os << (v.position() == IndexPosition::upper ? "^(" : "_(");
  for (std::size_t mu = 0; mu < 4; ++mu) os << (mu ? ", " : "") << v[mu];
  return os << ')';
}

}  // namespace qst
