#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>

#include "qst/scalar.hpp"

namespace qst {

inline constexpr std::size_t kSpacetimeDim = 4;

enum class IndexPosition { upper, lower };

// Diagonal Minkowski metric with signature (+,-,-,-). The same diagonal
// serves for eta_{mu nu} and eta^{mu nu}.
constexpr int eta(std::size_t mu, std::size_t nu) {
  if (mu != nu) return 0;
  return mu == 0 ? 1 : -1;
}

constexpr int eta(std::size_t mu) { return eta(mu, mu); }

constexpr int kronecker(std::size_t mu, std::size_t nu) { return mu == nu ? 1 : 0; }

class FourVector {
 public:
  FourVector() = default;
  FourVector(std::array<Scalar, 4> c, IndexPosition pos = IndexPosition::upper)
      : components_(std::move(c)), position_(pos) {}

  static FourVector zero(IndexPosition pos = IndexPosition::upper) { return FourVector({}, pos); }

  const Scalar& operator[](std::size_t mu) const { return components_[mu]; }
  Scalar& operator[](std::size_t mu) { return components_[mu]; }
  const std::array<Scalar, 4>& components() const { return components_; }
  IndexPosition position() const { return position_; }

  bool is_zero() const;
  bool is_exact() const;

  FourVector& operator+=(const FourVector& o);
  FourVector& operator-=(const FourVector& o);
  FourVector& operator*=(const Scalar& s);

  friend FourVector operator+(FourVector a, const FourVector& b) { return a += b; }
  friend FourVector operator-(FourVector a, const FourVector& b) { return a -= b; }
  friend FourVector operator*(FourVector a, const Scalar& s) { return a *= s; }
  friend FourVector operator*(const Scalar& s, FourVector a) { return a *= s; }
  FourVector operator-() const { return *this * Scalar(-1); }

  friend bool operator==(const FourVector& a, const FourVector& b) = default;

 private:
  std::array<Scalar, 4> components_{};
  IndexPosition position_ = IndexPosition::upper;
};

// u.v with the metric when both indices sit at the same height, plain
// contraction u^mu v_mu when they differ.
Scalar minkowski_dot(const FourVector& u, const FourVector& v);

// Throws IndexPositionError unless u is upper.
FourVector lower_index(const FourVector& u);
// Throws IndexPositionError unless u is lower.
FourVector raise_index(const FourVector& u);

bool approx_equal(const FourVector& a, const FourVector& b, double tol = kFloatTolerance);

std::ostream& operator<<(std::ostream& os, const FourVector& v);

}  // namespace qst
