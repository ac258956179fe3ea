#pragma once

#include <array>
#include <cstdint>

namespace rap {

// Vector in R^{3,1} with the bilinear form (x,y) = -x0 y0 + x1 y1 + x2 y2 + x3 y3.
struct LorentzVec {
  double x0 = 0, x1 = 0, x2 = 0, x3 = 0;

  double& operator[](int i) { return *(&x0 + i); }
  double operator[](int i) const { return *(&x0 + i); }
};

double lorentz_dot(const LorentzVec& x, const LorentzVec& y);

enum class NormKind { Spacelike, Lightlike, Timelike };
NormKind classify_norm(const LorentzVec& x, double tol = 1e-9);

// 4x4 matrix acting on LorentzVec, row-major.
struct LorentzMat {
  std::array<double, 16> m{};
  LorentzVec apply(const LorentzVec& v) const;
};

// A pseudo-random element of the identity component of O(3,1) (preserves the
// upper sheet), built by exponentiating a seeded element of the Lorentz
// algebra with entries scaled by `magnitude`.
LorentzMat random_lorentz_transform(std::uint64_t seed, double magnitude = 0.5);

}  // namespace rap
