#include "rap/lorentz.hpp"

#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace rap {

double lorentz_dot(const LorentzVec& x, const LorentzVec& y) {
  return -x.x0 * y.x0 + x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3;
}

NormKind classify_norm(const LorentzVec& x, double tol) {
  double n = lorentz_dot(x, x);
  if (n > tol) return NormKind::Spacelike;
  if (n < -tol) return NormKind::Timelike;
  return NormKind::Lightlike;
}

LorentzVec LorentzMat::apply(const LorentzVec& v) const {
  LorentzVec out;
  for (int i = 0; i < 4; ++i) {
    double s = 0;
    for (int j = 0; j < 4; ++j) s += m[4 * i + j] * v[j];
    out[i] = s;
  }
  return out;
}

LorentzMat random_lorentz_transform(std::uint64_t seed, double magnitude) {
  // Lorentz algebra elements are X = eta * S with S antisymmetric.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-magnitude, magnitude);
  Eigen::Matrix4d S = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double v = u(rng);
      S(i, j) = v;
      S(j, i) = -v;
    }
  Eigen::Matrix4d eta = Eigen::Matrix4d::Identity();
  eta(0, 0) = -1;
  Eigen::Matrix4d X = eta * S;
  // exp(X) by scaling and squaring with a plain series.
  int squarings = 0;
  while (X.cwiseAbs().maxCoeff() > 0.5) {
    X *= 0.5;
    ++squarings;
  }
  Eigen::Matrix4d E = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d term = Eigen::Matrix4d::Identity();
  for (int k = 1; k <= 20; ++k) {
    term = term * X / static_cast<double>(k);
    E += term;
  }
  for (int s = 0; s < squarings; ++s) E = E * E;
  LorentzMat out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.m[4 * i + j] = E(i, j);
  return out;
}

}  // namespace rap
