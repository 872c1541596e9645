#pragma once

#include <random>

#include "gvcam/plucker.h"

namespace gvcam::testing {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double Normal() { return normal_(rng_); }
  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int Integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  std::mt19937_64& rng() { return rng_; }

  Point RandomPoint() { return Point(Normal(), Normal(), Normal(), Normal()); }
  Plane RandomPlane() { return Plane(Normal(), Normal(), Normal(), Normal()); }
  Line RandomLine() { return JoinPoints(RandomPoint(), RandomPoint()); }
  Line LineThrough(const Point& x) { return JoinPoints(x, RandomPoint()); }

  template <int R>
  Mat<double, R, 4> RandomMatrix() {
    Mat<double, R, 4> m;
    for (auto& row : m) {
      for (double& v : row) v = Normal();
    }
    return m;
  }

  ProjPoint<Rational> RationalPoint(int range = 9) {
    return ProjPoint<Rational>(Rational(Integer(-range, range)),
                               Rational(Integer(-range, range)),
                               Rational(Integer(-range, range)),
                               Rational(Integer(1, range)));
  }

  std::array<double, 2> Pair() { return {Normal(), Normal()}; }
  std::array<double, 3> Triple() { return {Normal(), Normal(), Normal()}; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

template <typename T, int N, typename Tag>
bool Proportional(const Homogeneous<T, N, Tag>& a,
                  const Homogeneous<T, N, Tag>& b, double tol = 1e-9) {
  return ProjectiveDistance(a, b) <= tol;
}

inline double RelNorm(const Line& p) { return Norm(p); }

}  // namespace gvcam::testing
