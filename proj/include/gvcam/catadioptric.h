#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gvcam/cameras.h"
#include "gvcam/error.h"
#include "gvcam/plucker.h"

namespace gvcam {

// Cosine of the angle between two points at infinity, measured with the
// Euclidean form on the spatial part. Throws IsotropicDirection.
double DirectionCos(const Point& x, const Point& y);

// rho_H(y) = s y - 2 (a . y) (0, a1, a2, a3) with s = a1^2 + a2^2 + a3^2.
// Throws IsotropicPlane when |s| < 1e-12 ||a||^2 (never in exact mode unless
// s is exactly zero).
template <typename T>
Mat<T, 4, 4> ReflectionMatrix(const ProjPlane<T>& h) {
  const T s = h[1] * h[1] + h[2] * h[2] + h[3] * h[3];
  const double n = Norm(h);
  const bool isotropic = ScalarTraits<T>::kExact
                             ? IsZero(s)
                             : ScalarTraits<T>::Magnitude(s) < 1e-12 * n * n;
  if (isotropic) Throw(ErrorCode::kIsotropicPlane, "plane is isotropic");
  Mat<T, 4, 4> m;
  for (int i = 0; i < 4; ++i) {
    const T ai = i == 0 ? T(0) : h[i];
    for (int j = 0; j < 4; ++j) {
      m[i][j] = T(-2) * ai * h[j];
      if (i == j) m[i][j] += s;
    }
  }
  return m;
}

template <typename T>
ProjPoint<T> ReflectPoint(const ProjPlane<T>& h, const ProjPoint<T>& y) {
  return ProjPoint<T>(MatVec(ReflectionMatrix(h), y.c));
}

template <typename T>
PlueckerLine<T> ReflectLine(const ProjPlane<T>& h, const PlueckerLine<T>& p) {
  return ApplyCompound(Compound2(ReflectionMatrix(h)), p);
}

// Homogeneous surface f(x0..x3) = sum c_e x^e.
class MirrorSurface {
 public:
  using Exponent = std::array<int, 4>;

  MirrorSurface() = default;
  // Throws DegenerateInput on inconsistent degrees or an empty polynomial.
  explicit MirrorSurface(std::map<Exponent, double> coeffs);

  // Keys are exponent strings such as "0200".
  static MirrorSurface FromExponentStrings(
      const std::map<std::string, double>& coeffs);

  int degree() const { return degree_; }
  const std::map<Exponent, double>& coeffs() const { return coeffs_; }
  double AbsCoeffSum() const;

  template <typename T>
  T Evaluate(const std::array<T, 4>& x) const {
    T total(0);
    for (const auto& [e, c] : coeffs_) {
      T m(c);
      for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < e[i]; ++k) m *= x[i];
      }
      total += m;
    }
    return total;
  }

  std::array<double, 4> Gradient(const Point& x) const;

  // Coefficients of f(s a + t b) as a binary form in (s, t).
  BinaryForm Restrict(const Point& a, const Point& b) const;

 private:
  int degree_ = 0;
  std::map<Exponent, double> coeffs_;
};

// The ellipsoid (x1^2 + x2^2)/16 + x3^2/25 - x0^2 with foci (1:0:0:+-3).
MirrorSurface FocalEllipsoid();

// Throws NotOnSurface when |f(x)| > tol * sum|c| for unit x, SingularPoint
// when the gradient vanishes.
Plane TangentPlane(const MirrorSurface& s, const Point& x,
                   double tol = kDefaultTolerance);

// Reflection of L across T_x S. Throws IsotropicTangent, and DegenerateInput
// when x is not on L.
Line SpecularPair(const MirrorSurface& s, const Point& x, const Line& l,
                  double tol = kDefaultTolerance);

struct SurfaceHit {
  Point point;
  bool singular = false;
};

// Real points of L cut out by S. Multiple roots are reported once per
// multiplicity.
std::vector<SurfaceHit> LineSurfaceIntersections(const MirrorSurface& s,
                                                 const Line& l);

// Minimum over real x in L cap S of the projective distance between L' and
// the reflection of L across T_x S; +inf when L misses S in real points.
// Throws SingularIntersection when L passes through a singular point of S.
double MirrorPairResidual(const MirrorSurface& s, const Line& l,
                          const Line& lp);

struct PanoramicFiber {
  ComplexLine line;
  bool is_real = false;

  Line RealPart() const;
};

// The two lines of the congruence through x. Throws FocalConfiguration on the
// focal quartic and UnsupportedOrder for other cameras.
std::vector<PanoramicFiber> PanoramicFibers(const GeometricCamera& cam,
                                            const Point& x);

}  // namespace gvcam
