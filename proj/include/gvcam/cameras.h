#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gvcam/plucker.h"
#include "gvcam/polynomial.h"

namespace gvcam {

// Change of coordinates from the normal form of a camera to world
// coordinates: world = forward * normal.
struct Homography {
  Mat<double, 4, 4> forward;
  Mat<double, 4, 4> inverse;

  static Homography FromMatrix(const Mat<double, 4, 4>& forward);
  static Homography FromInverse(const Mat<double, 4, 4>& inverse);

  Point ToNormal(const Point& x) const;
  Point ToWorld(const Point& x) const;
  Line LineToNormal(const Line& p) const;
  Line LineToWorld(const Line& p) const;
};

struct Pinhole {
  Point center;
};

struct TwoSlit {
  Line slit1;
  Line slit2;
};

// Two-slit camera whose second slit is the line at infinity orthogonal to the
// finite slit.
struct Pushbroom {
  Line slit;
};

// Secant congruence of the curve (s^3 : s^2 t : s t^2 : t^3).
struct TwistedCubic {
  std::optional<Homography> homography;
};

// Lines meeting L = V(x0,x1) and X(s:t) = (s f : t f : g : h), with
// deg f = beta - 1 and deg g = deg h = beta.
struct Type3 {
  BinaryForm f;
  BinaryForm g;
  BinaryForm h;
  std::optional<Homography> homography;
};

// Type3 with f = 0: the plane (x1, -x0, 0, 0) through L carries the pencil of
// lines through (0 : 0 : g : h).
struct Type4 {
  BinaryForm g;
  BinaryForm h;
  std::optional<Homography> homography;
};

// Lines meeting L = V(x1,x2) and the circle V(x3, x1^2 + x2^2 - x0^2).
struct PanoramicNC {};

// Dual of PanoramicNC: lines meeting V(x0,x3) and tangent to the cone
// x0^2 - x1^2 - x2^2.
struct PanoramicStereo {};

// Visitor built from lambdas.
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

using GeometricCamera = std::variant<Pinhole, TwoSlit, Pushbroom, TwistedCubic,
                                     Type3, Type4, PanoramicNC, PanoramicStereo>;

struct Bidegree {
  int order = 0;
  int klass = 0;

  bool operator==(const Bidegree&) const = default;
};

std::string CameraTypeName(const GeometricCamera& cam);

// Checks camera invariants (skew slits, form degrees, finite pushbroom slit).
void ValidateCamera(const GeometricCamera& cam);

Line PushbroomSlit2(const Pushbroom& cam);

// Viewing line of x. Throws FocalPoint on the focal locus and
// UnsupportedOrder for the panoramic cameras.
Line Project(const GeometricCamera& cam, const Point& x);

// Maximum relative residual of the congruence equations at p.
double CongruenceResidual(const GeometricCamera& cam, const Line& p);

Bidegree GetBidegree(const GeometricCamera& cam);

// Residual of x against the focal locus; zero on the locus.
double FocalResidual(const GeometricCamera& cam, const Point& x);

// Parametric curve given by four binary forms of equal degree.
using ParametricCurve = std::array<BinaryForm, 4>;

template <typename T>
std::array<T, 4> EvaluateCurve(const ParametricCurve& curve, const T& s,
                               const T& t) {
  return {curve[0](s, t), curve[1](s, t), curve[2](s, t), curve[3](s, t)};
}

struct CurveMeet {
  // Smallest ||P X(s:t)|| / ||X(s:t)|| over the candidate parameters.
  double residual = 0;
  std::array<Complex, 2> parameter{};
  // All candidate parameters, for callers that filter them further.
  std::vector<std::array<Complex, 2>> candidates;
};

// Candidate parameters from two fixed random combinations of P X(s:t).
CurveMeet CurveMeetResidual(const Line& p, const ParametricCurve& curve);

// True iff p meets the curve. Throws IllConditioned when clustered roots
// leave the residual just above tol.
bool LineMeetsCurve(const Line& p, const ParametricCurve& curve,
                    double tol = kDefaultTolerance);

// The curve X of a Type3 or Type4 camera in normal coordinates.
ParametricCurve Type3Curve(const BinaryForm& f, const BinaryForm& g,
                           const BinaryForm& h);

// Membership in the Type3 congruence tested through its incidence with L and
// its intersection with X inside the plane Pi(s:t) = (t, -s, 0, 0). Line in
// normal coordinates.
double Type3ChartResidual(const BinaryForm& f, const BinaryForm& g,
                          const BinaryForm& h, const Line& p);

struct TwoCubes {
  // Parameters (s:t) of the two points of the curve on the secant through x.
  std::array<std::array<Complex, 2>, 2> parameters;
  // x = lambda0 v(r0) + lambda1 v(r1) with v(s:t) = (s^3, s^2 t, s t^2, t^3).
  std::array<Complex, 2> lambdas;
  double reconstruction_residual = 0;
};

// Decomposes x0 u^3 + 3 x1 u^2 v + 3 x2 u v^2 + x3 v^3 as a sum of two cubes.
// Throws DegenerateCubic on the curve or its tangent developable.
TwoCubes SumOfTwoCubes(const Point& x);

// The 6x6 bilinear system annihilating the secant line of x.
Mat<double, 6, 6> TwistedCubicLinearSystem(const Point& x);

// The normal-form secant map of degree 4.
Line TwistedCubicSecant(const Point& x);

// Ideals with unit-normalized line coordinates (p01..p23) as variables. Each
// list includes the Pluecker quadric.
const std::vector<Polynomial>& SecantCongruenceIdeal();
const std::vector<Polynomial>& TwistedType3Ideal();
const std::vector<Polynomial>& ToricType4Ideal();
const std::vector<Polynomial>& PanoramicNCIdeal();
const std::vector<Polynomial>& PanoramicStereoIdeal();

// Type3 with f = s^2 - t^2, g = s^3, h = t^3 (X a twisted cubic meeting L
// twice) and its f = 0 degeneration.
Type3 TwistedType3Camera();
Type4 ToricType4Camera();

// Max over the ideal of |g(p)| / sum|coeffs| at the unit-normalized line.
double IdealResidual(const std::vector<Polynomial>& ideal, const Line& p);
double IdealResidual(const std::vector<Polynomial>& ideal,
                     const ComplexLine& p);

}  // namespace gvcam
