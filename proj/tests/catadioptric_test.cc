#include "gvcam/catadioptric.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "test_util.h"

namespace gvcam {
namespace {

using testing::Proportional;
using testing::Sampler;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorCode::kParseError;
}

MirrorSurface UnitSphere() {
  return MirrorSurface::FromExponentStrings(
      {{"0200", 1.0}, {"0020", 1.0}, {"0002", 1.0}, {"2000", -1.0}});
}

Point EllipsoidPoint(double theta, double phi) {
  return Point(1, 4 * std::sin(theta) * std::cos(phi), 4 * std::sin(theta) * std::sin(phi),
               5 * std::cos(theta));
}

Point Add(const Point& a, double s, const Point& b) {
  return Point(a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2], a[3] + s * b[3]);
}

TEST(DirectionCos, CoordinateDirections) {
  EXPECT_EQ(DirectionCos(Point(0, 1, 0, 0), Point(0, 0, 1, 0)), 0);
  EXPECT_EQ(DirectionCos(Point(0, 1, 0, 0), Point(0, 1, 0, 0)), 1);
  EXPECT_NEAR(DirectionCos(Point(0, 1, 1, 0), Point(0, 1, 0, 0)), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(CodeOf([] { DirectionCos(Point(1, 1, 0, 0), Point(0, 1, 0, 0)); }),
            ErrorCode::kDegenerateInput);
}

TEST(ReflectPoint, CoordinatePlane) {
  const Plane h(0, 0, 0, 1);
  EXPECT_TRUE(Proportional(ReflectPoint(h, Point(1, 1, 1, 1)), Point(1, 1, 1, -1), 1e-15));
  EXPECT_TRUE(Proportional(ReflectPoint(h, Point(2, 3, -1, 0)), Point(2, 3, -1, 0), 1e-15));
  EXPECT_EQ(CodeOf([] { ReflectionMatrix(Plane(1, 0, 0, 0)); }), ErrorCode::kIsotropicPlane);
}

TEST(ReflectPoint, InvolutionAndFixedPlane) {
  Sampler s(71);
  for (int trial = 0; trial < 100; ++trial) {
    const Plane h = s.RandomPlane();
    const Point y = s.RandomPoint();
    EXPECT_TRUE(Proportional(ReflectPoint(h, ReflectPoint(h, y)), y, 1e-10));
    // A point of H: project y along the spatial normal.
    const std::array<Point, 2> pts = PointsOnLine(JoinPlanes(h, s.RandomPlane()));
    EXPECT_TRUE(Proportional(ReflectPoint(h, pts[0]), pts[0], 1e-10));
  }
}

TEST(ReflectPoint, EuclideanReflectionInChart) {
  // Plane x1 + x2 + 2 x3 = 1 written as (-1, 1, 1, 2).
  const Plane h(-1, 1, 1, 2);
  const double y[3] = {0.3, -1.2, 2.0};
  const double n[3] = {1, 1, 2};
  const double t = (y[0] + y[1] + 2 * y[2] - 1) / 6.0;
  const Point r = ReflectPoint(h, Point(1, y[0], y[1], y[2]));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r[i + 1] / r[0], y[i] - 2 * t * n[i], 1e-14);
}

TEST(ReflectPoint, ExactRational) {
  Sampler s(72);
  for (int trial = 0; trial < 50; ++trial) {
    const ProjPlane<Rational> h(Rational(s.Integer(-5, 5)), Rational(s.Integer(1, 5)),
                                Rational(s.Integer(-5, 5)), Rational(s.Integer(-5, 5)));
    const ProjPoint<Rational> y = s.RationalPoint();
    const ProjPoint<Rational> z = ReflectPoint(h, ReflectPoint(h, y));
    const Rational k = h[1] * h[1] + h[2] * h[2] + h[3] * h[3];
    for (int i = 0; i < 4; ++i) EXPECT_EQ(z[i], k * k * y[i]);
  }
}

TEST(ReflectLine, CoordinateExamples) {
  const Plane h(0, 0, 0, 1);
  const Line p = JoinPoints(Point(1, 0, 0, 0), Point(0, 0, 0, 1));
  EXPECT_TRUE(Proportional(ReflectLine(h, p), p, 1e-15));
  const Line q = JoinPoints(Point(1, 2, 0, 0), Point(0, 1, 3, 0));
  EXPECT_TRUE(Proportional(ReflectLine(h, q), q, 1e-15));
}

TEST(ReflectLine, JoinOfReflectionsAndIncidence) {
  Sampler s(73);
  for (int trial = 0; trial < 100; ++trial) {
    const Plane h = s.RandomPlane();
    const Point x = s.RandomPoint();
    const Point y = s.RandomPoint();
    const Line p = JoinPoints(x, y);
    const Line rp = ReflectLine(h, p);
    EXPECT_TRUE(Proportional(rp, JoinPoints(ReflectPoint(h, x), ReflectPoint(h, y)), 1e-10));
    EXPECT_LE(std::abs(PluckerQuadric(rp)) / (Norm(rp) * Norm(rp)), 1e-12);
    const Line q = s.RandomLine();
    const Line rq = ReflectLine(h, q);
    // The compound of rho_H scales the incidence form by det(rho_H) = -s^4.
    const double sq = h[1] * h[1] + h[2] * h[2] + h[3] * h[3];
    EXPECT_NEAR(Incidence(rp, rq), -std::pow(sq, 4) * Incidence(p, q),
                1e-10 * std::pow(sq, 4) * Norm(p) * Norm(q));
  }
}

TEST(TangentPlane, SphereAndEllipsoid) {
  EXPECT_TRUE(Proportional(TangentPlane(UnitSphere(), Point(1, 1, 0, 0)), Plane(-1, 1, 0, 0),
                           1e-15));
  const MirrorSurface e = FocalEllipsoid();
  const Plane t = TangentPlane(e, Point(1, 4, 0, 0));
  EXPECT_TRUE(Proportional(t, Plane(-2, 0.5, 0, 0), 1e-15));
  EXPECT_NEAR(t[0] + 4 * t[1], 0, 1e-15);
  EXPECT_EQ(CodeOf([&] { TangentPlane(e, Point(1, 1, 1, 1)); }), ErrorCode::kNotOnSurface);
  const MirrorSurface cone = MirrorSurface::FromExponentStrings(
      {{"0200", 1.0}, {"0020", 1.0}, {"0002", -1.0}});
  EXPECT_EQ(CodeOf([&] { TangentPlane(cone, Point(1, 0, 0, 0)); }), ErrorCode::kSingularPoint);
}

TEST(SpecularPair, GrazingAndNormalLines) {
  const MirrorSurface sphere = UnitSphere();
  const Point x(1, 1, 0, 0);
  const Line grazing = JoinPoints(x, Point(0, 0, 1, 1));
  EXPECT_TRUE(Proportional(SpecularPair(sphere, x, grazing), grazing, 1e-14));
  const Line normal = JoinPoints(x, Point(1, 0, 0, 0));
  EXPECT_TRUE(Proportional(SpecularPair(sphere, x, normal), normal, 1e-14));
  const Line generic = JoinPoints(x, Point(1, 0, 2, 1));
  const Line lp = SpecularPair(sphere, x, generic);
  EXPECT_FALSE(Proportional(lp, generic, 1e-6));
  EXPECT_LE(PointLineResidual(Normalized(x), Normalized(lp)), 1e-12);
  EXPECT_EQ(CodeOf([&] { SpecularPair(sphere, x, JoinPoints(Point(1, 0, 0, 0),
                                                             Point(0, 0, 1, 0))); }),
            ErrorCode::kDegenerateInput);
}

TEST(SpecularPair, FixedLinesOnlyNormalOrTangent) {
  Sampler s(74);
  const MirrorSurface e = FocalEllipsoid();
  for (int trial = 0; trial < 50; ++trial) {
    const Point x = EllipsoidPoint(s.Uniform(0.2, 2.9), s.Uniform(0, 6.28));
    const Plane t = TangentPlane(e, x);
    const Point normal_dir(0, t[1], t[2], t[3]);
    const Line normal = JoinPoints(x, normal_dir);
    EXPECT_TRUE(Proportional(SpecularPair(e, x, normal), normal, 1e-10));
    const Line tangent = JoinPlanes(t, s.RandomPlane());
    const Point on_t = PointsOnLine(tangent)[0];
    const Line grazing = JoinPoints(x, on_t);
    EXPECT_TRUE(Proportional(SpecularPair(e, x, grazing), grazing, 1e-9));
    const Line generic = s.LineThrough(x);
    EXPECT_FALSE(Proportional(SpecularPair(e, x, generic), generic, 1e-6));
  }
}

TEST(SpecularPair, EllipsoidFoci) {
  Sampler s(75);
  const MirrorSurface e = FocalEllipsoid();
  const Point p(1, 0, 0, 3);
  const Point q(1, 0, 0, -3);
  for (int trial = 0; trial < 50; ++trial) {
    const Point x = EllipsoidPoint(s.Uniform(0.05, 3.1), s.Uniform(0, 6.28));
    const Line lp = Normalized(SpecularPair(e, x, JoinPoints(p, x)));
    EXPECT_LE(PointLineResidual(Normalized(q), lp), 1e-8);
  }
}

TEST(LineSurfaceIntersections, SphereAxis) {
  const auto hits = LineSurfaceIntersections(
      UnitSphere(), JoinPoints(Point(1, 0, 0, 0), Point(0, 1, 0, 0)));
  ASSERT_EQ(hits.size(), 2u);
  double xs[2];
  for (int i = 0; i < 2; ++i) xs[i] = hits[i].point[1] / hits[i].point[0];
  EXPECT_NEAR(std::min(xs[0], xs[1]), -1, 1e-12);
  EXPECT_NEAR(std::max(xs[0], xs[1]), 1, 1e-12);
  EXPECT_TRUE(LineSurfaceIntersections(UnitSphere(),
                                       JoinPoints(Point(1, 0, 0, 2), Point(0, 1, 0, 0)))
                  .empty());
}

TEST(MirrorPairResidual, Cases) {
  Sampler s(76);
  const MirrorSurface e = FocalEllipsoid();
  for (int trial = 0; trial < 50; ++trial) {
    const Point x = EllipsoidPoint(s.Uniform(0.2, 2.9), s.Uniform(0, 6.28));
    const Line l = s.LineThrough(x);
    EXPECT_LE(MirrorPairResidual(e, l, SpecularPair(e, x, l)), 1e-9);
    const Plane t = TangentPlane(e, x);
    const Line normal = JoinPoints(x, Point(0, t[1], t[2], t[3]));
    EXPECT_LE(MirrorPairResidual(e, normal, normal), 1e-9);
    EXPECT_GT(MirrorPairResidual(e, l, s.RandomLine()), 1e-3);
  }
  const Line miss = JoinPoints(Point(1, 0, 0, 9), Point(0, 1, 0, 0));
  EXPECT_EQ(MirrorPairResidual(e, miss, miss), std::numeric_limits<double>::infinity());
  const MirrorSurface cone = MirrorSurface::FromExponentStrings(
      {{"0200", 1.0}, {"0020", 1.0}, {"0002", -1.0}});
  const Line through_apex = JoinPoints(Point(1, 0, 0, 0), Point(0, 1, 0, 2));
  EXPECT_EQ(CodeOf([&] { MirrorPairResidual(cone, through_apex, through_apex); }),
            ErrorCode::kSingularIntersection);
}

Complex CircleValue(const ComplexLine& p) {
  const ProjPoint<Complex> m = ApplyDual(p, ProjPlane<Complex>(0, 0, 0, 1));
  return (m[1] * m[1] + m[2] * m[2] - m[0] * m[0]) / (Norm(m) * Norm(m));
}

TEST(PanoramicFibers, NonCentralCamera) {
  Sampler s(77);
  const ComplexLine axis(0, 0, 0, 0, 0, 0);
  int real_points = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Point x = Normalized(s.RandomPoint());
    const auto fibers = PanoramicFibers(PanoramicNC{}, x);
    ASSERT_EQ(fibers.size(), 2u);
    bool all_real = true;
    for (const PanoramicFiber& f : fibers) {
      const ComplexLine p = Normalized(f.line);
      EXPECT_LE(IdealResidual(PanoramicNCIdeal(), p), 1e-10);
      EXPECT_LE(IdealResidual(PanoramicStereoIdeal(), DualLine(p)), 1e-10);
      // Meets L = V(x1, x2), i.e. p03 = 0 in the incidence with e0 v e3.
      EXPECT_LE(std::abs(p[LineIndex(1, 2)]), 1e-10);
      EXPECT_LE(std::abs(CircleValue(p)), 1e-9);
      // Contains x.
      const auto plane = ApplyPrimal(p, ProjPoint<Complex>(x[0], x[1], x[2], x[3]));
      EXPECT_LE(Norm(plane), 1e-10);
      all_real = all_real && f.is_real;
    }
    real_points += all_real;
  }
  EXPECT_GT(real_points, 0);
  EXPECT_EQ(CodeOf([] { PanoramicFibers(PanoramicNC{}, Point(1, 0.3, 0.2, 0)); }),
            ErrorCode::kFocalConfiguration);
  EXPECT_EQ(CodeOf([] { PanoramicFibers(Pinhole{Point(0, 0, 0, 1)}, Point(1, 0, 0, 0)); }),
            ErrorCode::kUnsupportedOrder);
}

TEST(PanoramicFibers, StereoCamera) {
  Sampler s(78);
  for (int trial = 0; trial < 100; ++trial) {
    const Point x = Normalized(s.RandomPoint());
    const auto fibers = PanoramicFibers(PanoramicStereo{}, x);
    ASSERT_EQ(fibers.size(), 2u);
    for (const PanoramicFiber& f : fibers) {
      const ComplexLine p = Normalized(f.line);
      EXPECT_LE(IdealResidual(PanoramicStereoIdeal(), p), 1e-10);
      const auto plane = ApplyPrimal(p, ProjPoint<Complex>(x[0], x[1], x[2], x[3]));
      EXPECT_LE(Norm(plane), 1e-10);
      if (f.is_real) {
        EXPECT_LE(PointLineResidual(x, Normalized(f.RealPart())), 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace gvcam
