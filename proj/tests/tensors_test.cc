#include "gvcam/tensors.h"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <fstream>
#include <set>

#include "gvcam/cameras.h"
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

const PinholeMatrix<double> kStandardPinhole = {
    {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}};
const TwoSlitMatrices<double> kCoordinateSlits = {
    {{{1, 0, 0, 0}, {0, 1, 0, 0}}}, {{{0, 0, 1, 0}, {0, 0, 0, 1}}}};

Point Kernel(const PinholeMatrix<double>& a) {
  Eigen::Matrix<double, 3, 4> m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = a[i][j];
  }
  const Eigen::Vector4d v =
      Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>>(m, Eigen::ComputeFullV).matrixV().col(3);
  return Point(v(0), v(1), v(2), v(3));
}

Line KernelLine(const SlitMatrix<double>& a) {
  return JoinPlanes(Plane(a[0]), Plane(a[1]));
}

template <std::size_t N>
double Norm2(const std::array<double, N>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

TEST(PinholeProject, StandardCamera) {
  const auto w = PinholeProject(kStandardPinhole, Point(1, 2, 3, 4));
  EXPECT_EQ(w, (std::array<double, 3>{1, 2, 3}));
  EXPECT_EQ(CodeOf([] { PinholeProject(kStandardPinhole, Point(0, 0, 0, 1)); }),
            ErrorCode::kBaseLocus);
}

TEST(TwoSlitProject, CoordinateRows) {
  const auto [u, v] = TwoSlitProject(kCoordinateSlits, Point(1, 1, 1, 1));
  EXPECT_EQ(u, (std::array<double, 2>{1, 1}));
  EXPECT_EQ(v, (std::array<double, 2>{1, 1}));
  EXPECT_EQ(CodeOf([] { TwoSlitProject(kCoordinateSlits, Point(0, 0, 1, 2)); }),
            ErrorCode::kBaseLocus);
}

TEST(PinholeFiber, CoordinateAxis) {
  const Line p = PinholeFiber(kStandardPinhole, std::array<double, 3>{1, 0, 0});
  EXPECT_TRUE(Proportional(p, Line(0, 0, 1, 0, 0, 0)));
}

TEST(PinholeFiber, ContainsPointAndCenter) {
  Sampler s(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = s.RandomMatrix<3>();
    const Point x = s.RandomPoint();
    const Line p = Normalized(PinholeFiber(a, PinholeProject(a, x)));
    EXPECT_LE(PointLineResidual(Normalized(x), p), 1e-10);
    EXPECT_LE(PointLineResidual(Normalized(Kernel(a)), p), 1e-10);
    // Same line as the geometric pinhole camera.
    EXPECT_TRUE(Proportional(p, Normalized(Project(Pinhole{Kernel(a)}, x)), 1e-8));
    const Line q = Normalized(PinholeFiber(a, s.Triple()));
    EXPECT_LE(PointLineResidual(Normalized(Kernel(a)), q), 1e-10);
  }
}

TEST(TwoSlitFiber, CoordinateRows) {
  const Line p = TwoSlitFiber(kCoordinateSlits, {1, 0}, {1, 0});
  EXPECT_TRUE(Proportional(p, Line(0, 1, 0, 0, 0, 0)));
  const TwoSlitMatrices<double> singular = {kCoordinateSlits.a, kCoordinateSlits.a};
  EXPECT_EQ(CodeOf([&] { TwoSlitFiber(singular, {1, 0}, {1, 0}); }),
            ErrorCode::kSingularStack);
}

TEST(TwoSlitFiber, ContainsPointAndMeetsSlits) {
  Sampler s(52);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoSlitMatrices<double> cam{s.RandomMatrix<2>(), s.RandomMatrix<2>()};
    const Point x = s.RandomPoint();
    const auto [u, v] = TwoSlitProject(cam, x);
    const Line p = Normalized(TwoSlitFiber(cam, u, v));
    EXPECT_LE(PointLineResidual(Normalized(x), p), 1e-9);
    const Line k1 = KernelLine(cam.a);
    const Line k2 = KernelLine(cam.b);
    EXPECT_LE(IncidenceResidual(p, k1), 1e-9);
    EXPECT_LE(IncidenceResidual(p, k2), 1e-9);
    EXPECT_TRUE(Proportional(p, Normalized(TwoSlitFiberFromRows(cam, u, v)), 1e-8));
    EXPECT_TRUE(Proportional(p, Normalized(Project(TwoSlit{k1, k2}, x)), 1e-8));
  }
}

TEST(ClassBeta, ConicCurveCamera) {
  const ClassBetaCamera cam = ClassBetaCamera::Normal(
      BinaryForm({1, 0}), BinaryForm({1, 0, 1}), BinaryForm({0, 1, 0}));
  Sampler s(53);
  const Line l(0, 0, 0, 0, 0, 1);
  const ParametricCurve curve = {BinaryForm({1, 0, 0}), BinaryForm({0, 1, 0}),
                                 BinaryForm({1, 0, 1}), BinaryForm({0, 1, 0})};
  for (int trial = 0; trial < 100; ++trial) {
    const Point x = Normalized(s.RandomPoint());
    const auto [u, v] = ClassBetaProject(cam, x);
    EXPECT_NEAR(u[0] * x[1] - u[1] * x[0], 0, 1e-12);
    const double v0 = x[0] * x[0] + x[1] * x[1] - x[0] * x[2];
    const double v1 = x[0] * x[1] - x[0] * x[3];
    EXPECT_NEAR(v[0] * v1 - v[1] * v0, 0, 1e-12);
    const Line p = Normalized(ClassBetaFiber(cam, u, v));
    EXPECT_LE(PointLineResidual(x, p), 1e-9);
    EXPECT_LE(IncidenceResidual(p, l), 1e-9);
    EXPECT_TRUE(LineMeetsCurve(p, curve));
  }
}

TEST(ClassBeta, PlaneMapIsConstantOnFibers) {
  const ClassBetaCamera cam = ClassBetaCamera::Normal(
      BinaryForm({1, 0}), BinaryForm({1, 0, 1}), BinaryForm({0, 1, 0}));
  const auto m = [](const Point& x) {
    return Point(x[0] * x[0] * x[0] + x[0] * x[1] * x[1] - x[0] * x[0] * x[2],
                 x[0] * x[0] * x[1] - x[0] * x[0] * x[3],
                 x[0] * x[0] * x[1] + x[1] * x[1] * x[1] - x[0] * x[1] * x[2], 0);
  };
  Sampler s(54);
  for (int trial = 0; trial < 50; ++trial) {
    const Point x = Normalized(s.RandomPoint());
    const auto [u, v] = ClassBetaProject(cam, x);
    const std::array<Point, 2> pts = PointsOnLine(ClassBetaFiber(cam, u, v));
    Point y;
    for (int i = 0; i < 4; ++i) y[i] = 0.4 * pts[0][i] - 1.3 * pts[1][i];
    EXPECT_TRUE(Proportional(Normalized(m(x)), Normalized(m(Normalized(y))), 1e-8));
  }
}

TEST(ClassBeta, ConstantFormIsTwoSlit) {
  // f = 1: v = (g(u) - x2, h(u) - x3) is linear in x.
  const ClassBetaCamera cam = ClassBetaCamera::Normal(
      BinaryForm({1}), BinaryForm({2, -1}), BinaryForm({0.5, 3}));
  const TwoSlitMatrices<double> slits = {
      {{{1, 0, 0, 0}, {0, 1, 0, 0}}}, {{{2, -1, -1, 0}, {0.5, 3, 0, -1}}}};
  Sampler s(55);
  for (int trial = 0; trial < 50; ++trial) {
    const Point x = Normalized(s.RandomPoint());
    const auto a = ClassBetaProject(cam, x);
    const auto b = TwoSlitProject(slits, x);
    for (int i = 0; i < 2; ++i) {
      EXPECT_NEAR(a.first[i], b.first[i], 1e-12);
      EXPECT_NEAR(a.second[i], b.second[i], 1e-12);
    }
  }
}

TEST(FundamentalMatrix, CoordinateCameras) {
  const PinholeMatrix<double> a = kStandardPinhole;
  const PinholeMatrix<double> b = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}};
  const auto f = FundamentalMatrix(a, b);
  const double k = f[0][1];
  ASSERT_NE(k, 0);
  const double expected[3][3] = {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(f[i][j], k * expected[i][j]);
  }
}

TEST(FundamentalMatrix, DeterminantAndEpipolarIdentity) {
  Sampler s(56);
  for (int rig = 0; rig < 100; ++rig) {
    const auto a = s.RandomMatrix<3>();
    const auto b = s.RandomMatrix<3>();
    const auto f = FundamentalMatrix(a, b);
    double fn = 0;
    for (const auto& row : f) fn = std::max(fn, Norm2(row));
    const double det =
        f[0][0] * (f[1][1] * f[2][2] - f[1][2] * f[2][1]) -
        f[0][1] * (f[1][0] * f[2][2] - f[1][2] * f[2][0]) +
        f[0][2] * (f[1][0] * f[2][1] - f[1][1] * f[2][0]);
    EXPECT_LE(std::abs(det), 1e-10 * fn * fn * fn);
    for (int k = 0; k < 100; ++k) {
      const Point x = s.RandomPoint();
      const auto w = PinholeProject(a, x);
      const auto wp = PinholeProject(b, x);
      EXPECT_LE(std::abs(EpipolarForm(f, w, wp)) / (fn * Norm2(w) * Norm2(wp)), 1e-10);
    }
  }
}

TEST(FundamentalMatrix, ExactForIntegerCameras) {
  Sampler s(57);
  for (int trial = 0; trial < 50; ++trial) {
    PinholeMatrix<Rational> a, b;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 4; ++j) {
        a[i][j] = s.Integer(-5, 5);
        b[i][j] = s.Integer(-5, 5);
      }
    }
    const auto f = FundamentalMatrixEntries(a, b);
    for (int k = 0; k < 10; ++k) {
      const ProjPoint<Rational> x = s.RationalPoint();
      EXPECT_EQ(EpipolarForm(f, MatVec(a, x.c), MatVec(b, x.c)), 0);
    }
  }
}

TEST(FundamentalMatrix, CoincidentCenters) {
  Sampler s(58);
  const auto a = s.RandomMatrix<3>();
  PinholeMatrix<double> b;
  const Mat<double, 3, 3> m = {{{1, 2, 0}, {0, 1, 3}, {1, 0, 1}}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      b[i][j] = 0;
      for (int k = 0; k < 3; ++k) b[i][j] += m[i][k] * a[k][j];
    }
  }
  EXPECT_EQ(CodeOf([&] { FundamentalMatrix(a, b); }), ErrorCode::kCoincidentCenters);
}

double Norm16(const std::array<double, 16>& f) { return Norm2(f); }

TEST(Quadrifocal, VanishesOnCorrespondences) {
  Sampler s(59);
  for (int rig = 0; rig < 20; ++rig) {
    const TwoSlitMatrices<double> c1{s.RandomMatrix<2>(), s.RandomMatrix<2>()};
    const TwoSlitMatrices<double> c2{s.RandomMatrix<2>(), s.RandomMatrix<2>()};
    const auto f = QuadrifocalTensor(c1, c2);
    for (int k = 0; k < 100; ++k) {
      const Point x = s.RandomPoint();
      const auto [u, v] = TwoSlitProject(c1, x);
      const auto [up, vp] = TwoSlitProject(c2, x);
      const double scale = Norm16(f) * Norm2(u) * Norm2(v) * Norm2(up) * Norm2(vp);
      EXPECT_LE(std::abs(QuadrifocalForm(f, u, v, up, vp)) / scale, 1e-10);
    }
  }
}

TEST(Quadrifocal, ZeroRowAndRowSwap) {
  Sampler s(60);
  TwoSlitMatrices<double> c1{s.RandomMatrix<2>(), s.RandomMatrix<2>()};
  const TwoSlitMatrices<double> c2{s.RandomMatrix<2>(), s.RandomMatrix<2>()};
  const auto f = QuadrifocalTensor(c1, c2);
  TwoSlitMatrices<double> swapped = c1;
  std::swap(swapped.a[0], swapped.a[1]);
  const auto g = QuadrifocalTensor(swapped, c2);
  for (int i = 0; i < 2; ++i) {
    for (int r = 0; r < 8; ++r) EXPECT_DOUBLE_EQ(g[8 * i + r], -f[8 * (1 - i) + r]);
  }
  c1.a[0] = {0, 0, 0, 0};
  const auto z = QuadrifocalTensor(c1, c2);
  // Entries with i = 1 use the zero row A_0.
  for (int r = 0; r < 8; ++r) EXPECT_EQ(z[8 + r], 0);
}

TEST(Mixed, VanishesOnCorrespondencesAndSextic) {
  Sampler s(61);
  for (int rig = 0; rig < 100; ++rig) {
    const auto a = s.RandomMatrix<3>();
    const TwoSlitMatrices<double> bc{s.RandomMatrix<2>(), s.RandomMatrix<2>()};
    const auto f = MixedEpipolarTensor(a, bc);
    const double n = Norm2(f);
    for (int k = 0; k < 10; ++k) {
      const Point x = s.RandomPoint();
      const auto w = PinholeProject(a, x);
      const auto [u, v] = TwoSlitProject(bc, x);
      EXPECT_LE(std::abs(MixedForm(f, w, u, v)) / (n * Norm2(w) * Norm2(u) * Norm2(v)),
                1e-10);
    }
    EXPECT_LE(std::abs(SexticInvariant(f)) / std::pow(n, 6), 1e-8);
  }
}

TEST(Sextic, RandomTensorsAndHomogeneity) {
  Sampler s(62);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<double, 12> t;
    for (double& v : t) v = s.Integer(-9, 9);
    const double value = SexticInvariant(t);
    std::array<double, 12> scaled = t;
    for (double& v : scaled) v *= 1.5;
    EXPECT_NEAR(SexticInvariant(scaled), std::pow(1.5, 6) * value,
                1e-9 * std::abs(value) + 1e-9);
  }
  std::array<double, 12> r;
  for (double& v : r) v = s.Normal();
  EXPECT_GT(std::abs(SexticInvariant(r)) / std::pow(Norm2(r), 6), 1e-6);
}

std::array<double, 12> Act(const Mat<double, 3, 3>& g1, const Mat<double, 2, 2>& g2,
                           const Mat<double, 2, 2>& g3, const std::array<double, 12>& f) {
  std::array<double, 12> out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        double acc = 0;
        for (int a = 0; a < 3; ++a) {
          for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
              acc += g1[i][a] * g2[j][b] * g3[k][c] * f[4 * a + 2 * b + c];
            }
          }
        }
        out[4 * i + 2 * j + k] = acc;
      }
    }
  }
  return out;
}

TEST(Sextic, GroupInvariance) {
  Sampler s(63);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<double, 12> f;
    for (double& v : f) v = s.Normal();
    Mat<double, 3, 3> g1;
    for (auto& row : g1) {
      for (double& v : row) v = s.Normal();
    }
    Mat<double, 2, 2> g2 = {{{s.Normal(), s.Normal()}, {s.Normal(), s.Normal()}}};
    Mat<double, 2, 2> g3 = {{{s.Normal(), s.Normal()}, {s.Normal(), s.Normal()}}};
    const double d1 = g1[0][0] * (g1[1][1] * g1[2][2] - g1[1][2] * g1[2][1]) -
                      g1[0][1] * (g1[1][0] * g1[2][2] - g1[1][2] * g1[2][0]) +
                      g1[0][2] * (g1[1][0] * g1[2][1] - g1[1][1] * g1[2][0]);
    const double d2 = g2[0][0] * g2[1][1] - g2[0][1] * g2[1][0];
    const double d3 = g3[0][0] * g3[1][1] - g3[0][1] * g3[1][0];
    const double lhs = SexticInvariant(Act(g1, g2, g3, f));
    const double rhs = std::pow(d1, 2) * std::pow(d2, 3) * std::pow(d3, 3) * SexticInvariant(f);
    EXPECT_NEAR(lhs, rhs, 1e-8 * (std::abs(rhs) + 1));
    // Unimodular: scale each factor by |det|^(-1/n), flipping a row if negative.
    const auto unimodular = [](auto& g, double d) {
      const double c = std::pow(std::abs(d), -1.0 / static_cast<double>(g.size()));
      for (auto& row : g) {
        for (double& v : row) v *= c;
      }
      if (d < 0) {
        for (double& v : g[0]) v = -v;
      }
    };
    unimodular(g1, d1);
    unimodular(g2, d2);
    unimodular(g3, d3);
    double scale = std::pow(Norm2(f), 6);
    for (const auto* g : {&g1[0], &g1[1], &g1[2]}) scale *= std::pow(Norm2(*g), 2);
    for (const auto* g : {&g2[0], &g2[1], &g2[0], &g2[1], &g2[0], &g2[1]}) scale *= Norm2(*g);
    for (const auto* g : {&g3[0], &g3[1], &g3[0], &g3[1], &g3[0], &g3[1]}) scale *= Norm2(*g);
    EXPECT_NEAR(SexticInvariant(Act(g1, g2, g3, f)), SexticInvariant(f), 1e-12 * scale);
  }
}

TEST(Sextic, TermTableMatchesFixture) {
  std::ifstream in("data/sextic.txt");
  ASSERT_TRUE(in) << "missing fixture";
  std::vector<std::string> vars;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int k = 1; k <= 2; ++k) {
        vars.push_back("f" + std::to_string(i) + std::to_string(j) + std::to_string(k));
      }
    }
  }
  std::string text, line;
  int lines = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    text += " " + line;
    ++lines;
  }
  EXPECT_EQ(lines, 66);
  const Polynomial p = Polynomial::Parse(text, vars);
  EXPECT_EQ(p.terms().size(), 66u);
  EXPECT_EQ(p.Degree(), 6);
  EXPECT_TRUE(p.IsHomogeneous());
  // Same multiset of terms as the compiled table.
  std::map<std::vector<int>, double> fixture, table;
  for (const Monomial& m : p.terms()) fixture[m.exponents] += m.coeff;
  for (const SexticTerm& t : SexticTerms()) {
    std::vector<int> e(12, 0);
    for (int idx : t.factors) ++e[idx];
    table[e] += t.coefficient;
  }
  EXPECT_EQ(fixture, table);
  Sampler s(64);
  for (int trial = 0; trial < 10; ++trial) {
    std::array<double, 12> f;
    for (double& v : f) v = s.Normal();
    EXPECT_NEAR(p.Evaluate(std::vector<double>(f.begin(), f.end())), SexticInvariant(f),
                1e-10);
  }
}

TEST(PlaneMaps, TwoSlitPairAndInvolution) {
  Sampler s(65);
  const TwoSlit cam{JoinPoints(Point(0, 0, 1, 0), Point(0, 0, 0, 1)),
                    JoinPoints(Point(1, 0, 0, 0), Point(0, 1, 0, 0))};
  for (int trial = 0; trial < 50; ++trial) {
    const Point x = Normalized(s.RandomPoint());
    const std::array<Point, 2> pts = PointsOnLine(Project(cam, x));
    Point y;
    for (int i = 0; i < 4; ++i) y[i] = 0.8 * pts[0][i] + 1.7 * pts[1][i];
    const auto as_point = [](const std::array<double, 3>& w) {
      return Normalized(Point(w[0], w[1], w[2], 0));
    };
    EXPECT_TRUE(Proportional(as_point(TwoSlitPlaneMap(x)), as_point(TwoSlitPlaneMap(y)), 1e-8));
    EXPECT_TRUE(
        Proportional(as_point(TwoSlitPlaneMapAlt(x)), as_point(TwoSlitPlaneMapAlt(y)), 1e-8));
    EXPECT_TRUE(Proportional(as_point(TwoSlitPlaneMapAlt(x)),
                             as_point(CremonaInvolution(TwoSlitPlaneMap(x))), 1e-8));
    // The secant map of the twisted cubic has the quadric triple as image.
    const std::array<Point, 2> sec = PointsOnLine(Project(TwistedCubic{}, x));
    Point z;
    for (int i = 0; i < 4; ++i) z[i] = -0.3 * sec[0][i] + 1.1 * sec[1][i];
    EXPECT_TRUE(Proportional(as_point(QuadricTripleCamera(x)),
                             as_point(QuadricTripleCamera(z)), 1e-7));
  }
}

}  // namespace
}  // namespace gvcam
