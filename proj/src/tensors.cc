#include "gvcam/tensors.h"

#include <Eigen/Dense>

namespace gvcam {
namespace {

bool StackInverse(const SlitMatrix<double>& a, const SlitMatrix<double>& b,
                  Mat<double, 4, 4>* inverse) {
  Eigen::Matrix4d m;
  for (int j = 0; j < 4; ++j) {
    m(0, j) = a[0][j];
    m(1, j) = a[1][j];
    m(2, j) = b[0][j];
    m(3, j) = b[1][j];
  }
  const Eigen::JacobiSVD<Eigen::Matrix4d> svd(m);
  const Eigen::Vector4d s = svd.singularValues();
  if (s(3) <= 1e-12 * s(0)) return false;
  const Eigen::Matrix4d inv = m.inverse();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) (*inverse)[i][j] = inv(i, j);
  }
  return true;
}

double Norm2(const std::array<double, 2>& v) { return std::hypot(v[0], v[1]); }

}  // namespace

Line TwoSlitFiber(const TwoSlitMatrices<double>& cam,
                  const std::array<double, 2>& u,
                  const std::array<double, 2>& v) {
  Mat<double, 4, 4> inv;
  if (!StackInverse(cam.a, cam.b, &inv)) {
    Throw(ErrorCode::kSingularStack, "stacked two-slit matrix is singular");
  }
  const Mat<double, 6, 6> d = Compound2(inv);
  // Columns 02, 03, 12, 13 of the compound.
  const double w[4] = {u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]};
  const int cols[4] = {1, 2, 3, 4};
  Line out(0, 0, 0, 0, 0, 0);
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 6; ++i) out[i] += w[k] * d[i][cols[k]];
  }
  return out;
}

ClassBetaCamera ClassBetaCamera::Normal(BinaryForm f, BinaryForm g,
                                        BinaryForm h) {
  return ClassBetaCamera{{{{1, 0, 0, 0}, {0, 1, 0, 0}}},
                         {{{0, 0, 1, 0}, {0, 0, 0, 1}}},
                         std::move(f),
                         std::move(g),
                         std::move(h)};
}

std::pair<std::array<double, 2>, std::array<double, 2>> ClassBetaProject(
    const ClassBetaCamera& cam, const Point& x) {
  const Point xn = Normalized(x);
  const std::array<double, 2> u = MatVec(cam.a, xn.c);
  const std::array<double, 2> bx = MatVec(cam.b, xn.c);
  const double fv = cam.f.IsZero() ? 0.0 : cam.f(u[0], u[1]);
  const std::array<double, 2> v = {cam.g(u[0], u[1]) - fv * bx[0],
                                   cam.h(u[0], u[1]) - fv * bx[1]};
  double scale = 0;
  for (const BinaryForm* b : {&cam.f, &cam.g, &cam.h}) {
    for (double c : b->coeffs()) scale += std::abs(c);
  }
  if (Norm2(u) <= 1e-12 || Norm2(v) <= 1e-12 * scale) {
    Throw(ErrorCode::kBaseLocus, "point lies in the base locus");
  }
  return {u, v};
}

Line ClassBetaFiber(const ClassBetaCamera& cam, const std::array<double, 2>& u,
                    const std::array<double, 2>& v) {
  Mat<double, 4, 4> inv;
  if (!StackInverse(cam.a, cam.b, &inv)) {
    Throw(ErrorCode::kSingularStack, "stacked matrix is singular");
  }
  const double fv = cam.f.IsZero() ? 0.0 : cam.f(u[0], u[1]);
  const Point xu(u[0] * fv, u[1] * fv, cam.g(u[0], u[1]), cam.h(u[0], u[1]));
  const Point lv(0, 0, v[0], v[1]);
  return ApplyCompound(Compound2(inv), JoinPoints(xu, lv));
}

Mat<double, 3, 3> FundamentalMatrix(const PinholeMatrix<double>& a,
                                    const PinholeMatrix<double>& b) {
  const Mat<double, 3, 3> f = FundamentalMatrixEntries(a, b);
  double fn = 0, an = 0, bn = 0;
  for (int i = 0; i < 3; ++i) {
    fn = std::max(fn, Norm(f[i]));
    an = std::max(an, Norm(a[i]));
    bn = std::max(bn, Norm(b[i]));
  }
  if (fn <= 1e-12 * std::pow(an * bn, 2)) {
    Throw(ErrorCode::kCoincidentCenters, "camera centers coincide");
  }
  return f;
}

std::string TensorKindName(TensorKind kind) {
  switch (kind) {
    case TensorKind::kFundamental:
      return "fundamental";
    case TensorKind::kQuadrifocal:
      return "quadrifocal";
    case TensorKind::kMixed:
      return "mixed";
  }
  return "unknown";
}

TensorKind ParseTensorKind(const std::string& name) {
  if (name == "fundamental") return TensorKind::kFundamental;
  if (name == "quadrifocal") return TensorKind::kQuadrifocal;
  if (name == "mixed") return TensorKind::kMixed;
  Throw(ErrorCode::kParseError, "unknown tensor kind '" + name + "'");
}

MultifocalTensor MakeFundamentalTensor(const Mat<double, 3, 3>& f) {
  MultifocalTensor t{TensorKind::kFundamental, {3, 3}, {}};
  for (const auto& row : f) t.entries.insert(t.entries.end(), row.begin(), row.end());
  return t;
}

MultifocalTensor MakeQuadrifocalTensor(const std::array<double, 16>& f) {
  return MultifocalTensor{TensorKind::kQuadrifocal, {2, 2, 2, 2},
                          std::vector<double>(f.begin(), f.end())};
}

MultifocalTensor MakeMixedTensor(const std::array<double, 12>& f) {
  return MultifocalTensor{TensorKind::kMixed, {3, 2, 2},
                          std::vector<double>(f.begin(), f.end())};
}

std::array<double, 3> TwoSlitPlaneMap(const Point& x) {
  return {x[0] * x[3], x[1] * x[2], x[1] * x[3]};
}

std::array<double, 3> TwoSlitPlaneMapAlt(const Point& x) {
  return {x[1] * x[2], x[0] * x[3], x[0] * x[2]};
}

std::array<double, 3> CremonaInvolution(const std::array<double, 3>& w) {
  return {w[1] * w[2], w[0] * w[2], w[0] * w[1]};
}

std::array<double, 3> QuadricTripleCamera(const Point& x) {
  return {x[0] * x[2] - x[1] * x[1], x[0] * x[3] - x[1] * x[2],
          x[1] * x[3] - x[2] * x[2]};
}

}  // namespace gvcam
