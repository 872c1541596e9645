#include "gvcam/plucker.h"

#include <Eigen/Dense>

namespace gvcam {
namespace {

Eigen::Matrix4d ToEigen(const Mat<double, 4, 4>& m) {
  Eigen::Matrix4d out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out(i, j) = m[i][j];
  }
  return out;
}

}  // namespace

double PointLineResidual(const Point& x, const Line& p) {
  return Norm(ApplyPrimal(Normalized(p), Normalized(x)));
}

double IncidenceResidual(const Line& p, const Line& q) {
  return std::abs(Incidence(Normalized(p), Normalized(q)));
}

bool PointOnLine(const Point& x, const Line& p, double tol) {
  return PointLineResidual(x, p) <= tol;
}

bool PlaneContainsLine(const Plane& u, const Line& p, double tol) {
  return Norm(ApplyDual(Normalized(p), Normalized(u))) <= tol;
}

std::array<Point, 2> PointsOnLine(const Line& p) {
  // The column space of P* is the line.
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(ToEigen(DualMatrix(Normalized(p))),
                                        Eigen::ComputeFullU);
  std::array<Point, 2> out;
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 4; ++i) out[k][i] = svd.matrixU()(i, k);
  }
  return out;
}

std::array<Plane, 2> PlanesThroughLine(const Line& p) {
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(ToEigen(PrimalMatrix(Normalized(p))),
                                        Eigen::ComputeFullU);
  std::array<Plane, 2> out;
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 4; ++i) out[k][i] = svd.matrixU()(i, k);
  }
  return out;
}

int PrimalRank(const Line& p, double tol) {
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(ToEigen(PrimalMatrix(p)));
  const Eigen::Vector4d s = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < 4; ++i) {
    if (s(i) > tol * s(0)) ++rank;
  }
  return rank;
}

}  // namespace gvcam
