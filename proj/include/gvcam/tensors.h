#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gvcam/plucker.h"
#include "gvcam/polynomial.h"

namespace gvcam {

template <typename T>
using PinholeMatrix = Mat<T, 3, 4>;

template <typename T>
using SlitMatrix = Mat<T, 2, 4>;

template <typename T>
struct TwoSlitMatrices {
  SlitMatrix<T> a;
  SlitMatrix<T> b;
};

template <typename T>
T Det4(const std::array<T, 4>& r0, const std::array<T, 4>& r1,
       const std::array<T, 4>& r2, const std::array<T, 4>& r3) {
  // Laplace expansion along the first two rows.
  const PlueckerLine<T> top = JoinPoints(ProjPoint<T>(r0), ProjPoint<T>(r1));
  const PlueckerLine<T> bot = JoinPoints(ProjPoint<T>(r2), ProjPoint<T>(r3));
  return top[0] * bot[5] - top[1] * bot[4] + top[2] * bot[3] +
         top[3] * bot[2] - top[4] * bot[1] + top[5] * bot[0];
}

template <typename T>
void CheckNonzero(const std::array<T, 3>& v, double scale) {
  if (ScalarTraits<T>::kExact ? IsZeroVector(ProjPoint<T>(v[0], v[1], v[2], T(0)))
                              : Norm(v) <= 1e-12 * scale) {
    Throw(ErrorCode::kBaseLocus, "point lies in the base locus");
  }
}

template <typename T>
std::array<T, 3> PinholeProject(const PinholeMatrix<T>& a,
                                const ProjPoint<T>& x) {
  const std::array<T, 3> w = MatVec(a, x.c);
  double scale = Norm(x.c);
  double an = 0;
  for (const auto& row : a) an = std::max(an, Norm(row));
  CheckNonzero(w, scale * an);
  return w;
}

template <typename T>
std::pair<std::array<T, 2>, std::array<T, 2>> TwoSlitProject(
    const TwoSlitMatrices<T>& cam, const ProjPoint<T>& x) {
  const std::array<T, 2> u = MatVec(cam.a, x.c);
  const std::array<T, 2> v = MatVec(cam.b, x.c);
  double an = 0;
  for (const auto& row : cam.a) an = std::max(an, Norm(row));
  for (const auto& row : cam.b) an = std::max(an, Norm(row));
  const double scale = an * Norm(x.c);
  CheckNonzero(std::array<T, 3>{u[0], u[1], T(0)}, scale);
  CheckNonzero(std::array<T, 3>{v[0], v[1], T(0)}, scale);
  return {u, v};
}

template <typename T>
PlueckerLine<T> RowMeet(const std::array<T, 4>& a, const std::array<T, 4>& b) {
  return JoinPlanes(ProjPlane<T>(a), ProjPlane<T>(b));
}

// Fiber over the image point w: w0 (A1^A2) - w1 (A0^A2) + w2 (A0^A1), where
// Ai^Aj is the line cut out by the two row planes.
template <typename T>
PlueckerLine<T> PinholeFiber(const PinholeMatrix<T>& a,
                             const std::array<T, 3>& w) {
  const PlueckerLine<T> l0 = RowMeet(a[1], a[2]);
  const PlueckerLine<T> l1 = RowMeet(a[0], a[2]);
  const PlueckerLine<T> l2 = RowMeet(a[0], a[1]);
  PlueckerLine<T> out;
  for (int i = 0; i < 6; ++i) out[i] = w[0] * l0[i] - w[1] * l1[i] + w[2] * l2[i];
  return out;
}

// Fiber over (u, v): bilinear combination of columns 02, 03, 12, 13 of the
// second compound of [A; B]^-1. Throws SingularStack.
Line TwoSlitFiber(const TwoSlitMatrices<double>& cam,
                  const std::array<double, 2>& u,
                  const std::array<double, 2>& v);

// Same line written with the rows: sum (-1)^(i+j) u_i v_j (A_î ^ B_ĵ).
template <typename T>
PlueckerLine<T> TwoSlitFiberFromRows(const TwoSlitMatrices<T>& cam,
                                     const std::array<T, 2>& u,
                                     const std::array<T, 2>& v) {
  PlueckerLine<T> out(T(0), T(0), T(0), T(0), T(0), T(0));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const PlueckerLine<T> l = RowMeet(cam.a[1 - i], cam.b[1 - j]);
      const T c = ((i + j) % 2 == 0 ? T(1) : T(-1)) * u[i] * v[j];
      for (int k = 0; k < 6; ++k) out[k] += c * l[k];
    }
  }
  return out;
}

// Camera of class beta: x -> (Ax, (g(Ax) - f(Ax) B1 x, h(Ax) - f(Ax) B2 x)).
struct ClassBetaCamera {
  SlitMatrix<double> a;
  SlitMatrix<double> b;
  BinaryForm f;
  BinaryForm g;
  BinaryForm h;

  // A = rows (e0, e1), B = rows (e2, e3).
  static ClassBetaCamera Normal(BinaryForm f, BinaryForm g, BinaryForm h);
};

std::pair<std::array<double, 2>, std::array<double, 2>> ClassBetaProject(
    const ClassBetaCamera& cam, const Point& x);

// The join of X(u) = (u0 f(u), u1 f(u), g(u), h(u)) with (0 : 0 : v0 : v1),
// mapped to world coordinates.
Line ClassBetaFiber(const ClassBetaCamera& cam, const std::array<double, 2>& u,
                    const std::array<double, 2>& v);

// F[l][i] = (-1)^(i+l) det[A_j, A_k, B_m, B_n] so that (Bx)^T F (Ax) = 0.
template <typename T>
Mat<T, 3, 3> FundamentalMatrixEntries(const PinholeMatrix<T>& a,
                                      const PinholeMatrix<T>& b) {
  static constexpr int kRest[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  Mat<T, 3, 3> f;
  for (int l = 0; l < 3; ++l) {
    for (int i = 0; i < 3; ++i) {
      const T d = Det4(a[kRest[i][0]], a[kRest[i][1]], b[kRest[l][0]],
                       b[kRest[l][1]]);
      f[l][i] = (i + l) % 2 == 0 ? d : T(-d);
    }
  }
  return f;
}

// Throws CoincidentCenters when F vanishes.
Mat<double, 3, 3> FundamentalMatrix(const PinholeMatrix<double>& a,
                                    const PinholeMatrix<double>& b);

template <typename T>
T EpipolarForm(const Mat<T, 3, 3>& f, const std::array<T, 3>& w,
               const std::array<T, 3>& wp) {
  T s(0);
  for (int l = 0; l < 3; ++l) {
    for (int i = 0; i < 3; ++i) s += wp[l] * f[l][i] * w[i];
  }
  return s;
}

// Entries f_ijkl = (-1)^(i+j+k+l) det[A_î, B_ĵ, C_k̂, D_l̂], flattened as
// 8i + 4j + 2k + l.
template <typename T>
std::array<T, 16> QuadrifocalTensor(const TwoSlitMatrices<T>& first,
                                    const TwoSlitMatrices<T>& second) {
  std::array<T, 16> f;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          const T d = Det4(first.a[1 - i], first.b[1 - j], second.a[1 - k],
                           second.b[1 - l]);
          f[8 * i + 4 * j + 2 * k + l] = (i + j + k + l) % 2 == 0 ? d : T(-d);
        }
      }
    }
  }
  return f;
}

template <typename T>
T QuadrifocalForm(const std::array<T, 16>& f, const std::array<T, 2>& u,
                  const std::array<T, 2>& v, const std::array<T, 2>& up,
                  const std::array<T, 2>& vp) {
  T s(0);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          s += f[8 * i + 4 * j + 2 * k + l] * u[i] * v[j] * up[k] * vp[l];
        }
      }
    }
  }
  return s;
}

// Entries f_ijk = (-1)^(i+j+k) det[A_l, A_m, B_ĵ, C_k̂] for a pinhole A and a
// two-slit (B, C), flattened as 4i + 2j + k.
template <typename T>
std::array<T, 12> MixedEpipolarTensor(const PinholeMatrix<T>& a,
                                      const TwoSlitMatrices<T>& bc) {
  static constexpr int kRest[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  std::array<T, 12> f;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        const T d = Det4(a[kRest[i][0]], a[kRest[i][1]], bc.a[1 - j],
                         bc.b[1 - k]);
        f[4 * i + 2 * j + k] = (i + j + k) % 2 == 0 ? d : T(-d);
      }
    }
  }
  return f;
}

template <typename T>
T MixedForm(const std::array<T, 12>& f, const std::array<T, 3>& w,
            const std::array<T, 2>& u, const std::array<T, 2>& v) {
  T s(0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) s += f[4 * i + 2 * j + k] * w[i] * u[j] * v[k];
    }
  }
  return s;
}

struct SexticTerm {
  int coefficient;
  // Six entry indices (4i + 2j + k), repeated according to multiplicity.
  std::array<int, 6> factors;
};

std::span<const SexticTerm> SexticTerms();

// The degree-6 invariant of 3x2x2 tensors vanishing on mixed epipolar
// tensors.
template <typename T>
T SexticInvariant(const std::array<T, 12>& f) {
  T total(0);
  for (const SexticTerm& term : SexticTerms()) {
    T m(term.coefficient);
    for (int idx : term.factors) m *= f[idx];
    total += m;
  }
  return total;
}

enum class TensorKind { kFundamental, kQuadrifocal, kMixed };

std::string TensorKindName(TensorKind kind);
TensorKind ParseTensorKind(const std::string& name);

struct MultifocalTensor {
  TensorKind kind = TensorKind::kFundamental;
  std::vector<int> shape;
  // Row-major entries.
  std::vector<double> entries;
};

MultifocalTensor MakeFundamentalTensor(const Mat<double, 3, 3>& f);
MultifocalTensor MakeQuadrifocalTensor(const std::array<double, 16>& f);
MultifocalTensor MakeMixedTensor(const std::array<double, 12>& f);

// Photographic maps to the plane with the same fibers as the two-slit camera
// with slits V(x2,x3), V(x0,x1), and the quadratic involution relating them.
std::array<double, 3> TwoSlitPlaneMap(const Point& x);
std::array<double, 3> TwoSlitPlaneMapAlt(const Point& x);
std::array<double, 3> CremonaInvolution(const std::array<double, 3>& w);

// The 2x2 minors of [[x0, x1, x2], [x1, x2, x3]]; fibers are secants of the
// twisted cubic.
std::array<double, 3> QuadricTripleCamera(const Point& x);

}  // namespace gvcam
