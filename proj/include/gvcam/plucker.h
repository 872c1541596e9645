#pragma once

#include <algorithm>
#include <array>
#include <ostream>
#include <cmath>
#include <limits>
#include <vector>

#include "gvcam/error.h"
#include "gvcam/scalar.h"

namespace gvcam {

template <typename T, int R, int C>
using Mat = std::array<std::array<T, C>, R>;

struct PointTag {};
struct PlaneTag {};
struct LineTag {};

// Homogeneous coordinate vector. Equality is only meaningful up to scale, see
// ProjectiveDistance.
template <typename T, int N, typename Tag>
struct Homogeneous {
  std::array<T, N> c{};

  Homogeneous() = default;
  explicit Homogeneous(const std::array<T, N>& v) : c(v) {}
  Homogeneous(T a, T b, T d, T e)
    requires(N == 4)
      : c{a, b, d, e} {}
  Homogeneous(T a, T b, T d, T e, T f, T g)
    requires(N == 6)
      : c{a, b, d, e, f, g} {}

  T& operator[](int i) { return c[i]; }
  const T& operator[](int i) const { return c[i]; }
  static constexpr int size() { return N; }

  // Exact componentwise comparison, not projective equality.
  bool operator==(const Homogeneous& o) const { return c == o.c; }

  template <typename U>
  Homogeneous<U, N, Tag> Cast() const {
    Homogeneous<U, N, Tag> out;
    for (int i = 0; i < N; ++i) {
      if constexpr (std::is_same_v<T, Rational> && !std::is_same_v<U, Rational>) {
        out.c[i] = U(c[i].get_d());
      } else {
        out.c[i] = U(c[i]);
      }
    }
    return out;
  }
};

template <typename T, int N, typename Tag>
std::ostream& operator<<(std::ostream& os, const Homogeneous<T, N, Tag>& v) {
  os << '(';
  for (int i = 0; i < N; ++i) os << (i ? ", " : "") << v.c[i];
  return os << ')';
}

template <typename T>
using ProjPoint = Homogeneous<T, 4, PointTag>;
template <typename T>
using ProjPlane = Homogeneous<T, 4, PlaneTag>;
template <typename T>
using PlueckerLine = Homogeneous<T, 6, LineTag>;

using Point = ProjPoint<double>;
using Plane = ProjPlane<double>;
using Line = PlueckerLine<double>;
using ComplexPoint = ProjPoint<Complex>;
using ComplexLine = PlueckerLine<Complex>;

using SkewMatrix4 = Mat<double, 4, 4>;

// Index pairs of the coordinate order (01,02,03,12,13,23).
inline constexpr std::array<std::array<int, 2>, 6> kLinePairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline constexpr int LineIndex(int i, int j) {
  // Position of p_ij (i < j) in the coordinate order.
  return i == 0 ? j - 1 : (i == 1 ? j + 1 : 5);
}

template <typename T, std::size_t N>
double Norm(const std::array<T, N>& v) {
  double s = 0;
  for (const T& x : v) {
    const double m = ScalarTraits<T>::Magnitude(x);
    s += m * m;
  }
  return std::sqrt(s);
}

template <typename T, int N, typename Tag>
double Norm(const Homogeneous<T, N, Tag>& v) {
  return Norm(v.c);
}

template <typename T, int N, typename Tag>
bool IsZeroVector(const Homogeneous<T, N, Tag>& v) {
  return std::all_of(v.c.begin(), v.c.end(),
                     [](const T& x) { return IsZero(x); });
}

// Scaled to unit Euclidean norm (floating types only).
template <typename T, int N, typename Tag>
Homogeneous<T, N, Tag> Normalized(const Homogeneous<T, N, Tag>& v) {
  const double n = Norm(v);
  Homogeneous<T, N, Tag> out = v;
  if (n > 0) {
    for (T& x : out.c) x /= n;
  }
  return out;
}

// Vanishing test used by the checked constructors: exact zero in rational
// mode, relative to `scale` otherwise.
template <typename T, int N, typename Tag>
bool IsNegligible(const Homogeneous<T, N, Tag>& v, double scale, double tol) {
  if constexpr (ScalarTraits<T>::kExact) {
    return IsZeroVector(v);
  } else {
    return Norm(v) <= tol * scale;
  }
}

template <typename T>
PlueckerLine<T> JoinPoints(const ProjPoint<T>& x, const ProjPoint<T>& y) {
  PlueckerLine<T> p;
  for (int k = 0; k < 6; ++k) {
    const int i = kLinePairs[k][0];
    const int j = kLinePairs[k][1];
    p.c[k] = x.c[i] * y.c[j] - x.c[j] * y.c[i];
  }
  return p;
}

template <typename T>
PlueckerLine<T> DualLine(const PlueckerLine<T>& p) {
  return PlueckerLine<T>(p[5], -p[4], p[3], p[2], -p[1], p[0]);
}

template <typename T>
PlueckerLine<T> JoinPlanes(const ProjPlane<T>& a, const ProjPlane<T>& b) {
  // Minors of the two covectors are the dual coordinates of the meet line.
  const ProjPoint<T> as(a.c);
  const ProjPoint<T> bs(b.c);
  return DualLine(JoinPoints(as, bs));
}

template <typename T>
PlueckerLine<T> LineFromPoints(const ProjPoint<T>& x, const ProjPoint<T>& y,
                               double tol = kDefaultTolerance) {
  PlueckerLine<T> p = JoinPoints(x, y);
  if (IsNegligible(p, Norm(x) * Norm(y), tol)) {
    Throw(ErrorCode::kDegenerateInput, "line_from_points: points coincide");
  }
  return p;
}

template <typename T>
PlueckerLine<T> LineFromPlanes(const ProjPlane<T>& a, const ProjPlane<T>& b,
                               double tol = kDefaultTolerance) {
  PlueckerLine<T> p = JoinPlanes(a, b);
  if (IsNegligible(p, Norm(a) * Norm(b), tol)) {
    Throw(ErrorCode::kDegenerateInput, "line_from_planes: planes coincide");
  }
  return p;
}

template <typename T>
Mat<T, 4, 4> PrimalMatrix(const PlueckerLine<T>& p) {
  const T z(0);
  return {{{z, p[5], -p[4], p[3]},
           {-p[5], z, p[2], -p[1]},
           {p[4], -p[2], z, p[0]},
           {-p[3], p[1], -p[0], z}}};
}

template <typename T>
Mat<T, 4, 4> DualMatrix(const PlueckerLine<T>& p) {
  const T z(0);
  return {{{z, p[0], p[1], p[2]},
           {-p[0], z, p[3], p[4]},
           {-p[1], -p[3], z, p[5]},
           {-p[2], -p[4], -p[5], z}}};
}

template <typename T>
T PluckerQuadric(const PlueckerLine<T>& p) {
  return p[2] * p[3] - p[1] * p[4] + p[0] * p[5];
}

template <typename T>
T Incidence(const PlueckerLine<T>& p, const PlueckerLine<T>& q) {
  const Mat<T, 4, 4> a = PrimalMatrix(p);
  const Mat<T, 4, 4> b = DualMatrix(q);
  T tr(0);
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) tr += a[i][k] * b[k][i];
  }
  return tr;
}

template <typename T, std::size_t R, std::size_t C>
std::array<T, R> MatVec(const std::array<std::array<T, C>, R>& m,
                        const std::array<T, C>& v) {
  std::array<T, R> out;
  for (std::size_t i = 0; i < R; ++i) {
    T s(0);
    for (std::size_t k = 0; k < C; ++k) s += m[i][k] * v[k];
    out[i] = s;
  }
  return out;
}

// P x without the degeneracy check.
template <typename T>
ProjPlane<T> ApplyPrimal(const PlueckerLine<T>& p, const ProjPoint<T>& x) {
  return ProjPlane<T>(MatVec(PrimalMatrix(p), x.c));
}

// P* u without the degeneracy check.
template <typename T>
ProjPoint<T> ApplyDual(const PlueckerLine<T>& p, const ProjPlane<T>& u) {
  return ProjPoint<T>(MatVec(DualMatrix(p), u.c));
}

template <typename T>
ProjPlane<T> JoinPlane(const PlueckerLine<T>& p, const ProjPoint<T>& x,
                       double tol = kDefaultTolerance) {
  ProjPlane<T> u = ApplyPrimal(p, x);
  if (IsNegligible(u, Norm(p) * Norm(x), tol)) {
    Throw(ErrorCode::kDegenerateInput, "join_plane: point lies on the line");
  }
  return u;
}

template <typename T>
ProjPoint<T> MeetPoint(const PlueckerLine<T>& p, const ProjPlane<T>& u,
                       double tol = kDefaultTolerance) {
  ProjPoint<T> x = ApplyDual(p, u);
  if (IsNegligible(x, Norm(p) * Norm(u), tol)) {
    Throw(ErrorCode::kDegenerateInput, "meet_point: plane contains the line");
  }
  return x;
}

// Second compound matrix: maps x ^ y to (Mx) ^ (My).
template <typename T>
Mat<T, 6, 6> Compound2(const Mat<T, 4, 4>& m) {
  Mat<T, 6, 6> out;
  for (int r = 0; r < 6; ++r) {
    const int a = kLinePairs[r][0];
    const int b = kLinePairs[r][1];
    for (int s = 0; s < 6; ++s) {
      const int c = kLinePairs[s][0];
      const int d = kLinePairs[s][1];
      out[r][s] = m[a][c] * m[b][d] - m[a][d] * m[b][c];
    }
  }
  return out;
}

template <typename T>
PlueckerLine<T> ApplyCompound(const Mat<T, 6, 6>& m, const PlueckerLine<T>& p) {
  return PlueckerLine<T>(MatVec(m, p.c));
}

template <typename T, int N>
Mat<T, N, N> MatMul(const Mat<T, N, N>& a, const Mat<T, N, N>& b) {
  Mat<T, N, N> out;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      T s(0);
      for (int k = 0; k < N; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s;
    }
  }
  return out;
}

template <typename T, int N, typename Tag>
std::array<T, N> ScaledByMaxEntry(const Homogeneous<T, N, Tag>& v) {
  int k = 0;
  for (int i = 1; i < N; ++i) {
    if (ScalarTraits<T>::Magnitude(v.c[i]) >
        ScalarTraits<T>::Magnitude(v.c[k])) {
      k = i;
    }
  }
  std::array<T, N> out = v.c;
  if (!IsZero(v.c[k])) {
    for (T& x : out) x /= v.c[k];
  }
  return out;
}

// Projective distance: both vectors are divided by the coordinate where `a`
// has its largest magnitude, then compared componentwise (max norm).
template <typename T, int N, typename Tag>
double ProjectiveDistance(const Homogeneous<T, N, Tag>& a,
                          const Homogeneous<T, N, Tag>& b) {
  int k = 0;
  for (int i = 1; i < N; ++i) {
    if (ScalarTraits<T>::Magnitude(a.c[i]) >
        ScalarTraits<T>::Magnitude(a.c[k])) {
      k = i;
    }
  }
  const double inf = std::numeric_limits<double>::infinity();
  if (ScalarTraits<T>::Magnitude(b.c[k]) == 0 ||
      ScalarTraits<T>::Magnitude(a.c[k]) == 0) {
    return inf;
  }
  double d = 0;
  for (int i = 0; i < N; ++i) {
    const T da = a.c[i] / a.c[k];
    const T db = b.c[i] / b.c[k];
    d = std::max(d, ScalarTraits<T>::Magnitude(da - db));
  }
  return d;
}

// True iff ||P x|| <= tol after unit normalization of p and x.
bool PointOnLine(const Point& x, const Line& p, double tol = kDefaultTolerance);
bool PlaneContainsLine(const Plane& u, const Line& p,
                       double tol = kDefaultTolerance);

// ||P x|| for unit p and x.
double PointLineResidual(const Point& x, const Line& p);
// |incidence| for unit p and q.
double IncidenceResidual(const Line& p, const Line& q);

// Two independent points spanning p, and two planes containing p.
std::array<Point, 2> PointsOnLine(const Line& p);
std::array<Plane, 2> PlanesThroughLine(const Line& p);

// Numerical rank of the skew matrix of p with relative threshold tol.
int PrimalRank(const Line& p, double tol = 1e-10);

}  // namespace gvcam
