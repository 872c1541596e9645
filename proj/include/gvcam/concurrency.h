#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gvcam/plucker.h"

namespace gvcam {

// The ten vectors e1..e4, e1+e2, ..., e3+e4 at which the cubic minors are
// evaluated (0-based coordinates).
inline constexpr std::array<std::array<int, 4>, 10> kCubicDirections = {{
    {1, 0, 0, 0},
    {0, 1, 0, 0},
    {0, 0, 1, 0},
    {0, 0, 0, 1},
    {1, 1, 0, 0},
    {1, 0, 1, 0},
    {1, 0, 0, 1},
    {0, 1, 1, 0},
    {0, 1, 0, 1},
    {0, 0, 1, 1},
}};

template <typename T>
ProjPoint<T> CubicDirection(int k) {
  const auto& u = kCubicDirections[k];
  return ProjPoint<T>(T(u[0]), T(u[1]), T(u[2]), T(u[3]));
}

// Row dropped by the canonical minor: the coordinate of u with the largest
// magnitude (first one on ties).
template <typename T>
int CanonicalMinorRow(const ProjPoint<T>& u) {
  int r = 0;
  for (int i = 1; i < 4; ++i) {
    if (ScalarTraits<T>::Magnitude(u[i]) > ScalarTraits<T>::Magnitude(u[r])) {
      r = i;
    }
  }
  return r;
}

// Determinant of the 4x3 matrix [a b c] with row `drop` removed.
template <typename T>
T Minor3(const std::array<T, 4>& a, const std::array<T, 4>& b,
         const std::array<T, 4>& c, int drop) {
  int rows[3];
  for (int i = 0, k = 0; i < 4; ++i) {
    if (i != drop) rows[k++] = i;
  }
  const int r0 = rows[0], r1 = rows[1], r2 = rows[2];
  return a[r0] * (b[r1] * c[r2] - b[r2] * c[r1]) -
         b[r0] * (a[r1] * c[r2] - a[r2] * c[r1]) +
         c[r0] * (a[r1] * b[r2] - a[r2] * b[r1]);
}

// All four 3x3 minors of (Pu, Qu, Ru).
template <typename T>
std::array<T, 4> TransversalMinors(const PlueckerLine<T>& p,
                                   const PlueckerLine<T>& q,
                                   const PlueckerLine<T>& r,
                                   const ProjPoint<T>& u) {
  const auto a = ApplyPrimal(p, u).c;
  const auto b = ApplyPrimal(q, u).c;
  const auto c = ApplyPrimal(r, u).c;
  return {Minor3(a, b, c, 0), Minor3(a, b, c, 1), Minor3(a, b, c, 2),
          Minor3(a, b, c, 3)};
}

// T_u: vanishes iff the planes u v p, u v q, u v r are dependent.
template <typename T>
T TrilinearTransversal(const PlueckerLine<T>& p, const PlueckerLine<T>& q,
                       const PlueckerLine<T>& r, const ProjPoint<T>& u) {
  const auto a = ApplyPrimal(p, u).c;
  const auto b = ApplyPrimal(q, u).c;
  const auto c = ApplyPrimal(r, u).c;
  return Minor3(a, b, c, CanonicalMinorRow(u));
}

template <typename T>
std::array<T, 10> CubicGenerators(const PlueckerLine<T>& p,
                                  const PlueckerLine<T>& q,
                                  const PlueckerLine<T>& r) {
  std::array<T, 10> out;
  for (int k = 0; k < 10; ++k) {
    out[k] = TrilinearTransversal(p, q, r, CubicDirection<T>(k));
  }
  return out;
}

// Minors of (P*u, Q*u, R*u): vanish on coplanar triples.
template <typename T>
std::array<T, 10> CoplanarCubics(const PlueckerLine<T>& p,
                                 const PlueckerLine<T>& q,
                                 const PlueckerLine<T>& r) {
  std::array<T, 10> out;
  for (int k = 0; k < 10; ++k) {
    const ProjPoint<T> d = CubicDirection<T>(k);
    const ProjPlane<T> u(d.c);
    const auto a = ApplyDual(p, u).c;
    const auto b = ApplyDual(q, u).c;
    const auto c = ApplyDual(r, u).c;
    out[k] = Minor3(a, b, c, CanonicalMinorRow(d));
  }
  return out;
}

template <typename T>
struct GeneratorValues {
  // trace(P_i P_j*) for i <= j, in row-major pair order.
  std::vector<std::array<int, 2>> quadric_index;
  std::vector<T> quadrics;
  // Ten cubic minors per triple i < j < k.
  std::vector<std::array<int, 3>> cubic_index;
  std::vector<std::array<T, 10>> cubics;
};

template <typename T>
GeneratorValues<T> EvaluateGeneratorValues(
    const std::vector<PlueckerLine<T>>& lines) {
  GeneratorValues<T> out;
  const int n = static_cast<int>(lines.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      out.quadric_index.push_back({i, j});
      out.quadrics.push_back(Incidence(lines[i], lines[j]));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        out.cubic_index.push_back({i, j, k});
        out.cubics.push_back(CubicGenerators(lines[i], lines[j], lines[k]));
      }
    }
  }
  return out;
}

struct GeneratorReport {
  int n = 0;
  std::vector<std::array<int, 2>> quadric_index;
  std::vector<double> quadric_residuals;
  std::vector<std::array<int, 3>> cubic_index;
  std::vector<std::array<double, 10>> cubic_residuals;
  double max_quadric = 0;
  double max_cubic = 0;
  double max_relative_residual = 0;
};

// Absolute generator values on unit-normalized lines.
GeneratorReport EvaluateGenerators(const std::vector<Line>& lines);

// Quadric part only.
std::vector<double> QuadricGenerators(const std::vector<Line>& lines);

// Common point of the lines from the SVD of the stacked primal matrices.
// Returns nullopt when sigma4/sigma3 >= tol; throws AmbiguousPencil when the
// nullspace is at least two-dimensional.
std::optional<Point> FindCommonPoint(const std::vector<Line>& lines,
                                     double tol = kDefaultTolerance);

// Singular values (descending) of the stacked, normalized primal matrices.
std::array<double, 4> StackedSingularValues(const std::vector<Line>& lines);

// Decision by checking every triple separately (n >= 3).
bool ConcurrentByTriples(const std::vector<Line>& lines,
                         double tol = kDefaultTolerance);

std::int64_t Binomial(int n, int k);

struct MultidegreeTerm {
  std::int64_t coefficient = 0;
  std::vector<int> exponents;
};

class MultidegreePolynomial {
 public:
  explicit MultidegreePolynomial(std::vector<MultidegreeTerm> terms)
      : terms_(std::move(terms)) {}

  const std::vector<MultidegreeTerm>& terms() const { return terms_; }
  std::int64_t CoefficientSum() const;
  std::int64_t Coefficient(const std::vector<int>& exponents) const;
  // Terms joined by " + ", each like "4*t1^3*t2^3*t3^2*t4".
  std::string ToString() const;
  static std::string TermToString(const MultidegreeTerm& term);

 private:
  std::vector<MultidegreeTerm> terms_;
};

// Multidegree of the variety of n concurrent lines. Throws InvalidN for n < 2.
MultidegreePolynomial Multidegree(int n);

struct ConcurrencyGeneratorCounts {
  std::int64_t minimal_quadrics = 0;
  std::int64_t minimal_cubics = 0;
  std::int64_t groebner_quadrics = 0;
  std::int64_t groebner_cubics = 0;
  std::int64_t groebner_quartics = 0;
};

ConcurrencyGeneratorCounts GeneratorCounts(int n);

}  // namespace gvcam
