#include "gvcam/catadioptric.h"

#include <cmath>
#include <limits>

namespace gvcam {
namespace {

constexpr double kRealRootTol = 1e-7;

std::vector<double> PolyMul(const std::vector<double>& a,
                            const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Points where the real line `l` (lying in the plane x3 = 0) meets the circle
// x1^2 + x2^2 = x0^2.
std::array<ComplexPoint, 2> CircleCut(const Line& l) {
  const std::array<Point, 2> pq = PointsOnLine(l);
  const auto q = [](const Point& a, const Point& b) {
    return a[1] * b[1] + a[2] * b[2] - a[0] * b[0];
  };
  const Point& a = pq[0];
  const Point& b = pq[1];
  // q(s a + t b) = A s^2 + 2 B s t + C t^2.
  const BinaryForm form({q(a, a), 2 * q(a, b), q(b, b)});
  const std::vector<std::array<Complex, 2>> roots = form.Roots();
  if (roots.size() != 2) {
    Throw(ErrorCode::kFocalConfiguration, "plane section misses the circle");
  }
  std::array<ComplexPoint, 2> out;
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 4; ++i) {
      out[k][i] = roots[k][0] * a[i] + roots[k][1] * b[i];
    }
  }
  return out;
}

ComplexPoint ToComplex(const Point& x) {
  return ComplexPoint(Complex(x[0]), Complex(x[1]), Complex(x[2]),
                      Complex(x[3]));
}

PanoramicFiber MakeFiber(const ComplexLine& line) {
  PanoramicFiber f;
  f.line = Normalized(line);
  // Remove the common phase so real lines have negligible imaginary parts.
  int k = 0;
  for (int i = 1; i < 6; ++i) {
    if (std::abs(f.line[i]) > std::abs(f.line[k])) k = i;
  }
  const Complex phase = std::abs(f.line[k]) / f.line[k];
  double imag = 0;
  for (int i = 0; i < 6; ++i) {
    f.line[i] *= phase;
    imag = std::max(imag, std::abs(f.line[i].imag()));
  }
  f.is_real = imag < kRealRootTol;
  return f;
}

}  // namespace

double DirectionCos(const Point& x, const Point& y) {
  const double xx = x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  const double yy = y[1] * y[1] + y[2] * y[2] + y[3] * y[3];
  const double xy = x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
  if (std::abs(x[0]) > 1e-12 * Norm(x) || std::abs(y[0]) > 1e-12 * Norm(y)) {
    Throw(ErrorCode::kDegenerateInput, "directions must lie at infinity");
  }
  if (xx <= 1e-24 * Norm(x) * Norm(x) || yy <= 1e-24 * Norm(y) * Norm(y)) {
    Throw(ErrorCode::kIsotropicDirection, "isotropic direction");
  }
  return xy / std::sqrt(xx * yy);
}

MirrorSurface::MirrorSurface(std::map<Exponent, double> coeffs) {
  degree_ = -1;
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->second == 0) {
      it = coeffs.erase(it);
      continue;
    }
    const int d = it->first[0] + it->first[1] + it->first[2] + it->first[3];
    for (int e : it->first) {
      if (e < 0) Throw(ErrorCode::kDegenerateInput, "negative exponent");
    }
    if (degree_ >= 0 && d != degree_) {
      Throw(ErrorCode::kDegenerateInput, "surface polynomial is not homogeneous");
    }
    degree_ = d;
    ++it;
  }
  if (degree_ <= 0) {
    Throw(ErrorCode::kDegenerateInput, "surface polynomial is constant");
  }
  coeffs_ = std::move(coeffs);
}

MirrorSurface MirrorSurface::FromExponentStrings(
    const std::map<std::string, double>& coeffs) {
  std::map<Exponent, double> out;
  for (const auto& [key, value] : coeffs) {
    if (key.size() != 4) {
      Throw(ErrorCode::kParseError, "exponent string must have 4 digits: " + key);
    }
    Exponent e;
    for (int i = 0; i < 4; ++i) {
      if (key[i] < '0' || key[i] > '9') {
        Throw(ErrorCode::kParseError, "bad exponent string: " + key);
      }
      e[i] = key[i] - '0';
    }
    out[e] += value;
  }
  return MirrorSurface(std::move(out));
}

double MirrorSurface::AbsCoeffSum() const {
  double s = 0;
  for (const auto& [e, c] : coeffs_) s += std::abs(c);
  return s;
}

std::array<double, 4> MirrorSurface::Gradient(const Point& x) const {
  std::array<double, 4> g = {0, 0, 0, 0};
  for (const auto& [e, c] : coeffs_) {
    for (int v = 0; v < 4; ++v) {
      if (e[v] == 0) continue;
      double m = c * e[v];
      for (int i = 0; i < 4; ++i) {
        const int p = i == v ? e[i] - 1 : e[i];
        for (int k = 0; k < p; ++k) m *= x[i];
      }
      g[v] += m;
    }
  }
  return g;
}

BinaryForm MirrorSurface::Restrict(const Point& a, const Point& b) const {
  // Coefficient k of the result multiplies s^(d-k) t^k, i.e. the t^k term of
  // f(a + t b).
  std::vector<double> total(degree_ + 1, 0.0);
  for (const auto& [e, c] : coeffs_) {
    std::vector<double> poly = {c};
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < e[i]; ++k) poly = PolyMul(poly, {a[i], b[i]});
    }
    for (size_t k = 0; k < poly.size(); ++k) total[k] += poly[k];
  }
  return BinaryForm(std::move(total));
}

MirrorSurface FocalEllipsoid() {
  return MirrorSurface({{{0, 2, 0, 0}, 1.0 / 16},
                        {{0, 0, 2, 0}, 1.0 / 16},
                        {{0, 0, 0, 2}, 1.0 / 25},
                        {{2, 0, 0, 0}, -1.0}});
}

Plane TangentPlane(const MirrorSurface& s, const Point& x, double tol) {
  const Point xn = Normalized(x);
  const double scale = s.AbsCoeffSum();
  if (std::abs(s.Evaluate(xn.c)) > tol * scale) {
    Throw(ErrorCode::kNotOnSurface, "point is not on the surface");
  }
  const Plane g(s.Gradient(xn));
  if (Norm(g) <= 1e-10 * scale) {
    Throw(ErrorCode::kSingularPoint, "surface is singular at the point");
  }
  return g;
}

Line SpecularPair(const MirrorSurface& s, const Point& x, const Line& l,
                  double tol) {
  const Plane h = TangentPlane(s, x, tol);
  if (PointLineResidual(x, l) > tol) {
    Throw(ErrorCode::kDegenerateInput, "point is not on the line");
  }
  try {
    return ReflectLine(h, l);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kIsotropicPlane) throw;
    Throw(ErrorCode::kIsotropicTangent, "tangent plane is isotropic");
  }
}

std::vector<SurfaceHit> LineSurfaceIntersections(const MirrorSurface& s,
                                                 const Line& l) {
  const std::array<Point, 2> pq = PointsOnLine(l);
  const BinaryForm form = s.Restrict(pq[0], pq[1]);
  std::vector<SurfaceHit> hits;
  if (form.IsZero() || form.MaxAbsCoeff() <= 1e-14 * s.AbsCoeffSum()) {
    Throw(ErrorCode::kDegenerateInput, "line lies on the surface");
  }
  const double scale = s.AbsCoeffSum();
  for (const auto& r : form.Roots()) {
    const double im = std::max(std::abs(r[0].imag()), std::abs(r[1].imag()));
    if (im >= kRealRootTol) continue;
    // Roots are unit normalized up to a phase; rotate to the real axis.
    const Complex big = std::abs(r[0]) >= std::abs(r[1]) ? r[0] : r[1];
    const Complex phase = std::abs(big) / big;
    const double a = (r[0] * phase).real();
    const double b = (r[1] * phase).real();
    SurfaceHit hit;
    for (int i = 0; i < 4; ++i) hit.point[i] = a * pq[0][i] + b * pq[1][i];
    hit.point = Normalized(hit.point);
    hit.singular = Norm(s.Gradient(hit.point)) <= 1e-8 * scale;
    hits.push_back(hit);
  }
  return hits;
}

double MirrorPairResidual(const MirrorSurface& s, const Line& l,
                          const Line& lp) {
  const Line ln = Normalized(l);
  const Line lpn = Normalized(lp);
  double best = std::numeric_limits<double>::infinity();
  for (const SurfaceHit& hit : LineSurfaceIntersections(s, ln)) {
    if (hit.singular) {
      Throw(ErrorCode::kSingularIntersection,
            "line meets the surface at a singular point");
    }
    Line reflected;
    try {
      reflected = Normalized(ReflectLine(Plane(s.Gradient(hit.point)), ln));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kIsotropicPlane) throw;
      continue;
    }
    best = std::min(best, ProjectiveDistance(reflected, lpn));
  }
  return best;
}

Line PanoramicFiber::RealPart() const {
  Line out;
  for (int i = 0; i < 6; ++i) out[i] = line[i].real();
  return out;
}

std::vector<PanoramicFiber> PanoramicFibers(const GeometricCamera& cam,
                                            const Point& x) {
  const Point xn = Normalized(x);
  const Line axis(0, 0, 1, 0, 0, 0);  // V(x1, x2)
  const Plane ground(0, 0, 0, 1);
  constexpr double kFocalTol = 1e-10;
  std::vector<PanoramicFiber> out;
  if (std::holds_alternative<PanoramicNC>(cam)) {
    if (FocalResidual(cam, xn) <= kFocalTol) {
      Throw(ErrorCode::kFocalConfiguration, "point lies on the focal quartic");
    }
    const Plane pi = JoinPlane(axis, xn);
    const Line cut = JoinPlanes(pi, ground);
    for (const ComplexPoint& y : CircleCut(cut)) {
      out.push_back(MakeFiber(JoinPoints(ToComplex(xn), y)));
    }
    return out;
  }
  if (std::holds_alternative<PanoramicStereo>(cam)) {
    if (FocalResidual(cam, xn) <= kFocalTol) {
      Throw(ErrorCode::kFocalConfiguration, "point lies on the focal quartic");
    }
    // Dualize: x read as a plane u; NC lines in u pass through u cap axis.
    const Plane u(xn.c);
    const Point m = MeetPoint(axis, u);
    const Line cut = JoinPlanes(u, ground);
    for (const ComplexPoint& y : CircleCut(cut)) {
      out.push_back(MakeFiber(DualLine(JoinPoints(ToComplex(Normalized(m)), y))));
    }
    return out;
  }
  Throw(ErrorCode::kUnsupportedOrder,
        "fiber enumeration is only available for panoramic cameras");
}

}  // namespace gvcam
