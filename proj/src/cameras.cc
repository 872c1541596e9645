#include "gvcam/cameras.h"

#include <Eigen/Dense>

namespace gvcam {
namespace {

constexpr double kFocalEps = 1e-12;

Eigen::Matrix4d ToEigen(const Mat<double, 4, 4>& m) {
  Eigen::Matrix4d out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out(i, j) = m[i][j];
  }
  return out;
}

Mat<double, 4, 4> FromEigen(const Eigen::Matrix4d& m) {
  Mat<double, 4, 4> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i][j] = m(i, j);
  }
  return out;
}

Point ToNormal(const std::optional<Homography>& h, const Point& x) {
  return h ? h->ToNormal(x) : x;
}

Line LineToWorld(const std::optional<Homography>& h, const Line& p) {
  return h ? h->LineToWorld(p) : p;
}

Line LineToNormal(const std::optional<Homography>& h, const Line& p) {
  return h ? h->LineToNormal(p) : p;
}

const Line kTypeThreeAxis(0, 0, 0, 0, 0, 1);  // V(x0, x1)

Line ProjectTwoSlit(const Line& s1, const Line& s2, const Point& x) {
  const Point xn = Normalized(x);
  const Line out = JoinPlanes(ApplyPrimal(Normalized(s1), xn),
                              ApplyPrimal(Normalized(s2), xn));
  if (Norm(out) <= kFocalEps) {
    Throw(ErrorCode::kFocalPoint, "point lies on a slit");
  }
  return out;
}

std::array<double, 4> Type3Point(const BinaryForm& f, const BinaryForm& g,
                                 const BinaryForm& h, double s, double t) {
  const double fv = f.IsZero() ? 0.0 : f(s, t);
  return {s * fv, t * fv, g(s, t), h(s, t)};
}

double FormScale(const BinaryForm& f, const BinaryForm& g,
                 const BinaryForm& h) {
  double s = 0;
  for (const BinaryForm* b : {&f, &g, &h}) {
    for (double c : b->coeffs()) s += std::abs(c);
  }
  return s;
}

Line ProjectType3(const BinaryForm& f, const BinaryForm& g,
                  const BinaryForm& h, const std::optional<Homography>& hom,
                  const Point& x) {
  const Point xn = Normalized(ToNormal(hom, x));
  const Point xr(Type3Point(f, g, h, xn[0], xn[1]));
  const Line out = JoinPoints(xn, xr);
  if (Norm(out) <= kFocalEps * FormScale(f, g, h)) {
    Throw(ErrorCode::kFocalPoint, "point lies on the focal curve or line");
  }
  return LineToWorld(hom, out);
}

bool SameForms(const std::vector<const BinaryForm*>& a,
               const std::vector<const BinaryForm*>& b) {
  std::vector<double> va, vb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]->coeffs().size() != b[i]->coeffs().size()) return false;
    va.insert(va.end(), a[i]->coeffs().begin(), a[i]->coeffs().end());
    vb.insert(vb.end(), b[i]->coeffs().begin(), b[i]->coeffs().end());
  }
  Eigen::Map<Eigen::VectorXd> ea(va.data(), va.size());
  Eigen::Map<Eigen::VectorXd> eb(vb.data(), vb.size());
  const double na = ea.norm(), nb = eb.norm();
  if (na == 0 || nb == 0) return false;
  return std::abs(std::abs(ea.dot(eb)) - na * nb) <= 1e-14 * na * nb;
}

std::vector<Polynomial> ParseIdeal(const std::vector<std::string>& gens) {
  std::vector<Polynomial> out;
  const std::vector<std::string> vars = LineVariables("p");
  for (const std::string& g : gens) out.push_back(Polynomial::Parse(g, vars));
  return out;
}

constexpr const char* kPluckerQuadricText = "p03*p12 - p02*p13 + p01*p23";

}  // namespace

Homography Homography::FromMatrix(const Mat<double, 4, 4>& forward) {
  const Eigen::Matrix4d m = ToEigen(forward);
  const Eigen::FullPivLU<Eigen::Matrix4d> lu(m);
  if (!lu.isInvertible()) {
    Throw(ErrorCode::kDegenerateInput, "homography is singular");
  }
  return Homography{forward, FromEigen(lu.inverse())};
}

Homography Homography::FromInverse(const Mat<double, 4, 4>& inverse) {
  Homography h = FromMatrix(inverse);
  std::swap(h.forward, h.inverse);
  return h;
}

Point Homography::ToNormal(const Point& x) const {
  return Point(MatVec(inverse, x.c));
}

Point Homography::ToWorld(const Point& x) const {
  return Point(MatVec(forward, x.c));
}

Line Homography::LineToNormal(const Line& p) const {
  return ApplyCompound(Compound2(inverse), p);
}

Line Homography::LineToWorld(const Line& p) const {
  return ApplyCompound(Compound2(forward), p);
}

std::string CameraTypeName(const GeometricCamera& cam) {
  return std::visit(
      Overloaded{[](const Pinhole&) { return "pinhole"; },
                 [](const TwoSlit&) { return "two_slit"; },
                 [](const Pushbroom&) { return "pushbroom"; },
                 [](const TwistedCubic&) { return "twisted_cubic"; },
                 [](const Type3&) { return "type3"; },
                 [](const Type4&) { return "type4"; },
                 [](const PanoramicNC&) { return "panoramic_nc"; },
                 [](const PanoramicStereo&) { return "panoramic_stereo"; }},
      cam);
}

void ValidateCamera(const GeometricCamera& cam) {
  auto check_line = [](const Line& p, const char* what) {
    if (Norm(p) == 0 || std::abs(PluckerQuadric(Normalized(p))) > 1e-8) {
      Throw(ErrorCode::kDegenerateInput,
            std::string(what) + " is not a valid line");
    }
  };
  std::visit(
      Overloaded{
          [](const Pinhole& c) {
            if (Norm(c.center) == 0) {
              Throw(ErrorCode::kDegenerateInput, "pinhole center is zero");
            }
          },
          [&](const TwoSlit& c) {
            check_line(c.slit1, "slit1");
            check_line(c.slit2, "slit2");
            if (IncidenceResidual(c.slit1, c.slit2) <= 1e-8) {
              Throw(ErrorCode::kDegenerateInput, "slits are not skew");
            }
          },
          [&](const Pushbroom& c) {
            check_line(c.slit, "slit");
            PushbroomSlit2(c);
          },
          [](const TwistedCubic&) {},
          [](const Type3& c) {
            const int beta = c.g.degree();
            if (beta < 1 || c.h.degree() != beta || c.f.degree() != beta - 1 ||
                c.f.IsZero()) {
              Throw(ErrorCode::kDegenerateInput,
                    "type3 needs deg f = beta - 1, deg g = deg h = beta");
            }
          },
          [](const Type4& c) {
            const int beta = c.g.degree();
            if (beta < 1 || c.h.degree() != beta) {
              Throw(ErrorCode::kDegenerateInput,
                    "type4 needs deg g = deg h = beta");
            }
          },
          [](const PanoramicNC&) {}, [](const PanoramicStereo&) {}},
      cam);
}

Line PushbroomSlit2(const Pushbroom& cam) {
  const Line p = Normalized(cam.slit);
  if (std::hypot(p[0], p[1], p[2]) <= 1e-12) {
    Throw(ErrorCode::kInvalidSlit, "pushbroom slit lies at infinity");
  }
  return Line(0, 0, 0, p[2], -p[1], p[0]);
}

Line TwistedCubicSecant(const Point& x) {
  const double x0 = x[0], x1 = x[1], x2 = x[2], x3 = x[3];
  const double a = x0 * x2 - x1 * x1;
  const double b = x0 * x3 - x1 * x2;
  const double c = x1 * x3 - x2 * x2;
  const double mid = x0 * x2 * x2 * x2 + x1 * x1 * x1 * x3 -
                     3 * x0 * x1 * x2 * x3 + x0 * x0 * x3 * x3;
  return Line(a * a, a * b, mid, c * a, c * b, c * c);
}

Mat<double, 6, 6> TwistedCubicLinearSystem(const Point& x) {
  const double x0 = x[0], x1 = x[1], x2 = x[2], x3 = x[3];
  return {{{0, 0, 0, x3, -x2, x1},
           {0, 0, 0, x2, -x1, x0},
           {0, x3, -x2, 0, 0, x0},
           {0, x2, -x1, -x1, x0, 0},
           {x3, 0, -x1, 0, x0, 0},
           {x2, -x1, 0, x0, 0, 0}}};
}

Line Project(const GeometricCamera& cam, const Point& x) {
  return std::visit(
      Overloaded{
          [&](const Pinhole& c) {
            const Line out = JoinPoints(Normalized(c.center), Normalized(x));
            if (Norm(out) <= kFocalEps) {
              Throw(ErrorCode::kFocalPoint, "point is the pinhole center");
            }
            return out;
          },
          [&](const TwoSlit& c) { return ProjectTwoSlit(c.slit1, c.slit2, x); },
          [&](const Pushbroom& c) {
            return ProjectTwoSlit(c.slit, PushbroomSlit2(c), x);
          },
          [&](const TwistedCubic& c) {
            const Line out =
                TwistedCubicSecant(Normalized(ToNormal(c.homography, x)));
            if (Norm(out) <= kFocalEps) {
              Throw(ErrorCode::kFocalPoint, "point lies on the twisted cubic");
            }
            return LineToWorld(c.homography, out);
          },
          [&](const Type3& c) {
            return ProjectType3(c.f, c.g, c.h, c.homography, x);
          },
          [&](const Type4& c) {
            return ProjectType3(BinaryForm(), c.g, c.h, c.homography, x);
          },
          [](const PanoramicNC&) -> Line {
            Throw(ErrorCode::kUnsupportedOrder,
                  "panoramic cameras have order 2; use PanoramicFibers");
          },
          [](const PanoramicStereo&) -> Line {
            Throw(ErrorCode::kUnsupportedOrder,
                  "panoramic cameras have order 2; use PanoramicFibers");
          }},
      cam);
}

ParametricCurve Type3Curve(const BinaryForm& f, const BinaryForm& g,
                           const BinaryForm& h) {
  const int beta = g.degree();
  std::vector<double> sf(beta + 1, 0.0), tf(beta + 1, 0.0);
  for (int k = 0; k <= f.degree(); ++k) {
    sf[k] = f.coeffs()[k];
    tf[k + 1] = f.coeffs()[k];
  }
  return {BinaryForm(sf), BinaryForm(tf), g, h};
}

CurveMeet CurveMeetResidual(const Line& p, const ParametricCurve& curve) {
  const Mat<double, 4, 4> pm = PrimalMatrix(Normalized(p));
  int degree = 0;
  for (const BinaryForm& b : curve) degree = std::max(degree, b.degree());
  // Coefficients of the four forms (P X)_i.
  std::vector<std::array<double, 4>> coeffs(degree + 1, {0, 0, 0, 0});
  for (int k = 0; k <= degree; ++k) {
    for (int j = 0; j < 4; ++j) {
      const int dj = curve[j].degree();
      if (dj < 0) continue;
      if (dj != degree) {
        Throw(ErrorCode::kDegenerateInput, "curve forms differ in degree");
      }
      for (int i = 0; i < 4; ++i) coeffs[k][i] += pm[i][j] * curve[j].coeffs()[k];
    }
  }
  static constexpr std::array<std::array<double, 4>, 2> kWeights = {
      {{0.5377, 1.8339, -2.2588, 0.8622}, {0.3188, -1.3077, -0.4336, 0.3426}}};
  CurveMeet out;
  for (const auto& w : kWeights) {
    std::vector<double> c(degree + 1);
    for (int k = 0; k <= degree; ++k) {
      c[k] = w[0] * coeffs[k][0] + w[1] * coeffs[k][1] + w[2] * coeffs[k][2] +
             w[3] * coeffs[k][3];
    }
    for (const auto& r : BinaryForm(c).Roots()) out.candidates.push_back(r);
  }
  out.residual = std::numeric_limits<double>::infinity();
  if (out.candidates.empty()) {
    out.residual = 0;
    return out;
  }
  for (const auto& r : out.candidates) {
    const auto xr = EvaluateCurve<Complex>(curve, r[0], r[1]);
    const double nx = Norm(xr);
    if (nx <= 1e-300) continue;
    std::array<Complex, 4> px{};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) px[i] += pm[i][j] * xr[j];
    }
    const double res = Norm(px) / nx;
    if (res < out.residual) {
      out.residual = res;
      out.parameter = r;
    }
  }
  return out;
}

bool LineMeetsCurve(const Line& p, const ParametricCurve& curve, double tol) {
  const CurveMeet meet = CurveMeetResidual(p, curve);
  if (meet.residual <= tol) return true;
  if (meet.residual <= 1e3 * tol) {
    for (std::size_t a = 0; a < meet.candidates.size(); ++a) {
      for (std::size_t b = a + 1; b < meet.candidates.size(); ++b) {
        const auto& ra = meet.candidates[a];
        const auto& rb = meet.candidates[b];
        if (std::abs(ra[0] * rb[1] - ra[1] * rb[0]) < 1e-6) {
          Throw(ErrorCode::kIllConditioned,
                "clustered intersection parameters");
        }
      }
    }
  }
  return false;
}

double Type3ChartResidual(const BinaryForm& f, const BinaryForm& g,
                          const BinaryForm& h, const Line& p) {
  const Line pn = Normalized(p);
  double res = std::abs(PluckerQuadric(pn));
  res = std::max(res, IncidenceResidual(pn, kTypeThreeAxis));

  const ParametricCurve curve = Type3Curve(f, g, h);
  const CurveMeet meet = CurveMeetResidual(pn, curve);
  const Mat<double, 4, 4> pm = PrimalMatrix(pn);
  const Mat<double, 4, 4> pd = DualMatrix(pn);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : meet.candidates) {
    const auto xr = EvaluateCurve<Complex>(curve, r[0], r[1]);
    const std::array<Complex, 4> plane = {r[1], -r[0], Complex(0), Complex(0)};
    std::array<Complex, 4> px{}, pu{};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        px[i] += pm[i][j] * xr[j];
        pu[i] += pd[i][j] * plane[j];
      }
    }
    const double nx = Norm(xr);
    const double rx = nx > 1e-300 ? Norm(px) / nx : 0.0;
    best = std::min(best, std::max(rx, Norm(pu) / Norm(plane)));
  }
  return std::max(res, best);
}

double CongruenceResidual(const GeometricCamera& cam, const Line& p) {
  const Line pn = Normalized(p);
  const double quadric = std::abs(PluckerQuadric(pn));
  return std::visit(
      Overloaded{
          [&](const Pinhole& c) {
            return std::max(quadric, PointLineResidual(c.center, pn));
          },
          [&](const TwoSlit& c) {
            return std::max({quadric, IncidenceResidual(pn, c.slit1),
                             IncidenceResidual(pn, c.slit2)});
          },
          [&](const Pushbroom& c) {
            return std::max({quadric, IncidenceResidual(pn, c.slit),
                             IncidenceResidual(pn, PushbroomSlit2(c))});
          },
          [&](const TwistedCubic& c) {
            return IdealResidual(SecantCongruenceIdeal(),
                                 LineToNormal(c.homography, pn));
          },
          [&](const Type3& c) {
            const Line q = LineToNormal(c.homography, pn);
            const Type3 ref = TwistedType3Camera();
            if (!c.homography &&
                SameForms({&c.f, &c.g, &c.h}, {&ref.f, &ref.g, &ref.h})) {
              return IdealResidual(TwistedType3Ideal(), q);
            }
            return Type3ChartResidual(c.f, c.g, c.h, q);
          },
          [&](const Type4& c) {
            const Line q = LineToNormal(c.homography, pn);
            const Type4 ref = ToricType4Camera();
            if (!c.homography && SameForms({&c.g, &c.h}, {&ref.g, &ref.h})) {
              return IdealResidual(ToricType4Ideal(), q);
            }
            return Type3ChartResidual(BinaryForm(), c.g, c.h, q);
          },
          [&](const PanoramicNC&) {
            return IdealResidual(PanoramicNCIdeal(), pn);
          },
          [&](const PanoramicStereo&) {
            return IdealResidual(PanoramicStereoIdeal(), pn);
          }},
      cam);
}

Bidegree GetBidegree(const GeometricCamera& cam) {
  return std::visit(
      Overloaded{[](const Pinhole&) { return Bidegree{1, 0}; },
                 [](const TwoSlit&) { return Bidegree{1, 1}; },
                 [](const Pushbroom&) { return Bidegree{1, 1}; },
                 [](const TwistedCubic&) { return Bidegree{1, 3}; },
                 [](const Type3& c) { return Bidegree{1, c.g.degree()}; },
                 [](const Type4& c) { return Bidegree{1, c.g.degree()}; },
                 [](const PanoramicNC&) { return Bidegree{2, 2}; },
                 [](const PanoramicStereo&) { return Bidegree{2, 2}; }},
      cam);
}

double FocalResidual(const GeometricCamera& cam, const Point& x) {
  const Point xn = Normalized(x);
  return std::visit(
      Overloaded{
          [&](const Pinhole& c) {
            return Norm(JoinPoints(Normalized(c.center), xn));
          },
          [&](const TwoSlit& c) {
            return PointLineResidual(xn, c.slit1) *
                   PointLineResidual(xn, c.slit2);
          },
          [&](const Pushbroom& c) {
            return PointLineResidual(xn, c.slit) *
                   PointLineResidual(xn, PushbroomSlit2(c));
          },
          [&](const TwistedCubic& c) {
            const Point y = Normalized(ToNormal(c.homography, xn));
            return std::max({std::abs(y[0] * y[2] - y[1] * y[1]),
                             std::abs(y[0] * y[3] - y[1] * y[2]),
                             std::abs(y[1] * y[3] - y[2] * y[2])});
          },
          [&](const Type3& c) {
            const Point y = Normalized(ToNormal(c.homography, xn));
            const double on_line = std::hypot(y[0], y[1]);
            const Point xr(Type3Point(c.f, c.g, c.h, y[0], y[1]));
            if (Norm(xr) <= 1e-300) return 0.0;
            const double on_curve = Norm(JoinPoints(y, Normalized(xr)));
            return std::min(on_line, on_curve);
          },
          [&](const Type4& c) {
            const Point y = Normalized(ToNormal(c.homography, xn));
            return std::hypot(y[0], y[1]);
          },
          [&](const PanoramicNC&) {
            return std::abs((xn[1] * xn[1] + xn[2] * xn[2]) * xn[3] * xn[3]);
          },
          [&](const PanoramicStereo&) {
            return std::abs(xn[0] * xn[0] *
                            (xn[0] * xn[0] - xn[1] * xn[1] - xn[2] * xn[2]));
          }},
      cam);
}

TwoCubes SumOfTwoCubes(const Point& x) {
  const Point xn = Normalized(x);
  const Eigen::Vector3d r0(xn[0], xn[1], xn[2]);
  const Eigen::Vector3d r1(xn[1], xn[2], xn[3]);
  const Eigen::Vector3d c = r0.cross(r1);
  if (c.norm() <= 1e-12) {
    Throw(ErrorCode::kDegenerateCubic, "cubic is a perfect cube");
  }
  const auto roots = BinaryForm({c(0), c(1), c(2)}).Roots();
  if (roots.size() != 2 ||
      std::abs(roots[0][0] * roots[1][1] - roots[0][1] * roots[1][0]) < 1e-9) {
    Throw(ErrorCode::kDegenerateCubic, "secant is tangent to the curve");
  }
  TwoCubes out;
  Eigen::Matrix<Complex, 4, 2> a;
  for (int k = 0; k < 2; ++k) {
    const Complex s = roots[k][0], t = roots[k][1];
    out.parameters[k] = roots[k];
    a(0, k) = s * s * s;
    a(1, k) = s * s * t;
    a(2, k) = s * t * t;
    a(3, k) = t * t * t;
  }
  Eigen::Matrix<Complex, 4, 1> b;
  for (int i = 0; i < 4; ++i) b(i) = xn[i];
  const Eigen::Matrix<Complex, 2, 1> lam = a.colPivHouseholderQr().solve(b);
  out.lambdas = {lam(0), lam(1)};
  out.reconstruction_residual = (a * lam - b).norm();
  return out;
}

const std::vector<Polynomial>& SecantCongruenceIdeal() {
  static const std::vector<Polynomial> ideal = ParseIdeal({
      "p13^2 - p03*p23 - p12*p23",
      "p12*p13 - p02*p23",
      "p12^2 - p01*p23",
      "p02*p12 - p01*p13",
      "p02^2 - p01*p03 - p01*p12",
      kPluckerQuadricText,
  });
  return ideal;
}

const std::vector<Polynomial>& TwistedType3Ideal() {
  static const std::vector<Polynomial> ideal = ParseIdeal({
      "p01",
      "p03*p12 - p02*p13",
      "p02*p03^2 - p12^2*p13 - p02*p03*p23 + p12*p13*p23",
      "p03^3 - p12*p13^2 - p03^2*p23 + p13^2*p23",
      "p02^2*p03 - p12^3 - p02^2*p23 + p12^2*p23",
      kPluckerQuadricText,
  });
  return ideal;
}

const std::vector<Polynomial>& ToricType4Ideal() {
  static const std::vector<Polynomial> ideal = ParseIdeal({
      "p01",
      "p03*p12 - p02*p13",
      "p02*p03^2 - p12^2*p13",
      "p03^3 - p12*p13^2",
      "p02^2*p03 - p12^3",
      kPluckerQuadricText,
  });
  return ideal;
}

const std::vector<Polynomial>& PanoramicNCIdeal() {
  static const std::vector<Polynomial> ideal = ParseIdeal({
      "p12",
      "p03^2 - p13^2 - p23^2",
      kPluckerQuadricText,
  });
  return ideal;
}

const std::vector<Polynomial>& PanoramicStereoIdeal() {
  static const std::vector<Polynomial> ideal = ParseIdeal({
      "p03",
      "p12^2 - p02^2 - p01^2",
      kPluckerQuadricText,
  });
  return ideal;
}

Type3 TwistedType3Camera() {
  return Type3{BinaryForm({1, 0, -1}), BinaryForm({1, 0, 0, 0}),
               BinaryForm({0, 0, 0, 1}), std::nullopt};
}

Type4 ToricType4Camera() {
  return Type4{BinaryForm({1, 0, 0, 0}), BinaryForm({0, 0, 0, 1}),
               std::nullopt};
}

double IdealResidual(const std::vector<Polynomial>& ideal, const Line& p) {
  const Line pn = Normalized(p);
  const std::vector<double> v(pn.c.begin(), pn.c.end());
  double res = 0;
  for (const Polynomial& g : ideal) {
    res = std::max(res, std::abs(g.Evaluate(v)) / g.AbsCoeffSum());
  }
  return res;
}

double IdealResidual(const std::vector<Polynomial>& ideal,
                     const ComplexLine& p) {
  const ComplexLine pn = Normalized(p);
  const std::vector<Complex> v(pn.c.begin(), pn.c.end());
  double res = 0;
  for (const Polynomial& g : ideal) {
    res = std::max(res, std::abs(g.Evaluate(v)) / g.AbsCoeffSum());
  }
  return res;
}

}  // namespace gvcam
