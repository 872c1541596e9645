#include "gvcam/multiimage.h"

#include <Eigen/Dense>
#include <sstream>

#include "gvcam/concurrency.h"

namespace gvcam {
namespace {

constexpr double kRealTol = 1e-7;

std::string GeneratorName(const GeneratorReport& report, double* value) {
  std::ostringstream name;
  double best = -1;
  for (std::size_t k = 0; k < report.quadric_residuals.size(); ++k) {
    if (report.quadric_residuals[k] > best) {
      best = report.quadric_residuals[k];
      name.str("");
      name << "quadric[" << report.quadric_index[k][0] << "]["
           << report.quadric_index[k][1] << "]";
    }
  }
  for (std::size_t k = 0; k < report.cubic_residuals.size(); ++k) {
    for (int u = 0; u < 10; ++u) {
      if (report.cubic_residuals[k][u] > best) {
        best = report.cubic_residuals[k][u];
        name.str("");
        name << "cubic[" << report.cubic_index[k][0] << "]["
             << report.cubic_index[k][1] << "][" << report.cubic_index[k][2]
             << "][" << u << "]";
      }
    }
  }
  *value = best;
  return name.str();
}

bool IsLinearCamera(const GeometricCamera& cam) {
  return std::holds_alternative<Pinhole>(cam) ||
         std::holds_alternative<TwoSlit>(cam) ||
         std::holds_alternative<Pushbroom>(cam);
}

std::array<Line, 2> Slits(const GeometricCamera& cam) {
  if (const auto* t = std::get_if<TwoSlit>(&cam)) return {t->slit1, t->slit2};
  const auto& p = std::get<Pushbroom>(cam);
  return {p.slit, PushbroomSlit2(p)};
}

Transversal MakeReal(const Line& p) {
  Transversal t;
  t.line = p.Cast<Complex>();
  t.is_real = true;
  return t;
}

bool IsRealVector(const ComplexLine& p) {
  const auto v = ScaledByMaxEntry(p);
  double im = 0;
  for (const Complex& z : v) im = std::max(im, std::abs(z.imag()));
  return im < kRealTol;
}

std::vector<Polynomial> ParseAll(const std::vector<std::string>& gens,
                                 const std::vector<std::string>& vars) {
  std::vector<Polynomial> out;
  for (const std::string& g : gens) out.push_back(Polynomial::Parse(g, vars));
  return out;
}

Line CoordinateLine(int i, int j) {
  Line p(0, 0, 0, 0, 0, 0);
  p[LineIndex(i, j)] = 1;
  return p;
}

}  // namespace

CorrespondenceResult Correspond(const CameraRig& rig,
                                const std::vector<Line>& lines, double tol) {
  if (lines.size() != rig.size()) {
    Throw(ErrorCode::kDegenerateInput,
          "correspondence needs one line per camera");
  }
  CorrespondenceResult out;
  double worst = 0;
  for (std::size_t i = 0; i < rig.size(); ++i) {
    const double r = CongruenceResidual(rig[i], lines[i]);
    out.congruence_residuals.push_back(r);
    if (r > tol && r > worst) {
      worst = r;
      out.violated = "congruence[" + std::to_string(i) + "]";
    }
  }
  if (!out.violated.empty()) {
    out.residual = worst;
    return out;
  }
  const std::optional<Point> x = FindCommonPoint(lines, tol);
  if (!x) {
    const GeneratorReport report = EvaluateGenerators(lines);
    out.violated = GeneratorName(report, &out.residual);
    return out;
  }
  out.accepted = true;
  out.point = Normalized(*x);
  for (const Line& p : lines) {
    out.residual = std::max(out.residual, PointLineResidual(*x, p));
  }
  return out;
}

CorrespondenceResult CorrespondExact(
    const std::vector<ExactLinearCamera>& rig,
    const std::vector<PlueckerLine<Rational>>& lines) {
  if (lines.size() != rig.size() || lines.size() < 2) {
    Throw(ErrorCode::kDegenerateInput,
          "correspondence needs one line per camera");
  }
  CorrespondenceResult out;
  for (std::size_t i = 0; i < rig.size(); ++i) {
    const PlueckerLine<Rational>& p = lines[i];
    bool member = IsZero(PluckerQuadric(p)) && !IsZeroVector(p);
    if (rig[i].kind == ExactLinearCamera::Kind::kPinhole) {
      member = member && IsZeroVector(ApplyPrimal(p, rig[i].center));
    } else {
      member = member && IsZero(Incidence(p, rig[i].slit1)) &&
               IsZero(Incidence(p, rig[i].slit2));
    }
    out.congruence_residuals.push_back(member ? 0.0 : 1.0);
    if (!member && out.violated.empty()) {
      out.violated = "congruence[" + std::to_string(i) + "]";
    }
  }
  if (!out.violated.empty()) {
    out.residual = 1;
    return out;
  }
  const GeneratorValues<Rational> values = EvaluateGeneratorValues(lines);
  for (std::size_t q = 0; q < values.quadrics.size(); ++q) {
    if (!IsZero(values.quadrics[q])) {
      out.violated = "quadric[" + std::to_string(values.quadric_index[q][0]) +
                     "][" + std::to_string(values.quadric_index[q][1]) + "]";
      out.residual = std::abs(values.quadrics[q].get_d());
      return out;
    }
  }
  for (std::size_t c = 0; c < values.cubics.size(); ++c) {
    for (int u = 0; u < 10; ++u) {
      if (!IsZero(values.cubics[c][u])) {
        const auto& ix = values.cubic_index[c];
        out.violated = "cubic[" + std::to_string(ix[0]) + "][" +
                       std::to_string(ix[1]) + "][" + std::to_string(ix[2]) +
                       "][" + std::to_string(u) + "]";
        out.residual = std::abs(values.cubics[c][u].get_d());
        return out;
      }
    }
  }
  out.accepted = true;
  return out;
}

Triangulation Triangulate(const CameraRig& rig, const std::vector<Line>& lines) {
  if (lines.size() < 2 || (!rig.empty() && rig.size() != lines.size())) {
    Throw(ErrorCode::kDegenerateInput,
          "triangulation needs at least two lines, one per camera");
  }
  const std::array<double, 4> s = StackedSingularValues(lines);
  if (s[2] < kDefaultTolerance * s[0]) {
    Throw(ErrorCode::kAmbiguousPencil, "lines do not determine a point");
  }
  Eigen::MatrixXd stack(4 * lines.size(), 4);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto p = PrimalMatrix(Normalized(lines[l]));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) stack(4 * l + i, j) = p[i][j];
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stack, Eigen::ComputeFullV);
  const Eigen::Vector4d v = svd.matrixV().col(3);
  return Triangulation{Point(v(0), v(1), v(2), v(3)), svd.singularValues()(3)};
}

double EpipolarResidual(const GeometricCamera& cam2, const Line& p,
                        const Line& q) {
  return std::max(CongruenceResidual(cam2, q), IncidenceResidual(p, q));
}

int EpipolarDegree(int beta2) { return 1 + beta2; }

int BaselineCount(int beta1, int beta2) { return 1 + beta1 * beta2; }

Line Transversal::RealLine() const {
  const auto v = ScaledByMaxEntry(line);
  Line out;
  for (int i = 0; i < 6; ++i) out[i] = v[i].real();
  return Normalized(out);
}

std::vector<Transversal> CommonTransversals(const Line& l1, const Line& l2,
                                            const Line& l3, const Line& l4) {
  const double skew = 1e-8;
  if (IncidenceResidual(l1, l2) <= skew || IncidenceResidual(l1, l3) <= skew ||
      IncidenceResidual(l2, l3) <= skew) {
    Throw(ErrorCode::kDegenerateConfiguration,
          "first three lines are not pairwise skew");
  }
  const ComplexLine c1 = Normalized(l1).Cast<Complex>();
  const ComplexLine c2 = Normalized(l2).Cast<Complex>();
  const ComplexLine c4 = Normalized(l4).Cast<Complex>();
  const std::array<Point, 2> ab = PointsOnLine(l3);
  // The transversal through l3(s:t) meeting l1 and l2.
  auto transversal = [&](Complex s, Complex t) {
    ComplexPoint m;
    for (int i = 0; i < 4; ++i) m[i] = s * ab[0][i] + t * ab[1][i];
    return JoinPlanes(ApplyPrimal(c1, m), ApplyPrimal(c2, m));
  };
  auto condition = [&](double s, double t) {
    return Incidence(transversal(s, t), c4).real();
  };
  const double a = condition(1, 0);
  const double c = condition(0, 1);
  const double b = condition(1, 1) - a - c;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (scale <= 1e-12) {
    Throw(ErrorCode::kDegenerateConfiguration,
          "fourth line lies in the regulus of the first three");
  }
  const Complex disc = Complex(b * b - 4 * a * c);
  std::vector<std::array<Complex, 2>> params;
  std::vector<Transversal> out;
  // Relative to the coefficient scale, so roots at (1:0) or (0:1) are
  // handled like any other.
  const bool doubled = std::abs(disc) <= 1e-12 * scale * scale;
  const Complex root = doubled ? Complex(0) : std::sqrt(disc);
  // Stable quadratic formula in whichever chart has the larger leading term.
  const bool s_chart = std::abs(a) >= std::abs(c);
  const double lead = s_chart ? a : c;
  const double tail = s_chart ? c : a;
  const Complex sgn = (b * root.real() >= 0) ? Complex(1) : Complex(-1);
  const Complex q = -0.5 * (Complex(b) + sgn * root);
  std::vector<Complex> z;
  if (doubled) {
    z.push_back(-b / (2 * lead));
  } else {
    z.push_back(q / lead);
    z.push_back(std::abs(q) > 0 ? Complex(tail) / q : Complex(0));
  }
  for (const Complex& r : z) {
    const double mag = std::abs(r);
    const bool real = mag == 0 || std::abs(r.imag()) / mag < kRealTol;
    const Complex rr = real ? Complex(r.real()) : r;
    Transversal t;
    t.line = s_chart ? transversal(rr, 1.0) : transversal(1.0, rr);
    t.is_real = real;
    t.multiplicity = doubled ? 2 : 1;
    if (real) {
      for (Complex& v : t.line.c) v = v.real();
    }
    t.line = Normalized(t.line);
    out.push_back(t);
  }
  return out;
}

std::vector<Transversal> BaselinesLinear(const GeometricCamera& cam1,
                                         const GeometricCamera& cam2) {
  if (!IsLinearCamera(cam1) || !IsLinearCamera(cam2)) {
    Throw(ErrorCode::kDegenerateInput,
          "linear baselines need pinhole, two-slit or pushbroom cameras");
  }
  const auto* p1 = std::get_if<Pinhole>(&cam1);
  const auto* p2 = std::get_if<Pinhole>(&cam2);
  if (p1 && p2) {
    const Line b = JoinPoints(Normalized(p1->center), Normalized(p2->center));
    if (Norm(b) <= 1e-12) {
      Throw(ErrorCode::kDegenerateConfiguration, "pinhole centers coincide");
    }
    return {MakeReal(Normalized(b))};
  }
  if (p1 || p2) {
    const Point& c = p1 ? p1->center : p2->center;
    const GeometricCamera& other = p1 ? cam2 : cam1;
    if (FocalResidual(other, c) <= 1e-10) {
      Throw(ErrorCode::kDegenerateConfiguration,
            "pinhole center lies on a slit");
    }
    return {MakeReal(Normalized(Project(other, c)))};
  }
  const std::array<Line, 2> s = Slits(cam1);
  const std::array<Line, 2> t = Slits(cam2);
  for (const Line& a : s) {
    for (const Line& b : t) {
      if (IncidenceResidual(a, b) <= 1e-8) {
        Throw(ErrorCode::kDegenerateConfiguration,
              "slits of the two cameras meet");
      }
    }
  }
  return CommonTransversals(s[0], s[1], t[0], t[1]);
}

MultiImageGeneratorCounts LinearGeneratorCounts(int n1, int n2) {
  if (n1 < 0 || n2 < 0 || n1 + n2 < 1) {
    Throw(ErrorCode::kInvalidN, "need at least one camera");
  }
  MultiImageGeneratorCounts c;
  c.linear = 3LL * n1 + 2LL * n2;
  c.quadrics = Binomial(n1 + n2, 2) + n2;
  c.cubics = Binomial(n1, 3) + 3 * Binomial(n1, 2) * n2 +
             6 * n1 * Binomial(n2, 2) + 10 * Binomial(n2, 3);
  return c;
}

std::vector<std::string> RigWarnings(const CameraRig& rig) {
  std::vector<std::string> warnings;
  auto pair_name = [](std::size_t i, std::size_t j) {
    return "cameras " + std::to_string(i) + " and " + std::to_string(j);
  };
  for (std::size_t i = 0; i < rig.size(); ++i) {
    for (std::size_t j = 0; j < rig.size(); ++j) {
      if (i == j) continue;
      if (const auto* p = std::get_if<Pinhole>(&rig[i])) {
        if (FocalResidual(rig[j], p->center) <= 1e-10) {
          warnings.push_back(pair_name(i, j) +
                             ": pinhole center lies on the focal locus");
        }
      }
      if (i < j && !std::holds_alternative<Pinhole>(rig[i]) &&
          IsLinearCamera(rig[i]) && IsLinearCamera(rig[j]) &&
          !std::holds_alternative<Pinhole>(rig[j])) {
        for (const Line& a : Slits(rig[i])) {
          for (const Line& b : Slits(rig[j])) {
            if (IncidenceResidual(a, b) <= 1e-10) {
              warnings.push_back(pair_name(i, j) + ": slits meet");
            }
          }
        }
      }
    }
  }
  return warnings;
}

CameraRig CoordinateTwoSlitRig() {
  return {TwoSlit{CoordinateLine(0, 1), CoordinateLine(2, 3)},
          TwoSlit{CoordinateLine(1, 3), CoordinateLine(0, 2)},
          TwoSlit{CoordinateLine(1, 2), CoordinateLine(0, 3)}};
}

const std::vector<Polynomial>& CoordinateRigBinomials() {
  static const std::vector<Polynomial> binomials = [] {
    std::vector<std::string> vars = LineVariables("p");
    for (const char* prefix : {"q", "r"}) {
      const auto v = LineVariables(prefix);
      vars.insert(vars.end(), v.begin(), v.end());
    }
    return ParseAll(
        {
            "p03*p12 - p02*p13",
            "q03*q12 + q01*q23",
            "r02*r13 - r01*r23",
            "p03*q12 + p12*q03",
            "p13*r02 + p02*r13",
            "q23*r01 + q01*r23",
            "p12*q23*r13 + p13*q12*r23",
            "p02*q23*r13 + p03*q12*r23",
            "p03*q12*r13 + p13*q01*r23",
            "p02*q12*r13 + p12*q01*r23",
            "p02*q03*r13 - p03*q01*r23",
            "p03*q23*r02 + p02*q03*r23",
            "p03*q12*r02 - p02*q01*r23",
            "p03*q12*r01 - p02*q01*r13",
            "p02*q12*r01 + p12*q01*r02",
            "p13*q03*r01 + p03*q01*r13",
        },
        vars);
  }();
  return binomials;
}

std::array<Type3, 2> ConicType3Pair() {
  const BinaryForm f({0, 1});
  const BinaryForm g({1, 0, -1});
  const BinaryForm h({1, 0, 1});
  const Mat<double, 4, 4> inv1 = {{{0, 0.5, 0, 0},
                                   {0, 0, -0.5, 0.5},
                                   {0, 0, 1, 0},
                                   {1, 0, 0, 1}}};
  const Mat<double, 4, 4> inv2 = {{{0, 0, 0.5, 0},
                                   {-0.5, 0.5, 0, 0},
                                   {1, 0, 0, 0},
                                   {0, 1, 0, 1}}};
  return {Type3{f, g, h, Homography::FromInverse(inv1)},
          Type3{f, g, h, Homography::FromInverse(inv2)}};
}

const std::vector<Polynomial>& ConicType3Ideal(int camera) {
  static const std::array<std::vector<Polynomial>, 2> ideals = {
      ParseAll({"p12 - p13", "p01^2 + p02^2 - p03^2",
                "p01*p13 + p02*p23 + p03*p23", "p01*p23 - p02*p13 + p03*p12"},
               LineVariables("p")),
      ParseAll({"p02 - p12", "p03^2 - p13^2 + p23^2",
                "p01*p03 + p01*p13 - p12*p23", "p01*p23 - p02*p13 + p03*p12"},
               LineVariables("p")),
  };
  return ideals.at(camera);
}

ConicPairBaselines ConicType3PairBaselines() {
  ConicPairBaselines out;
  out.baselines.push_back(MakeReal(Normalized(Line(0, 1, 1, 1, 1, 0))));
  out.parameters = PolynomialRoots({5, 0, -2, 0, 1});
  for (const Complex& a : out.parameters) {
    Transversal t;
    t.line = ComplexLine((5.0 * a * a - 1.0) / 2.0, a,
                         -(5.0 * a * a * a + a) / 2.0, a, a, Complex(1));
    t.is_real = IsRealVector(t.line);
    out.baselines.push_back(t);
  }
  for (const auto& t : out.baselines) out.real_count += t.is_real ? 1 : 0;
  return out;
}

}  // namespace gvcam
