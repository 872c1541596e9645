#include "cli.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "gvcam/concurrency.h"

namespace gvcam::cli {
namespace {

using Clock = std::chrono::steady_clock;

Json LoadScene(const Options& opt) {
  if (opt.scene.empty()) Throw(ErrorCode::kParseError, "--scene is required");
  return ReadJsonFile(opt.scene);
}

std::vector<Json> SplitCoordinates(const std::string& text,
                                   std::size_t expected, const char* what) {
  std::vector<Json> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.emplace_back(item);
  if (out.size() != expected) {
    Throw(ErrorCode::kParseError, std::string(what) + " needs " +
                                      std::to_string(expected) +
                                      " comma separated values");
  }
  return out;
}

std::vector<Point> RandomPoints(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Point> out;
  for (int i = 0; i < count; ++i) {
    out.emplace_back(normal(rng), normal(rng), normal(rng), normal(rng));
  }
  return out;
}

template <int R>
Mat<double, R, 4> RandomMatrix(std::mt19937_64* rng) {
  std::normal_distribution<double> normal;
  Mat<double, R, 4> m;
  for (auto& row : m) {
    for (double& v : row) v = normal(*rng);
  }
  return m;
}

template <typename T, std::size_t R, std::size_t C>
Json MatrixToJson(const std::array<std::array<T, C>, R>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(ToJson(row));
  return out;
}

// Nested arrays following `shape` from row-major entries.
Json Nest(const std::vector<int>& shape, const std::vector<Json>& entries,
          std::size_t dim = 0, std::size_t offset = 0) {
  std::size_t stride = 1;
  for (std::size_t d = dim + 1; d < shape.size(); ++d) stride *= shape[d];
  Json out = Json::array();
  for (int i = 0; i < shape[dim]; ++i) {
    if (dim + 1 == shape.size()) {
      out.push_back(entries[offset + i]);
    } else {
      out.push_back(Nest(shape, entries, dim + 1, offset + i * stride));
    }
  }
  return out;
}

bool SameLine(const Line& a, const Line& b) {
  return ProjectiveDistance(Normalized(a), Normalized(b)) <= 1e-12;
}

bool IsCoordinateRig(const CameraRig& rig) {
  const CameraRig ref = CoordinateTwoSlitRig();
  if (rig.size() != ref.size()) return false;
  for (std::size_t i = 0; i < rig.size(); ++i) {
    const auto* a = std::get_if<TwoSlit>(&rig[i]);
    const auto& b = std::get<TwoSlit>(ref[i]);
    if (a == nullptr || !SameLine(a->slit1, b.slit1) ||
        !SameLine(a->slit2, b.slit2)) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<Line>> LoadObservations(const Options& opt,
                                                const Json& scene) {
  if (!opt.observations.empty()) {
    return ParseObservations(ReadJsonFile(opt.observations));
  }
  if (scene.contains("observations")) {
    return ParseObservations(scene.at("observations"));
  }
  return {};
}

Json LoadRawObservations(const Options& opt, const Json& scene) {
  Json raw = !opt.observations.empty() ? ReadJsonFile(opt.observations)
                                       : scene.value("observations", Json::array());
  if (!raw.is_array() || raw.empty()) return Json::array();
  if (raw[0].is_array() && !raw[0].empty() && !raw[0][0].is_array()) {
    return Json::array({raw});
  }
  return raw;
}

Json TransversalToJson(const Transversal& t) {
  Json j;
  j["is_real"] = t.is_real;
  j["multiplicity"] = t.multiplicity;
  if (t.is_real) {
    j["line"] = ToJson(Normalized(t.RealLine()));
  } else {
    j["complex_line"] = ToJson(t.line);
  }
  return j;
}

Json Command(const std::string& name, const Options& opt) {
  Json j;
  j["command"] = name;
  if (!opt.scene.empty()) j["scene"] = opt.scene;
  j["tolerance"] = opt.Tolerance();
  return j;
}

std::string CsvCell(const Json& v) {
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ';';
      s += CsvCell(v[i]);
    }
    return s;
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return DumpJson(v, -1);
}

}  // namespace

double Options::Tolerance() const {
  if (tol) return *tol;
  if (const char* env = std::getenv("GVCAM_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
    Throw(ErrorCode::kParseError, "GVCAM_TOL must be a positive number");
  }
  return kDefaultTolerance;
}

Result Project(const Options& opt) {
  const Json raw = LoadScene(opt);
  const Scene scene = ParseScene(raw);
  std::vector<Point> points = scene.points;
  if (!opt.points.empty()) points = ParsePoints(ReadJsonFile(opt.points));
  if (opt.random > 0) points = RandomPoints(opt.random, opt.seed);
  if (scene.rig.empty() || points.empty()) {
    Throw(ErrorCode::kParseError, "project needs a rig and points");
  }
  Result r;
  r.report = Command("project", opt);
  Json results = Json::array();
  const bool toric = IsCoordinateRig(scene.rig);
  double toric_max = 0;
  int toric_tuples = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<double> values;
    bool complete = true;
    for (std::size_t c = 0; c < scene.rig.size(); ++c) {
      Json row;
      row["point_index"] = i;
      row["camera_index"] = c;
      try {
        const Line p = Normalized(Project(scene.rig[c], points[i]));
        row["line"] = ToJson(p);
        row["quadric_residual"] = std::abs(PluckerQuadric(p));
        row["congruence_residual"] = CongruenceResidual(scene.rig[c], p);
        row["point_residual"] = PointLineResidual(Normalized(points[i]), p);
        values.insert(values.end(), p.c.begin(), p.c.end());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kFocalPoint &&
            e.code() != ErrorCode::kUnsupportedOrder) {
          throw;
        }
        row["error"] = ErrorCodeName(e.code());
        complete = false;
      }
      results.push_back(row);
    }
    if (toric && complete) {
      for (const Polynomial& b : CoordinateRigBinomials()) {
        toric_max = std::max(toric_max,
                             std::abs(b.Evaluate(values)) / b.AbsCoeffSum());
      }
      ++toric_tuples;
    }
  }
  r.report["results"] = results;
  if (toric) {
    r.report["toric_check"] = {{"binomials", CoordinateRigBinomials().size()},
                               {"tuples", toric_tuples},
                               {"max_residual", toric_max}};
  }
  r.report["warnings"] = RigWarnings(scene.rig);
  return r;
}

Result Check(const Options& opt) {
  const Json raw = LoadScene(opt);
  const Scene scene = ParseScene(raw);
  const double tol = opt.Tolerance();
  Result r;
  r.report = Command("check", opt);
  r.report["exact"] = opt.exact;
  Json results = Json::array();
  bool all = true;
  if (opt.exact) {
    std::vector<ExactLinearCamera> rig;
    for (const Json& c : raw.at("rig")) rig.push_back(ParseExactLinearCamera(c));
    const Json obs = LoadRawObservations(opt, raw);
    if (obs.empty()) Throw(ErrorCode::kParseError, "no observations given");
    for (std::size_t t = 0; t < obs.size(); ++t) {
      std::vector<PlueckerLine<Rational>> lines;
      for (const Json& l : obs[t]) {
        lines.emplace_back(ParseExactVector<6>(l));
      }
      const CorrespondenceResult c = CorrespondExact(rig, lines);
      Json row{{"index", t}, {"accepted", c.accepted}};
      if (!c.accepted) row["violated"] = c.violated;
      all = all && c.accepted;
      results.push_back(row);
    }
  } else {
    const auto observations = LoadObservations(opt, raw);
    if (observations.empty()) Throw(ErrorCode::kParseError, "no observations given");
    for (std::size_t t = 0; t < observations.size(); ++t) {
      const CorrespondenceResult c = Correspond(scene.rig, observations[t], tol);
      Json row{{"index", t},
               {"accepted", c.accepted},
               {"residual", c.residual},
               {"congruence_residuals", c.congruence_residuals}};
      if (c.point) row["point"] = ToJson(*c.point);
      if (!c.accepted) row["violated"] = c.violated;
      all = all && c.accepted;
      results.push_back(row);
    }
  }
  r.report["results"] = results;
  r.report["accepted"] = all;
  r.exit_code = all ? kExitSuccess : kExitRejected;
  return r;
}

Result Triangulate(const Options& opt) {
  if (opt.exact) {
    Throw(ErrorCode::kParseError, "--exact is not supported by triangulate");
  }
  const Json raw = LoadScene(opt);
  const Scene scene = ParseScene(raw);
  const auto observations = LoadObservations(opt, raw);
  if (observations.empty()) Throw(ErrorCode::kParseError, "no observations given");
  Result r;
  r.report = Command("triangulate", opt);
  Json results = Json::array();
  for (std::size_t t = 0; t < observations.size(); ++t) {
    const Triangulation tri = Triangulate(scene.rig, observations[t]);
    results.push_back({{"index", t},
                       {"point", ToJson(Normalized(tri.point))},
                       {"residual", tri.residual}});
  }
  r.report["results"] = results;
  return r;
}

Result Baselines(const Options& opt) {
  const Scene scene = ParseScene(LoadScene(opt));
  if (scene.rig.size() != 2) {
    Throw(ErrorCode::kParseError, "baselines needs a rig of two cameras");
  }
  const std::vector<Transversal> lines = BaselinesLinear(scene.rig[0], scene.rig[1]);
  Result r;
  r.report = Command("baselines", opt);
  Json results = Json::array();
  int real = 0;
  for (const Transversal& t : lines) {
    Json row = TransversalToJson(t);
    if (t.is_real) {
      const Line p = Normalized(t.RealLine());
      row["congruence_residuals"] = {CongruenceResidual(scene.rig[0], p),
                                     CongruenceResidual(scene.rig[1], p)};
      ++real;
    }
    results.push_back(row);
  }
  r.report["results"] = results;
  r.report["count"] = lines.size();
  r.report["real_count"] = real;
  return r;
}

Result Tensor(const Options& opt) {
  if (opt.kind.empty()) Throw(ErrorCode::kParseError, "--kind is required");
  const TensorKind kind = ParseTensorKind(opt.kind);
  std::vector<Json> cams;
  if (opt.random > 0 || opt.scene.empty()) {
    std::mt19937_64 rng(opt.seed);
    const auto pinhole = [&] {
      return Json{{"type", "pinhole_matrix"}, {"A", MatrixToJson(RandomMatrix<3>(&rng))}};
    };
    const auto slit = [&] {
      return Json{{"type", "two_slit_matrices"},
                  {"A", MatrixToJson(RandomMatrix<2>(&rng))},
                  {"B", MatrixToJson(RandomMatrix<2>(&rng))}};
    };
    if (kind == TensorKind::kFundamental) cams = {pinhole(), pinhole()};
    if (kind == TensorKind::kQuadrifocal) cams = {slit(), slit()};
    if (kind == TensorKind::kMixed) cams = {pinhole(), slit()};
  } else {
    cams = ParseScene(LoadScene(opt)).photographic;
  }
  const auto want = [&](std::size_t i, const char* type) -> const Json& {
    if (i >= cams.size() || cams[i].value("type", "") != type) {
      Throw(ErrorCode::kParseError, "tensor '" + opt.kind + "' needs camera " +
                                        std::to_string(i) + " of type " + type);
    }
    return cams[i];
  };
  Result r;
  r.report = Command("tensor", opt);
  r.report["cameras"] = cams;
  r.report["exact"] = opt.exact;
  std::vector<Json> entries;
  std::vector<int> shape;
  const auto collect = [&](const auto& values) {
    for (const auto& v : values) {
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>) {
        entries.push_back(ToJson(v));
      } else {
        entries.push_back(v);
      }
    }
  };
  const auto run = [&]<typename T>(T) {
    const auto pin = [&](const Json& c) {
      if constexpr (ScalarTraits<T>::kExact) {
        return ParseExactMatrix<3, 4>(c.at("A"));
      } else {
        return ParseMatrix<3, 4>(c.at("A"));
      }
    };
    const auto two = [&](const Json& c) {
      if constexpr (ScalarTraits<T>::kExact) {
        return TwoSlitMatrices<T>{ParseExactMatrix<2, 4>(c.at("A")),
                                  ParseExactMatrix<2, 4>(c.at("B"))};
      } else {
        return TwoSlitMatrices<T>{ParseMatrix<2, 4>(c.at("A")),
                                  ParseMatrix<2, 4>(c.at("B"))};
      }
    };
    switch (kind) {
      case TensorKind::kFundamental: {
        const auto a = pin(want(0, "pinhole_matrix"));
        const auto b = pin(want(1, "pinhole_matrix"));
        Mat<T, 3, 3> f;
        if constexpr (ScalarTraits<T>::kExact) {
          f = FundamentalMatrixEntries(a, b);
        } else {
          f = FundamentalMatrix(a, b);
        }
        for (const auto& row : f) collect(row);
        shape = {3, 3};
        break;
      }
      case TensorKind::kQuadrifocal:
        collect(QuadrifocalTensor(two(want(0, "two_slit_matrices")),
                                  two(want(1, "two_slit_matrices"))));
        shape = {2, 2, 2, 2};
        break;
      case TensorKind::kMixed:
        collect(MixedEpipolarTensor(pin(want(0, "pinhole_matrix")),
                                    two(want(1, "two_slit_matrices"))));
        shape = {3, 2, 2};
        break;
    }
  };
  if (opt.exact) {
    run(Rational(0));
  } else {
    run(0.0);
  }
  r.report["tensor"] = {{"kind", TensorKindName(kind)},
                        {"shape", shape},
                        {"entries", Nest(shape, entries)}};
  return r;
}

Result Invariant(const Options& opt, std::istream* in) {
  Json j;
  if (opt.tensor.empty() || opt.tensor == "-") {
    std::stringstream ss;
    ss << in->rdbuf();
    j = ParseJsonText(ss.str());
  } else {
    j = ReadJsonFile(opt.tensor);
  }
  if (j.contains("tensor")) j = j.at("tensor");
  const MultifocalTensor t = ParseTensor(j);
  double norm = 0;
  for (double v : t.entries) norm += v * v;
  norm = std::sqrt(norm);
  Result r;
  r.report = Command("invariant", opt);
  r.report["kind"] = TensorKindName(t.kind);
  double value = 0;
  int degree = 0;
  if (t.kind == TensorKind::kMixed) {
    std::array<double, 12> f;
    std::copy(t.entries.begin(), t.entries.end(), f.begin());
    value = SexticInvariant(f);
    degree = 6;
  } else if (t.kind == TensorKind::kFundamental) {
    value = t.entries[0] * (t.entries[4] * t.entries[8] - t.entries[5] * t.entries[7]) -
            t.entries[1] * (t.entries[3] * t.entries[8] - t.entries[5] * t.entries[6]) +
            t.entries[2] * (t.entries[3] * t.entries[7] - t.entries[4] * t.entries[6]);
    degree = 3;
  } else {
    Throw(ErrorCode::kParseError, "no invariant is available for quadrifocal tensors");
  }
  r.report["invariant"] = degree == 6 ? "sextic" : "determinant";
  r.report["value"] = value;
  r.report["relative"] = norm > 0 ? std::abs(value) / std::pow(norm, degree) : 0.0;
  return r;
}

Result Reflect(const Options& opt) {
  Result r;
  r.report = Command("reflect", opt);
  r.report["exact"] = opt.exact;
  if (!opt.plane.empty()) {
    if (opt.point.empty() && opt.line.empty()) {
      Throw(ErrorCode::kParseError, "reflect needs --point or --line");
    }
    const auto plane = SplitCoordinates(opt.plane, 4, "--plane");
    if (opt.exact) {
      const ProjPlane<Rational> h(ParseExactVector<4>(Json(plane)));
      if (!opt.point.empty()) {
        const ProjPoint<Rational> y(
            ParseExactVector<4>(Json(SplitCoordinates(opt.point, 4, "--point"))));
        r.report["point"] = ToJson(ReflectPoint(h, y));
      }
      if (!opt.line.empty()) {
        const PlueckerLine<Rational> p(
            ParseExactVector<6>(Json(SplitCoordinates(opt.line, 6, "--line"))));
        r.report["line"] = ToJson(ReflectLine(h, p));
      }
    } else {
      const Plane h(ParseVector<4>(Json(plane)));
      if (!opt.point.empty()) {
        r.report["point"] = ToJson(Normalized(
            ReflectPoint(h, ParsePoint(Json(SplitCoordinates(opt.point, 4, "--point"))))));
      }
      if (!opt.line.empty()) {
        r.report["line"] = ToJson(Normalized(
            ReflectLine(h, ParseLine(Json(SplitCoordinates(opt.line, 6, "--line"))))));
      }
    }
    return r;
  }
  if (opt.exact) {
    Throw(ErrorCode::kParseError, "--exact needs --plane");
  }
  const Scene scene = ParseScene(LoadScene(opt));
  if (opt.surface < 0 || opt.surface >= static_cast<int>(scene.surfaces.size())) {
    Throw(ErrorCode::kParseError, "scene has no surface " + std::to_string(opt.surface));
  }
  const MirrorSurface& s = scene.surfaces[opt.surface];
  if (opt.line.empty()) Throw(ErrorCode::kParseError, "reflect needs --line");
  const Line l = ParseLine(Json(SplitCoordinates(opt.line, 6, "--line")));
  r.report["surface"] = SurfaceToJson(s);
  if (!opt.point.empty()) {
    const Point x = ParsePoint(Json(SplitCoordinates(opt.point, 4, "--point")));
    const Line lp = Normalized(SpecularPair(s, x, l, opt.Tolerance()));
    r.report["tangent_plane"] = ToJson(Normalized(TangentPlane(s, x, opt.Tolerance())));
    r.report["line"] = ToJson(lp);
    r.report["mirror_residual"] = MirrorPairResidual(s, l, lp);
    return r;
  }
  Json hits = Json::array();
  for (const SurfaceHit& h : LineSurfaceIntersections(s, l)) {
    Json row{{"point", ToJson(h.point)}, {"singular", h.singular}};
    if (!h.singular) {
      row["tangent_plane"] = ToJson(Normalized(Plane(s.Gradient(h.point))));
      row["line"] = ToJson(Normalized(ReflectLine(Plane(s.Gradient(h.point)), l)));
    }
    hits.push_back(row);
  }
  r.report["results"] = hits;
  return r;
}

Result MultidegreeReport(const Options& opt) {
  const MultidegreePolynomial m = Multidegree(opt.n);
  Result r;
  r.report = Command("multidegree", opt);
  r.report["n"] = opt.n;
  Json terms = Json::array();
  for (const MultidegreeTerm& t : m.terms()) {
    terms.push_back({{"term", MultidegreePolynomial::TermToString(t)},
                     {"coefficient", t.coefficient},
                     {"exponents", t.exponents}});
  }
  r.report["results"] = terms;
  r.report["term_count"] = m.terms().size();
  r.report["coefficient_sum"] = m.CoefficientSum();
  r.report["polynomial"] = m.ToString();
  return r;
}

Result Guarded(const std::string& command, const std::function<Result()>& fn) {
  const auto fail = [&](int code, const std::string& name, const std::string& msg) {
    Result r;
    r.exit_code = code;
    r.report = {{"command", command}, {"error", name}, {"message", msg}};
    return r;
  };
  try {
    return fn();
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kParseError:
      case ErrorCode::kDegenerateInput:
      case ErrorCode::kInvalidN:
      case ErrorCode::kInvalidSlit:
        return fail(kExitUsage, ErrorCodeName(e.code()), e.what());
      default:
        return fail(kExitNumerical, ErrorCodeName(e.code()), e.what());
    }
  } catch (const Json::exception& e) {
    return fail(kExitUsage, "ParseError", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kExitUsage, "ParseError", e.what());
  }
}

std::string FormatReport(const Json& report, const std::string& format) {
  if (format == "json") return DumpJson(report) + "\n";
  std::string out;
  if (report.contains("results") && report.at("results").is_array() &&
      !report.at("results").empty()) {
    std::vector<std::string> columns;
    for (const Json& row : report.at("results")) {
      for (auto it = row.begin(); it != row.end(); ++it) {
        if (std::find(columns.begin(), columns.end(), it.key()) == columns.end()) {
          columns.push_back(it.key());
        }
      }
    }
    std::sort(columns.begin(), columns.end());
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out += (i ? "," : "") + columns[i];
    }
    out += '\n';
    for (const Json& row : report.at("results")) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        if (row.contains(columns[i])) out += CsvCell(row.at(columns[i]));
      }
      out += '\n';
    }
    return out;
  }
  out = "key,value\n";
  for (auto it = report.begin(); it != report.end(); ++it) {
    out += it.key() + "," + CsvCell(it.value()) + "\n";
  }
  return out;
}

int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Line-congruence camera models: projection, correspondence, "
               "tensors and mirrors"};
  app.require_subcommand(1);
  Options opt;
  double tol = 0;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--scene", opt.scene, "Scene JSON file");
    sub->add_option("--tol", tol, "Residual tolerance (default 1e-8)");
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--out", opt.out, "Write the report to this file");
    sub->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--timing", opt.timing, "Include wall time in the report");
  };
  CLI::App* project = app.add_subcommand("project", "Project points through the rig");
  common(project);
  project->add_option("--points", opt.points, "Points JSON file");
  project->add_option("--random", opt.random, "Use N random points");

  CLI::App* check = app.add_subcommand("check", "Check line correspondences");
  common(check);
  check->add_option("--observations", opt.observations, "Observations JSON file");
  check->add_flag("--exact", opt.exact, "Exact rational arithmetic");

  CLI::App* triangulate = app.add_subcommand("triangulate", "Recover points");
  common(triangulate);
  triangulate->add_option("--observations", opt.observations, "Observations JSON file");
  triangulate->add_flag("--exact", opt.exact, "Exact rational arithmetic");

  CLI::App* baselines = app.add_subcommand("baselines", "Baselines of two cameras");
  common(baselines);

  CLI::App* tensor = app.add_subcommand("tensor", "Multifocal tensor of a rig");
  common(tensor);
  tensor->add_option("--kind", opt.kind, "fundamental, quadrifocal or mixed")->required();
  tensor->add_option("--random", opt.random, "Use random cameras (N > 0)");
  tensor->add_flag("--exact", opt.exact, "Exact rational arithmetic");

  CLI::App* invariant = app.add_subcommand("invariant", "Invariant of a tensor");
  common(invariant);
  invariant->add_option("--tensor", opt.tensor, "Tensor JSON file, '-' for stdin");

  CLI::App* reflect = app.add_subcommand("reflect", "Reflect in a plane or mirror");
  common(reflect);
  reflect->add_option("--plane", opt.plane, "Plane a0,a1,a2,a3");
  reflect->add_option("--point", opt.point, "Point x0,x1,x2,x3");
  reflect->add_option("--line", opt.line, "Line p01,p02,p03,p12,p13,p23");
  reflect->add_option("--surface", opt.surface, "Surface index in the scene");
  reflect->add_flag("--exact", opt.exact, "Exact rational arithmetic");

  CLI::App* multidegree = app.add_subcommand("multidegree",
                                             "Multidegree of n concurrent lines");
  common(multidegree);
  multidegree->add_option("--n,n", opt.n, "Number of lines")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }
  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->count("--tol") > 0) opt.tol = tol;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const auto start = Clock::now();
  Result result = Guarded(name, [&]() -> Result {
    if (name == "project") return Project(opt);
    if (name == "check") return Check(opt);
    if (name == "triangulate") return Triangulate(opt);
    if (name == "baselines") return Baselines(opt);
    if (name == "tensor") return Tensor(opt);
    if (name == "invariant") return Invariant(opt, &in);
    if (name == "reflect") return Reflect(opt);
    return MultidegreeReport(opt);
  });
  if (opt.timing) {
    result.report["timing_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
  const std::string text = FormatReport(result.report, opt.format);
  if (!opt.out.empty()) {
    std::ofstream file(opt.out);
    if (!file) {
      err << "cannot write '" << opt.out << "'\n";
      return kExitUsage;
    }
    file << text;
  } else {
    out << text;
  }
  if (result.report.contains("error")) {
    err << result.report.value("message", "") << "\n";
  }
  return result.exit_code;
}

}  // namespace gvcam::cli
