#include "gvcam/serialization.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace gvcam {
namespace {

void WriteString(const std::string& s, std::string* out) {
  // Reuse the library escaping for strings.
  *out += Json(s).dump();
}

void WriteNumber(double v, std::string* out) {
  if (std::isnan(v)) {
    *out += "\"nan\"";
  } else if (std::isinf(v)) {
    *out += v > 0 ? "\"inf\"" : "\"-inf\"";
  } else {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    *out += buf;
  }
}

void Write(const Json& j, int indent, int depth, std::string* out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    *out += '\n';
    out->append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        *out += "{}";
        return;
      }
      *out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) *out += ',';
        first = false;
        newline(depth + 1);
        WriteString(it.key(), out);
        *out += indent < 0 ? ":" : ": ";
        Write(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      *out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        *out += "[]";
        return;
      }
      // Flat numeric arrays stay on one line.
      bool flat = true;
      for (const Json& e : j) flat = flat && !e.is_structured();
      *out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) *out += flat && indent >= 0 ? ", " : ",";
        if (!flat) newline(depth + 1);
        Write(j[i], indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      *out += ']';
      return;
    }
    case Json::value_t::number_float:
      WriteNumber(j.get<double>(), out);
      return;
    default:
      *out += j.dump();
  }
}

std::optional<Homography> ParseHomography(const Json& j) {
  if (j.contains("homography")) {
    return Homography::FromMatrix(ParseMatrix<4, 4>(j.at("homography")));
  }
  if (j.contains("homography_inverse")) {
    return Homography::FromInverse(ParseMatrix<4, 4>(j.at("homography_inverse")));
  }
  return std::nullopt;
}

BinaryForm ParseForm(const Json& j) {
  if (!j.is_array()) Throw(ErrorCode::kParseError, "binary form must be an array");
  std::vector<double> c;
  for (const Json& e : j) c.push_back(ParseNumber(e));
  return BinaryForm(std::move(c));
}

Json FormToJson(const BinaryForm& f) { return Json(f.coeffs()); }

Json HomographyToJson(const std::optional<Homography>& h) {
  Json m = Json::array();
  for (const auto& row : h->forward) m.push_back(ToJson(row));
  return m;
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Throw(ErrorCode::kParseError, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

std::string DumpJson(const Json& j, int indent) {
  std::string out;
  Write(j, indent, 0, &out);
  return out;
}

Json ParseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    Throw(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Throw(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseJsonText(ss.str());
}

double ParseNumber(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return ParseRational(j.get<std::string>()).get_d();
  Throw(ErrorCode::kParseError, "expected a number, got " + j.dump());
}

Rational ParseExactNumber(const Json& j) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_number_float()) {
    // Decimal literal as written; dump() gives the shortest round trip.
    return ParseRational(j.dump());
  }
  if (j.is_string()) return ParseRational(j.get<std::string>());
  Throw(ErrorCode::kParseError, "expected a number, got " + j.dump());
}

Point ParsePoint(const Json& j) { return Point(ParseVector<4>(j)); }
Plane ParsePlane(const Json& j) { return Plane(ParseVector<4>(j)); }
Line ParseLine(const Json& j) { return Line(ParseVector<6>(j)); }

Json ToJson(const Rational& v) { return RationalToString(v); }

Json ToJson(const ComplexLine& p) {
  Json out = Json::array();
  for (int i = 0; i < 6; ++i) out.push_back({p[i].real(), p[i].imag()});
  return out;
}

GeometricCamera ParseCamera(const Json& j) {
  const std::string type = Field(j, "type").get<std::string>();
  GeometricCamera cam;
  if (type == "pinhole") {
    cam = Pinhole{ParsePoint(Field(j, "center"))};
  } else if (type == "two_slit") {
    const Json& s = Field(j, "slits");
    if (!s.is_array() || s.size() != 2) {
      Throw(ErrorCode::kParseError, "two_slit needs two slits");
    }
    cam = TwoSlit{ParseLine(s[0]), ParseLine(s[1])};
  } else if (type == "pushbroom") {
    cam = Pushbroom{ParseLine(Field(j, "slit"))};
  } else if (type == "twisted_cubic") {
    cam = TwistedCubic{ParseHomography(j)};
  } else if (type == "type3") {
    cam = Type3{ParseForm(Field(j, "f")), ParseForm(Field(j, "g")),
                ParseForm(Field(j, "h")), ParseHomography(j)};
  } else if (type == "type4") {
    cam = Type4{ParseForm(Field(j, "g")), ParseForm(Field(j, "h")),
                ParseHomography(j)};
  } else if (type == "panoramic_nc") {
    cam = PanoramicNC{};
  } else if (type == "panoramic_stereo") {
    cam = PanoramicStereo{};
  } else {
    Throw(ErrorCode::kParseError, "unknown camera type '" + type + "'");
  }
  ValidateCamera(cam);
  return cam;
}

Json CameraToJson(const GeometricCamera& cam) {
  Json j;
  j["type"] = CameraTypeName(cam);
  std::visit(
      Overloaded{
          [&](const Pinhole& c) { j["center"] = ToJson(c.center); },
          [&](const TwoSlit& c) {
            j["slits"] = {ToJson(c.slit1), ToJson(c.slit2)};
          },
          [&](const Pushbroom& c) { j["slit"] = ToJson(c.slit); },
          [&](const TwistedCubic& c) {
            if (c.homography) j["homography"] = HomographyToJson(c.homography);
          },
          [&](const Type3& c) {
            j["f"] = FormToJson(c.f);
            j["g"] = FormToJson(c.g);
            j["h"] = FormToJson(c.h);
            if (c.homography) j["homography"] = HomographyToJson(c.homography);
          },
          [&](const Type4& c) {
            j["g"] = FormToJson(c.g);
            j["h"] = FormToJson(c.h);
            if (c.homography) j["homography"] = HomographyToJson(c.homography);
          },
          [](const PanoramicNC&) {}, [](const PanoramicStereo&) {}},
      cam);
  return j;
}

ExactLinearCamera ParseExactLinearCamera(const Json& j) {
  const std::string type = Field(j, "type").get<std::string>();
  ExactLinearCamera cam;
  if (type == "pinhole") {
    cam.kind = ExactLinearCamera::Kind::kPinhole;
    cam.center = ProjPoint<Rational>(ParseExactVector<4>(Field(j, "center")));
  } else if (type == "two_slit") {
    const Json& s = Field(j, "slits");
    if (!s.is_array() || s.size() != 2) {
      Throw(ErrorCode::kParseError, "two_slit needs two slits");
    }
    cam.kind = ExactLinearCamera::Kind::kTwoSlit;
    cam.slit1 = PlueckerLine<Rational>(ParseExactVector<6>(s[0]));
    cam.slit2 = PlueckerLine<Rational>(ParseExactVector<6>(s[1]));
  } else {
    Throw(ErrorCode::kParseError,
          "exact mode supports pinhole and two_slit cameras only");
  }
  return cam;
}

MirrorSurface ParseSurface(const Json& j) {
  const Json& c = Field(j, "coeffs");
  if (!c.is_object()) Throw(ErrorCode::kParseError, "coeffs must be an object");
  std::map<std::string, double> coeffs;
  for (auto it = c.begin(); it != c.end(); ++it) {
    coeffs[it.key()] = ParseNumber(it.value());
  }
  MirrorSurface s = MirrorSurface::FromExponentStrings(coeffs);
  if (j.contains("degree") && j.at("degree").get<int>() != s.degree()) {
    Throw(ErrorCode::kParseError, "declared degree does not match coeffs");
  }
  return s;
}

Json SurfaceToJson(const MirrorSurface& s) {
  Json c = Json::object();
  for (const auto& [e, v] : s.coeffs()) {
    std::string key;
    for (int k : e) key += static_cast<char>('0' + k);
    c[key] = v;
  }
  return {{"degree", s.degree()}, {"coeffs", c}};
}

Json TensorToJson(const MultifocalTensor& t) {
  // Nested arrays following the shape.
  std::function<Json(std::size_t, std::size_t)> nest = [&](std::size_t dim,
                                                           std::size_t offset) {
    Json out = Json::array();
    std::size_t stride = 1;
    for (std::size_t d = dim + 1; d < t.shape.size(); ++d) stride *= t.shape[d];
    for (int i = 0; i < t.shape[dim]; ++i) {
      if (dim + 1 == t.shape.size()) {
        out.push_back(t.entries[offset + i]);
      } else {
        out.push_back(nest(dim + 1, offset + i * stride));
      }
    }
    return out;
  };
  return {{"kind", TensorKindName(t.kind)},
          {"shape", t.shape},
          {"entries", nest(0, 0)}};
}

MultifocalTensor ParseTensor(const Json& j) {
  MultifocalTensor t;
  t.kind = ParseTensorKind(Field(j, "kind").get<std::string>());
  switch (t.kind) {
    case TensorKind::kFundamental:
      t.shape = {3, 3};
      break;
    case TensorKind::kQuadrifocal:
      t.shape = {2, 2, 2, 2};
      break;
    case TensorKind::kMixed:
      t.shape = {3, 2, 2};
      break;
  }
  std::function<void(const Json&, std::size_t)> flatten = [&](const Json& e,
                                                               std::size_t dim) {
    if (dim == t.shape.size()) {
      t.entries.push_back(ParseNumber(e));
      return;
    }
    if (!e.is_array() || e.size() != static_cast<std::size_t>(t.shape[dim])) {
      Throw(ErrorCode::kParseError, "tensor entries do not match the shape");
    }
    for (const Json& x : e) flatten(x, dim + 1);
  };
  flatten(Field(j, "entries"), 0);
  return t;
}

std::vector<std::vector<Line>> ParseObservations(const Json& j) {
  if (!j.is_array()) Throw(ErrorCode::kParseError, "observations must be an array");
  std::vector<std::vector<Line>> out;
  if (j.empty()) return out;
  if (j[0].is_array() && !j[0].empty() && !j[0][0].is_array()) {
    std::vector<Line> tuple;
    for (const Json& l : j) tuple.push_back(ParseLine(l));
    out.push_back(std::move(tuple));
    return out;
  }
  for (const Json& t : j) {
    if (!t.is_array()) Throw(ErrorCode::kParseError, "bad observation tuple");
    std::vector<Line> tuple;
    for (const Json& l : t) tuple.push_back(ParseLine(l));
    out.push_back(std::move(tuple));
  }
  return out;
}

std::vector<Point> ParsePoints(const Json& j) {
  if (!j.is_array()) Throw(ErrorCode::kParseError, "points must be an array");
  std::vector<Point> out;
  for (const Json& p : j) out.push_back(ParsePoint(p));
  return out;
}

Scene ParseScene(const Json& j) {
  if (!j.is_object()) Throw(ErrorCode::kParseError, "scene must be an object");
  Scene s;
  s.version = j.value("version", 1);
  if (s.version != 1) {
    Throw(ErrorCode::kParseError, "unsupported scene version");
  }
  if (j.contains("rig")) {
    s.rig_json = j.at("rig");
    if (!s.rig_json.is_array()) Throw(ErrorCode::kParseError, "rig must be an array");
    for (const Json& c : s.rig_json) s.rig.push_back(ParseCamera(c));
  }
  if (j.contains("points")) s.points = ParsePoints(j.at("points"));
  if (j.contains("observations")) {
    s.observations = ParseObservations(j.at("observations"));
  }
  if (j.contains("photographic")) {
    for (const Json& p : j.at("photographic")) s.photographic.push_back(p);
  }
  if (j.contains("surfaces")) {
    for (const Json& p : j.at("surfaces")) s.surfaces.push_back(ParseSurface(p));
  }
  return s;
}

Json SceneToJson(const Scene& scene) {
  Json j;
  j["version"] = scene.version;
  Json rig = Json::array();
  for (const auto& c : scene.rig) rig.push_back(CameraToJson(c));
  j["rig"] = rig;
  if (!scene.points.empty()) {
    Json pts = Json::array();
    for (const Point& p : scene.points) pts.push_back(ToJson(p));
    j["points"] = pts;
  }
  if (!scene.observations.empty()) {
    Json obs = Json::array();
    for (const auto& t : scene.observations) {
      Json tuple = Json::array();
      for (const Line& l : t) tuple.push_back(ToJson(l));
      obs.push_back(tuple);
    }
    j["observations"] = obs;
  }
  if (!scene.photographic.empty()) j["photographic"] = scene.photographic;
  if (!scene.surfaces.empty()) {
    Json surf = Json::array();
    for (const auto& s : scene.surfaces) surf.push_back(SurfaceToJson(s));
    j["surfaces"] = surf;
  }
  return j;
}

}  // namespace gvcam
