#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gvcam/cameras.h"
#include "gvcam/catadioptric.h"
#include "gvcam/multiimage.h"
#include "gvcam/tensors.h"

namespace gvcam {

using Json = nlohmann::json;

// Serializes with 17 significant digits for floating point values. Non-finite
// values are written as the strings "inf", "-inf" and "nan".
std::string DumpJson(const Json& j, int indent = 2);

// Throws ParseError with the parser message.
Json ParseJsonText(const std::string& text);
Json ReadJsonFile(const std::string& path);

double ParseNumber(const Json& j);
// Accepts integers, rational strings and decimal numbers.
Rational ParseExactNumber(const Json& j);

template <int N>
std::array<double, N> ParseVector(const Json& j) {
  if (!j.is_array() || j.size() != N) {
    Throw(ErrorCode::kParseError,
          "expected an array of " + std::to_string(N) + " numbers");
  }
  std::array<double, N> out;
  for (int i = 0; i < N; ++i) out[i] = ParseNumber(j[i]);
  return out;
}

template <int N>
std::array<Rational, N> ParseExactVector(const Json& j) {
  if (!j.is_array() || j.size() != N) {
    Throw(ErrorCode::kParseError,
          "expected an array of " + std::to_string(N) + " numbers");
  }
  std::array<Rational, N> out;
  for (int i = 0; i < N; ++i) out[i] = ParseExactNumber(j[i]);
  return out;
}

template <int R, int C>
Mat<double, R, C> ParseMatrix(const Json& j) {
  if (!j.is_array() || j.size() != R) {
    Throw(ErrorCode::kParseError, "expected a matrix with " +
                                      std::to_string(R) + " rows");
  }
  Mat<double, R, C> m;
  for (int i = 0; i < R; ++i) m[i] = ParseVector<C>(j[i]);
  return m;
}

template <int R, int C>
Mat<Rational, R, C> ParseExactMatrix(const Json& j) {
  if (!j.is_array() || j.size() != R) {
    Throw(ErrorCode::kParseError, "expected a matrix with " +
                                      std::to_string(R) + " rows");
  }
  Mat<Rational, R, C> m;
  for (int i = 0; i < R; ++i) m[i] = ParseExactVector<C>(j[i]);
  return m;
}

Point ParsePoint(const Json& j);
Plane ParsePlane(const Json& j);
Line ParseLine(const Json& j);

Json ToJson(const Rational& v);
template <typename T, std::size_t N>
Json ToJson(const std::array<T, N>& v) {
  Json out = Json::array();
  for (const T& x : v) {
    if constexpr (std::is_same_v<T, Rational>) {
      out.push_back(ToJson(x));
    } else {
      out.push_back(x);
    }
  }
  return out;
}
template <typename T, int N, typename Tag>
Json ToJson(const Homogeneous<T, N, Tag>& v) {
  return ToJson(v.c);
}
// Complex vectors as [[re, im], ...].
Json ToJson(const ComplexLine& p);

// Validates the descriptor with ValidateCamera.
GeometricCamera ParseCamera(const Json& j);
Json CameraToJson(const GeometricCamera& cam);
ExactLinearCamera ParseExactLinearCamera(const Json& j);

MirrorSurface ParseSurface(const Json& j);
Json SurfaceToJson(const MirrorSurface& s);

Json TensorToJson(const MultifocalTensor& t);
MultifocalTensor ParseTensor(const Json& j);

struct Scene {
  int version = 1;
  Json rig_json = Json::array();
  CameraRig rig;
  std::vector<Point> points;
  // Correspondence tuples, one line per camera.
  std::vector<std::vector<Line>> observations;
  std::vector<Json> photographic;
  std::vector<MirrorSurface> surfaces;
};

Scene ParseScene(const Json& j);
Json SceneToJson(const Scene& scene);

// Observations may be given as one tuple (a list of 6-vectors) or a list of
// tuples.
std::vector<std::vector<Line>> ParseObservations(const Json& j);
std::vector<Point> ParsePoints(const Json& j);

}  // namespace gvcam
