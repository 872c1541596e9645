#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "gvcam/serialization.h"

namespace gvcam::cli {

enum ExitCode {
  kExitSuccess = 0,
  kExitRejected = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

struct Options {
  std::string scene;
  std::string points;
  std::string observations;
  std::string out;
  std::string format = "json";
  std::optional<double> tol;
  bool exact = false;
  std::uint64_t seed = 0;
  int random = 0;
  bool timing = false;
  // tensor
  std::string kind;
  // invariant; "-" reads standard input
  std::string tensor;
  // reflect: comma separated coordinates
  std::string plane;
  std::string point;
  std::string line;
  int surface = 0;
  // multidegree
  int n = 0;

  // --tol, then GVCAM_TOL, then the library default.
  double Tolerance() const;
};

struct Result {
  int exit_code = kExitSuccess;
  Json report;
};

Result Project(const Options& opt);
Result Check(const Options& opt);
Result Triangulate(const Options& opt);
Result Baselines(const Options& opt);
Result Tensor(const Options& opt);
Result Invariant(const Options& opt, std::istream* in);
Result Reflect(const Options& opt);
Result MultidegreeReport(const Options& opt);

// Maps library and parse errors to exit codes and an error report.
Result Guarded(const std::string& command, const std::function<Result()>& fn);

// "json" or "csv".
std::string FormatReport(const Json& report, const std::string& format);

// Full command line entry point.
int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gvcam::cli
