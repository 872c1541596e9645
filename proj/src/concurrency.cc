#include "gvcam/concurrency.h"

#include <Eigen/Dense>
#include <sstream>

namespace gvcam {

GeneratorReport EvaluateGenerators(const std::vector<Line>& lines) {
  std::vector<Line> unit;
  unit.reserve(lines.size());
  for (const Line& p : lines) unit.push_back(Normalized(p));
  const GeneratorValues<double> v = EvaluateGeneratorValues(unit);

  GeneratorReport report;
  report.n = static_cast<int>(lines.size());
  report.quadric_index = v.quadric_index;
  report.cubic_index = v.cubic_index;
  for (double q : v.quadrics) {
    report.quadric_residuals.push_back(std::abs(q));
    report.max_quadric = std::max(report.max_quadric, std::abs(q));
  }
  for (const auto& c : v.cubics) {
    std::array<double, 10> a;
    for (int k = 0; k < 10; ++k) {
      a[k] = std::abs(c[k]);
      report.max_cubic = std::max(report.max_cubic, a[k]);
    }
    report.cubic_residuals.push_back(a);
  }
  report.max_relative_residual = std::max(report.max_quadric, report.max_cubic);
  return report;
}

std::vector<double> QuadricGenerators(const std::vector<Line>& lines) {
  std::vector<double> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i; j < lines.size(); ++j) {
      out.push_back(Incidence(Normalized(lines[i]), Normalized(lines[j])));
    }
  }
  return out;
}

namespace {

Eigen::JacobiSVD<Eigen::MatrixXd> StackedSvd(const std::vector<Line>& lines) {
  Eigen::MatrixXd stack(4 * lines.size(), 4);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const Mat<double, 4, 4> p = PrimalMatrix(Normalized(lines[l]));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) stack(4 * l + i, j) = p[i][j];
    }
  }
  return Eigen::JacobiSVD<Eigen::MatrixXd>(stack, Eigen::ComputeFullV);
}

}  // namespace

std::array<double, 4> StackedSingularValues(const std::vector<Line>& lines) {
  const Eigen::VectorXd s = StackedSvd(lines).singularValues();
  return {s(0), s(1), s(2), s(3)};
}

std::optional<Point> FindCommonPoint(const std::vector<Line>& lines,
                                     double tol) {
  if (lines.size() < 2) {
    Throw(ErrorCode::kInvalidN, "find_common_point needs at least two lines");
  }
  const auto svd = StackedSvd(lines);
  const Eigen::VectorXd s = svd.singularValues();
  if (s(2) < tol * s(0)) {
    Throw(ErrorCode::kAmbiguousPencil,
          "lines share a pencil; common point is not unique");
  }
  if (s(3) >= tol * s(2)) return std::nullopt;
  const Eigen::Vector4d v = svd.matrixV().col(3);
  return Point(v(0), v(1), v(2), v(3));
}

bool ConcurrentByTriples(const std::vector<Line>& lines, double tol) {
  const std::size_t n = lines.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!FindCommonPoint({lines[i], lines[j], lines[k]}, tol)) {
          return false;
        }
      }
    }
  }
  return true;
}

std::int64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t MultidegreePolynomial::CoefficientSum() const {
  std::int64_t s = 0;
  for (const auto& t : terms_) s += t.coefficient;
  return s;
}

std::int64_t MultidegreePolynomial::Coefficient(
    const std::vector<int>& exponents) const {
  for (const auto& t : terms_) {
    if (t.exponents == exponents) return t.coefficient;
  }
  return 0;
}

std::string MultidegreePolynomial::TermToString(const MultidegreeTerm& term) {
  std::ostringstream out;
  out << term.coefficient;
  for (std::size_t i = 0; i < term.exponents.size(); ++i) {
    if (term.exponents[i] == 0) continue;
    out << "*t" << i + 1;
    if (term.exponents[i] != 1) out << '^' << term.exponents[i];
  }
  return out.str();
}

std::string MultidegreePolynomial::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += " + ";
    out += TermToString(terms_[i]);
  }
  return out;
}

namespace {

// Calls fn on each k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void ForEachSubset(int n, int k, Fn fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

MultidegreePolynomial Multidegree(int n) {
  if (n < 2) Throw(ErrorCode::kInvalidN, "multidegree needs n >= 2");
  std::vector<MultidegreeTerm> terms;
  // One exponent lowered to 2 and another to 1, for every ordered pair.
  ForEachSubset(n, n - 2, [&](const std::vector<int>& kept) {
    std::vector<int> rest;
    for (int i = 0, k = 0; i < n; ++i) {
      if (k < static_cast<int>(kept.size()) && kept[k] == i) {
        ++k;
      } else {
        rest.push_back(i);
      }
    }
    for (int flip = 0; flip < 2; ++flip) {
      MultidegreeTerm t;
      t.coefficient = 4;
      t.exponents.assign(n, 3);
      t.exponents[rest[0]] = flip == 0 ? 2 : 1;
      t.exponents[rest[1]] = flip == 0 ? 1 : 2;
      terms.push_back(t);
    }
  });
  // Three exponents lowered to 2.
  if (n >= 3) {
    ForEachSubset(n, n - 3, [&](const std::vector<int>& kept) {
      MultidegreeTerm t;
      t.coefficient = 8;
      t.exponents.assign(n, 2);
      for (int i : kept) t.exponents[i] = 3;
      terms.push_back(t);
    });
  }
  return MultidegreePolynomial(std::move(terms));
}

ConcurrencyGeneratorCounts GeneratorCounts(int n) {
  if (n < 2) Throw(ErrorCode::kInvalidN, "generator counts need n >= 2");
  ConcurrencyGeneratorCounts c;
  c.minimal_quadrics = Binomial(n + 1, 2);
  c.minimal_cubics = 10 * Binomial(n, 3);
  c.groebner_quadrics = Binomial(n + 1, 2);
  c.groebner_cubics = 12 * Binomial(n, 3);
  c.groebner_quartics = 4 * Binomial(n + 1, 4);
  return c;
}

}  // namespace gvcam
