#include "gvcam/polynomial.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include <Eigen/Dense>

#include "gvcam/error.h"

namespace gvcam {

bool BinaryForm::IsZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](double c) { return c == 0; });
}

double BinaryForm::MaxAbsCoeff() const {
  double m = 0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

BinaryForm BinaryForm::Scaled(double factor) const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v *= factor;
  return BinaryForm(std::move(c));
}

std::vector<std::array<Complex, 2>> BinaryForm::Roots() const {
  std::vector<std::array<Complex, 2>> roots;
  const int d = degree();
  const double scale = MaxAbsCoeff();
  if (d <= 0 || scale == 0) return roots;
  // Leading zeros in s^d, s^(d-1) t, ... are roots at (1:0).
  int m = 0;
  while (m <= d && std::abs(coeffs_[m]) <= 1e-14 * scale) ++m;
  for (int i = 0; i < m; ++i) roots.push_back({Complex(1), Complex(0)});
  const std::vector<double> rest(coeffs_.begin() + m, coeffs_.end());
  for (const Complex& r : PolynomialRoots(rest)) {
    const double n = std::sqrt(std::norm(r) + 1.0);
    roots.push_back({r / n, Complex(1.0 / n)});
  }
  return roots;
}

std::vector<Complex> PolynomialRoots(const std::vector<double>& coeffs) {
  double scale = 0;
  for (double c : coeffs) scale = std::max(scale, std::abs(c));
  std::vector<Complex> roots;
  if (scale == 0) return roots;
  std::size_t lead = 0;
  while (lead < coeffs.size() && std::abs(coeffs[lead]) <= 1e-14 * scale) {
    ++lead;
  }
  const int n = static_cast<int>(coeffs.size() - lead) - 1;
  if (n <= 0) return roots;
  const double a0 = coeffs[lead];
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) companion(0, j) = -coeffs[lead + 1 + j] / a0;
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const Eigen::VectorXcd ev = solver.eigenvalues();
  auto eval = [&](const Complex& z, Complex* deriv) {
    Complex v(0), dv(0);
    for (std::size_t k = lead; k < coeffs.size(); ++k) {
      dv = dv * z + v;
      v = v * z + coeffs[k];
    }
    *deriv = dv;
    return v;
  };
  for (int i = 0; i < n; ++i) {
    Complex z = ev(i);
    for (int it = 0; it < 3; ++it) {
      Complex dv;
      const Complex v = eval(z, &dv);
      if (std::abs(dv) < 1e-300) break;
      const Complex next = z - v / dv;
      Complex dn;
      if (std::abs(eval(next, &dn)) >= std::abs(v)) break;
      z = next;
    }
    roots.push_back(z);
  }
  return roots;
}

Polynomial::Polynomial(std::vector<std::string> variables,
                       std::vector<Monomial> terms)
    : variables_(std::move(variables)), terms_(std::move(terms)) {}

Polynomial Polynomial::Parse(const std::string& text,
                             const std::vector<std::string>& variables) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  std::vector<int> order(variables.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return variables[a].size() > variables[b].size();
  });

  std::vector<Monomial> terms;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    Throw(ErrorCode::kParseError,
          "polynomial: " + why + " at offset " + std::to_string(pos));
  };
  while (pos < s.size()) {
    double sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty()) {
      fail("expected '+' or '-'");
    }
    Monomial m;
    m.coeff = sign;
    m.exponents.assign(variables.size(), 0);
    bool any = false;
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                           s[pos] == '.')) {
      std::size_t used = 0;
      m.coeff *= std::stod(s.substr(pos), &used);
      pos += used;
      any = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      int var = -1;
      for (int v : order) {
        if (s.compare(pos, variables[v].size(), variables[v]) == 0) {
          var = v;
          break;
        }
      }
      if (var < 0) fail("unknown variable");
      pos += variables[var].size();
      int e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t used = 0;
        e = std::stoi(s.substr(pos), &used);
        pos += used;
      }
      m.exponents[var] += e;
      any = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (!any) fail("empty term");
    terms.push_back(std::move(m));
  }
  return Polynomial(variables, std::move(terms));
}

int Polynomial::Degree() const {
  int d = 0;
  for (const Monomial& m : terms_) {
    int e = 0;
    for (int x : m.exponents) e += x;
    d = std::max(d, e);
  }
  return d;
}

bool Polynomial::IsHomogeneous() const {
  const int d = Degree();
  for (const Monomial& m : terms_) {
    int e = 0;
    for (int x : m.exponents) e += x;
    if (e != d) return false;
  }
  return true;
}

double Polynomial::AbsCoeffSum() const {
  double s = 0;
  for (const Monomial& m : terms_) s += std::abs(m.coeff);
  return s;
}

Polynomial Polynomial::WithoutVariable(int var) const {
  std::vector<Monomial> kept;
  for (const Monomial& m : terms_) {
    if (m.exponents[var] == 0) kept.push_back(m);
  }
  return Polynomial(variables_, std::move(kept));
}

std::string Polynomial::ToString() const {
  std::ostringstream out;
  bool first = true;
  for (const Monomial& m : terms_) {
    const double a = std::abs(m.coeff);
    out << (m.coeff < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool need_star = false;
    if (a != 1) {
      out << a;
      need_star = true;
    }
    bool any = false;
    for (std::size_t v = 0; v < m.exponents.size(); ++v) {
      if (m.exponents[v] == 0) continue;
      if (need_star) out << '*';
      out << variables_[v];
      if (m.exponents[v] > 1) out << '^' << m.exponents[v];
      need_star = true;
      any = true;
    }
    if (!any && a == 1) out << 1;
    first = false;
  }
  return out.str();
}

std::vector<std::string> LineVariables(const std::string& prefix) {
  return {prefix + "01", prefix + "02", prefix + "03",
          prefix + "12", prefix + "13", prefix + "23"};
}

}  // namespace gvcam
