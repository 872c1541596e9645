#pragma once

#include <array>
#include <string>
#include <vector>

#include "gvcam/scalar.h"

namespace gvcam {

// Homogeneous form sum_k c_k s^(d-k) t^k. An empty coefficient list is the
// zero form.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  bool IsZero() const;
  double MaxAbsCoeff() const;

  template <typename T>
  T operator()(const T& s, const T& t) const {
    const int d = degree();
    T value(0);
    for (int k = 0; k <= d; ++k) {
      T term(coeffs_[k]);
      for (int i = 0; i < d - k; ++i) term *= s;
      for (int i = 0; i < k; ++i) term *= t;
      value += term;
    }
    return value;
  }

  BinaryForm Scaled(double factor) const;

  // Homogeneous roots (s:t), each scaled to unit norm, with multiplicity.
  std::vector<std::array<Complex, 2>> Roots() const;

 private:
  std::vector<double> coeffs_;
};

// Roots of sum_k a_k z^(n-k) (highest degree first), via the companion matrix
// followed by Newton polishing. Leading coefficients below 1e-14 relative are
// dropped.
std::vector<Complex> PolynomialRoots(const std::vector<double>& coeffs);

struct Monomial {
  double coeff = 0;
  std::vector<int> exponents;
};

// Sparse polynomial in a fixed list of variables.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<std::string> variables, std::vector<Monomial> terms);

  // Parses text such as "p02^2*p03 - 2*p12^3 + p23". Variable names are
  // matched greedily, so '*' between factors is optional.
  static Polynomial Parse(const std::string& text,
                          const std::vector<std::string>& variables);

  const std::vector<Monomial>& terms() const { return terms_; }
  const std::vector<std::string>& variables() const { return variables_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  int Degree() const;
  bool IsHomogeneous() const;
  double AbsCoeffSum() const;

  // Terms not involving the given variable.
  Polynomial WithoutVariable(int var) const;

  std::string ToString() const;

  template <typename T>
  T Evaluate(const std::vector<T>& values) const {
    T total(0);
    for (const Monomial& m : terms_) {
      T term(m.coeff);
      for (std::size_t v = 0; v < m.exponents.size(); ++v) {
        for (int e = 0; e < m.exponents[v]; ++e) term *= values[v];
      }
      total += term;
    }
    return total;
  }

 private:
  std::vector<std::string> variables_;
  std::vector<Monomial> terms_;
};

// Variable names {prefix01, prefix02, ..., prefix23}.
std::vector<std::string> LineVariables(const std::string& prefix);

}  // namespace gvcam
