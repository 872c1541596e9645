#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace gvcam {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Default relative tolerance for all residual-based decisions.
inline constexpr double kDefaultTolerance = 1e-8;

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool kExact = false;
  static double Magnitude(double v) { return std::abs(v); }
  static double ToDouble(double v) { return v; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static double Magnitude(const Rational& v) { return std::abs(v.get_d()); }
  static double ToDouble(const Rational& v) { return v.get_d(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool kExact = false;
  static double Magnitude(const Complex& v) { return std::abs(v); }
  static double ToDouble(const Complex& v) { return v.real(); }
};

template <typename T>
bool IsZero(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return sgn(v) == 0;
  } else {
    return v == T(0);
  }
}

// Parses "a", "a/b" or a decimal literal into an exact rational.
Rational ParseRational(const std::string& text);
std::string RationalToString(const Rational& v);

}  // namespace gvcam
