#include "gvcam/scalar.h"

#include <cstdlib>

#include "gvcam/error.h"

namespace gvcam {

Rational ParseRational(const std::string& text) {
  if (text.empty()) Throw(ErrorCode::kParseError, "empty rational");
  const std::size_t dot = text.find_first_of(".eE");
  if (dot != std::string::npos && text.find('/') == std::string::npos) {
    // Decimal literal: exact value of the shortest decimal, not of the double.
    std::string mant = text;
    long exp10 = 0;
    const std::size_t e = mant.find_first_of("eE");
    if (e != std::string::npos) {
      exp10 = std::strtol(mant.c_str() + e + 1, nullptr, 10);
      mant = mant.substr(0, e);
    }
    const std::size_t p = mant.find('.');
    if (p != std::string::npos) {
      exp10 -= static_cast<long>(mant.size() - p - 1);
      mant.erase(p, 1);
    }
    mpz_class num;
    if (num.set_str(mant[0] == '+' ? mant.substr(1) : mant, 10) != 0) {
      Throw(ErrorCode::kParseError, "bad rational literal '" + text + "'");
    }
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    Rational r = exp10 >= 0 ? Rational(num * pow10) : Rational(num, pow10);
    r.canonicalize();
    return r;
  }
  Rational r;
  const std::string body = text[0] == '+' ? text.substr(1) : text;
  if (r.set_str(body, 10) != 0) {
    Throw(ErrorCode::kParseError, "bad rational literal '" + text + "'");
  }
  if (r.get_den() == 0) Throw(ErrorCode::kParseError, "zero denominator");
  r.canonicalize();
  return r;
}

std::string RationalToString(const Rational& v) { return v.get_str(); }

}  // namespace gvcam
