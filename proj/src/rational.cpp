#include "bethe/rational.hpp"

#include <cctype>
#include <string>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

mpz_class to_mpz(const std::string& s) {
  std::string digits = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = strip(text);
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw ParseError("not a rational: '" + s + "'");
    }
    mpz_class d = to_mpz(den);
    if (d == 0) throw ParseError("zero denominator: '" + s + "'");
    Rational r(to_mpz(num), d);
    r.canonicalize();
    return r;
  }
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
    if (!is_integer_literal(whole) || (!frac.empty() && !is_integer_literal(frac)) ||
        (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))) {
      throw ParseError("not a decimal: '" + s + "'");
    }
    mpz_class scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(frac, 10);
    mpz_class w = to_mpz(whole);
    if (negative) f = -f;
    Rational r(w * scale + f, scale);
    r.canonicalize();
    return r;
  }
  if (!is_integer_literal(s)) throw ParseError("not a rational: '" + s + "'");
  return Rational(to_mpz(s));
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational power(const Rational& base, long exponent) {
  Rational result = 1;
  Rational b = base;
  long e = exponent < 0 ? -exponent : exponent;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  if (exponent < 0) result = 1 / result;
  return result;
}

}  // namespace bethe
