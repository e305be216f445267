#include "magnus_lab/matrix.hpp"

#include <cctype>
#include <cmath>

namespace magnus_lab {

FloatMatrix to_float(const RationalMatrix& m) {
  const std::size_t n = m.size();
  FloatMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = to_double(m(i, j));
  return r;
}

bool is_finite(const FloatMatrix& m) {
  for (double x : m.values())
    if (!std::isfinite(x)) return false;
  return true;
}

double to_double(const mpq_class& q) { return q.get_d(); }

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

mpz_class parse_integer(const std::string& s, const std::string& whole) {
  std::size_t k = 0;
  if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
  if (k == s.size()) throw ParseError("not a rational: '" + whole + "'");
  for (std::size_t i = k; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("not a rational: '" + whole + "'");
  mpz_class z;
  z.set_str(s[0] == '+' ? s.substr(1) : s, 10);
  return z;
}

mpq_class parse_decimal(const std::string& s) {
  std::size_t k = 0;
  bool negative = false;
  if (k < s.size() && (s[k] == '+' || s[k] == '-')) negative = s[k++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  for (; k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); ++k) {
    digits += s[k];
    seen_digit = true;
  }
  if (k < s.size() && s[k] == '.') {
    for (++k; k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); ++k) {
      digits += s[k];
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw ParseError("not a rational: '" + s + "'");
  if (k < s.size() && (s[k] == 'e' || s[k] == 'E')) {
    const std::string exponent = s.substr(k + 1);
    const mpz_class e = parse_integer(exponent, s);
    if (!e.fits_slong_p() || abs(e) > 100000) throw ParseError("exponent out of range: '" + s + "'");
    scale += e.get_si();
    k = s.size();
  }
  if (k != s.size()) throw ParseError("not a rational: '" + s + "'");
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class q = scale < 0 ? mpq_class(mantissa, ten_pow) : mpq_class(mantissa * ten_pow);
  q.canonicalize();
  return q;
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const mpz_class num = parse_integer(trim(s.substr(0, slash)), s);
    const mpz_class den = parse_integer(trim(s.substr(slash + 1)), s);
    if (den == 0) throw ParseError("zero denominator: '" + s + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(s);
}

}  // namespace magnus_lab
