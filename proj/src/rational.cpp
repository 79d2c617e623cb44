#include "covlab/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <ostream>
#include <sstream>

#include "covlab/errors.hpp"

namespace covlab::exact {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s) {
  return BigInt(std::string(s));
}

BigInt pow10(std::size_t k) {
  BigInt out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= 10;
  return out;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator.is_zero()) {
    throw ContractError("Rational: denominator must be nonzero");
  }
  value_.assign(boost::multiprecision::cpp_rational(numerator, denominator));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw ContractError("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) {
    throw ParseError("Rational: cannot parse '" + std::string(text) + "'");
  }

  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("Rational: cannot parse fraction '" + std::string(text) + "'");
    }
    BigInt d = parse_digits(den);
    if (d.is_zero()) {
      throw ParseError("Rational: zero denominator in '" + std::string(text) + "'");
    }
    out = Rational(parse_digits(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw ParseError("Rational: cannot parse '" + std::string(text) + "'");
    }
    if (!whole.empty() && !all_digits(whole)) {
      throw ParseError("Rational: cannot parse '" + std::string(text) + "'");
    }
    if (!frac.empty() && !all_digits(frac)) {
      throw ParseError("Rational: cannot parse '" + std::string(text) + "'");
    }
    BigInt scale = pow10(frac.size());
    BigInt num = whole.empty() ? BigInt(0) : parse_digits(whole);
    num *= scale;
    if (!frac.empty()) num += parse_digits(frac);
    out = Rational(num, scale);
  } else {
    if (!all_digits(body)) {
      throw ParseError("Rational: cannot parse '" + std::string(text) + "'");
    }
    out = Rational(parse_digits(body), 1);
  }
  return negative ? -out : out;
}

double Rational::to_double() const {
  // Route through a wide binary float so that fractions whose numerator and
  // denominator individually overflow double still convert correctly.
  using Wide = boost::multiprecision::cpp_bin_float_50;
  if (is_zero()) return 0.0;
  Wide n(numerator());
  Wide d(denominator());
  return static_cast<double>(n / d);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.numerator().str();
  if (r.denominator() != 1) os << '/' << r.denominator().str();
  return os;
}

}  // namespace covlab::exact
