#include "icx/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace icx {

Int floor_of(const Rational& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  Int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

Int ceil_of(const Rational& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  Int q = num / den;
  if (num > 0 && q * den != num) ++q;
  return q;
}

Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Int parse_int(const std::string& s) {
  if (!valid_integer_token(s)) {
    throw std::invalid_argument("malformed integer: '" + s + "'");
  }
  return Int(s);
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_int(s));
  }
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return Rational(num, den);
}

std::string int_to_string(const Int& n) { return n.str(); }

std::string rational_to_string(const Rational& r) {
  Int den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

}  // namespace icx
