#include "fatcat/integer.hpp"

#include <stdexcept>

namespace fatcat {

std::string to_string(const Rational& q) {
  const Integer& num = boost::multiprecision::numerator(q);
  const Integer& den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto fail = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
  if (text.empty()) throw fail();
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      Integer num(text.substr(0, slash));
      Integer den(text.substr(slash + 1));
      if (den == 0) throw fail();
      return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string whole = text.substr(0, dot);
      std::string frac = text.substr(dot + 1);
      bool negative = !whole.empty() && whole[0] == '-';
      if (negative || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
      if (whole.empty()) whole = "0";
      if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) throw fail();
      Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
      Rational q = Rational(Integer(whole)) + Rational(Integer(frac), scale);
      return negative ? Rational(-q) : q;
    }
    return Rational(Integer(text));
  } catch (const std::runtime_error&) {
    throw fail();
  }
}

}  // namespace fatcat
