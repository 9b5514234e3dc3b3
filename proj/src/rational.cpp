#include "ksreg/rational.hpp"

#include <stdexcept>

namespace ksreg {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(v);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

}  // namespace ksreg
