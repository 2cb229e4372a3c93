#include "coarse/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "coarse/error.hpp"

namespace coarse {

namespace {

bool is_decimal_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational::Rational(long numerator, long denominator) : q_(numerator, denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_parts(text, "1");
  return from_parts(text.substr(0, slash), text.substr(slash + 1));
}

Rational Rational::from_parts(std::string_view numerator, std::string_view denominator) {
  if (!is_decimal_integer(numerator, true) || !is_decimal_integer(denominator, true)) {
    throw InputError("malformed rational '" + std::string(numerator) + "/" + std::string(denominator) + "'");
  }
  mpz_class num(strip_plus(numerator), 10);
  mpz_class den(strip_plus(denominator), 10);
  if (den == 0) throw InputError("rational with zero denominator");
  Rational r;
  r.q_ = mpq_class(num, den);
  r.q_.canonicalize();
  return r;
}

std::int64_t Rational::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  if (!f.fits_slong_p()) throw InputError("integer part of " + str() + " does not fit in 64 bits");
  return f.get_si();
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InputError("division by zero rational");
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinity();
  return ExtRational(Rational::parse(text));
}

const Rational& ExtRational::value() const {
  if (!value_) throw std::logic_error("value() of an infinite bound");
  return *value_;
}

}  // namespace coarse
