#include "facloc/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace facloc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(const Int& num, const Int& den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  // The backend requires a positive denominator; fold the sign into the
  // numerator before normalizing.
  value_ = den < 0 ? Backend(-num, -den) : Backend(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return Rational(a.value_ / b.value_);
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) bad_rational(text);

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    Int d{std::string(den)};
    if (d.is_zero()) bad_rational(text);
    value = Rational(Int{std::string(num)}, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad_rational(text);
    Int scale = boost::multiprecision::pow(Int(10), static_cast<unsigned>(frac.size()));
    Int scaled = Int{std::string(whole)} * scale + Int{std::string(frac)};
    value = Rational(scaled, scale);
  } else {
    if (!all_digits(body)) bad_rational(text);
    value = Rational(Int{std::string(body)});
  }
  return negative ? -value : value;
}

Rational::Int Rational::floor() const {
  Int num = numerator();
  Int den = denominator();
  Int q = num / den;  // truncates toward zero
  if (num.sign() < 0 && q * den != num) --q;
  return q;
}

std::string Rational::str() const {
  Int den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

std::string Rational::decimal(int places) const {
  if (places < 0) throw std::invalid_argument("negative decimal places");
  Int num = numerator();
  Int den = denominator();
  bool negative = num.sign() < 0;
  if (negative) num = -num;

  Int whole = num / den;
  Int rem = num % den;
  Int scale = boost::multiprecision::pow(Int(10), static_cast<unsigned>(places));
  Int frac = rem * scale / den;
  Int frac_rem = rem * scale % den;
  if (2 * frac_rem >= den) {
    ++frac;
    if (frac == scale) {
      frac = 0;
      ++whole;
    }
  }

  std::string out = negative && !(whole.is_zero() && frac.is_zero()) ? "-" : "";
  out += whole.str();
  if (places > 0) {
    std::string digits = frac.str();
    out += "." + std::string(static_cast<std::size_t>(places) - digits.size(), '0') + digits;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace facloc
