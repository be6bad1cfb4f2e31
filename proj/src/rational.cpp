#include "urykat/rational.hpp"

#include <cctype>

#include "urykat/error.hpp"

namespace urykat {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    fail(Errc::parse_error, "malformed rational '" + text + "'");
  }
  mpz_class n(num);
  mpz_class d(den);
  if (d <= 0) {
    fail(Errc::parse_error, "denominator must be positive in '" + text + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::vector<std::string> format_rationals(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(format_rational(v));
  return out;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_rational(t));
  return out;
}

bool is_multiple_of_step(const Rational& value, int q) {
  Rational scaled = value * q;
  scaled.canonicalize();
  return scaled.get_den() == 1;
}

Rational floor_to_step(const Rational& value, int q) {
  mpz_class floor_num;
  Rational scaled = value * q;
  scaled.canonicalize();
  mpz_fdiv_q(floor_num.get_mpz_t(), scaled.get_num().get_mpz_t(),
             scaled.get_den().get_mpz_t());
  Rational r(floor_num, q);
  r.canonicalize();
  return r;
}

}  // namespace urykat
