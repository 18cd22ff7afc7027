#include "p2sd/numeric.hpp"

#include <cctype>

namespace p2sd {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string s = trimmed(text);
  if (!valid_integer_text(s)) throw std::invalid_argument("not an integer: '" + s + "'");
  if (s.front() == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational parse_rational(std::string_view text) {
  std::string s = trimmed(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(s));
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+'))
    throw std::invalid_argument("signed denominator in rational: '" + s + "'");
  BigInt n = parse_bigint(num), d = parse_bigint(den);
  if (d == 0) throw std::invalid_argument("zero denominator in rational: '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace p2sd
