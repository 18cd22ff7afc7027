#include "p2sd/chern.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace p2sd {

Rational ChernCharacter::slope() const {
  if (r == 0) throw DomainError("slope of a rank-zero character");
  Rational s = c1 / r;
  s.canonicalize();
  return s;
}

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& o) {
  r += o.r;
  c1 += o.c1;
  ch2 += o.ch2;
  return *this;
}

ChernCharacter& ChernCharacter::operator-=(const ChernCharacter& o) {
  r -= o.r;
  c1 -= o.c1;
  ch2 -= o.ch2;
  return *this;
}

std::string ChernCharacter::to_string() const {
  return "(" + format_rational(r) + "," + format_rational(c1) + "," + format_rational(ch2) + ")";
}

ChernCharacter multiply(const ChernCharacter& a, const ChernCharacter& b) {
  return {a.r * b.r, a.r * b.c1 + b.r * a.c1, a.r * b.ch2 + a.c1 * b.c1 + b.r * a.ch2};
}

const ChernCharacter& todd_p2() {
  static const ChernCharacter todd{1, Rational(3, 2), 1};
  return todd;
}

Rational chi(const ChernCharacter& a) {
  // degree-2 part of a * todd
  Rational out = a.r * todd_p2().ch2 + a.c1 * todd_p2().c1 + a.ch2;
  out.canonicalize();
  return out;
}

Rational euler_pairing(const ChernCharacter& a, const ChernCharacter& b) { return chi(multiply(a, b)); }

ChernCharacter dual(const ChernCharacter& a) { return {a.r, -a.c1, a.ch2}; }

ChernCharacter line_bundle(long d) {
  Rational dd(d);
  return {1, dd, dd * dd / 2};
}

ChernCharacter twist(const ChernCharacter& a, long d) { return multiply(a, line_bundle(d)); }

ChernCharacter standard_sheaf(std::string_view name) {
  std::string s(name);
  if (s == "O") return line_bundle(0);
  if (s == "T(-1)") return {2, 1, Rational(-1, 2)};
  if (s == "Omega(1)") return {2, -1, Rational(-1, 2)};
  if (s == "ideal_2points" || s == "I2") return f_class();
  static const std::regex line(R"(O\((-?\d+)\))");
  std::smatch m;
  if (std::regex_match(s, m, line)) return line_bundle(std::stol(m[1].str()));
  throw std::invalid_argument("unknown sheaf name: '" + s + "'");
}

ChernCharacter from_resolution(const std::vector<std::pair<BigInt, ChernCharacter>>& terms) {
  ChernCharacter out{0, 0, 0};
  for (const auto& [k, ch] : terms) out += Rational(k) * ch;
  return out;
}

ChernCharacter e_class(long m) { return {m + 1, 2 * m + 1, Rational(-4 * m - 1, 2)}; }

ChernCharacter f_class() { return {1, 0, -2}; }

ChernCharacter v_class(long m) { return dual(e_class(m)) + f_class(); }

ChernCharacter parse_chern(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s.push_back(c);
  std::vector<std::string> fields;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) fields.push_back(item);
  if (fields.size() != 3 || s.back() == ',')
    throw std::invalid_argument("Chern character needs three entries r,c1,ch2: '" + std::string(text) + "'");
  return {parse_rational(fields[0]), parse_rational(fields[1]), parse_rational(fields[2])};
}

}  // namespace p2sd
