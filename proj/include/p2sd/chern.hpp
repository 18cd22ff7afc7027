#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "p2sd/numeric.hpp"

namespace p2sd {

/// r + c1 h + ch2 h^2 in H*(P^2, Q). Virtual classes are allowed.
struct ChernCharacter {
  Rational r, c1, ch2;

  ChernCharacter() = default;
  ChernCharacter(Rational r_, Rational c1_, Rational ch2_)
      : r(std::move(r_)), c1(std::move(c1_)), ch2(std::move(ch2_)) {}

  Rational slope() const;  // throws DomainError when r == 0

  ChernCharacter& operator+=(const ChernCharacter& o);
  ChernCharacter& operator-=(const ChernCharacter& o);
  friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
  friend ChernCharacter operator-(ChernCharacter a, const ChernCharacter& b) { return a -= b; }
  friend ChernCharacter operator*(const Rational& k, const ChernCharacter& a) {
    return {k * a.r, k * a.c1, k * a.ch2};
  }
  friend bool operator==(const ChernCharacter& a, const ChernCharacter& b) {
    return a.r == b.r && a.c1 == b.c1 && a.ch2 == b.ch2;
  }

  /// "(r,c1,ch2)" with canonical rationals.
  std::string to_string() const;
};

/// Cup product truncated at h^3 = 0.
ChernCharacter multiply(const ChernCharacter& a, const ChernCharacter& b);

/// Todd class of P^2: (1, 3/2, 1).
const ChernCharacter& todd_p2();

/// Hirzebruch-Riemann-Roch: r + 3/2 c1 + ch2.
Rational chi(const ChernCharacter& a);

Rational euler_pairing(const ChernCharacter& a, const ChernCharacter& b);

/// (r, c1, ch2) -> (r, -c1, ch2).
ChernCharacter dual(const ChernCharacter& a);

/// a * ch O(d).
ChernCharacter twist(const ChernCharacter& a, long d);

ChernCharacter line_bundle(long d);

/// Named sheaves: "O(d)" (and "O"), "T(-1)", "Omega(1)", "ideal_2points".
/// Throws std::invalid_argument for any other name.
ChernCharacter standard_sheaf(std::string_view name);

/// Signed sum of characters, e.g. the terms of a resolution.
ChernCharacter from_resolution(const std::vector<std::pair<BigInt, ChernCharacter>>& terms);

/// e(m) = (m+1, 2m+1, -2m-1/2).
ChernCharacter e_class(long m);
/// f = (1, 0, -2), the ideal sheaf of two points.
ChernCharacter f_class();
/// v(m) = dual(e(m)) + f.
ChernCharacter v_class(long m);

/// Parses "r,c1,ch2" (optionally parenthesised); entries are rationals.
ChernCharacter parse_chern(std::string_view text);

}  // namespace p2sd
