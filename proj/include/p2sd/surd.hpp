#pragma once

#include <compare>
#include <string>

#include "p2sd/numeric.hpp"

namespace p2sd {

/// a + b*sqrt(c) with rational a, b and rational radicand c >= 0.
/// Canonical form: perfect-square radicands are folded into a, and b == 0
/// forces c == 0.
class Surd {
 public:
  Surd() = default;
  Surd(Rational a, Rational b = 0, Rational c = 0);  // throws DomainError if c < 0

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  bool is_rational() const { return b_ == 0; }
  int sign() const;
  double approx() const;
  std::string to_string() const;

  Surd operator-() const { return Surd(-a_, -b_, c_); }
  friend Surd operator+(const Surd& s, const Rational& q) { return Surd(s.a_ + q, s.b_, s.c_); }
  friend Surd operator-(const Surd& s, const Rational& q) { return Surd(s.a_ - q, s.b_, s.c_); }

  friend bool operator==(const Surd&, const Surd&) = default;

 private:
  Rational a_, b_, c_;
};

/// Exact three-way comparison of s and t, by sign-preserving squaring.
std::strong_ordering compare(const Surd& s, const Surd& t);

}  // namespace p2sd
