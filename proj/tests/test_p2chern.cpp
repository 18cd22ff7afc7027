#include <doctest.h>

#include <random>
#include <stdexcept>

#include "p2sd/chern.hpp"

using namespace p2sd;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

ChernCharacter ch(Rational r, Rational c1, Rational ch2) { return {r, c1, ch2}; }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-5/2") == q(-5, 2));
  CHECK(parse_rational("4/2") == 2);
  CHECK(parse_rational("7") == 7);
  CHECK(format_rational(q(6, -4)) == "-3/2");
  CHECK(format_rational(q(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("multiply") {
  ChernCharacter x = ch(2, 1, q(-1, 2));
  CHECK(multiply(ch(1, 0, 0), x) == x);
  CHECK(multiply(ch(1, 1, q(1, 2)), ch(1, -1, q(1, 2))) == ch(1, 0, 0));
  CHECK(multiply(e_class(3), f_class()) == ch(4, 7, q(-29, 2)));
}

TEST_CASE("chi") {
  CHECK(chi(ch(1, 0, 0)) == 1);
  CHECK(chi(line_bundle(3)) == 10);
  for (long d = -5; d <= 5; ++d) CHECK(chi(line_bundle(d)) == q((d + 1) * (d + 2), 2));
  ChernCharacter t = standard_sheaf("T(-1)");
  for (long m = 1; m <= 10; ++m) {
    ChernCharacter e_gamma = ch(2, -1, q(-1, 2));  // slope -1/2
    CHECK(chi(multiply(e_class(m), e_gamma)) == 1);
  }
  CHECK(todd_p2() == ch(1, q(3, 2), 1));
  CHECK(chi(t) == 3);
}

TEST_CASE("euler_pairing") {
  for (long m = 1; m <= 100; ++m) REQUIRE(euler_pairing(e_class(m), f_class()) == 0);
  CHECK(euler_pairing(ch(1, 0, 0), ch(1, 0, 0)) == 1);
  CHECK(euler_pairing(ch(2, 1, q(-1, 2)), ch(2, -1, q(-1, 2))) == 1);
}

TEST_CASE("dual and twist") {
  CHECK(dual(e_class(1)) == ch(2, -3, q(-5, 2)));
  CHECK(twist(ch(1, 0, 0), -2) == ch(1, -2, 2));
  ChernCharacter x = ch(q(3, 2), q(-7, 3), q(5, 4));
  CHECK(dual(dual(x)) == x);
  CHECK(twist(twist(x, 3), -3) == x);
  CHECK(twist(x, 2) == multiply(x, line_bundle(2)));
}

TEST_CASE("standard_sheaf") {
  CHECK(standard_sheaf("T(-1)") == ch(2, 1, q(-1, 2)));
  CHECK(standard_sheaf("Omega(1)") == ch(2, -1, q(-1, 2)));
  CHECK(standard_sheaf("Omega(1)") == dual(standard_sheaf("T(-1)")));
  CHECK(standard_sheaf("ideal_2points") == ch(1, 0, -2));
  CHECK(standard_sheaf("O") == ch(1, 0, 0));
  CHECK(standard_sheaf("O(-2)") == ch(1, -2, 2));
  CHECK(standard_sheaf("O(3)") == line_bundle(3));
  // Euler sequence: T = O(1)^3 - O, then twist by -1
  CHECK(standard_sheaf("T(-1)") == twist(from_resolution({{3, line_bundle(1)}, {-1, line_bundle(0)}}), -1));
  CHECK_THROWS_AS(standard_sheaf("Q"), std::invalid_argument);
}

TEST_CASE("from_resolution") {
  auto star = [](long m) {
    return from_resolution(
        {{1, standard_sheaf("T(-1)")}, {2 * m - 1, standard_sheaf("O")}, {-m, standard_sheaf("O(-2)")}});
  };
  CHECK(star(4) == ch(5, 9, q(-17, 2)));
  for (long m = 1; m <= 100; ++m) REQUIRE(star(m) == e_class(m));
  CHECK(v_class(1) == ch(3, -3, q(-9, 2)));
  CHECK(from_resolution({}) == ch(0, 0, 0));
}

TEST_CASE("ring properties on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  auto random_ch = [&] { return ch(q(num(rng), den(rng)), q(num(rng), den(rng)), q(num(rng), den(rng))); };
  for (int i = 0; i < 200; ++i) {
    ChernCharacter a = random_ch(), b = random_ch(), c = random_ch();
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(chi(a + b) == chi(a) + chi(b));
    CHECK(euler_pairing(a, b) == euler_pairing(b, a));
  }
}

TEST_CASE("parse_chern") {
  CHECK(parse_chern("2,3,-5/2") == e_class(1));
  CHECK(parse_chern("(1, 0, -2)") == f_class());
  CHECK_THROWS_AS(parse_chern("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chern("1,2,x"), std::invalid_argument);
  CHECK_THROWS_AS(ch(0, 1, 0).slope(), DomainError);
}
