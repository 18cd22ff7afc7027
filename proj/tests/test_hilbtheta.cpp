#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "p2sd/hilbtheta.hpp"

using namespace p2sd;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

SchurVector sum_of(std::initializer_list<Partition> parts) {
  SchurVector v(3);
  for (const Partition& p : parts) v.add_term(p, 1);
  return v;
}

BigInt ssyt_dimension(const SchurVector& v) {
  BigInt total = 0;
  for (const auto& [p, c] : v.terms()) total += c * oracle::ssyt_count(p, 3);
  return total;
}

}  // namespace

TEST_CASE("theta_class_hilb") {
  CHECK(theta_class_hilb(e_class(2), 2) == HilbThetaClass{5, 3});
  for (long m = 1; m <= 20; ++m) CHECK(theta_class_hilb(e_class(m), 2) == HilbThetaClass{2 * m + 1, m + 1});
  CHECK(theta_class_hilb(ChernCharacter(1, 1, q(-1, 2)), 2) == HilbThetaClass{1, 1});
  CHECK_THROWS_AS(theta_class_hilb(ChernCharacter(2, 2, -3), 2), DomainError);
  CHECK(theta_class_hilb(ChernCharacter(1, 0, 2), 3) == HilbThetaClass{0, 1});
  CHECK_THROWS_AS(theta_class_hilb(ChernCharacter(q(1, 2), 0, q(5, 2)), 2), DomainError);
}

TEST_CASE("to_pg_basis") {
  CHECK(to_pg_basis({1, 1}) == PGBundleClass{0, 1});
  CHECK(to_pg_basis({2, 1}) == PGBundleClass{1, 3});
  CHECK(to_pg_basis({9, 5}) == PGBundleClass{4, 13});
  for (long m = 1; m <= 20; ++m) CHECK(to_pg_basis({2 * m + 1, m + 1}) == PGBundleClass{m, 3 * m + 1});
}

TEST_CASE("gsec_sections examples") {
  CHECK(gsec_sections(1, 4) == sum_of({{4, 2}}));
  CHECK(gsec_sections(2, 2) == sum_of({{}}));
  CHECK(gsec_sections(3, 1).is_zero());
  CHECK(gsec_sections(3, 3).is_zero());  // f = d odd
  CHECK(gsec_sections(3, 5) == sum_of({{3, 1}}));
  CHECK(gsec_sections(3, 4) == sum_of({{2}}));
  CHECK(gsec_sections(0, 0) == sum_of({{}}));
  CHECK(gsec_sections(0, 3) == sum_of({{3, 3}}));
  CHECK_THROWS_AS(gsec_sections(-1, 2), std::invalid_argument);
}

TEST_CASE("Gsec boundary agreement at f = 2d") {
  for (int d = 0; d <= 10; ++d) {
    SchurVector case_1a(3), case_1c(3);
    for (const Partition& lambda : partitions_of(d, 2)) {
      case_1a.add_term(doubled(lambda), 1);
      case_1c.add_term(doubled(lambda) + rectangle(0, 2), 1);
    }
    CHECK(case_1a == case_1c);
    CHECK(gsec_sections(d, 2 * d) == case_1a);
  }
}

TEST_CASE("gsec partitions have two rows and the expected parity") {
  for (long d = 0; d <= 8; ++d)
    for (long f = 0; f <= 20; ++f)
      for (auto v = gsec_sections(d, f); const auto& [p, c] : v.terms()) {
        CHECK(c == 1);
        CHECK(p.length() <= 2);
        CHECK(p.size() == 2 * f - 2 * d);
        if (f >= 2 * d) {
          long shift = f - 2 * d;
          CHECK((p[0] - shift) % 2 == 0);
          CHECK((p[1] - shift) % 2 == 0);
        } else if (f % 2 == 0) {
          CHECK(p[0] % 2 == 0);
          CHECK(p[1] % 2 == 0);
        } else {
          CHECK(p[0] % 2 == 1);
          CHECK(p[1] % 2 == 1);
        }
      }
}

TEST_CASE("hilb2_theta_sections for e(m)") {
  ThetaSections m1 = hilb2_theta_sections(e_class(1));
  CHECK(m1.sections == sum_of({{4, 2}}));
  CHECK(m1.dimension == 27);
  CHECK(m1.pg == PGBundleClass{1, 4});
  ThetaSections m2 = hilb2_theta_sections(e_class(2));
  CHECK(m2.sections == sum_of({{7, 3}, {5, 5}}));
  CHECK(m2.dimension == 111);
  CHECK(hilb2_theta_sections(e_class(3)).sections == sum_of({{10, 4}, {8, 6}}));
  CHECK(hilb2_theta_sections(e_class(5)).sections == sum_of({{16, 6}, {14, 8}, {12, 10}}));
  for (int m = 1; m <= 20; ++m) {
    ThetaSections t = hilb2_theta_sections(e_class(m));
    REQUIRE(t.sections == theta_closed_form(m));
    CHECK(t.sections.terms().size() == static_cast<std::size_t>(m / 2 + 1));
    if (m <= 4) CHECK(t.dimension == ssyt_dimension(t.sections));
  }
}
