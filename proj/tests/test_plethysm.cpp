#include <doctest.h>

#include "oracles.hpp"
#include "p2sd/symfunc.hpp"

using namespace p2sd;

namespace {

SchurVector schur(std::initializer_list<std::pair<Partition, long>> terms, std::optional<int> bound) {
  SchurVector v(bound);
  for (const auto& [p, c] : terms) v.add_term(p, c);
  return v;
}

// The two-row double sum: sum c^nu_{2alpha,2beta} - sum c^nu_{2gamma,2delta}.
SchurVector two_row_double_sum(int a, int b, std::optional<int> bound) {
  SchurVector out(bound);
  auto add = [&](int x, int y, int sign) {
    if (y < 0) return;
    for (const Partition& alpha : partitions_of(x, bound.value_or(x)))
      for (const Partition& beta : partitions_of(y, bound.value_or(y))) {
        SchurVector term = lr_product(SchurVector::single(doubled(alpha), bound), SchurVector::single(doubled(beta), bound));
        if (sign > 0) out += term;
        else out -= term;
      }
  };
  add(a, b, 1);
  add(a + 1, b - 1, -1);
  return out;
}

}  // namespace

TEST_CASE("h_plethysm_s2 examples") {
  CHECK(h_plethysm_s2(0, std::nullopt) == schur({{{}, 1}}, std::nullopt));
  CHECK(h_plethysm_s2(1, std::nullopt) == schur({{{2}, 1}}, std::nullopt));
  CHECK(h_plethysm_s2(2, std::nullopt) == schur({{{4}, 1}, {{2, 2}, 1}}, std::nullopt));
  CHECK(h_plethysm_s2(3, 3) == schur({{{6}, 1}, {{4, 2}, 1}, {{2, 2, 2}, 1}}, 3));
}

TEST_CASE("schur_plethysm_s2 examples") {
  CHECK(schur_plethysm_s2({1, 1}, 3) == schur({{{3, 1}, 1}}, 3));
  CHECK(schur_plethysm_s2({1}, 3) == schur({{{2}, 1}}, 3));
  SchurVector s33 = schur_plethysm_s2({3, 3}, 3);
  CHECK(s33.coeff({9, 3}) == 1);
  CHECK(s33.coeff({7, 5}) == 1);
}

TEST_CASE("plethysm matches tableaux on quadratic monomials") {
  for (int n = 0; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n, 3))
      REQUIRE(schur_plethysm_s2(lambda, 3) == oracle::plethysm_s2_three_vars(lambda));
}

TEST_CASE("plethysm dimension identity dim3(s_lambda[s2]) = dim6(s_lambda)") {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      BigInt dim = total_dimension(schur_plethysm_s2(lambda, 3), 3);
      REQUIRE(dim == gl_dimension(lambda, 6));
    }
}

TEST_CASE("two-row plethysm equals the LR double sum") {
  for (int total = 0; total <= 10; ++total)
    for (const Partition& lambda : partitions_of(total, 2)) {
      int a = lambda[0], b = lambda[1];
      REQUIRE(schur_plethysm_s2(lambda, 3) == two_row_double_sum(a, b, 3));
      if (total <= 6) REQUIRE(schur_plethysm_s2(lambda, std::nullopt) == two_row_double_sum(a, b, std::nullopt));
    }
}

TEST_CASE("bounded plethysm is the truncation of the unbounded one") {
  for (int n = 0; n <= 5; ++n)
    for (const Partition& lambda : partitions_of(n))
      CHECK(schur_plethysm_s2(lambda, 3) == schur_plethysm_s2(lambda, std::nullopt).truncated(3));
}
