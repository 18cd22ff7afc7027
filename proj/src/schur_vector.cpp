#include <algorithm>
#include <stdexcept>

#include "p2sd/symfunc.hpp"

namespace p2sd {

std::optional<int> combine_bounds(std::optional<int> a, std::optional<int> b) {
  if (a && b) return std::min(*a, *b);
  return a ? a : b;
}

BigInt total_dimension(const SchurVector& v, int k) {
  BigInt total = 0;
  for (const auto& [p, c] : v.terms()) total += c * gl_dimension(p, k);
  return total;
}

BigInt gl_dimension(const Partition& lambda, int k) {
  if (lambda.length() > k) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

SchurVector dual_sl3(const SchurVector& v) {
  if (v.var_bound() != 3) throw std::invalid_argument("dual_sl3 needs a vector in 3 variables");
  SchurVector out(3);
  for (const auto& [p, c] : v.terms()) {
    Partition reduced = *sl_reduce(p, 3);
    int a = reduced[0], b = reduced[1];
    out.add_term(Partition{a, a - b}, c);
  }
  return out;
}

}  // namespace p2sd
