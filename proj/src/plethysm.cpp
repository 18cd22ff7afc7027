#include <tuple>

#include "p2sd/memo.hpp"
#include "p2sd/symfunc.hpp"

namespace p2sd {

namespace {

constexpr int kUnbounded = -1;

int bound_key(std::optional<int> b) { return b.value_or(kUnbounded); }

ConcurrentMemo<std::pair<int, int>, SchurVector>& h_cache() {
  static ConcurrentMemo<std::pair<int, int>, SchurVector> cache;
  return cache;
}

ConcurrentMemo<std::pair<Partition, int>, SchurVector>& s_cache() {
  static ConcurrentMemo<std::pair<Partition, int>, SchurVector> cache;
  return cache;
}

// Expands det(h_{lambda_i - i + j}[s2]) along rows; used[] marks columns.
void expand_rows(const Partition& lambda, int row, std::vector<bool>& used, int sign,
                 const SchurVector& partial, std::optional<int> bound, SchurVector& out) {
  const int len = lambda.length();
  if (row == len) {
    SchurVector term = partial;
    term *= sign;
    out += term;
    return;
  }
  int inversions = 0;
  for (int col = len - 1; col >= 0; --col) {
    if (used[col]) {
      ++inversions;
      continue;
    }
    int degree = lambda[row] - row + col;
    if (degree < 0) continue;
    SchurVector next = lr_product(partial, h_plethysm_s2(degree, bound));
    if (next.is_zero()) continue;
    used[col] = true;
    expand_rows(lambda, row + 1, used, inversions % 2 ? -sign : sign, next, bound, out);
    used[col] = false;
  }
}

}  // namespace

SchurVector h_plethysm_s2(int d, std::optional<int> var_bound) {
  if (d < 0) return SchurVector(var_bound);
  return h_cache().get_or_compute({d, bound_key(var_bound)}, [&] {
    SchurVector out(var_bound);
    for (const Partition& lambda : partitions_of(d, var_bound.value_or(d)))
      out.add_term(doubled(lambda), 1);
    return out;
  });
}

SchurVector schur_plethysm_s2(const Partition& lambda, std::optional<int> var_bound) {
  return s_cache().get_or_compute({lambda, bound_key(var_bound)}, [&] {
    SchurVector out(var_bound);
    std::vector<bool> used(static_cast<std::size_t>(lambda.length()), false);
    expand_rows(lambda, 0, used, 1, SchurVector::single(Partition(), var_bound), var_bound, out);
    return out;
  });
}

}  // namespace p2sd
