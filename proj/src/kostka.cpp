#include <stdexcept>

#include "p2sd/memo.hpp"
#include "p2sd/symfunc.hpp"

namespace p2sd {

namespace {

using KostkaKey = std::pair<std::vector<int>, std::vector<int>>;

ConcurrentMemo<KostkaKey, BigInt>& kostka_cache() {
  static ConcurrentMemo<KostkaKey, BigInt> cache;
  return cache;
}

// Strips the last content value as a horizontal strip: inner_i ranges over
// [shape_{i+1}, shape_i].
void strip_rows(const std::vector<int>& shape, std::size_t row, int remaining,
                std::vector<int>& inner, const std::vector<int>& content, BigInt& total);

BigInt kostka_rec(const std::vector<int>& shape, const std::vector<int>& content) {
  if (content.empty()) return shape.empty() ? 1 : 0;
  if (shape.size() > content.size()) return 0;
  return kostka_cache().get_or_compute({shape, content}, [&] {
    std::vector<int> rest(content.begin(), content.end() - 1);
    std::vector<int> inner(shape.size(), 0);
    BigInt total = 0;
    strip_rows(shape, 0, content.back(), inner, rest, total);
    return total;
  });
}

void strip_rows(const std::vector<int>& shape, std::size_t row, int remaining,
                std::vector<int>& inner, const std::vector<int>& content, BigInt& total) {
  if (row == shape.size()) {
    if (remaining != 0) return;
    std::vector<int> trimmed = inner;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    total += kostka_rec(trimmed, content);
    return;
  }
  int below = row + 1 < shape.size() ? shape[row + 1] : 0;
  for (int keep = shape[row]; keep >= below; --keep) {
    int removed = shape[row] - keep;
    if (removed > remaining) break;
    inner[row] = keep;
    strip_rows(shape, row + 1, remaining - removed, inner, content, total);
  }
}

}  // namespace

BigInt kostka(const Partition& lambda, const Partition& content) {
  if (lambda.size() != content.size()) return 0;
  return kostka_rec(lambda.vec(), content.vec());
}

MonomialVector schur_to_monomial(const Partition& lambda, int n) {
  MonomialVector out(n);
  if (lambda.length() > n) return out;
  for (const Partition& beta : partitions_of(lambda.size(), n)) {
    if (beta > lambda) continue;
    out.add_term(beta, kostka(lambda, beta));
  }
  return out;
}

SchurVector monomial_to_schur(const MonomialVector& f) {
  auto bound = f.var_bound();
  SchurVector out(bound);
  MonomialVector rest = f;
  while (!rest.is_zero()) {
    auto [alpha, b] = *rest.terms().begin();
    int vars = bound.value_or(std::max(alpha.size(), 1));
    if (alpha.length() > vars) throw std::invalid_argument("monomial longer than the variable bound");
    out.add_term(alpha, b);
    MonomialVector expansion = schur_to_monomial(alpha, vars);
    expansion *= b;
    rest -= expansion;
    if (!rest.is_zero() && !(rest.terms().begin()->first < alpha))
      throw std::invalid_argument("monomial_to_schur: leading weight did not decrease");
  }
  return out;
}

}  // namespace p2sd
