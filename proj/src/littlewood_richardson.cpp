#include <algorithm>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "p2sd/memo.hpp"
#include "p2sd/symfunc.hpp"

namespace p2sd {

namespace {

// Builds LR tableaux of shape ?/mu and weight lambda one label at a time.
// Label l is added as a horizontal strip; count_[l][r] is the number of l's
// in row r. Lattice condition: the l's in rows <= r never outnumber the
// (l-1)'s in rows < r.
class LrEnumerator {
 public:
  LrEnumerator(const Partition& mu, const Partition& lambda, int rows,
               const Partition* target)
      : weight_(lambda.vec()), rows_(rows), target_(target),
        shape_(static_cast<std::size_t>(rows), 0),
        count_(weight_.size(), std::vector<long long>(static_cast<std::size_t>(rows), 0)) {
    for (int r = 0; r < std::min(rows, mu.length()); ++r) shape_[r] = mu[r];
  }

  template <class Emit>
  void run(Emit&& emit) {
    place_label(0, emit);
  }

 private:
  template <class Emit>
  void place_label(std::size_t l, Emit& emit) {
    if (l == weight_.size()) {
      emit(shape_);
      return;
    }
    std::vector<int> before = shape_;
    std::vector<long long> above(static_cast<std::size_t>(rows_), std::numeric_limits<long long>::max());
    if (l > 0) {
      long long acc = 0;
      for (int r = 0; r < rows_; ++r) {
        above[r] = acc;
        acc += count_[l - 1][r];
      }
    }
    place_row(l, 0, weight_[l], 0, before, above, emit);
  }

  template <class Emit>
  void place_row(std::size_t l, int r, long long remaining, long long placed,
                 const std::vector<int>& before, const std::vector<long long>& above, Emit& emit) {
    if (remaining == 0) {
      place_label(l + 1, emit);
      return;
    }
    if (r >= rows_) return;
    long long max_k = remaining;
    if (r > 0) {
      if (before[r - 1] == 0) return;
      max_k = std::min<long long>(max_k, before[r - 1] - shape_[r]);
    }
    if (l > 0) max_k = std::min(max_k, above[r] - placed);
    if (target_) max_k = std::min<long long>(max_k, (*target_)[r] - shape_[r]);
    for (long long k = max_k; k >= 0; --k) {
      shape_[r] += static_cast<int>(k);
      count_[l][r] = k;
      place_row(l, r + 1, remaining - k, placed + k, before, above, emit);
      shape_[r] -= static_cast<int>(k);
      count_[l][r] = 0;
    }
  }

  std::vector<int> weight_;
  int rows_;
  const Partition* target_;
  std::vector<int> shape_;
  std::vector<std::vector<long long>> count_;
};

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

using LrKey = std::tuple<Partition, Partition, int>;
ConcurrentMemo<LrKey, std::shared_ptr<const TermMap>>& lr_cache() {
  static ConcurrentMemo<LrKey, std::shared_ptr<const TermMap>> cache;
  return cache;
}

}  // namespace

BigInt lr_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda) {
  if (nu.size() != mu.size() + lambda.size() || !contains(nu, mu) || !contains(nu, lambda))
    return 0;
  long long n = 0;
  LrEnumerator(mu, lambda, nu.length(), &nu).run([&](const std::vector<int>&) { ++n; });
  return BigInt(static_cast<long>(n));
}

int lr_two_row(const Partition& nu, const Partition& mu, const Partition& lambda) {
  if (nu.length() > 2) throw std::invalid_argument("lr_two_row needs nu with at most two rows");
  if (nu.size() != mu.size() + lambda.size()) return 0;
  if (lambda.length() > 2 || !contains(nu, mu)) return 0;
  // lambda_2 twos at the right end of row 2, ones everywhere else
  bool enough_ones_above = lambda[1] <= nu[0] - mu[0];
  bool no_column_of_ones = mu[0] + lambda[1] >= nu[1];
  bool twos_fit_in_row_two = lambda[1] <= nu[1] - mu[1];
  return enough_ones_above && no_column_of_ones && twos_fit_in_row_two ? 1 : 0;
}

std::shared_ptr<const TermMap> lr_expand(const Partition& mu, const Partition& lambda,
                                         std::optional<int> max_rows) {
  const Partition* base = &mu;
  const Partition* added = &lambda;
  if (lambda.size() > mu.size() || (lambda.size() == mu.size() && lambda.length() > mu.length()))
    std::swap(base, added);
  int rows = base->length() + added->length();
  if (max_rows) rows = std::min(rows, *max_rows);
  LrKey key{*base, *added, rows};
  return lr_cache().get_or_compute(key, [&] {
    auto out = std::make_shared<TermMap>();
    if (base->length() > rows || added->length() > rows) return std::shared_ptr<const TermMap>(out);
    std::map<std::vector<int>, long long> counts;
    LrEnumerator(*base, *added, rows, nullptr).run([&](const std::vector<int>& shape) {
      ++counts[shape];
    });
    for (const auto& [shape, n] : counts) out->emplace(Partition(shape), BigInt(static_cast<long>(n)));
    return std::shared_ptr<const TermMap>(out);
  });
}

SchurVector lr_product(const SchurVector& a, const SchurVector& b) {
  auto bound = combine_bounds(a.var_bound(), b.var_bound());
  SchurVector out(bound);
  for (const auto& [pa, ca] : a.terms()) {
    if (bound && pa.length() > *bound) continue;
    for (const auto& [pb, cb] : b.terms()) {
      if (bound && pb.length() > *bound) continue;
      BigInt weight = ca * cb;
      for (auto terms = lr_expand(pa, pb, bound); const auto& [nu, c] : *terms) out.add_term(nu, weight * c);
    }
  }
  return out;
}

}  // namespace p2sd
