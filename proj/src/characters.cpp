#include <algorithm>
#include <stdexcept>

#include "p2sd/memo.hpp"
#include "p2sd/symfunc.hpp"

namespace p2sd {

namespace {

using CharKey = std::pair<Partition, Partition>;

ConcurrentMemo<CharKey, BigInt>& character_cache() {
  static ConcurrentMemo<CharKey, BigInt> cache;
  return cache;
}

// Border strips are removed on the beta-set (abacus) of lambda: a strip of
// length r moves one bead from b to b - r, with sign (-1)^(beads jumped).
BigInt mn_rec(const Partition& lambda, const Partition& cls) {
  if (cls.empty()) return lambda.empty() ? 1 : 0;
  return character_cache().get_or_compute({lambda, cls}, [&] {
    const int len = lambda.length();
    const int r = cls[0];
    Partition rest(std::vector<int>(cls.vec().begin() + 1, cls.vec().end()));
    std::vector<int> beads(len);
    for (int i = 0; i < len; ++i) beads[i] = lambda[i] + len - 1 - i;
    BigInt total = 0;
    for (int i = 0; i < len; ++i) {
      int target = beads[i] - r;
      if (target < 0 || std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
      int jumped = 0;
      for (int b : beads)
        if (b > target && b < beads[i]) ++jumped;
      std::vector<int> moved = beads;
      moved[i] = target;
      std::sort(moved.rbegin(), moved.rend());
      std::vector<int> parts(len);
      for (int j = 0; j < len; ++j) parts[j] = moved[j] - (len - 1 - j);
      BigInt sub = mn_rec(Partition(std::move(parts)), rest);
      if (jumped % 2) total -= sub;
      else total += sub;
    }
    return total;
  });
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& cls) {
  if (lambda.size() != cls.size())
    throw std::invalid_argument("mn_character: " + lambda.to_string() + " and class " +
                                cls.to_string() + " have different sizes");
  return mn_rec(lambda, cls);
}

BigInt class_size(const Partition& cls) {
  BigInt z = 1;
  const auto& parts = cls.vec();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    unsigned mult = static_cast<unsigned>(j - i);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
    z *= power * factorial(mult);
    i = j;
  }
  return factorial(static_cast<unsigned>(cls.size())) / z;
}

BigInt kronecker(const Partition& mu, const Partition& nu, const Partition& lambda) {
  const int n = lambda.size();
  if (mu.size() != n || nu.size() != n)
    throw std::invalid_argument("kronecker: partitions of different sizes");
  BigInt sum = 0;
  for (const Partition& cls : partitions_of(n))
    sum += class_size(cls) * mn_rec(mu, cls) * mn_rec(nu, cls) * mn_rec(lambda, cls);
  BigInt order = factorial(static_cast<unsigned>(n));
  if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
    throw std::logic_error("kronecker: character sum not divisible by n!");
  return sum / order;
}

namespace {

// Row-major SSYT enumeration over the alphabet {0..n*k-1}, letter i*k+j
// standing for x_i w_j. Only tableaux whose x- and w-contents are both
// dominant are tallied: those are the coefficients of m_alpha(x) m_beta(w).
class ProductAlphabetTableaux {
 public:
  ProductAlphabetTableaux(const Partition& shape, int n, int k)
      : shape_(shape.vec()), n_(n), k_(k), xs_(n, 0), ws_(k, 0) {
    for (std::size_t r = 0; r < shape_.size(); ++r) rows_.emplace_back(shape_[r], 0);
  }

  std::map<std::pair<std::vector<int>, std::vector<int>>, long long> run() {
    fill(0, 0);
    return tally_;
  }

 private:
  void fill(std::size_t r, int c) {
    if (r == shape_.size()) {
      if (std::is_sorted(xs_.rbegin(), xs_.rend()) && std::is_sorted(ws_.rbegin(), ws_.rend()))
        ++tally_[{xs_, ws_}];
      return;
    }
    if (c == shape_[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = 0;
    if (c > 0) lo = rows_[r][c - 1];
    if (r > 0) lo = std::max(lo, rows_[r - 1][c] + 1);
    for (int letter = lo; letter < n_ * k_; ++letter) {
      rows_[r][c] = letter;
      ++xs_[letter / k_];
      ++ws_[letter % k_];
      fill(r, c + 1);
      --xs_[letter / k_];
      --ws_[letter % k_];
    }
  }

  std::vector<int> shape_;
  int n_, k_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> xs_, ws_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, long long> tally_;
};

}  // namespace

KroneckerTable kronecker_via_substitution(const Partition& lambda, int n, int k, long long cap) {
  if (n < 1 || k < 1) throw std::invalid_argument("alphabet sizes must be positive");
  BigInt count = gl_dimension(lambda, n * k);
  if (count > BigInt(std::to_string(cap)))
    throw CapExceeded("kronecker_via_substitution: " + count.get_str() +
                      " tableaux exceed the cap; use the character method");

  // s_lambda(xw) = sum_alpha m_alpha(x) P_alpha(w)
  std::map<Partition, MonomialVector, std::greater<>> w_side;
  for (const auto& [contents, tally] : ProductAlphabetTableaux(lambda, n, k).run()) {
    Partition alpha(contents.first), beta(contents.second);
    w_side.try_emplace(alpha, MonomialVector(k)).first->second.add_term(beta, BigInt(static_cast<long>(tally)));
  }

  // P_alpha(w) = sum_nu d^{alpha,nu} s_nu(w); regroup by nu
  std::map<Partition, MonomialVector, std::greater<>> x_side;
  for (const auto& [alpha, poly] : w_side)
    for (auto schur = monomial_to_schur(poly); const auto& [nu, d] : schur.terms())
      x_side.try_emplace(nu, MonomialVector(n)).first->second.add_term(alpha, d);

  KroneckerTable table;
  for (const auto& [nu, poly] : x_side)
    for (auto schur = monomial_to_schur(poly); const auto& [mu, g] : schur.terms()) table[{mu, nu}] = g;
  return table;
}

}  // namespace p2sd
