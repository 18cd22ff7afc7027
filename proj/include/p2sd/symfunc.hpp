#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>

#include "p2sd/numeric.hpp"
#include "p2sd/partition.hpp"

namespace p2sd {

/// Terms sorted by decreasing lexicographic partition.
using TermMap = std::map<Partition, BigInt, std::greater<>>;

/// Integer combination of basis elements indexed by partitions, optionally
/// restricted to n variables. Zero coefficients and partitions longer than
/// the variable bound are never stored.
template <class Tag>
class BasisVector {
 public:
  explicit BasisVector(std::optional<int> var_bound = std::nullopt) : var_bound_(var_bound) {}

  static BasisVector single(const Partition& p, std::optional<int> var_bound = std::nullopt,
                            const BigInt& coeff = 1) {
    BasisVector v(var_bound);
    v.add_term(p, coeff);
    return v;
  }

  void add_term(const Partition& p, const BigInt& coeff) {
    if (coeff == 0) return;
    if (var_bound_ && p.length() > *var_bound_) return;
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  const TermMap& terms() const { return terms_; }
  std::optional<int> var_bound() const { return var_bound_; }
  bool is_zero() const { return terms_.empty(); }

  /// Same terms under a (possibly tighter) bound.
  BasisVector truncated(std::optional<int> bound) const {
    BasisVector out(bound);
    for (const auto& [p, c] : terms_) out.add_term(p, c);
    return out;
  }

  BasisVector& operator+=(const BasisVector& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
  }
  BasisVector& operator-=(const BasisVector& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, -c);
    return *this;
  }
  BasisVector& operator*=(const BigInt& k) {
    if (k == 0) terms_.clear();
    for (auto& [p, c] : terms_) c *= k;
    return *this;
  }
  friend BasisVector operator+(BasisVector a, const BasisVector& b) { return a += b; }
  friend BasisVector operator-(BasisVector a, const BasisVector& b) { return a -= b; }
  friend BasisVector operator*(BasisVector a, const BigInt& k) { return a *= k; }

  /// Equality of the stored term maps; the variable bound is not compared.
  friend bool operator==(const BasisVector& a, const BasisVector& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
  std::optional<int> var_bound_;
};

struct SchurTag {};
struct MonomialTag {};
using SchurVector = BasisVector<SchurTag>;
using MonomialVector = BasisVector<MonomialTag>;

std::optional<int> combine_bounds(std::optional<int> a, std::optional<int> b);

// Littlewood-Richardson ---------------------------------------------------

/// c^nu_{mu,lambda}: number of LR tableaux of shape nu/mu and weight lambda.
BigInt lr_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda);

/// Closed form of c^nu_{mu,lambda} when nu has at most two rows.
/// Throws std::invalid_argument if nu has more than two rows.
int lr_two_row(const Partition& nu, const Partition& mu, const Partition& lambda);

/// s_mu * s_lambda expanded in the Schur basis, keeping rows <= max_rows.
std::shared_ptr<const TermMap> lr_expand(const Partition& mu, const Partition& lambda,
                                         std::optional<int> max_rows = std::nullopt);

SchurVector lr_product(const SchurVector& a, const SchurVector& b);

// Monomial <-> Schur ------------------------------------------------------

/// Number of SSYT of shape lambda and content beta (beta a composition).
BigInt kostka(const Partition& lambda, const Partition& content);

/// Kostka expansion s_lambda(x_1..x_n) = sum_beta K_{lambda,beta} m_beta.
MonomialVector schur_to_monomial(const Partition& lambda, int n);

/// Highest-weight peeling. The vector's variable bound fixes the number of
/// variables; without one the input is taken as a symmetric function.
/// Throws std::invalid_argument if the input is not symmetric-consistent.
SchurVector monomial_to_schur(const MonomialVector& f);

/// Number of SSYT of shape lambda on k letters (Weyl dimension formula).
BigInt gl_dimension(const Partition& lambda, int k);

/// Sum of coeff * gl_dimension over the terms.
BigInt total_dimension(const SchurVector& v, int k);

// Symmetric group ---------------------------------------------------------

/// chi^lambda on the class of cycle type cls (Murnaghan-Nakayama).
BigInt mn_character(const Partition& lambda, const Partition& cls);

/// Number of permutations with cycle type cls.
BigInt class_size(const Partition& cls);

BigInt kronecker(const Partition& mu, const Partition& nu, const Partition& lambda);

using KroneckerTable = std::map<std::pair<Partition, Partition>, BigInt>;

inline constexpr long long kDefaultSubstitutionCap = 10'000'000;

/// Kronecker coefficients g_{mu,nu,lambda} for l(mu) <= n, l(nu) <= k by
/// expanding s_lambda over the product alphabet x_i w_j. Only nonzero
/// entries are stored. Throws CapExceeded when the tableau count exceeds cap.
KroneckerTable kronecker_via_substitution(const Partition& lambda, int n, int k,
                                          long long cap = kDefaultSubstitutionCap);

// Plethysm with s_2 ---------------------------------------------------------

/// h_d[s_2] = sum over lambda |- d of s_{2 lambda}.
SchurVector h_plethysm_s2(int d, std::optional<int> var_bound);

/// s_lambda[s_2] via the Jacobi-Trudi determinant in h_d[s_2].
SchurVector schur_plethysm_s2(const Partition& lambda, std::optional<int> var_bound);

/// SL(3) dual relabelling (a,b,0) -> (a, a-b, 0) after reduction.
SchurVector dual_sl3(const SchurVector& v);

}  // namespace p2sd
