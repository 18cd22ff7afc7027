#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace p2sd {

/// A weakly decreasing list of positive integers, stored without trailing
/// zeros. Ordering is lexicographic on the parts, which for partitions of
/// the same size is the "weight" order used by highest-weight peeling.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws std::invalid_argument if the parts
  /// increase anywhere or a negative part appears.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// i-th part (0-based), zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// (value^count), e.g. rectangle(2, 3) = (2,2,2).
Partition rectangle(int value, int count);

/// Parses "4,2", "(4,2)", "[4,2]"; "", "()" and "0" give the empty partition.
Partition parse_partition(const std::string& text);

Partition conjugate(const Partition& lambda);
Partition operator+(const Partition& a, const Partition& b);
Partition doubled(const Partition& lambda);

/// Weakly decreasing integers, possibly negative (twisted Schur labels).
class SignedSequence {
 public:
  SignedSequence() = default;
  explicit SignedSequence(std::vector<int> entries);
  SignedSequence(std::initializer_list<int> entries) : SignedSequence(std::vector<int>(entries)) {}
  explicit SignedSequence(const Partition& p) : entries_(p.vec()) {}

  const std::vector<int>& entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }

  friend bool operator==(const SignedSequence&, const SignedSequence&) = default;

 private:
  std::vector<int> entries_;
};

SignedSequence operator+(const SignedSequence& a, const SignedSequence& b);

struct TwistedLabel {
  Partition partition;
  int det_power = 0;  // power of det(U) tensored onto S^partition
  friend bool operator==(const TwistedLabel&, const TwistedLabel&) = default;
};

/// Rewrites S^seq U (dim U = n) as S^partition U (x) det(U)^det_power.
/// Returns nullopt when seq has more than n entries (the zero module).
/// Throws std::invalid_argument when a sequence with a negative entry has
/// fewer than n entries: implicit zero padding would break monotonicity.
std::optional<TwistedLabel> normalize_signed(const SignedSequence& seq, int n);

/// Canonical SL(n) label lambda - (lambda_n^n); nullopt for the zero module.
std::optional<Partition> sl_reduce(const Partition& lambda, int n);

/// Partitions of n with at most max_len parts, each at most max_part, in
/// decreasing lexicographic order.
std::vector<Partition> partitions_of(int n, int max_len = std::numeric_limits<int>::max(),
                                     int max_part = std::numeric_limits<int>::max());

}  // namespace p2sd
