#include "p2sd/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace p2sd {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition rectangle(int value, int count) {
  if (value < 0 || count < 0) throw std::invalid_argument("rectangle needs nonnegative sides");
  return Partition(std::vector<int>(static_cast<std::size_t>(count), value));
}

Partition parse_partition(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') s.push_back(c);
  std::vector<int> parts;
  if (s.empty()) return Partition();
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed partition: '" + text + "'");
    parts.push_back(std::stoi(item));
  }
  if (!s.empty() && s.back() == ',') throw std::invalid_argument("malformed partition: '" + text + "'");
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

Partition operator+(const Partition& a, const Partition& b) {
  std::vector<int> out(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return Partition(std::move(out));
}

Partition doubled(const Partition& lambda) {
  std::vector<int> out = lambda.vec();
  for (int& x : out) x *= 2;
  return Partition(std::move(out));
}

SignedSequence::SignedSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i] > entries_[i - 1])
      throw std::invalid_argument("signed sequence must be weakly decreasing");
}

SignedSequence operator+(const SignedSequence& a, const SignedSequence& b) {
  std::vector<int> out(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.entries().size()) out[i] += a.entries()[i];
    if (i < b.entries().size()) out[i] += b.entries()[i];
  }
  return SignedSequence(std::move(out));
}

std::optional<TwistedLabel> normalize_signed(const SignedSequence& seq, int n) {
  if (seq.length() > n) return std::nullopt;
  const auto& e = seq.entries();
  int last = e.empty() ? 0 : e.back();
  if (last >= 0) return TwistedLabel{Partition(e), 0};
  if (seq.length() < n)
    throw std::invalid_argument("sequence with a negative entry needs exactly n entries");
  int c = -last;
  std::vector<int> shifted = e;
  for (int& x : shifted) x += c;
  return TwistedLabel{Partition(std::move(shifted)), -c};
}

std::optional<Partition> sl_reduce(const Partition& lambda, int n) {
  if (lambda.length() > n) return std::nullopt;
  int c = lambda[static_cast<std::size_t>(n - 1)];
  std::vector<int> out = lambda.vec();
  for (int& x : out) x -= c;
  return Partition(std::move(out));
}

namespace {

void enumerate(int remaining, int max_len, int max_part, std::vector<int>& prefix,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (max_len == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    // the remaining parts can hold at most part * (max_len - 1) boxes
    if (static_cast<long long>(part) * max_len < remaining) break;
    prefix.push_back(part);
    enumerate(remaining - part, max_len - 1, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_len, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  enumerate(n, max_len, max_part, prefix, out);
  return out;
}

}  // namespace p2sd
