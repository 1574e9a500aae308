#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl {

/// Integer partition: weakly decreasing positive parts, trailing zeros dropped.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
  }

  /// (1, ..., 1) with r parts.
  static Partition ones(int r) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(r, 0)), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based); zero beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
  }

  /// Parts padded with zeros to length n.
  std::vector<int> padded(int n) const {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    std::copy(parts_.begin(), parts_.end(), v.begin());
    return v;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    return h;
  }
};

/// True iff a dominates b (equal weights assumed): every partial sum of a is
/// at least the corresponding partial sum of b.
inline bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  std::size_t len = static_cast<std::size_t>(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return sa == sb;
}

/// All partitions of m with at most max_len parts, in reverse-lexicographic
/// order: (m), (m-1,1), ... , (1,...,1).
inline std::vector<Partition> enumerate_partitions(int m, int max_len) {
  if (m < 0) throw DomainError("partition weight must be nonnegative");
  if (max_len < 1) throw DomainError("max_len must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

/// Parses "2,1,1", "(2,1)", "" or "()" (the empty partition).
inline Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      parts.push_back(std::stoi(cur));
    } catch (const std::exception&) {
      throw ParseError("bad partition part '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else if (c == '(' || c == ')' || c == '[' || c == ']') {
      continue;
    } else if (c >= '0' && c <= '9') {
      cur += c;
    } else {
      throw ParseError("bad character in partition '" + std::string(text) + "'");
    }
  }
  flush();
  return Partition(std::move(parts));
}

}  // namespace dunkl
