#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinlift/bigint.hpp"

namespace spinlift {

/// Integer partition: weakly decreasing positive parts.  The empty partition
/// is the unique partition of 0.  Immutable value type.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Parses a comma-separated part list, e.g. "4,2,1".  Empty string or "0"
  /// denotes the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }  ///< sum of parts
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based), or 0 past the last row.
  int part(int i) const {
    return i >= 0 && i < rows() ? parts_[static_cast<size_t>(i)] : 0;
  }

  /// Diagram containment: inner fits inside *this row by row.
  bool contains(const Partition& inner) const;

  Partition conjugate() const;
  bool self_conjugate() const;

  /// +1 if the number of diagram cells strictly above the main diagonal is
  /// even, -1 if odd.  Governs which split constituents of a self-conjugate
  /// shape are orthogonal over the alternating group.
  int epsilon() const;

  /// Number of standard Young tableaux, by the hook length formula in exact
  /// integer arithmetic.  The empty partition has dimension 1 by convention.
  BigInt dimension() const;

  std::string to_string() const;  ///< "4,2,1"; empty partition -> ""

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Visits every partition of n exactly once, in decreasing lexicographic
/// order: 4 -> (4), (3,1), (2,2), (2,1,1), (1,1,1,1).  The callback receives
/// the parts of the current partition; the buffer is reused between visits.
template <class F>
void for_each_partition(int n, F&& visit) {
  std::vector<int> p;
  if (n <= 0) {
    visit(static_cast<const std::vector<int>&>(p));
    return;
  }
  p.push_back(n);
  for (;;) {
    visit(static_cast<const std::vector<int>&>(p));
    int k = static_cast<int>(p.size()) - 1;
    int ones = 0;
    while (k >= 0 && p[static_cast<size_t>(k)] == 1) {
      --k;
      ++ones;
    }
    if (k < 0) return;
    int c = p[static_cast<size_t>(k)] - 1;
    int rest = ones + 1;
    p.resize(static_cast<size_t>(k));
    p.push_back(c);
    while (rest >= c) {
      p.push_back(c);
      rest -= c;
    }
    if (rest > 0) p.push_back(rest);
  }
}

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// p(n) via the Euler pentagonal-number recurrence.
BigInt partition_count(int n);

BigInt factorial(int n);

/// n! / (parts_0! * parts_1! * ...), exact.  Parts must be >= 0 and sum to n.
BigInt multinomial(int n, const std::vector<int>& parts);

}  // namespace spinlift
