#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace durfee {

using Count = std::int64_t;

// Counts are semantically unbounded; desk-scale inputs keep them in 64 bits.
// Overflow throws durfee::Error rather than wrapping.
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

/// A finite non-increasing sequence of positive integers.
///
/// Construction validates the ordering; use `from_unsorted` to build one
/// from an arbitrary multiset of positive parts. Indexing through
/// `part(i)` is 1-based and pads with zeros past the end, which is the
/// convention every construction in this library reads partitions with.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int weight() const noexcept;

  // 0 for the empty partition.
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

  // 1-based, zero past the end.
  int part(std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Canonical order: lexicographically decreasing on the part sequence
// (a proper prefix sorts after its extensions). Returns true when `a`
// comes strictly before `b`.
bool canonical_before(const Partition& a, const Partition& b);

// Strict weak ordering usable as a map key (plain lexicographic).
struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return a.parts() < b.parts();
  }
};

/// All partitions of n, each once, lexicographically decreasing.
std::vector<Partition> enumerate_partitions(int n);

// Calls `visit` for every partition of weight exactly `n` whose parts are
// at most `max_part` (and odd if `odd_only`), lexicographically decreasing.
void for_each_partition(int n, int max_part, bool odd_only,
                        const std::function<void(const Partition&)>& visit);

int rank(const Partition& p) noexcept;

Count count_rank(int m, int n);

Partition conjugate(const Partition& p);

// Side of the Durfee square: largest D with part(D) >= D.
int durfee_side(const Partition& p) noexcept;

}  // namespace durfee
