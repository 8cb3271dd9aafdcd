#include "durfee/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "durfee/error.hpp"

namespace durfee {

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("count overflow");
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("count overflow");
  return r;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw Error("partition part " + std::to_string(parts_[i]) + " is not positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be non-increasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool canonical_before(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void visit_rec(int remaining, int max_part, bool odd_only, std::vector<int>& cur,
               const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(cur));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (odd_only && p % 2 == 0) continue;
    cur.push_back(p);
    visit_rec(remaining - p, p, odd_only, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, int max_part, bool odd_only,
                        const std::function<void(const Partition&)>& visit) {
  if (n < 0) return;
  std::vector<int> cur;
  visit_rec(n, max_part, odd_only, cur, visit);
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, n, false, [&](const Partition& p) { out.push_back(p); });
  return out;
}

int rank(const Partition& p) noexcept { return p.largest() - static_cast<int>(p.length()); }

Count count_rank(int m, int n) {
  Count c = 0;
  for_each_partition(n, n, false, [&](const Partition& p) {
    if (rank(p) == m) ++c;
  });
  return c;
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p)
    for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

int durfee_side(const Partition& p) noexcept {
  int d = 0;
  while (p.part(static_cast<std::size_t>(d) + 1) >= d + 1) ++d;
  return d;
}

}  // namespace durfee
