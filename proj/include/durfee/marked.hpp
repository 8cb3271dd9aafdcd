#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "durfee/durfee_symbol.hpp"
#include "durfee/partition.hpp"

namespace durfee {

struct PartitionPair {
  Partition alpha;
  Partition beta;

  int weight() const noexcept { return alpha.weight() + beta.weight(); }
  int length_difference() const noexcept {
    return static_cast<int>(alpha.length()) - static_cast<int>(beta.length());
  }

  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

using RankVector = std::vector<int>;

/// k-marked Durfee symbol, ordinary or odd.
///
/// `vectors[i - 1]` holds the i-th vector (alpha^i, beta^i); index 1 is
/// the rightmost vector in the usual two-row display. Validity:
///
///   1. alpha^i is nonempty for i < k;
///   2. beta^{i-1}_1 <= alpha^{i-1}_1 <= every part of beta^i and of
///      alpha^i (the concatenated top row alpha^k..alpha^1 never
///      increases), for 2 <= i <= k;
///   3. every part is at most the cap (d, or 2d+1 for odd), and odd for
///      the odd flavor.
struct KMarkedSymbol {
  std::vector<PartitionPair> vectors;
  int d = 0;
  Flavor flavor = Flavor::Ordinary;

  std::size_t k() const noexcept { return vectors.size(); }
  const PartitionPair& vec(std::size_t i) const { return vectors.at(i - 1); }
  PartitionPair& vec(std::size_t i) { return vectors.at(i - 1); }
  int weight() const noexcept;

  friend bool operator==(const KMarkedSymbol&, const KMarkedSymbol&) = default;
};

KMarkedSymbol as_one_marked(const DurfeeSymbol& s);
// Requires k == 1.
DurfeeSymbol as_durfee(const KMarkedSymbol& s);

struct Validation {
  bool ok = true;
  std::string violation;  // empty when ok

  explicit operator bool() const noexcept { return ok; }
};

Validation validate(const KMarkedSymbol& s);

// l(alpha^i) - l(beta^i) - 1 for i < k, l(alpha^k) - l(beta^k) for i = k.
int ith_rank(const KMarkedSymbol& s, std::size_t i);
RankVector ranks(const KMarkedSymbol& s);

// Canonical order: ascending d, then vectors k down to 1, each compared
// alpha first then beta in canonical partition order.
bool canonical_before(const KMarkedSymbol& a, const KMarkedSymbol& b);

struct KMarkedLess {
  bool operator()(const KMarkedSymbol& a, const KMarkedSymbol& b) const;
};

std::vector<KMarkedSymbol> enumerate_kmarked(int n, int k, Flavor flavor);

Count count_kmarked(const RankVector& m, int n, Flavor flavor);

// Nonzero rank-vector counts of the full corpus.
using RankDistribution = std::map<RankVector, Count>;
RankDistribution rank_distribution(int n, int k, Flavor flavor);
RankDistribution rank_distribution(const std::vector<KMarkedSymbol>& corpus);

// 1-based indices j into beta whose part is balanced.
std::vector<std::size_t> balanced_parts(const PartitionPair& p);

// d_j for j = 1..l(beta): parts of alpha (excluding alpha_1) larger than
// beta_j, minus the unbalanced parts before beta_j.
std::vector<int> deficiencies(const PartitionPair& p);

std::vector<int> balanced_numbers(const KMarkedSymbol& s);

// l(alpha) > l(beta) and alpha_{i+1} > beta_i for every i <= l(beta).
bool is_strict_shifted(const PartitionPair& p) noexcept;
// Vectors 1..k-1 strict shifted; vector k unconstrained.
bool is_strict_shifted(const KMarkedSymbol& s) noexcept;

}  // namespace durfee
