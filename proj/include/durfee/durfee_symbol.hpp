#pragma once

#include <string_view>
#include <vector>

#include "durfee/partition.hpp"

namespace durfee {

enum class Flavor { Ordinary, Odd };

std::string_view to_string(Flavor f) noexcept;
// Accepts "ordinary" / "odd"; throws durfee::Error otherwise.
Flavor parse_flavor(std::string_view s);

// Largest admissible part for subscript d: d (ordinary) or 2d+1 (odd).
int part_cap(int d, Flavor f) noexcept;
// Weight carried by the subscript: d^2 (ordinary) or 2d^2+2d+1 (odd).
int subscript_weight(int d, Flavor f) noexcept;

/// Two-row array (alpha over beta) with subscript d.
struct DurfeeSymbol {
  Partition alpha;
  Partition beta;
  int d = 0;
  Flavor flavor = Flavor::Ordinary;

  int weight() const noexcept;
  int rank() const noexcept {
    return static_cast<int>(alpha.length()) - static_cast<int>(beta.length());
  }

  friend bool operator==(const DurfeeSymbol&, const DurfeeSymbol&) = default;
};

// Parts within the cap, odd parts for the odd flavor, d >= 1 for ordinary.
bool is_valid(const DurfeeSymbol& s) noexcept;

// Durfee-square dissection: the strip right of the square, conjugated,
// becomes alpha; the rows below the square become beta.
DurfeeSymbol to_durfee(const Partition& p);
Partition from_durfee(const DurfeeSymbol& s);

// Ascending d, then alpha, then beta in canonical partition order.
std::vector<DurfeeSymbol> enumerate_durfee(int n, Flavor flavor);

Count count_durfee_rank(int m, int n, Flavor flavor);

/// Rank counts of one weight n, indexed by rank in [-n, n].
///
/// Built once per n from an exhaustive corpus and then queried many
/// times by the identity checks. `ordinary` tallies partitions of n,
/// i.e. N(m;n); `odd` tallies odd Durfee symbols of n by odd rank.
class RankTable {
 public:
  RankTable(int n, std::vector<Count> counts);

  static RankTable ordinary(int n);
  static RankTable odd(int n);
  static RankTable of(Flavor f, int n) { return f == Flavor::Ordinary ? ordinary(n) : odd(n); }

  int weight() const noexcept { return n_; }
  Count count(int m) const noexcept;
  Count total() const noexcept;

 private:
  int n_ = 0;
  std::vector<Count> counts_;  // counts_[m + n_]
};

}  // namespace durfee
