#pragma once

#include <cstddef>
#include <vector>

#include "durfee/durfee_symbol.hpp"
#include "durfee/marked.hpp"

namespace durfee {

/// Subscripts attached to the top row of a strict shifted pair.
///
/// g[0] = 0; for i >= 2 (1-based), g_i is the number of top parts before
/// position i other than the first, minus the number of bottom parts
/// that are >= top_i.
struct SubscriptSeq {
  std::vector<int> g;

  int max_value() const noexcept;
  // 1-based position of the smallest top part carrying subscript v, or 0
  // if no part carries v.
  std::size_t representative(int v) const;
};

SubscriptSeq subscripts(const PartitionPair& p);

// Remove all marks from a strict shifted symbol: rows merged and sorted.
DurfeeSymbol phi(const KMarkedSymbol& s);

// Split a Durfee symbol of rank sum(m) + k - 1 into a strict shifted
// k-marked symbol with i-th rank m[i-1]. All m must be nonnegative.
KMarkedSymbol phi_inverse(const DurfeeSymbol& ds, const RankVector& m);

// Move the balanced parts of beta into alpha. Requires beta_1 <= alpha_1.
PartitionPair psi(const PartitionPair& p);

// Move the r smallest-per-subscript top parts (subscripts 0..r-1) back to
// the bottom row. Requires a strict shifted pair with length difference
// at least 2r.
PartitionPair psi_inverse(const PartitionPair& p, int r);

// psi on vectors 1..k-1, vector k untouched.
KMarkedSymbol psi_lift(const KMarkedSymbol& s);
// psi_inverse on vector i with r = t[i-1]; t has k entries and t[k-1] == 0.
KMarkedSymbol psi_lift_inverse(const KMarkedSymbol& s, const std::vector<int>& t);

// Negate the p-th rank (1-based p), all other ranks unchanged. Involution.
KMarkedSymbol theta(const KMarkedSymbol& s, std::size_t p);

// Composite theta / psi_lift / phi, then phi_inverse / psi_lift_inverse /
// theta, landing on a symbol whose i-th rank is the perm[i-1]-th rank of s.
// `perm` is a permutation of 1..k.
KMarkedSymbol symmetry_map(const KMarkedSymbol& s, const std::vector<std::size_t>& perm);

}  // namespace durfee
