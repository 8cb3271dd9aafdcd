#pragma once

#include <cstdint>

#include "durfee/durfee_symbol.hpp"
#include "durfee/marked.hpp"
#include "durfee/partition.hpp"

namespace durfee {

// Falling-factorial binomial a(a-1)...(a-b+1)/b!, defined for negative a.
std::int64_t binom(std::int64_t a, int b);

// Sum of m^k N(m;n).
std::int64_t rank_moment(int k, int n);

// Sum of C(m + floor((k-1)/2), k) * count(m;n), count per flavor.
std::int64_t sym_moment(int k, int n, Flavor flavor);
std::int64_t sym_moment(int k, const RankTable& table);

struct MomentCheck {
  bool holds = false;
  Count marked_total = 0;  // number of (k+1)-marked symbols of n
  std::int64_t moment = 0;  // eta_{2k}(n)
};

MomentCheck check_corollary13(int k, int n, Flavor flavor);

// Closed form C(2k+n, 2k) + C(2k+n-1, 2k).
std::int64_t solution_count(int n, int k);
// Direct count of (m_1..m_{k+1}, t_1..t_k) with sum|m_i| + 2 sum t_j = n.
std::int64_t solution_count_enumerated(int n, int k);

// sum_j C(j+k-2, k-2) count(sum|m_i| + 2j + k - 1; n). Requires k >= 2.
Count main_identity_rhs(const RankVector& m, int n, Flavor flavor);
Count main_identity_rhs(const RankVector& m, const RankTable& table);

}  // namespace durfee
