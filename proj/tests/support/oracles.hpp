#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// enumerators or counting code; library types are used only as containers.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <vector>

#include "durfee/marked.hpp"

namespace oracle {

using durfee::Flavor;
using durfee::KMarkedSymbol;
using durfee::Partition;
using durfee::PartitionPair;

// p(n) from Euler's pentagonal recurrence.
inline std::vector<std::int64_t> partition_numbers(int n_max) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n_max) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t s = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > n) break;
      const std::int64_t sign = j % 2 ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) s += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = s;
  }
  return p;
}

// All partitions of n with parts <= cap (odd parts only if odd_only), as raw vectors.
inline void partitions(int n, int cap, bool odd_only, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& visit) {
  if (n == 0) {
    visit(cur);
    return;
  }
  for (int part = std::min(n, cap); part >= 1; --part) {
    if (odd_only && part % 2 == 0) continue;
    cur.push_back(part);
    partitions(n - part, part, odd_only, cur, visit);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partition_list(int n, int cap, bool odd_only) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions(n, cap, odd_only, cur, [&](const std::vector<int>& p) { out.push_back(p); });
  return out;
}

// N(m, n) by listing every partition of n.
inline std::map<int, std::int64_t> rank_counts(int n) {
  std::map<int, std::int64_t> out;
  std::vector<int> cur;
  partitions(n, n, false, cur, [&](const std::vector<int>& p) {
    const int r = p.empty() ? 0 : p.front() - static_cast<int>(p.size());
    ++out[r];
  });
  return out;
}

inline std::int64_t N(int m, int n) {
  const auto c = rank_counts(n);
  const auto it = c.find(m);
  return it == c.end() ? 0 : it->second;
}

inline int cap_of(int d, Flavor f) { return f == Flavor::Ordinary ? d : 2 * d + 1; }
inline int base_weight(int d, Flavor f) { return f == Flavor::Ordinary ? d * d : 2 * d * d + 2 * d + 1; }

// Odd Durfee symbols of n by rank: two partitions into odd parts <= 2d+1.
inline std::map<int, std::int64_t> odd_rank_counts(int n) {
  std::map<int, std::int64_t> out;
  for (int d = 0; base_weight(d, Flavor::Odd) <= n; ++d) {
    const int rest = n - base_weight(d, Flavor::Odd);
    for (int wa = 0; wa <= rest; ++wa)
      for (const auto& a : partition_list(wa, 2 * d + 1, true))
        for (const auto& b : partition_list(rest - wa, 2 * d + 1, true))
          ++out[static_cast<int>(a.size()) - static_cast<int>(b.size())];
  }
  return out;
}

inline int first(const std::vector<int>& v) { return v.empty() ? 0 : v.front(); }

// Validity read directly off the two-row picture: concatenating the top rows
// of vectors k, k-1, ..., 1 gives a non-increasing row, each top row below
// vector k is nonempty, every bottom row starts no higher than its own top
// row, and every top row after vector k starts no higher than the smallest
// part of the bottom row to its left.
inline bool valid(const std::vector<std::vector<int>>& tops, const std::vector<std::vector<int>>& bottoms,
                  int d, Flavor f) {
  const std::size_t k = tops.size();
  const int cap = cap_of(d, f);
  std::vector<int> row;
  for (std::size_t i = k; i >= 1; --i) {
    row.insert(row.end(), tops[i - 1].begin(), tops[i - 1].end());
    for (const auto* r : {&tops[i - 1], &bottoms[i - 1]})
      for (int x : *r)
        if (x > cap || (f == Flavor::Odd && x % 2 == 0)) return false;
  }
  if (!std::is_sorted(row.rbegin(), row.rend())) return false;
  for (std::size_t i = 1; i < k; ++i) {
    if (tops[i - 1].empty()) return false;
    if (first(bottoms[i - 1]) > first(tops[i - 1])) return false;
    if (!bottoms[i].empty() && first(tops[i - 1]) > bottoms[i].back()) return false;
  }
  return true;
}

// The reading in which only bottom rows bound the next top row, skipping
// empty rows. It admits too many symbols and exists to check that the
// verification driver notices.
inline bool valid_chained_only(const std::vector<std::vector<int>>& tops, const std::vector<std::vector<int>>& bottoms,
                               int d, Flavor f) {
  const std::size_t k = tops.size();
  const int cap = cap_of(d, f);
  for (std::size_t i = 0; i < k; ++i)
    for (const auto* r : {&tops[i], &bottoms[i]})
      for (int x : *r)
        if (x > cap || (f == Flavor::Odd && x % 2 == 0)) return false;
  for (std::size_t i = 2; i <= k; ++i) {
    if (tops[i - 2].empty()) return false;
    if (first(bottoms[i - 2]) > first(tops[i - 2])) return false;
    int ubound = cap;
    for (std::size_t j = i; j <= k; ++j)
      if (!bottoms[j - 1].empty()) {
        ubound = bottoms[j - 1].back();
        break;
      }
    if (first(tops[i - 2]) > ubound) return false;
  }
  return true;
}

using Validator = bool (*)(const std::vector<std::vector<int>>&, const std::vector<std::vector<int>>&, int, Flavor);

// Every k-marked symbol of n accepted by `accept`: all ways to spread the
// weight over 2k rows, filtered.
inline std::vector<KMarkedSymbol> kmarked(int n, int k, Flavor f, Validator accept = &valid) {
  std::vector<KMarkedSymbol> out;
  const int d0 = f == Flavor::Ordinary ? 1 : 0;
  for (int d = d0; base_weight(d, f) <= n; ++d) {
    const int cap = cap_of(d, f);
    const bool odd = f == Flavor::Odd;
    std::vector<std::vector<int>> rows(2 * static_cast<std::size_t>(k));
    std::function<void(std::size_t, int)> fill = [&](std::size_t row, int left) {
      if (row + 1 == rows.size()) {
        for (const auto& p : partition_list(left, cap, odd)) {
          rows[row] = p;
          std::vector<std::vector<int>> tops, bottoms;
          for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
            tops.push_back(rows[2 * i]);
            bottoms.push_back(rows[2 * i + 1]);
          }
          if (!accept(tops, bottoms, d, f)) continue;
          KMarkedSymbol s;
          s.d = d;
          s.flavor = f;
          for (std::size_t i = 0; i < tops.size(); ++i) s.vectors.push_back(PartitionPair{Partition(tops[i]), Partition(bottoms[i])});
          out.push_back(std::move(s));
        }
        return;
      }
      for (int w = 0; w <= left; ++w)
        for (const auto& p : partition_list(w, cap, odd)) {
          rows[row] = p;
          fill(row + 1, left - w);
        }
    };
    fill(0, n - base_weight(d, f));
  }
  return out;
}

inline std::map<std::vector<int>, std::int64_t> rank_table(const std::vector<KMarkedSymbol>& corpus) {
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& s : corpus) {
    std::vector<int> m;
    for (std::size_t i = 0; i < s.vectors.size(); ++i) {
      const auto& v = s.vectors[i];
      const int diff = static_cast<int>(v.alpha.length()) - static_cast<int>(v.beta.length());
      m.push_back(i + 1 < s.vectors.size() ? diff - 1 : diff);
    }
    ++out[m];
  }
  return out;
}

// Right side of the main identity, summing over every t in N^{k-1} directly:
// sum_t N(|m_1|+...+|m_k| + 2(t_1+...+t_{k-1}) + k - 1; n).
inline std::int64_t main_rhs(const std::vector<int>& m, const std::map<int, std::int64_t>& ranks_of_n, int n) {
  const int k = static_cast<int>(m.size());
  int base = k - 1;
  for (int x : m) base += std::abs(x);
  auto lookup = [&](int r) {
    const auto it = ranks_of_n.find(r);
    return it == ranks_of_n.end() ? std::int64_t{0} : it->second;
  };
  std::int64_t sum = 0;
  std::function<void(int, int)> rec = [&](int slot, int acc) {
    if (acc > n) return;
    if (slot == k - 1) {
      sum += lookup(acc);
      return;
    }
    for (int t = 0; acc + 2 * t <= n; ++t) rec(slot + 1, acc + 2 * t);
  };
  rec(0, base);
  return sum;
}

// Number of (m_1..m_{k+1}) in Z^{k+1}, (t_1..t_k) in N^k with sum|m| + 2 sum t = n.
inline std::int64_t solutions(int n, int k) {
  std::int64_t count = 0;
  std::function<void(int, int)> rec = [&](int slot, int used) {
    if (used > n) return;
    if (slot == 2 * k + 1) {
      count += used == n;
      return;
    }
    if (slot <= k) {
      for (int m = -n; m <= n; ++m) rec(slot + 1, used + std::abs(m));
    } else {
      for (int t = 0; used + 2 * t <= n; ++t) rec(slot + 1, used + 2 * t);
    }
  };
  rec(0, 0);
  return count;
}

// sum_m C(m + floor((k-1)/2), k) * count(m) with the polynomial binomial.
inline std::int64_t symmetrized_moment(int k, const std::map<int, std::int64_t>& counts) {
  std::int64_t total = 0;
  for (const auto& [m, c] : counts) {
    const std::int64_t top = m + (k - 1) / 2;
    // falling factorial / k!, exact at each step
    std::int64_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
      num *= top - i;
      den *= i + 1;
    }
    total += num / den * c;
  }
  return total;
}

}  // namespace oracle
