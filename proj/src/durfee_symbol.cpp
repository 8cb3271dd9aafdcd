#include "durfee/durfee_symbol.hpp"

#include <algorithm>
#include <string>

#include "durfee/error.hpp"

namespace durfee {

std::string_view to_string(Flavor f) noexcept { return f == Flavor::Ordinary ? "ordinary" : "odd"; }

Flavor parse_flavor(std::string_view s) {
  if (s == "ordinary") return Flavor::Ordinary;
  if (s == "odd") return Flavor::Odd;
  throw Error("unknown flavor '" + std::string(s) + "' (expected ordinary|odd)");
}

int part_cap(int d, Flavor f) noexcept { return f == Flavor::Ordinary ? d : 2 * d + 1; }

int subscript_weight(int d, Flavor f) noexcept {
  return f == Flavor::Ordinary ? d * d : 2 * d * d + 2 * d + 1;
}

int DurfeeSymbol::weight() const noexcept { return alpha.weight() + beta.weight() + subscript_weight(d, flavor); }

namespace {

bool parts_ok(const Partition& p, int cap, Flavor f) {
  if (p.largest() > cap) return false;
  if (f == Flavor::Odd)
    return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 1; });
  return true;
}

}  // namespace

bool is_valid(const DurfeeSymbol& s) noexcept {
  if (s.d < 0) return false;
  if (s.flavor == Flavor::Ordinary && s.d < 1) return false;
  const int cap = part_cap(s.d, s.flavor);
  return parts_ok(s.alpha, cap, s.flavor) && parts_ok(s.beta, cap, s.flavor);
}

DurfeeSymbol to_durfee(const Partition& p) {
  if (p.empty()) throw Error("no Durfee square");
  const int d = durfee_side(p);
  std::vector<int> strip;
  for (int i = 1; i <= d; ++i) {
    const int extra = p.part(static_cast<std::size_t>(i)) - d;
    if (extra > 0) strip.push_back(extra);
  }
  std::vector<int> below(p.parts().begin() + d, p.parts().end());
  return DurfeeSymbol{conjugate(Partition(std::move(strip))), Partition(std::move(below)), d, Flavor::Ordinary};
}

Partition from_durfee(const DurfeeSymbol& s) {
  if (s.flavor != Flavor::Ordinary) throw Error("no partition preimage defined for odd Durfee symbols");
  if (!is_valid(s)) throw Error("invalid Durfee symbol");
  const Partition strip = conjugate(s.alpha);
  std::vector<int> rows;
  for (int i = 1; i <= s.d; ++i) rows.push_back(s.d + strip.part(static_cast<std::size_t>(i)));
  rows.insert(rows.end(), s.beta.begin(), s.beta.end());
  return Partition(std::move(rows));
}

std::vector<DurfeeSymbol> enumerate_durfee(int n, Flavor flavor) {
  std::vector<DurfeeSymbol> out;
  const bool odd = flavor == Flavor::Odd;
  for (int d = odd ? 0 : 1; subscript_weight(d, flavor) <= n; ++d) {
    const int rest = n - subscript_weight(d, flavor);
    const int cap = part_cap(d, flavor);
    for (int wa = rest; wa >= 0; --wa) {
      std::vector<Partition> alphas;
      for_each_partition(wa, cap, odd, [&](const Partition& a) { alphas.push_back(a); });
      std::vector<Partition> betas;
      for_each_partition(rest - wa, cap, odd, [&](const Partition& b) { betas.push_back(b); });
      for (const auto& a : alphas)
        for (const auto& b : betas) out.push_back(DurfeeSymbol{a, b, d, flavor});
    }
    // Alphas of different weights interleave in canonical order.
    auto first = std::find_if(out.begin(), out.end(), [d](const DurfeeSymbol& s) { return s.d == d; });
    std::stable_sort(first, out.end(), [](const DurfeeSymbol& a, const DurfeeSymbol& b) {
      if (a.alpha != b.alpha) return canonical_before(a.alpha, b.alpha);
      return canonical_before(a.beta, b.beta);
    });
  }
  return out;
}

Count count_durfee_rank(int m, int n, Flavor flavor) {
  Count c = 0;
  for (const auto& s : enumerate_durfee(n, flavor))
    if (s.rank() == m) ++c;
  return c;
}

RankTable::RankTable(int n, std::vector<Count> counts) : n_(n), counts_(std::move(counts)) {
  if (n < 0 || counts_.size() != static_cast<std::size_t>(2 * n + 1)) throw Error("rank table size mismatch");
}

RankTable RankTable::ordinary(int n) {
  std::vector<Count> counts(static_cast<std::size_t>(2 * n + 1), 0);
  for_each_partition(n, n, false, [&](const Partition& p) { ++counts[static_cast<std::size_t>(rank(p) + n)]; });
  return RankTable(n, std::move(counts));
}

RankTable RankTable::odd(int n) {
  std::vector<Count> counts(static_cast<std::size_t>(2 * n + 1), 0);
  for (const auto& s : enumerate_durfee(n, Flavor::Odd)) ++counts[static_cast<std::size_t>(s.rank() + n)];
  return RankTable(n, std::move(counts));
}

Count RankTable::count(int m) const noexcept {
  if (m < -n_ || m > n_) return 0;
  return counts_[static_cast<std::size_t>(m + n_)];
}

Count RankTable::total() const noexcept {
  Count t = 0;
  for (Count c : counts_) t += c;
  return t;
}

}  // namespace durfee
