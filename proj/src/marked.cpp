#include "durfee/marked.hpp"

#include <algorithm>
#include <string>

#include "durfee/error.hpp"

namespace durfee {

int KMarkedSymbol::weight() const noexcept {
  int w = subscript_weight(d, flavor);
  for (const auto& v : vectors) w += v.weight();
  return w;
}

KMarkedSymbol as_one_marked(const DurfeeSymbol& s) { return KMarkedSymbol{{PartitionPair{s.alpha, s.beta}}, s.d, s.flavor}; }

DurfeeSymbol as_durfee(const KMarkedSymbol& s) {
  if (s.k() != 1) throw Error("expected a 1-marked symbol, got k=" + std::to_string(s.k()));
  return DurfeeSymbol{s.vectors[0].alpha, s.vectors[0].beta, s.d, s.flavor};
}

namespace {

std::string vec_name(const char* row, std::size_t i) { return std::string(row) + "^" + std::to_string(i); }

}  // namespace

Validation validate(const KMarkedSymbol& s) {
  const std::size_t k = s.k();
  if (k == 0) return {false, "k must be at least 1"};
  if (s.d < 0) return {false, "negative subscript"};
  if (s.flavor == Flavor::Ordinary && s.d == 0) return {false, "ordinary symbols need d >= 1"};
  const int cap = part_cap(s.d, s.flavor);

  for (std::size_t i = 1; i < k; ++i)
    if (s.vec(i).alpha.empty()) return {false, vec_name("alpha", i) + " is empty"};

  for (std::size_t i = 1; i <= k; ++i) {
    for (const Partition* row : {&s.vec(i).alpha, &s.vec(i).beta}) {
      const char* name = row == &s.vec(i).alpha ? "alpha" : "beta";
      if (row->largest() > cap)
        return {false, vec_name(name, i) + " has part " + std::to_string(row->largest()) +
                           " > cap " + std::to_string(cap)};
      if (s.flavor == Flavor::Odd)
        for (int part : *row)
          if (part % 2 == 0) return {false, "odd flavor: " + vec_name(name, i) + " has even part " + std::to_string(part)};
    }
  }

  for (std::size_t i = 2; i <= k; ++i) {
    const PartitionPair& lower = s.vec(i - 1);
    const PartitionPair& upper = s.vec(i);
    const int top = lower.alpha.largest();
    if (lower.beta.largest() > top)
      return {false, "interlacing: " + vec_name("beta", i - 1) + "_1 > " + vec_name("alpha", i - 1) + "_1"};
    if (!upper.beta.empty() && top > upper.beta.smallest())
      return {false, "interlacing: " + vec_name("alpha", i - 1) + "_1 > smallest part of " + vec_name("beta", i)};
    if (!upper.alpha.empty() && top > upper.alpha.smallest())
      return {false, "interlacing: top row increases from " + vec_name("alpha", i) + " to " + vec_name("alpha", i - 1)};
  }
  return {};
}

int ith_rank(const KMarkedSymbol& s, std::size_t i) {
  if (i < 1 || i > s.k()) throw Error("rank index " + std::to_string(i) + " out of range 1.." + std::to_string(s.k()));
  const int diff = s.vec(i).length_difference();
  return i < s.k() ? diff - 1 : diff;
}

RankVector ranks(const KMarkedSymbol& s) {
  RankVector r;
  for (std::size_t i = 1; i <= s.k(); ++i) r.push_back(ith_rank(s, i));
  return r;
}

bool canonical_before(const KMarkedSymbol& a, const KMarkedSymbol& b) {
  if (a.d != b.d) return a.d < b.d;
  if (a.k() != b.k()) return a.k() < b.k();
  for (std::size_t i = a.k(); i >= 1; --i) {
    const auto& va = a.vec(i);
    const auto& vb = b.vec(i);
    if (va.alpha != vb.alpha) return canonical_before(va.alpha, vb.alpha);
    if (va.beta != vb.beta) return canonical_before(va.beta, vb.beta);
  }
  return false;
}

bool KMarkedLess::operator()(const KMarkedSymbol& a, const KMarkedSymbol& b) const { return canonical_before(a, b); }

namespace {

// All partitions of weight <= max_weight with parts <= max_part.
std::vector<Partition> bounded_partitions(int max_weight, int max_part, bool odd, bool nonempty) {
  std::vector<Partition> out;
  for (int w = nonempty ? 1 : 0; w <= max_weight; ++w)
    for_each_partition(w, max_part, odd, [&](const Partition& p) { out.push_back(p); });
  return out;
}

int min_part_bound(const PartitionPair& v, int bound) {
  if (!v.alpha.empty()) bound = std::min(bound, v.alpha.smallest());
  if (!v.beta.empty()) bound = std::min(bound, v.beta.smallest());
  return bound;
}

// Builds vectors from index k down to 1. `bound` caps every part of the
// current vector's top row; each vector's bottom row is capped by its own
// largest top part (vector k: by the subscript cap).
struct Generator {
  int k;
  int cap;
  bool odd;
  KMarkedSymbol cur;
  std::vector<KMarkedSymbol>* out;

  void run(std::size_t i, int bound, int remaining) {
    const bool last = i == 1;
    const bool top_vector = static_cast<int>(i) == k;
    for (const Partition& a : bounded_partitions(remaining, bound, odd, !top_vector)) {
      const int left = remaining - a.weight();
      const int beta_cap = top_vector ? cap : a.largest();
      cur.vec(i).alpha = a;
      if (last) {
        for_each_partition(left, beta_cap, odd, [&](const Partition& b) {
          cur.vec(i).beta = b;
          out->push_back(cur);
        });
        continue;
      }
      for (const Partition& b : bounded_partitions(left, beta_cap, odd, false)) {
        cur.vec(i).beta = b;
        run(i - 1, min_part_bound(cur.vec(i), cap), left - b.weight());
      }
    }
    cur.vec(i) = PartitionPair{};
  }
};

}  // namespace

std::vector<KMarkedSymbol> enumerate_kmarked(int n, int k, Flavor flavor) {
  if (k < 1) throw Error("k must be at least 1");
  std::vector<KMarkedSymbol> out;
  const bool odd = flavor == Flavor::Odd;
  for (int d = odd ? 0 : 1; subscript_weight(d, flavor) <= n; ++d) {
    Generator g{k, part_cap(d, flavor), odd,
                KMarkedSymbol{std::vector<PartitionPair>(static_cast<std::size_t>(k)), d, flavor}, &out};
    g.run(static_cast<std::size_t>(k), g.cap, n - subscript_weight(d, flavor));
  }
  std::sort(out.begin(), out.end(), KMarkedLess{});
  return out;
}

Count count_kmarked(const RankVector& m, int n, Flavor flavor) {
  if (m.empty()) throw Error("rank vector must have at least one entry");
  Count c = 0;
  for (const auto& s : enumerate_kmarked(n, static_cast<int>(m.size()), flavor))
    if (ranks(s) == m) ++c;
  return c;
}

RankDistribution rank_distribution(const std::vector<KMarkedSymbol>& corpus) {
  RankDistribution dist;
  for (const auto& s : corpus) ++dist[ranks(s)];
  return dist;
}

RankDistribution rank_distribution(int n, int k, Flavor flavor) { return rank_distribution(enumerate_kmarked(n, k, flavor)); }

namespace {

// Walks beta left to right; fills deficiency and balanced flags.
void classify(const PartitionPair& p, std::vector<int>& deficiency, std::vector<bool>& balanced) {
  const std::size_t len = p.beta.length();
  deficiency.assign(len, 0);
  balanced.assign(len, false);
  int unbalanced_before = 0;
  for (std::size_t j = 1; j <= len; ++j) {
    const int b = p.beta.part(j);
    int larger = 0;
    for (std::size_t i = 2; i <= p.alpha.length(); ++i)
      if (p.alpha.part(i) > b) ++larger;
    const int dj = larger - unbalanced_before;
    deficiency[j - 1] = dj;
    const bool bal = p.alpha.part(j + 1) <= b && dj == 0;
    balanced[j - 1] = bal;
    if (!bal) ++unbalanced_before;
  }
}

}  // namespace

std::vector<std::size_t> balanced_parts(const PartitionPair& p) {
  std::vector<int> def;
  std::vector<bool> bal;
  classify(p, def, bal);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < bal.size(); ++j)
    if (bal[j]) out.push_back(j + 1);
  return out;
}

std::vector<int> deficiencies(const PartitionPair& p) {
  std::vector<int> def;
  std::vector<bool> bal;
  classify(p, def, bal);
  return def;
}

std::vector<int> balanced_numbers(const KMarkedSymbol& s) {
  std::vector<int> nb(s.k(), 0);
  for (std::size_t i = 1; i < s.k(); ++i) nb[i - 1] = static_cast<int>(balanced_parts(s.vec(i)).size());
  return nb;
}

bool is_strict_shifted(const PartitionPair& p) noexcept {
  if (p.alpha.length() <= p.beta.length()) return false;
  for (std::size_t i = 1; i <= p.beta.length(); ++i)
    if (p.alpha.part(i + 1) <= p.beta.part(i)) return false;
  return true;
}

bool is_strict_shifted(const KMarkedSymbol& s) noexcept {
  for (std::size_t i = 1; i < s.k(); ++i)
    if (!is_strict_shifted(s.vec(i))) return false;
  return true;
}

}  // namespace durfee
