#include "durfee/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "durfee/error.hpp"

namespace durfee {

namespace {

void require_valid(const KMarkedSymbol& s, const char* op) {
  if (auto v = validate(s); !v) throw Error(std::string(op) + ": invalid symbol: " + v.violation);
}

std::vector<int> slice(const std::vector<int>& v, std::size_t from, std::size_t to) {
  return std::vector<int>(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

int SubscriptSeq::max_value() const noexcept { return g.empty() ? -1 : *std::max_element(g.begin(), g.end()); }

std::size_t SubscriptSeq::representative(int v) const {
  // Parts are non-increasing, so the last position carrying v holds the
  // smallest such part.
  for (std::size_t i = g.size(); i >= 1; --i)
    if (g[i - 1] == v) return i;
  return 0;
}

SubscriptSeq subscripts(const PartitionPair& p) {
  if (!is_strict_shifted(p)) throw Error("subscripts require a strict shifted pair");
  SubscriptSeq seq;
  seq.g.assign(p.alpha.length(), 0);
  for (std::size_t i = 2; i <= p.alpha.length(); ++i) {
    const int top = p.alpha.part(i);
    const auto at_least = std::count_if(p.beta.begin(), p.beta.end(), [top](int b) { return b >= top; });
    seq.g[i - 1] = static_cast<int>(i) - 2 - static_cast<int>(at_least);
  }
  return seq;
}

DurfeeSymbol phi(const KMarkedSymbol& s) {
  require_valid(s, "phi");
  if (!is_strict_shifted(s)) throw Error("phi requires a strict shifted symbol");
  std::vector<int> top, bottom;
  for (const auto& v : s.vectors) {
    top.insert(top.end(), v.alpha.begin(), v.alpha.end());
    bottom.insert(bottom.end(), v.beta.begin(), v.beta.end());
  }
  return DurfeeSymbol{Partition::from_unsorted(std::move(top)), Partition::from_unsorted(std::move(bottom)), s.d,
                      s.flavor};
}

KMarkedSymbol phi_inverse(const DurfeeSymbol& ds, const RankVector& m) {
  const std::size_t k = m.size();
  if (k == 0) throw Error("phi_inverse: empty rank vector");
  if (!is_valid(ds)) throw Error("phi_inverse: invalid Durfee symbol");
  if (std::any_of(m.begin(), m.end(), [](int x) { return x < 0; }))
    throw Error("phi_inverse: ranks must be nonnegative");
  const int target = std::accumulate(m.begin(), m.end(), 0) + static_cast<int>(k) - 1;
  if (ds.rank() != target) throw Error("rank ≠ Σm_i + k − 1");

  const std::vector<int>& gamma = ds.alpha.parts();
  const std::vector<int>& delta = ds.beta.parts();
  // Zero-padded 1-based access into the unconsumed tails.
  auto g_at = [&](std::size_t start, std::size_t i) { return start + i <= gamma.size() ? gamma[start + i - 1] : 0; };
  auto d_at = [&](std::size_t start, std::size_t i) { return start + i <= delta.size() ? delta[start + i - 1] : 0; };

  KMarkedSymbol out{std::vector<PartitionPair>(k), ds.d, ds.flavor};
  std::size_t gpos = 0, dpos = 0;
  for (std::size_t i = k; i >= 2; --i) {
    const std::size_t offset = static_cast<std::size_t>(m[i - 1]) + (i == k ? 1 : 2);
    const std::size_t dleft = delta.size() - dpos;
    const std::size_t gleft = gamma.size() - gpos;
    std::size_t j = 0;
    for (std::size_t c = dleft; c >= 1; --c) {
      if (offset + c - 1 > gleft) continue;
      if (d_at(dpos, c) >= g_at(gpos, offset + c)) {
        j = c;
        break;
      }
    }
    const std::size_t take = offset + j - 1;
    if (take > gleft) throw Error("phi_inverse: top row too short to split");
    out.vec(i).alpha = Partition(slice(gamma, gpos, gpos + take));
    out.vec(i).beta = Partition(slice(delta, dpos, dpos + j));
    gpos += take;
    dpos += j;
  }
  out.vec(1).alpha = Partition(slice(gamma, gpos, gamma.size()));
  out.vec(1).beta = Partition(slice(delta, dpos, delta.size()));

  require_valid(out, "phi_inverse");
  if (!is_strict_shifted(out)) throw Error("phi_inverse: split is not strict shifted");
  return out;
}

PartitionPair psi(const PartitionPair& p) {
  if (!p.beta.empty() && p.beta.largest() > p.alpha.largest()) throw Error("psi requires beta_1 <= alpha_1");
  const auto bal = balanced_parts(p);
  std::vector<int> top = p.alpha.parts();
  std::vector<int> bottom;
  std::size_t next = 0;
  for (std::size_t j = 1; j <= p.beta.length(); ++j) {
    if (next < bal.size() && bal[next] == j) {
      top.push_back(p.beta.part(j));
      ++next;
    } else {
      bottom.push_back(p.beta.part(j));
    }
  }
  return PartitionPair{Partition::from_unsorted(std::move(top)), Partition(std::move(bottom))};
}

PartitionPair psi_inverse(const PartitionPair& p, int r) {
  if (r < 0) throw Error("psi_inverse: r must be nonnegative");
  if (!is_strict_shifted(p)) throw Error("psi_inverse requires a strict shifted pair");
  if (p.length_difference() - 2 * r < 0) throw Error("insufficient length difference");
  if (r == 0) return p;

  const SubscriptSeq seq = subscripts(p);
  std::vector<bool> moved(p.alpha.length(), false);
  std::vector<int> bottom = p.beta.parts();
  for (int v = 0; v < r; ++v) {
    const std::size_t pos = seq.representative(v);
    if (pos == 0) throw Error("psi_inverse: no part with subscript " + std::to_string(v));
    moved[pos - 1] = true;
    bottom.push_back(p.alpha.part(pos));
  }
  std::vector<int> top;
  for (std::size_t i = 0; i < moved.size(); ++i)
    if (!moved[i]) top.push_back(p.alpha.parts()[i]);
  return PartitionPair{Partition(std::move(top)), Partition::from_unsorted(std::move(bottom))};
}

KMarkedSymbol psi_lift(const KMarkedSymbol& s) {
  require_valid(s, "psi_lift");
  KMarkedSymbol out = s;
  for (std::size_t i = 1; i < s.k(); ++i) out.vec(i) = psi(s.vec(i));
  return out;
}

KMarkedSymbol psi_lift_inverse(const KMarkedSymbol& s, const std::vector<int>& t) {
  require_valid(s, "psi_lift_inverse");
  if (t.size() != s.k()) throw Error("psi_lift_inverse: balanced vector must have k entries");
  if (t.back() != 0) throw Error("psi_lift_inverse: t_k must be 0");
  if (!is_strict_shifted(s)) throw Error("psi_lift_inverse requires a strict shifted symbol");
  KMarkedSymbol out = s;
  for (std::size_t i = 1; i < s.k(); ++i) {
    try {
      out.vec(i) = psi_inverse(s.vec(i), t[i - 1]);
    } catch (const Error& e) {
      throw Error("psi_lift_inverse: vector " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

KMarkedSymbol theta(const KMarkedSymbol& s, std::size_t p) {
  require_valid(s, "theta");
  if (p < 1 || p > s.k()) throw Error("theta: index " + std::to_string(p) + " out of range");
  KMarkedSymbol out = s;
  PartitionPair& v = out.vec(p);
  if (p == s.k()) {
    std::swap(v.alpha, v.beta);
    return out;
  }
  std::vector<int> top = v.beta.parts();
  top.push_back(v.alpha.largest());
  std::vector<int> bottom(v.alpha.parts().begin() + 1, v.alpha.parts().end());
  v = PartitionPair{Partition::from_unsorted(std::move(top)), Partition(std::move(bottom))};
  return out;
}

KMarkedSymbol symmetry_map(const KMarkedSymbol& s, const std::vector<std::size_t>& perm) {
  require_valid(s, "symmetry_map");
  const std::size_t k = s.k();
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> identity(k);
  std::iota(identity.begin(), identity.end(), 1);
  if (sorted != identity) throw Error("symmetry_map: perm must be a permutation of 1..k");

  const RankVector source = ranks(s);
  KMarkedSymbol cur = s;
  for (std::size_t i = 1; i <= k; ++i)
    if (source[i - 1] < 0) cur = theta(cur, i);

  const std::vector<int> t = balanced_numbers(cur);
  const DurfeeSymbol merged = phi(psi_lift(cur));

  RankVector wanted(k), split(k);
  for (std::size_t i = 1; i <= k; ++i) {
    wanted[i - 1] = source[perm[i - 1] - 1];
    split[i - 1] = std::abs(wanted[i - 1]) + 2 * t[i - 1];
  }
  KMarkedSymbol out = psi_lift_inverse(phi_inverse(merged, split), t);
  for (std::size_t i = 1; i <= k; ++i)
    if (wanted[i - 1] < 0) out = theta(out, i);
  return out;
}

}  // namespace durfee
