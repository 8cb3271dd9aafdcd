#include "durfee/moments.hpp"

#include <cstdlib>
#include <functional>
#include <string>

#include "durfee/error.hpp"

namespace durfee {

__extension__ using Wide = __int128;

std::int64_t binom(std::int64_t a, int b) {
  if (b < 0) throw Error("binom: negative bottom");
  // After step i the running value is C(a, i+1): a product of i+1
  // consecutive integers divided by (i+1)!, so each division is exact.
  Wide value = 1;
  for (int i = 0; i < b; ++i) {
    value = value * (a - i) / (i + 1);
    if (value > INT64_MAX || value < INT64_MIN) throw Error("binom overflow");
  }
  return static_cast<std::int64_t>(value);
}

namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace

std::int64_t rank_moment(int k, int n) {
  const RankTable table = RankTable::ordinary(n);
  std::int64_t sum = 0;
  for (int m = -n; m <= n; ++m) sum = checked_add(sum, checked_mul(ipow(m, k), table.count(m)));
  return sum;
}

std::int64_t sym_moment(int k, const RankTable& table) {
  if (k < 1) throw Error("sym_moment: k must be positive");
  const int shift = (k - 1) / 2;
  const int n = table.weight();
  std::int64_t sum = 0;
  for (int m = -n; m <= n; ++m)
    if (Count c = table.count(m)) sum = checked_add(sum, checked_mul(binom(m + shift, k), c));
  return sum;
}

std::int64_t sym_moment(int k, int n, Flavor flavor) { return sym_moment(k, RankTable::of(flavor, n)); }

MomentCheck check_corollary13(int k, int n, Flavor flavor) {
  if (k < 1) throw Error("check_corollary13: k must be positive");
  MomentCheck r;
  r.marked_total = static_cast<Count>(enumerate_kmarked(n, k + 1, flavor).size());
  r.moment = sym_moment(2 * k, n, flavor);
  r.holds = r.marked_total == r.moment;
  return r;
}

std::int64_t solution_count(int n, int k) { return binom(2 * k + n, 2 * k) + binom(2 * k + n - 1, 2 * k); }

std::int64_t solution_count_enumerated(int n, int k) {
  // Choose |m_1|..|m_{k+1}| then t_1..t_k; each nonzero |m_i| has two signs.
  std::function<std::int64_t(int, int)> count_t = [&](int left, int slots) -> std::int64_t {
    if (slots == 0) return left == 0 ? 1 : 0;
    std::int64_t c = 0;
    for (int t = 0; 2 * t <= left; ++t) c += count_t(left - 2 * t, slots - 1);
    return c;
  };
  std::function<std::int64_t(int, int)> count_m = [&](int left, int slots) -> std::int64_t {
    if (slots == 0) return count_t(left, k);
    std::int64_t c = count_m(left, slots - 1);
    for (int a = 1; a <= left; ++a) c += 2 * count_m(left - a, slots - 1);
    return c;
  };
  return count_m(n, k + 1);
}

Count main_identity_rhs(const RankVector& m, const RankTable& table) {
  const int k = static_cast<int>(m.size());
  if (k < 2) throw Error("main_identity_rhs: k must be at least 2");
  int base = k - 1;
  for (int x : m) base += std::abs(x);
  Count sum = 0;
  // No symbol of weight n has rank above n.
  for (int j = 0; base + 2 * j <= table.weight(); ++j)
    sum = checked_add(sum, checked_mul(binom(j + k - 2, k - 2), table.count(base + 2 * j)));
  return sum;
}

Count main_identity_rhs(const RankVector& m, int n, Flavor flavor) {
  return main_identity_rhs(m, RankTable::of(flavor, n));
}

}  // namespace durfee
