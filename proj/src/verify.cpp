#include "durfee/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "durfee/bijections.hpp"
#include "durfee/error.hpp"
#include "durfee/moments.hpp"

namespace durfee::verify {

unsigned default_workers() {
  if (const char* env = std::getenv("DURFEE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"main", "cor13", "cor11", "thm7", "psi", "phi", "subscripts", "symmetry"};
  return names;
}

namespace {

std::string show(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string show(const PartitionPair& p) { return show(p.alpha.parts()) + "/" + show(p.beta.parts()); }

// Outcome of one independent cell of a suite.
struct Cell {
  long long checked = 0;
  std::string failure;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (!ok && failure.empty()) failure = describe();
  }
};

class Runner {
 public:
  explicit Runner(const Options& o) : opt_(o) {
    if (!opt_.corpus) opt_.corpus = [](int n, int k, Flavor f) { return enumerate_kmarked(n, k, f); };
    workers_ = opt_.threads ? opt_.threads : default_workers();
  }

  SuiteResult run(const std::string& name, const std::string& bound, std::size_t cells,
                  const std::function<void(std::size_t, Cell&)>& body) const {
    std::vector<Cell> results(cells);
    parallel_for(cells, workers_, [&](std::size_t i) {
      try {
        body(i, results[i]);
      } catch (const std::exception& e) {
        if (results[i].failure.empty()) results[i].failure = std::string("exception: ") + e.what();
      }
    });
    SuiteResult r{name, bound, 0, true, {}};
    for (const auto& c : results) {
      r.checked += c.checked;
      if (!c.failure.empty() && r.passed) {
        r.passed = false;
        r.counterexample = c.failure;
      }
    }
    return r;
  }

  std::vector<KMarkedSymbol> corpus(int n, int k, Flavor f) const { return opt_.corpus(n, k, f); }
  const Options& options() const { return opt_; }

 private:
  Options opt_;
  unsigned workers_ = 1;
};

std::string nk_bound(const Options& o, int k_min) {
  return "n<=" + std::to_string(o.n_max) + ", k=" + std::to_string(k_min) + ".." + std::to_string(o.k_max);
}

// (flavor, k, n) cells for k in [k_min, k_max], n in [0, n_max].
struct Grid {
  int k_min, k_max, n_max;
  std::size_t size() const { return 2u * static_cast<std::size_t>(k_max - k_min + 1) * static_cast<std::size_t>(n_max + 1); }
  void decode(std::size_t i, Flavor& f, int& k, int& n) const {
    const std::size_t per_flavor = size() / 2;
    f = i < per_flavor ? Flavor::Ordinary : Flavor::Odd;
    i %= per_flavor;
    k = k_min + static_cast<int>(i / static_cast<std::size_t>(n_max + 1));
    n = static_cast<int>(i % static_cast<std::size_t>(n_max + 1));
  }
};

void for_each_box_vector(int k, int bound, const std::function<void(const RankVector&)>& visit) {
  RankVector m(static_cast<std::size_t>(k), -bound);
  while (true) {
    visit(m);
    std::size_t i = 0;
    while (i < m.size() && m[i] == bound) m[i++] = -bound;
    if (i == m.size()) return;
    ++m[i];
  }
}

std::string cell_tag(Flavor f, int k, int n) {
  return std::string(to_string(f)) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
}

SuiteResult suite_main(const Runner& run) {
  const auto& o = run.options();
  const Grid grid{2, std::max(2, o.k_max), o.n_max};
  return run.run("main", nk_bound(o, 2) + ", both flavors", grid.size(), [&](std::size_t i, Cell& cell) {
    Flavor f;
    int k, n;
    grid.decode(i, f, k, n);
    const RankDistribution dist = rank_distribution(run.corpus(n, k, f));
    const RankTable table = RankTable::of(f, n);
    for (const auto& [m, c] : dist)
      cell.expect(std::all_of(m.begin(), m.end(), [n](int x) { return std::abs(x) <= n; }),
                  [&, m = m] { return cell_tag(f, k, n) + ": rank vector " + show(m) + " outside [-n,n]"; });
    for_each_box_vector(k, n, [&](const RankVector& m) {
      const auto it = dist.find(m);
      const Count lhs = it == dist.end() ? 0 : it->second;
      const Count rhs = main_identity_rhs(m, table);
      cell.expect(lhs == rhs, [&] {
        return cell_tag(f, k, n) + " m=" + show(m) + ": count=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
      });
    });
  });
}

SuiteResult suite_cor13(const Runner& run) {
  const auto& o = run.options();
  const int kk = std::max(1, o.k_max - 1);
  const Grid grid{1, kk, o.n_max};
  SuiteResult r = run.run("cor13", "n<=" + std::to_string(o.n_max) + ", k=1.." + std::to_string(kk) + ", both flavors",
                          grid.size() + 1, [&](std::size_t i, Cell& cell) {
                            if (i == grid.size()) {
                              for (int k = 1; k <= o.k_max; ++k)
                                for (int n = 0; n <= o.n_max; ++n) {
                                  const auto closed = solution_count(n, k), brute = solution_count_enumerated(n, k);
                                  cell.expect(closed == brute, [&] {
                                    return "c(n) k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                           ": closed=" + std::to_string(closed) + " brute=" + std::to_string(brute);
                                  });
                                }
                              return;
                            }
                            Flavor f;
                            int k, n;
                            grid.decode(i, f, k, n);
                            const auto total = static_cast<Count>(run.corpus(n, k + 1, f).size());
                            const auto moment = sym_moment(2 * k, n, f);
                            cell.expect(total == moment, [&] {
                              return cell_tag(f, k, n) + ": D_{k+1}(n)=" + std::to_string(total) +
                                     " eta_2k(n)=" + std::to_string(moment);
                            });
                          });
  return r;
}

QSeries lhs_from_corpus(const Runner& run, int k, Flavor f) {
  const auto& o = run.options();
  QSeries s(o.order);
  for (int n = 0; n <= o.order; ++n) {
    Rational c;
    for (const auto& [m, count] : rank_distribution(run.corpus(n, k, f))) {
      Rational term(static_cast<long>(count));
      for (std::size_t i = 0; i < m.size(); ++i) {
        Rational x = m[i] < 0 ? Rational(1 / o.x.x[i]) : o.x.x[i];
        for (int e = 0; e < std::abs(m[i]); ++e) term *= x;
      }
      c += term;
    }
    s[static_cast<std::size_t>(n)] = c;
  }
  return s;
}

std::string point_bound(const Options& o) {
  std::string b = "x=(";
  for (std::size_t i = 0; i < o.x.size(); ++i) b += (i ? "," : "") + to_string(o.x.x[i]);
  return b + "), Q=" + std::to_string(o.order) + ", both flavors";
}

SuiteResult suite_series(const Runner& run, const std::string& name,
                         QSeries (*rhs)(const EvalPoint&, int, int, Flavor)) {
  const auto& o = run.options();
  const int k = static_cast<int>(o.x.size());
  return run.run(name, point_bound(o), 2, [&](std::size_t i, Cell& cell) {
    const Flavor f = i == 0 ? Flavor::Ordinary : Flavor::Odd;
    const QSeries lhs = lhs_from_corpus(run, k, f);
    const QSeries other = rhs(o.x, k, o.order, f);
    for (int n = 0; n <= o.order; ++n)
      cell.expect(lhs[static_cast<std::size_t>(n)] == other[static_cast<std::size_t>(n)], [&] {
        return std::string(to_string(f)) + " q^" + std::to_string(n) + ": lhs=" + to_string(lhs[static_cast<std::size_t>(n)]) +
               " rhs=" + to_string(other[static_cast<std::size_t>(n)]);
      });
  });
}

std::vector<PartitionPair> pairs_of_weight(int w) {
  std::vector<PartitionPair> out;
  for (int wa = w; wa >= 0; --wa) {
    const auto as = enumerate_partitions(wa);
    const auto bs = enumerate_partitions(w - wa);
    for (const auto& a : as)
      for (const auto& b : bs) out.push_back(PartitionPair{a, b});
  }
  return out;
}

SuiteResult suite_psi(const Runner& run) {
  const auto& o = run.options();
  return run.run("psi", "|alpha|+|beta|<=" + std::to_string(o.n_max), static_cast<std::size_t>(o.n_max + 1),
                 [&](std::size_t w, Cell& cell) {
                   for (const auto& p : pairs_of_weight(static_cast<int>(w))) {
                     if (p.alpha.empty() || p.beta.largest() > p.alpha.largest()) continue;
                     const auto def = deficiencies(p);
                     const auto bal = balanced_parts(p);
                     cell.expect(std::all_of(def.begin(), def.end(), [](int x) { return x >= 0; }),
                                 [&] { return "negative deficiency at " + show(p); });
                     for (std::size_t j : bal)
                       cell.expect(def[j - 1] == 0, [&] { return "balanced part with d_j != 0 at " + show(p); });
                     const PartitionPair img = psi(p);
                     const int r = static_cast<int>(bal.size());
                     cell.expect(is_strict_shifted(img) && img.weight() == p.weight() &&
                                     img.length_difference() == p.length_difference() + 2 * r,
                                 [&] { return "psi image law fails at " + show(p) + " -> " + show(img); });
                     if (p.length_difference() >= 0)
                       cell.expect(psi_inverse(img, r) == p, [&] { return "psi_inverse(psi(q)) != q at " + show(p); });
                   }
                   for (const auto& p : pairs_of_weight(static_cast<int>(w))) {
                     if (!is_strict_shifted(p)) continue;
                     for (int r = 0; p.length_difference() - 2 * r >= 0; ++r) {
                       const PartitionPair pre = psi_inverse(p, r);
                       cell.expect(static_cast<int>(balanced_parts(pre).size()) == r && psi(pre) == p, [&] {
                         return "psi(psi_inverse(p," + std::to_string(r) + ")) != p at " + show(p);
                       });
                     }
                   }
                 });
}

SuiteResult suite_subscripts(const Runner& run) {
  const auto& o = run.options();
  return run.run("subscripts", "|alpha|+|beta|<=" + std::to_string(o.n_max), static_cast<std::size_t>(o.n_max + 1),
                 [&](std::size_t w, Cell& cell) {
                   for (const auto& p : pairs_of_weight(static_cast<int>(w))) {
                     if (!is_strict_shifted(p)) continue;
                     const SubscriptSeq seq = subscripts(p);
                     const int big = p.length_difference();
                     bool ok = seq.g[0] == 0 && (seq.g.size() < 2 || seq.g[1] == 0) &&
                               std::all_of(seq.g.begin(), seq.g.end(), [](int g) { return g >= 0; });
                     int prev = INT32_MAX;
                     for (int v = 0; ok && v <= big - 2; ++v) {
                       const std::size_t pos = seq.representative(v);
                       ok = pos != 0 && p.alpha.part(pos) <= prev;
                       if (ok) prev = p.alpha.part(pos);
                     }
                     cell.expect(ok, [&] { return "subscript law fails at " + show(p) + " g=" + show(seq.g); });
                   }
                 });
}

// All nonnegative k-vectors summing to total.
void for_each_composition(int total, int k, const std::function<void(const RankVector&)>& visit) {
  RankVector m(static_cast<std::size_t>(k), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == m.size()) {
      m[i] = left;
      visit(m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
}

SuiteResult suite_phi(const Runner& run) {
  const auto& o = run.options();
  const Grid grid{2, std::max(2, o.k_max), o.n_max};
  return run.run("phi", nk_bound(o, 2) + ", both flavors", grid.size(), [&](std::size_t i, Cell& cell) {
    Flavor f;
    int k, n;
    grid.decode(i, f, k, n);
    RankDistribution ss;
    for (const auto& s : run.corpus(n, k, f)) {
      if (!is_strict_shifted(s)) continue;
      const RankVector m = ranks(s);
      if (std::any_of(m.begin(), m.end(), [](int x) { return x < 0; })) continue;
      ++ss[m];
      cell.expect(phi_inverse(phi(s), m) == s, [&] { return cell_tag(f, k, n) + ": phi_inverse(phi(s)) != s"; });
    }
    const RankTable table = RankTable::of(f, n);
    for (int total = 0; total + k - 1 <= n; ++total)
      for_each_composition(total, k, [&](const RankVector& m) {
        const auto it = ss.find(m);
        const Count lhs = it == ss.end() ? 0 : it->second;
        cell.expect(lhs == table.count(total + k - 1), [&] {
          return cell_tag(f, k, n) + " m=" + show(m) + ": Dss=" + std::to_string(lhs) +
                 " D1=" + std::to_string(table.count(total + k - 1));
        });
      });
    for (const auto& ds : enumerate_durfee(n, f)) {
      const int total = ds.rank() - k + 1;
      if (total < 0) continue;
      for_each_composition(total, k, [&](const RankVector& m) {
        cell.expect(phi(phi_inverse(ds, m)) == ds, [&] { return cell_tag(f, k, n) + ": phi(phi_inverse(ds,m)) != ds"; });
      });
    }
  });
}

SuiteResult suite_symmetry(const Runner& run) {
  const auto& o = run.options();
  const Grid grid{2, std::max(2, o.k_max), o.n_max};
  return run.run("symmetry", nk_bound(o, 2) + ", both flavors", grid.size(), [&](std::size_t i, Cell& cell) {
    Flavor f;
    int k, n;
    grid.decode(i, f, k, n);
    const auto corpus = run.corpus(n, k, f);
    const RankDistribution dist = rank_distribution(corpus);
    std::vector<std::size_t> perm(static_cast<std::size_t>(k));
    for (const auto& [m, c] : dist) {
      std::iota(perm.begin(), perm.end(), 1);
      do {
        for (unsigned signs = 0; signs < (1u << k); ++signs) {
          RankVector image(m.size());
          for (std::size_t j = 0; j < m.size(); ++j) image[j] = m[perm[j] - 1] * ((signs >> j) & 1u ? -1 : 1);
          const auto it = dist.find(image);
          const Count other = it == dist.end() ? 0 : it->second;
          cell.expect(other == c, [&, m = m, c = c] {
            return cell_tag(f, k, n) + ": count" + show(m) + "=" + std::to_string(c) + " but count" + show(image) +
                   "=" + std::to_string(other);
          });
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    const std::set<KMarkedSymbol, KMarkedLess> all(corpus.begin(), corpus.end());
    for (std::size_t a = 1; a <= static_cast<std::size_t>(k); ++a)
      for (std::size_t b = a + 1; b <= static_cast<std::size_t>(k); ++b) {
        std::iota(perm.begin(), perm.end(), 1);
        std::swap(perm[a - 1], perm[b - 1]);
        std::set<KMarkedSymbol, KMarkedLess> images;
        for (const auto& s : corpus) {
          const KMarkedSymbol t = symmetry_map(s, perm);
          const RankVector rs = ranks(s), rt = ranks(t);
          bool ok = validate(t).ok && t.weight() == s.weight() && t.d == s.d;
          for (std::size_t j = 0; ok && j < rs.size(); ++j) ok = rt[j] == rs[perm[j] - 1];
          cell.expect(ok, [&] { return cell_tag(f, k, n) + ": symmetry_map rank law fails at " + show(rs); });
          images.insert(t);
        }
        cell.expect(images == all, [&] { return cell_tag(f, k, n) + ": symmetry_map is not a bijection of the corpus"; });
      }
  });
}

}  // namespace

std::vector<SuiteResult> run(std::string_view suite, const Options& options) {
  const Runner runner(options);
  std::vector<SuiteResult> out;
  const bool all = suite == "all";
  bool known = all;
  auto want = [&](std::string_view name) {
    const bool hit = all || suite == name;
    known = known || hit;
    return hit;
  };
  if (want("main")) out.push_back(suite_main(runner));
  if (want("cor13")) out.push_back(suite_cor13(runner));
  if (want("cor11")) out.push_back(suite_series(runner, "cor11", &rk_rhs_corollary11));
  if (want("thm7")) out.push_back(suite_series(runner, "thm7", &rk_rhs_partialfraction));
  if (want("psi")) out.push_back(suite_psi(runner));
  if (want("phi")) out.push_back(suite_phi(runner));
  if (want("subscripts")) out.push_back(suite_subscripts(runner));
  if (want("symmetry")) out.push_back(suite_symmetry(runner));
  if (!known) throw Error("unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace durfee::verify
