// durfee_cli: counting, enumeration, bijections and identity checks for
// k-marked Durfee symbols.
//
// Exit codes: 0 success, 1 an identity check failed, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "durfee/bijections.hpp"
#include "durfee/document.hpp"
#include "durfee/error.hpp"
#include "durfee/marked.hpp"
#include "durfee/qseries.hpp"
#include "durfee/verify.hpp"

namespace {

using durfee::Error;
using nlohmann::json;

constexpr int kUsage = 2;

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw Error(flag + ": malformed integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(flag + ": empty list");
  return out;
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), {}};
}

struct CountArgs {
  int n = 0;
  int k = 1;
  std::string flavor = "ordinary";
  std::string ranks;
};

int cmd_count(const CountArgs& a) {
  const auto flavor = durfee::parse_flavor(a.flavor);
  if (a.k < 1) throw Error("--k must be at least 1");
  if (!a.ranks.empty()) {
    const auto m = parse_int_list(a.ranks, "--ranks");
    if (m.size() != static_cast<std::size_t>(a.k)) throw Error("--ranks needs exactly k entries");
    std::cout << durfee::count_kmarked(m, a.n, flavor) << '\n';
    return 0;
  }
  const auto dist = durfee::rank_distribution(a.n, a.k, flavor);
  durfee::Count total = 0;
  for (int i = 1; i <= a.k; ++i) std::cout << 'm' << i << '\t';
  std::cout << "count\n";
  for (const auto& [m, c] : dist) {
    std::cout << join(m, "\t") << '\t' << c << '\n';
    total += c;
  }
  std::cout << "total\t" << total << '\n';
  return 0;
}

struct EnumerateArgs {
  int n = 0;
  int k = 1;
  std::string flavor = "ordinary";
  bool pretty = false;
};

int cmd_enumerate(const EnumerateArgs& a) {
  if (a.k < 1) throw Error("--k must be at least 1");
  const auto corpus = durfee::enumerate_kmarked(a.n, a.k, durfee::parse_flavor(a.flavor));
  if (a.pretty) {
    for (std::size_t i = 0; i < corpus.size(); ++i) std::cout << (i ? "\n" : "") << durfee::pretty(corpus[i]);
    return 0;
  }
  json out = json::array();
  for (const auto& s : corpus) out.push_back(durfee::to_document(s));
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct MapArgs {
  std::string map;
  std::string input = "-";
  std::string ranks;
  std::size_t p = 0;
  std::string perm;
  std::string t;
  bool bare = false;
};

int cmd_map(const MapArgs& a) {
  json doc;
  try {
    doc = json::parse(read_input(a.input));
  } catch (const json::parse_error& e) {
    throw Error(std::string("input is not JSON: ") + e.what());
  }
  const durfee::KMarkedSymbol in = durfee::from_document(doc);
  json params = json::object();
  durfee::KMarkedSymbol out;
  if (a.map == "phi") {
    out = durfee::as_one_marked(durfee::phi(in));
  } else if (a.map == "phi-inv") {
    if (a.ranks.empty()) throw Error("phi-inv needs --ranks");
    const auto m = parse_int_list(a.ranks, "--ranks");
    params["ranks"] = m;
    out = durfee::phi_inverse(durfee::as_durfee(in), m);
  } else if (a.map == "psi") {
    out = durfee::psi_lift(in);
  } else if (a.map == "psi-inv") {
    if (a.t.empty()) throw Error("psi-inv needs --t");
    const auto t = parse_int_list(a.t, "--t");
    params["t"] = t;
    out = durfee::psi_lift_inverse(in, t);
  } else if (a.map == "theta") {
    if (a.p == 0) throw Error("theta needs --p");
    params["p"] = a.p;
    out = durfee::theta(in, a.p);
  } else if (a.map == "symmetry") {
    if (a.perm.empty()) throw Error("symmetry needs --perm");
    std::vector<std::size_t> perm;
    for (int v : parse_int_list(a.perm, "--perm")) {
      if (v < 1) throw Error("--perm entries must be positive");
      perm.push_back(static_cast<std::size_t>(v));
    }
    params["perm"] = perm;
    out = durfee::symmetry_map(in, perm);
  } else {
    throw Error("unknown map '" + a.map + "'");
  }
  if (a.bare) {
    std::cout << durfee::render(out) << '\n';
    return 0;
  }
  json result;
  result["symbol"] = durfee::to_document(out);
  result["provenance"] = {{"map", a.map},
                          {"params", params},
                          {"ranks_before", durfee::ranks(in)},
                          {"ranks_after", durfee::ranks(out)}};
  std::cout << result.dump() << '\n';
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  int bound = 12;
  int k = 3;
  std::string x = "2,3";
  int order = 12;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a) {
  durfee::verify::Options o;
  o.n_max = a.bound;
  o.k_max = a.k;
  o.x = durfee::EvalPoint::parse(a.x);
  o.order = a.order;
  o.threads = a.threads;
  if (o.n_max < 0 || o.k_max < 1 || o.order < 0) throw Error("bounds must be nonnegative and k at least 1");
  bool ok = true;
  for (const auto& r : durfee::verify::run(a.suite, o)) {
    std::cout << (r.passed ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.bound << '\t' << r.checked << " checks";
    if (!r.passed) std::cout << "\tcounterexample: " << r.counterexample;
    std::cout << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

struct SeriesArgs {
  std::string kind;
  int m = 0;
  std::string x = "2,3";
  int order = 12;
  std::string flavor = "ordinary";
};

int cmd_series(const SeriesArgs& a) {
  durfee::QSeries s(a.order);
  const auto flavor = durfee::parse_flavor(a.flavor);
  if (a.kind == "partition") {
    s = durfee::partition_gf(a.order);
  } else if (a.kind == "rank") {
    s = durfee::rank_gf(a.m, a.order);
  } else if (a.kind == "odd-rank") {
    s = durfee::odd_rank_gf(a.m, a.order);
  } else {
    const auto x = durfee::EvalPoint::parse(a.x);
    const int k = static_cast<int>(x.size());
    if (a.kind == "rk-lhs")
      s = durfee::rk_lhs(x, k, a.order, flavor);
    else if (a.kind == "rk-cor11")
      s = durfee::rk_rhs_corollary11(x, k, a.order, flavor);
    else if (a.kind == "rk-thm7")
      s = durfee::rk_rhs_partialfraction(x, k, a.order, flavor);
    else
      throw Error("unknown series '" + a.kind + "'");
  }
  std::cout << "n\tcoefficient\n";
  for (int n = 0; n <= a.order; ++n) std::cout << n << '\t' << durfee::to_string(s[static_cast<std::size_t>(n)]) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Durfee symbols, k-marked Durfee symbols and their rank identities"};
  app.require_subcommand(1);

  const std::vector<std::string> flavors{"ordinary", "odd"};

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count k-marked symbols of n by rank vector");
  c->add_option("--n", count.n, "Weight")->required()->check(CLI::NonNegativeNumber);
  c->add_option("--k", count.k, "Number of marks")->capture_default_str();
  c->add_option("--flavor", count.flavor)->check(CLI::IsMember(flavors))->capture_default_str();
  c->add_option("--ranks", count.ranks, "Single rank vector m1,...,mk (use --ranks=-1,0 for negatives)");

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "List k-marked symbols of n as JSON documents");
  e->add_option("--n", en.n, "Weight")->required()->check(CLI::NonNegativeNumber);
  e->add_option("--k", en.k, "Number of marks")->capture_default_str();
  e->add_option("--flavor", en.flavor)->check(CLI::IsMember(flavors))->capture_default_str();
  e->add_flag("--pretty", en.pretty, "Two-row display instead of JSON");

  MapArgs map;
  const std::vector<std::string> maps{"phi", "phi-inv", "psi", "psi-inv", "theta", "symmetry"};
  auto* m = app.add_subcommand("map", "Apply a bijection to a symbol document");
  m->add_option("--map", map.map)->required()->check(CLI::IsMember(maps));
  m->add_option("--input", map.input, "Document file, - for stdin")->capture_default_str();
  m->add_option("--ranks", map.ranks, "Target ranks for phi-inv");
  m->add_option("--p", map.p, "Vector index for theta");
  m->add_option("--perm", map.perm, "Permutation of 1..k for symmetry");
  m->add_option("--t", map.t, "Balanced numbers t1,...,tk for psi-inv");
  m->add_flag("--bare", map.bare, "Print only the image document");

  VerifyArgs ver;
  std::vector<std::string> suites = durfee::verify::suite_names();
  suites.push_back("all");
  auto* v = app.add_subcommand("verify", "Run identity and bijection checks");
  v->add_option("--suite", ver.suite)->check(CLI::IsMember(suites))->capture_default_str();
  v->add_option("--bound", ver.bound, "Largest n")->capture_default_str();
  v->add_option("--k", ver.k, "Largest k")->capture_default_str();
  v->add_option("--x", ver.x, "Evaluation point for series suites")->capture_default_str();
  v->add_option("--order", ver.order, "Series truncation order")->capture_default_str();
  v->add_option("--threads", ver.threads, "Worker threads (default DURFEE_THREADS or 1)");

  SeriesArgs ser;
  const std::vector<std::string> kinds{"partition", "rank", "odd-rank", "rk-lhs", "rk-cor11", "rk-thm7"};
  auto* s = app.add_subcommand("series", "Print truncated q-series coefficients");
  s->add_option("--kind", ser.kind)->required()->check(CLI::IsMember(kinds));
  s->add_option("--m", ser.m, "Rank for rank and odd-rank");
  s->add_option("--x", ser.x, "Evaluation point for rk-*")->capture_default_str();
  s->add_option("--order", ser.order)->capture_default_str()->check(CLI::NonNegativeNumber);
  s->add_option("--flavor", ser.flavor)->check(CLI::IsMember(flavors))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*c) return cmd_count(count);
    if (*e) return cmd_enumerate(en);
    if (*m) return cmd_map(map);
    if (*v) return cmd_verify(ver);
    if (*s) return cmd_series(ser);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
