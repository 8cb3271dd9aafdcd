#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "durfee/marked.hpp"
#include "durfee/qseries.hpp"

namespace durfee::verify {

using CorpusSource = std::function<std::vector<KMarkedSymbol>(int n, int k, Flavor)>;

struct Options {
  int n_max = 12;
  int k_max = 3;
  EvalPoint x{{Rational(2), Rational(3)}};
  int order = 12;
  // Workers for independent (n, k) cells; 0 means DURFEE_THREADS or 1.
  unsigned threads = 0;
  // Where k-marked corpora come from. Defaults to enumerate_kmarked.
  CorpusSource corpus;
};

struct SuiteResult {
  std::string name;
  std::string bound;
  long long checked = 0;
  bool passed = true;
  std::string counterexample;  // first failure, empty on pass
};

// Suite names: main, cor13, cor11, thm7, psi, phi, subscripts, symmetry, all.
// Throws durfee::Error for an unknown name.
std::vector<SuiteResult> run(std::string_view suite, const Options& options);

const std::vector<std::string>& suite_names();

// DURFEE_THREADS if set to a positive integer, else 1.
unsigned default_workers();

// Runs body(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace durfee::verify
