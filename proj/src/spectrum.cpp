#include "assoc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "assoc/decision.hpp"
#include "assoc/pair_params.hpp"
#include "assoc/terms.hpp"

namespace assoc {

std::string to_string(Backend b) { return b == Backend::Oracle ? "oracle" : "theorem"; }

Backend parse_backend(const std::string& s) {
  if (s == "oracle") return Backend::Oracle;
  if (s == "theorem") return Backend::Theorem;
  throw std::invalid_argument("unknown backend: " + s);
}

namespace {

unsigned worker_count(unsigned jobs, std::size_t work) {
  unsigned w = jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : jobs;
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(work, 1)));
}

// Runs fn(i) for i in [0, count) on `workers` threads, strided.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

SpectrumReport finish(int n, Backend backend, const std::vector<Bracketing>& terms,
                      const std::vector<std::vector<std::size_t>>& groups) {
  SpectrumReport report;
  report.n = n;
  report.backend = backend;
  for (const auto& group : groups) {
    std::vector<std::string> cls;
    cls.reserve(group.size());
    for (auto i : group) cls.push_back(format_bracketing(terms[i]));
    std::sort(cls.begin(), cls.end());
    report.classes.push_back(std::move(cls));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  report.s_n = report.classes.size();
  return report;
}

SpectrumReport oracle_spectrum(const Digraph& g, int n, const SpectrumOptions& options) {
  const auto terms = enumerate_bracketings(n);
  const auto trees = enumerate_dfs_trees(n);
  const OracleOptions oracle{options.max_maps};
  std::vector<HomSignature> sigs(trees.size());
  parallel_for(trees.size(), worker_count(options.jobs, trees.size()),
               [&](std::size_t i) { sigs[i] = hom_signature(g, trees[i], oracle); });

  std::unordered_map<HomSignature, std::size_t, HomSignatureHash> index;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const auto [it, fresh] = index.emplace(std::move(sigs[i]), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return finish(n, Backend::Oracle, terms, groups);
}

SpectrumReport theorem_spectrum(const GraphAnalysis& g, int n, const SpectrumOptions& options) {
  if (n > options.max_theorem_n) {
    throw std::invalid_argument("theorem backend limited to n <= " + std::to_string(options.max_theorem_n));
  }
  const auto terms = enumerate_bracketings(n);
  const auto trees = enumerate_dfs_trees(n);
  std::vector<std::vector<std::size_t>> groups;
  // Each tree joins the first class whose representative it is equivalent to.
  // The representative checks for one tree are independent and run in parallel.
  const unsigned workers = worker_count(options.jobs, 64);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    std::vector<char> match(groups.size(), 0);
    parallel_for(groups.size(), groups.size() < 64 ? 1 : workers, [&](std::size_t c) {
      match[c] = identity_holds(g, pair_params(trees[groups[c].front()], trees[i])) ? 1 : 0;
    });
    const auto hit = std::find(match.begin(), match.end(), 1);
    if (hit == match.end()) {
      groups.push_back({i});
    } else {
      groups[static_cast<std::size_t>(hit - match.begin())].push_back(i);
    }
  }
  return finish(n, Backend::Theorem, terms, groups);
}

}  // namespace

SpectrumReport spectrum(const GraphAnalysis& g, int n, const SpectrumOptions& options) {
  if (n < 1) throw std::invalid_argument("spectrum needs n >= 1");
  if (options.backend == Backend::Oracle) return oracle_spectrum(g.graph(), n, options);
  return theorem_spectrum(g, n, options);
}

SpectrumReport spectrum(const Digraph& g, int n, const SpectrumOptions& options) {
  if (options.backend == Backend::Oracle) {
    if (n < 1) throw std::invalid_argument("spectrum needs n >= 1");
    return oracle_spectrum(g, n, options);
  }
  const GraphAnalysis analysis(g);
  return spectrum(analysis, n, options);
}

bool same_partition(const SpectrumReport& a, const SpectrumReport& b) {
  return a.n == b.n && a.s_n == b.s_n && a.classes == b.classes;
}

std::uint64_t verify_partition(const GraphAnalysis& g, const SpectrumReport& report, std::uint64_t samples,
                               std::uint64_t seed) {
  std::vector<DfsTree> trees;
  std::vector<std::size_t> cls;
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    for (const auto& s : report.classes[c]) {
      trees.push_back(bracketing_to_dfs_tree(parse_bracketing(s)));
      cls.push_back(c);
    }
  }
  if (trees.size() < 2) return 0;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
  std::uint64_t bad = 0;
  for (std::uint64_t k = 0; k < samples; ++k) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    if (i == j) continue;
    if (identity_holds(g, pair_params(trees[i], trees[j])) != (cls[i] == cls[j])) ++bad;
  }
  return bad;
}

// ---------------------------------------------------------------------------

bool in_r(const std::string& w) {
  const std::size_t n = w.size();
  if (n >= 2 && w[0] == '0' && w[1] == '1') return false;
  if (n >= 2 && w[n - 2] == '1' && w[n - 1] == '0') return false;
  return w.find("101") == std::string::npos;
}

namespace {

std::uint64_t r_enumerate(int n) {
  if (n > 30) throw std::invalid_argument("word enumeration limited to n <= 30");
  std::uint64_t count = 0;
  std::string w(static_cast<std::size_t>(n), '0');
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = ((bits >> i) & 1U) != 0 ? '1' : '0';
    if (in_r(w)) ++count;
  }
  return count;
}

}  // namespace

std::uint64_t r_count(int n, RMethod method) {
  if (n < 2) throw std::invalid_argument("R_n needs n >= 2");
  if (method == RMethod::Enumerate || n <= 5) return r_enumerate(n);
  std::vector<std::uint64_t> r(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 2; k <= 5; ++k) r[static_cast<std::size_t>(k)] = r_enumerate(k);
  for (std::size_t k = 6; k <= static_cast<std::size_t>(n); ++k) {
    std::uint64_t s = 0;
    if (__builtin_add_overflow(r[k - 1], r[k - 2], &s) || __builtin_add_overflow(s, r[k - 4], &s)) {
      throw std::overflow_error("|R_n| overflows 64 bits");
    }
    r[k] = s;
  }
  return r[static_cast<std::size_t>(n)];
}

double alpha_closed_form() {
  const double s = std::sqrt(69.0);
  return std::cbrt((25.0 + 3.0 * s) / 2.0) / 3.0 + std::cbrt((25.0 - 3.0 * s) / 2.0) / 3.0 + 2.0 / 3.0;
}

double alpha_estimate(int N) {
  if (N < 10) throw std::invalid_argument("alpha_estimate needs N >= 10");
  return static_cast<double>(r_count(N + 1)) / static_cast<double>(r_count(N));
}

double alpha_root_residual() {
  const double a = alpha_closed_form();
  return std::abs(a * a * a * a - a * a * a - a * a - 1.0);
}

std::uint64_t level_one_class_count(int n) {
  if (n < 2) throw std::invalid_argument("level-one classes need n >= 2");
  std::set<std::vector<int>> sets;
  for_each_dfs_tree(n, [&](const DfsTree& t) {
    std::vector<int> level;
    for (int x = 1; x <= n; ++x) {
      if (t.depth(x) == 1) level.push_back(x);
    }
    sets.insert(std::move(level));
  });
  return sets.size();
}

}  // namespace assoc
