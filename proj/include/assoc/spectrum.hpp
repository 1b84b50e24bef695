#pragma once

// Associative spectra of graph algebras, and the word sequence R_n that
// bounds the exponential case from below.

#include <cstdint>
#include <string>
#include <vector>

#include "assoc/digraph.hpp"
#include "assoc/oracle.hpp"

namespace assoc {

enum class Backend { Oracle, Theorem };

std::string to_string(Backend b);
Backend parse_backend(const std::string& s);

struct SpectrumOptions {
  Backend backend = Backend::Oracle;
  std::uint64_t max_maps = OracleOptions{}.max_maps;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 1;
  /// Largest n the theorem backend accepts.
  int max_theorem_n = 12;
};

struct SpectrumReport {
  int n = 0;
  std::uint64_t s_n = 0;
  /// Canonical bracketing strings; each class sorted, classes ordered by
  /// their least member.
  std::vector<std::vector<std::string>> classes;
  Backend backend = Backend::Oracle;

  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

/// Fine spectrum of G on B_n. Throws BudgetExceeded (oracle) or
/// std::invalid_argument (theorem, n above max_theorem_n).
SpectrumReport spectrum(const Digraph& g, int n, const SpectrumOptions& options = {});
SpectrumReport spectrum(const GraphAnalysis& g, int n, const SpectrumOptions& options = {});

/// Same partition, ignoring the backend tag.
bool same_partition(const SpectrumReport& a, const SpectrumReport& b);

/// Re-decides up to `samples` pairs (deterministic seed) and checks that
/// two bracketings share a class exactly when the identity holds.
/// Returns the number of disagreements.
std::uint64_t verify_partition(const GraphAnalysis& g, const SpectrumReport& report, std::uint64_t samples,
                               std::uint64_t seed = 1);

// ---------------------------------------------------------------------------

/// Binary words of length n with no prefix 01, no suffix 10 and no factor 101.
bool in_r(const std::string& word);

enum class RMethod { Enumerate, Recurrence };

/// |R_n| for n >= 2. Enumeration is limited to n <= 30.
std::uint64_t r_count(int n, RMethod method = RMethod::Recurrence);

/// Positive root of x^4 - x^3 - x^2 - 1 from its radical form.
double alpha_closed_form();
/// |R_{N+1}| / |R_N|, N >= 10.
double alpha_estimate(int N);
/// |p(alpha_closed_form())| for p(x) = x^4 - x^3 - x^2 - 1.
double alpha_root_residual();

/// Number of distinct sets of depth-one labels over DFS trees of size n.
std::uint64_t level_one_class_count(int n);

}  // namespace assoc
