#include "assoc/oracle.hpp"

#include <bit>
#include <cstdlib>
#include <functional>
#include <string>

#include "assoc/errors.hpp"

namespace assoc {

namespace {

// |V|^n, or nullopt if it exceeds the budget.
std::optional<std::uint64_t> bounded_power(std::uint64_t base, int n, std::uint64_t budget) {
  std::uint64_t result = 1;
  for (int i = 0; i < n; ++i) {
    if (base != 0 && result > budget / base) return std::nullopt;
    result *= base;
  }
  if (result > budget) return std::nullopt;
  return result;
}

std::uint64_t checked_universe(std::uint64_t base, int n, std::uint64_t budget) {
  const auto size = bounded_power(base, n, budget);
  if (!size) {
    throw BudgetExceeded("enumerating " + std::to_string(base) + "^" + std::to_string(n) +
                         " maps exceeds the budget of " + std::to_string(budget));
  }
  return *size;
}

AlgebraElement eval_code(const Digraph& g, std::span<const int> code, std::size_t& pos,
                         std::span<const AlgebraElement> assignment) {
  const int c = code[pos++];
  if (c != 0) return assignment[static_cast<std::size_t>(c - 1)];
  const AlgebraElement a = eval_code(g, code, pos, assignment);
  const AlgebraElement b = eval_code(g, code, pos, assignment);
  return multiply(g, a, b);
}

}  // namespace

AlgebraElement multiply(const Digraph& g, AlgebraElement a, AlgebraElement b) {
  if (a && b && g.has_edge(*a, *b)) return a;
  return std::nullopt;
}

AlgebraElement eval_term(const Digraph& g, const Bracketing& t, std::span<const AlgebraElement> assignment) {
  if (assignment.size() < static_cast<std::size_t>(t.size())) throw std::invalid_argument("assignment is not total");
  std::size_t pos = 0;
  return eval_code(g, t.code(), pos, assignment);
}

bool is_homomorphism(const DfsTree& tree, const Digraph& g, std::span<const Vertex> phi) {
  if (phi.size() < static_cast<std::size_t>(tree.size())) throw std::invalid_argument("map is not total");
  for (int x = 2; x <= tree.size(); ++x) {
    if (!g.has_edge(phi[static_cast<std::size_t>(tree.parent(x) - 1)], phi[static_cast<std::size_t>(x - 1)])) {
      return false;
    }
  }
  return true;
}

std::uint64_t default_max_maps() {
  if (const char* env = std::getenv("ASSOC_SPECTRA_MAX_MAPS")) {
    try {
      const auto value = std::stoull(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return OracleOptions{}.max_maps;
}

// ---------------------------------------------------------------------------

HomSignature::HomSignature(std::uint64_t universe, int vertices, int n)
    : universe_(universe), vertices_(vertices), n_(n), words_((universe + 63) / 64, 0) {}

std::uint64_t HomSignature::count() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::vector<std::uint64_t> HomSignature::homomorphisms() const {
  std::vector<std::uint64_t> codes;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      codes.push_back(i * 64 + static_cast<std::uint64_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return codes;
}

std::vector<Vertex> HomSignature::decode(std::uint64_t code) const {
  std::vector<Vertex> phi(static_cast<std::size_t>(n_), 0);
  for (int i = n_ - 1; i >= 0; --i) {
    phi[static_cast<std::size_t>(i)] = static_cast<Vertex>(code % static_cast<std::uint64_t>(vertices_));
    code /= static_cast<std::uint64_t>(vertices_);
  }
  return phi;
}

std::size_t HomSignature::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

HomSignature hom_signature(const Digraph& g, const DfsTree& tree, const OracleOptions& options) {
  const int n = tree.size();
  const auto base = static_cast<std::uint64_t>(g.size());
  const std::uint64_t universe = checked_universe(base, n, options.max_maps);
  HomSignature sig(universe, g.size(), n);
  if (universe == 0) return sig;

  // Labels are assigned in order 1..n; each label's image must be an
  // out-neighbour of its parent's image, so only homomorphisms are visited.
  std::vector<Vertex> phi(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, std::uint64_t)> extend = [&](int x, std::uint64_t code) {
    if (x > n) {
      sig.insert(code);
      return;
    }
    for (Vertex w : g.out(phi[static_cast<std::size_t>(tree.parent(x))])) {
      phi[static_cast<std::size_t>(x)] = w;
      extend(x + 1, code * base + static_cast<std::uint64_t>(w));
    }
  };
  for (Vertex v = 0; v < g.size(); ++v) {
    phi[1] = v;
    extend(2, static_cast<std::uint64_t>(v));
  }
  return sig;
}

HomSignature hom_signature(const Digraph& g, const Bracketing& t, const OracleOptions& options) {
  return hom_signature(g, bracketing_to_dfs_tree(t), options);
}

bool decide_identity_oracle(const Digraph& g, const Bracketing& t, const Bracketing& u, const OracleOptions& options) {
  if (t.size() != u.size()) throw std::invalid_argument("bracketings have different sizes");
  if (t == u) return true;
  return hom_signature(g, t, options) == hom_signature(g, u, options);
}

bool decide_identity_by_evaluation(const Digraph& g, const Bracketing& t, const Bracketing& u,
                                   const OracleOptions& options) {
  if (t.size() != u.size()) throw std::invalid_argument("bracketings have different sizes");
  const int n = t.size();
  const auto base = static_cast<std::uint64_t>(g.size()) + 1;
  const std::uint64_t total = checked_universe(base, n, options.max_maps);
  std::vector<AlgebraElement> assignment(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int i = n - 1; i >= 0; --i) {
      const auto digit = rest % base;
      rest /= base;
      assignment[static_cast<std::size_t>(i)] =
          digit == static_cast<std::uint64_t>(g.size()) ? AlgebraElement{} : AlgebraElement{static_cast<Vertex>(digit)};
    }
    if (eval_term(g, t, assignment) != eval_term(g, u, assignment)) return false;
  }
  return true;
}

}  // namespace assoc
