#include "addcomb/configs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "addcomb/error.hpp"
#include "addcomb/rng.hpp"

namespace addcomb {

MidpointGraph::MidpointGraph(const FiniteAbelianGroup& group,
                             const std::vector<std::int64_t>& set)
    : group_(&group) {
  if (!group.odd_order()) {
    throw PreconditionError("midpoint graph: group order must be odd");
  }
  vertices_ = set;
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  const int n = vertex_count();
  words_ = static_cast<std::size_t>((n + 63) / 64);
  adjacency_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words_, 0));
  std::vector<char> in_set(static_cast<std::size_t>(group.order()), 0);
  for (std::int64_t x : vertices_) in_set[static_cast<std::size_t>(x)] = 1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::int64_t mid = group.halve(group.add(vertices_[static_cast<std::size_t>(u)],
                                               vertices_[static_cast<std::size_t>(v)]));
      if (in_set[static_cast<std::size_t>(mid)]) {
        adjacency_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v >> 6)] |=
            std::uint64_t{1} << (v & 63);
        adjacency_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u >> 6)] |=
            std::uint64_t{1} << (u & 63);
      }
    }
  }
}

bool MidpointGraph::adjacent(int u, int v) const {
  return (adjacency_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v >> 6)] >>
          (v & 63)) &
         1u;
}

namespace {

/// Counts cliques of each size 1..max_size via recursion over candidates
/// restricted to higher-indexed vertices. Throws past node_cap.
class CliqueCounter {
 public:
  CliqueCounter(const MidpointGraph& graph, int max_size, std::int64_t node_cap)
      : graph_(graph),
        max_size_(max_size),
        node_cap_(node_cap),
        counts_(static_cast<std::size_t>(max_size), BigInt(0)) {}

  std::vector<BigInt> count() {
    const int n = graph_.vertex_count();
    const std::size_t words = graph_.words_per_row();
    std::vector<std::uint64_t> all(words, 0);
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
    descend(all, 0, -1);
    return counts_;
  }

 private:
  void descend(const std::vector<std::uint64_t>& candidates, int depth, int last) {
    if (depth >= max_size_) return;
    const std::size_t words = graph_.words_per_row();
    std::size_t start_word = last < 0 ? 0 : static_cast<std::size_t>((last + 1) >> 6);
    for (std::size_t w = start_word; w < words; ++w) {
      std::uint64_t bits = candidates[w];
      if (last >= 0 && w == static_cast<std::size_t>(last >> 6)) {
        int shift = (last & 63) + 1;
        bits &= shift == 64 ? 0 : ~std::uint64_t{0} << shift;
      }
      while (bits) {
        int v = static_cast<int>(w << 6) + __builtin_ctzll(bits);
        bits &= bits - 1;
        if (++nodes_ > node_cap_) {
          throw ResourceLimitError("clique counting: node budget exhausted");
        }
        ++counts_[static_cast<std::size_t>(depth)];
        if (depth + 1 < max_size_) {
          std::vector<std::uint64_t> next(words);
          const auto& adj = graph_.adjacency_words(v);
          for (std::size_t i = 0; i < words; ++i) next[i] = candidates[i] & adj[i];
          descend(next, depth + 1, v);
        }
      }
    }
  }

  const MidpointGraph& graph_;
  int max_size_;
  std::int64_t node_cap_;
  std::int64_t nodes_ = 0;
  std::vector<BigInt> counts_;
};

/// Number of surjections from [k] onto a fixed c-element set:
/// sum_{i=0..c} (-1)^i C(c,i) (c-i)^k.
BigInt surjection_count(int k, int c) {
  BigInt total = 0;
  BigInt binom = 1;  // C(c, i)
  for (int i = 0; i <= c; ++i) {
    BigInt term = binom * big_pow(BigInt(c - i), static_cast<unsigned>(k));
    total += (i % 2 == 0) ? term : -term;
    binom = binom * (c - i) / (i + 1);
  }
  return total;
}

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

ConfigurationCount count_k_configurations(const FiniteAbelianGroup& group,
                                          const std::vector<std::int64_t>& set, int k,
                                          std::int64_t node_cap) {
  if (k < 2) throw std::invalid_argument("configuration count: k must be >= 2");
  MidpointGraph graph(group, set);
  CliqueCounter counter(graph, k, node_cap);
  std::vector<BigInt> cliques = counter.count();
  ConfigurationCount result;
  result.cliques_by_size = cliques;
  result.ordered_count = 0;
  for (int c = 1; c <= k; ++c) {
    result.ordered_count +=
        cliques[static_cast<std::size_t>(c - 1)] * surjection_count(k, c);
  }
  result.nondegenerate_count =
      cliques[static_cast<std::size_t>(k - 1)] * factorial(k);
  result.probability = BigRational(
      result.ordered_count, big_pow(BigInt(group.order()), static_cast<unsigned>(k)));
  return result;
}

namespace {

bool find_clique(const MidpointGraph& graph, std::vector<int>& chosen,
                 const std::vector<std::uint64_t>& candidates, int need,
                 std::int64_t& nodes, std::int64_t node_cap) {
  if (need == 0) return true;
  const std::size_t words = graph.words_per_row();
  int last = chosen.empty() ? -1 : chosen.back();
  std::size_t start_word = last < 0 ? 0 : static_cast<std::size_t>((last + 1) >> 6);
  for (std::size_t w = start_word; w < words; ++w) {
    std::uint64_t bits = candidates[w];
    if (last >= 0 && w == static_cast<std::size_t>(last >> 6)) {
      int shift = (last & 63) + 1;
      bits &= shift == 64 ? 0 : ~std::uint64_t{0} << shift;
    }
    while (bits) {
      int v = static_cast<int>(w << 6) + __builtin_ctzll(bits);
      bits &= bits - 1;
      if (++nodes > node_cap) {
        throw ResourceLimitError("configuration search: node budget exhausted");
      }
      chosen.push_back(v);
      std::vector<std::uint64_t> next(words);
      const auto& adj = graph.adjacency_words(v);
      for (std::size_t i = 0; i < words; ++i) next[i] = candidates[i] & adj[i];
      if (find_clique(graph, chosen, next, need - 1, nodes, node_cap)) return true;
      chosen.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::int64_t>> find_nondegenerate_configuration(
    const FiniteAbelianGroup& group, const std::vector<std::int64_t>& set, int k,
    std::int64_t node_cap) {
  if (k < 2) throw std::invalid_argument("configuration search: k must be >= 2");
  MidpointGraph graph(group, set);
  if (graph.vertex_count() < k) return std::nullopt;
  std::vector<int> chosen;
  const std::size_t words = graph.words_per_row();
  std::vector<std::uint64_t> all(words, 0);
  for (int v = 0; v < graph.vertex_count(); ++v) {
    all[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
  }
  std::int64_t nodes = 0;
  if (!find_clique(graph, chosen, all, k, nodes, node_cap)) return std::nullopt;
  std::vector<std::int64_t> generators;
  generators.reserve(chosen.size());
  for (int v : chosen) generators.push_back(graph.vertex_element(v));
  return generators;
}

DegenerateBoundReport degenerate_bound_check(const FiniteAbelianGroup& group,
                                             const std::vector<std::int64_t>& set,
                                             int k) {
  if (find_nondegenerate_configuration(group, set, k).has_value()) {
    throw PreconditionError(
        "degenerate bound: set contains a non-degenerate k-configuration");
  }
  DegenerateBoundReport report;
  report.probability = count_k_configurations(group, set, k).probability;
  report.bound = BigRational(BigInt(static_cast<std::int64_t>(k) * (k - 1) / 2),
                             BigInt(group.order()));
  report.pass = report.probability <= report.bound;
  return report;
}

bool is_threeap_free(const std::vector<std::int64_t>& set) {
  std::set<std::int64_t> lookup(set.begin(), set.end());
  std::vector<std::int64_t> sorted(lookup.begin(), lookup.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      std::int64_t sum = sorted[i] + sorted[j];
      if (sum % 2 == 0 && lookup.count(sum / 2)) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> behrend_set(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("behrend: N must be >= 1");
  // Digit vectors a in [0, d)^dim over base b = 2d-1 have carry-free pairwise
  // sums, so fixing |a|^2 = r kills nontrivial 3APs by the parallelogram law.
  // Scan (d, dim) with enumeration cost d^dim <= 4N + 16, keep the best r.
  std::vector<std::int64_t> best = {1};
  const double cost_cap = 4.0 * static_cast<double>(n) + 16.0;
  for (std::int64_t dim = 1; dim <= 40; ++dim) {
    if (std::pow(2.0, static_cast<double>(dim)) > cost_cap) break;
    for (std::int64_t d = 2;; ++d) {
      double cost = std::pow(static_cast<double>(d), static_cast<double>(dim));
      if (cost > cost_cap) break;
      const std::int64_t b = 2 * d - 1;
      // Group enumerated values by the digit-norm r; values are 1 + sum a_i b^i.
      std::map<std::int64_t, std::vector<std::int64_t>> spheres;
      std::vector<std::int64_t> digits(static_cast<std::size_t>(dim), 0);
      while (true) {
        std::int64_t value = 0, norm = 0, scale = 1;
        bool too_big = false;
        for (std::int64_t i = 0; i < dim; ++i) {
          std::int64_t a = digits[static_cast<std::size_t>(i)];
          norm += a * a;
          if (a != 0) {
            if (scale > n) {
              too_big = true;
            } else {
              value += a * scale;
            }
          }
          if (scale <= n) scale *= b;
        }
        if (!too_big && value + 1 <= n) spheres[norm].push_back(value + 1);
        std::int64_t pos = 0;
        while (pos < dim) {
          if (++digits[static_cast<std::size_t>(pos)] < d) break;
          digits[static_cast<std::size_t>(pos)] = 0;
          ++pos;
        }
        if (pos == dim) break;
      }
      for (auto& [norm, values] : spheres) {
        if (values.size() > best.size()) best = values;
      }
    }
  }
  std::sort(best.begin(), best.end());
  if (!is_threeap_free(best)) {
    throw InternalAnomaly("behrend: construction produced a 3AP, which is impossible");
  }
  return best;
}

std::vector<std::int64_t> embed_interval(const std::vector<std::int64_t>& set,
                                         std::int64_t n) {
  const std::int64_t modulus = 2 * n + 1;
  std::set<std::int64_t> image;
  for (std::int64_t a : set) {
    if (a < 1 || a > n) {
      throw std::invalid_argument("embed interval: set must lie in [1, N]");
    }
    image.insert(a % modulus);
  }
  return {image.begin(), image.end()};
}

bool integers_contain_nondegenerate_configuration(const std::vector<std::int64_t>& set,
                                                  int k) {
  std::vector<std::int64_t> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::set<std::int64_t> lookup(sorted.begin(), sorted.end());
  const int n = static_cast<int>(sorted.size());
  if (n < k) return false;
  // Backtracking over increasing index choices; pairwise means must be
  // integers lying in the set.
  std::vector<int> chosen;
  auto compatible = [&](int candidate) {
    for (int c : chosen) {
      std::int64_t sum = sorted[static_cast<std::size_t>(c)] +
                         sorted[static_cast<std::size_t>(candidate)];
      if (sum % 2 != 0 || !lookup.count(sum / 2)) return false;
    }
    return true;
  };
  auto descend = [&](auto&& self, int start, int need) -> bool {
    if (need == 0) return true;
    for (int v = start; v <= n - need; ++v) {
      if (!compatible(v)) continue;
      chosen.push_back(v);
      if (self(self, v + 1, need - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return descend(descend, 0, k);
}

EmbeddingAgreement embedding_configuration_agreement(const std::vector<std::int64_t>& set,
                                                     std::int64_t n, int k) {
  EmbeddingAgreement result;
  result.integer_side = integers_contain_nondegenerate_configuration(set, k);
  FiniteAbelianGroup cyclic({2 * n + 1});
  std::vector<std::int64_t> image = embed_interval(set, n);
  result.group_side = find_nondegenerate_configuration(cyclic, image, k).has_value();
  result.agree = result.integer_side == result.group_side;
  return result;
}

std::vector<std::int64_t> random_subset(const FiniteAbelianGroup& group, double density,
                                        std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("random subset: density must lie in [0, 1]");
  }
  DetRng rng(seed);
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < group.order(); ++x) {
    if (rng.bernoulli(density)) out.push_back(x);
  }
  return out;
}

std::vector<std::int64_t> random_subset(std::int64_t n, double density,
                                        std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("random subset: density must lie in [0, 1]");
  }
  DetRng rng(seed);
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1; x <= n; ++x) {
    if (rng.bernoulli(density)) out.push_back(x);
  }
  return out;
}

}  // namespace addcomb
