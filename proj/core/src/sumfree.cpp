#include "addcomb/sumfree.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "addcomb/error.hpp"
#include "addcomb/group.hpp"
#include "addcomb/rng.hpp"

namespace addcomb {

IntegerSet::IntegerSet(std::vector<std::int64_t> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool IntegerSet::contains(std::int64_t x) const {
  return std::binary_search(values_.begin(), values_.end(), x);
}

bool is_sumfree_wrt(const IntegerSet& b, const IntegerSet& a) {
  const auto& v = b.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (a.contains(v[i] + v[j])) return false;
    }
  }
  return true;
}

namespace {

/// Conflict graph adjacency masks: vertex i conflicts with j when
/// a_i + a_j lies in A. Only defined for |A| <= 64.
std::vector<std::uint64_t> conflict_masks(const IntegerSet& a) {
  const auto& v = a.values();
  const std::size_t n = v.size();
  std::vector<std::uint64_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a.contains(v[i] + v[j])) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return adj;
}

/// Max independent set by branch and bound on 64-bit candidate masks.
/// Branch rule: pick the candidate vertex of maximum candidate-degree;
/// either it joins the set (dropping its neighbourhood) or it does not.
class MisSolver {
 public:
  explicit MisSolver(const std::vector<std::uint64_t>& adj)
      : adj_(adj), n_(adj.size()) {}

  /// Stops early once `target` is reached when target > 0.
  std::uint64_t solve(std::uint64_t initial_best_mask, int target) {
    best_mask_ = initial_best_mask;
    best_ = __builtin_popcountll(initial_best_mask);
    target_ = target;
    std::uint64_t all = n_ == 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << n_) - 1;
    descend(all, 0, 0);
    return best_mask_;
  }

 private:
  void descend(std::uint64_t candidates, std::uint64_t chosen, int count) {
    if (target_ > 0 && best_ >= target_) return;
    if (count + __builtin_popcountll(candidates) <= best_) return;
    if (candidates == 0) {
      if (count > best_) {
        best_ = count;
        best_mask_ = chosen;
      }
      return;
    }
    // Highest-degree candidate within the candidate subgraph.
    std::uint64_t bits = candidates;
    int pick = -1, pick_degree = -1;
    while (bits) {
      int v = __builtin_ctzll(bits);
      bits &= bits - 1;
      int deg = __builtin_popcountll(adj_[static_cast<std::size_t>(v)] & candidates);
      if (deg > pick_degree) {
        pick_degree = deg;
        pick = v;
      }
    }
    std::uint64_t vbit = std::uint64_t{1} << pick;
    // Include pick.
    descend(candidates & ~(adj_[static_cast<std::size_t>(pick)] | vbit), chosen | vbit,
            count + 1);
    // Exclude pick.
    descend(candidates & ~vbit, chosen, count);
  }

  const std::vector<std::uint64_t>& adj_;
  std::size_t n_;
  std::uint64_t best_mask_ = 0;
  int best_ = 0;
  int target_ = 0;
};

std::uint64_t greedy_independent_mask(const std::vector<std::uint64_t>& adj) {
  // Repeatedly take the lowest-degree remaining vertex.
  const std::size_t n = adj.size();
  std::uint64_t remaining =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t chosen = 0;
  while (remaining) {
    std::uint64_t bits = remaining;
    int pick = -1, pick_degree = 65;
    while (bits) {
      int v = __builtin_ctzll(bits);
      bits &= bits - 1;
      int deg = __builtin_popcountll(adj[static_cast<std::size_t>(v)] & remaining);
      if (deg < pick_degree) {
        pick_degree = deg;
        pick = v;
      }
    }
    std::uint64_t vbit = std::uint64_t{1} << pick;
    chosen |= vbit;
    remaining &= ~(adj[static_cast<std::size_t>(pick)] | vbit);
  }
  return chosen;
}

IntegerSet mask_to_set(const IntegerSet& a, std::uint64_t mask) {
  std::vector<std::int64_t> out;
  while (mask) {
    int v = __builtin_ctzll(mask);
    mask &= mask - 1;
    out.push_back(a.values()[static_cast<std::size_t>(v)]);
  }
  return IntegerSet(std::move(out));
}

}  // namespace

ExactMResult exact_M(const IntegerSet& a, std::size_t size_cap) {
  if (a.empty()) throw std::invalid_argument("exact M: set must be non-empty");
  if (a.size() > size_cap || a.size() > 64) {
    throw ResourceLimitError("exact M: set larger than the branch-and-bound cap");
  }
  std::vector<std::uint64_t> adj = conflict_masks(a);
  MisSolver solver(adj);
  std::uint64_t best = solver.solve(greedy_independent_mask(adj), 0);
  ExactMResult result;
  result.witness = mask_to_set(a, best);
  result.value = static_cast<int>(result.witness.size());
  return result;
}

IntegerSet greedy_sumfree(const IntegerSet& a) {
  if (a.empty()) throw std::invalid_argument("greedy sumfree: set must be non-empty");
  std::vector<std::int64_t> pool = a.values();  // ascending
  std::vector<std::int64_t> picked;
  while (!pool.empty()) {
    std::int64_t x = pool.back();
    pool.pop_back();
    picked.push_back(x);
    std::vector<std::int64_t> survivors;
    survivors.reserve(pool.size());
    for (std::int64_t y : pool) {
      if (!a.contains(x + y)) survivors.push_back(y);
    }
    pool.swap(survivors);
  }
  return IntegerSet(std::move(picked));
}

std::int64_t sumset_size(const IntegerSet& a) {
  std::set<std::int64_t> sums;
  const auto& v = a.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) sums.insert(v[i] + v[j]);
  }
  return static_cast<std::int64_t>(sums.size());
}

IntegerSet two_a_minus_two_a(const IntegerSet& a) {
  std::set<std::int64_t> two_a;
  const auto& v = a.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) two_a.insert(v[i] + v[j]);
  }
  std::set<std::int64_t> diff;
  for (std::int64_t s : two_a) {
    for (std::int64_t t : two_a) diff.insert(s - t);
  }
  return IntegerSet(std::vector<std::int64_t>(diff.begin(), diff.end()));
}

DoublingStats doubling_stats(const IntegerSet& a) {
  DoublingStats stats;
  stats.size = static_cast<std::int64_t>(a.size());
  if (a.empty()) return stats;
  stats.sumset_size = sumset_size(a);
  stats.double_difference = static_cast<std::int64_t>(two_a_minus_two_a(a).size());
  stats.sumset_ratio =
      static_cast<double>(stats.sumset_size) / static_cast<double>(stats.size);
  stats.double_difference_ratio =
      static_cast<double>(stats.double_difference) / static_cast<double>(stats.size);
  return stats;
}

namespace {

/// Exhaustive check of the sum-equality equivalence
/// a1+a2 = a1'+a2' <=> phi(a1)+phi(a2) = phi(a1')+phi(a2') over all
/// quadruples of the subset, with phi(a) = lambda * a mod N.
bool freiman_verifies(const std::vector<std::int64_t>& subset, std::int64_t lambda,
                      std::int64_t modulus, std::int64_t& checked) {
  const std::size_t n = subset.size();
  std::vector<std::int64_t> residue(n);
  for (std::size_t i = 0; i < n; ++i) {
    residue[i] = static_cast<std::int64_t>(
        (static_cast<__int128>(lambda) * subset[i]) % modulus);
    if (residue[i] < 0) residue[i] += modulus;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          ++checked;
          bool integer_eq = subset[i] + subset[j] == subset[k] + subset[l];
          bool residue_eq =
              (residue[i] + residue[j]) % modulus == (residue[k] + residue[l]) % modulus;
          if (integer_eq != residue_eq) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

EmbeddingSearch ruzsa_embed(const IntegerSet& a, std::int64_t trials, std::uint64_t seed,
                            std::optional<std::int64_t> modulus_override,
                            std::int64_t quadruple_cap) {
  if (a.empty()) throw std::invalid_argument("ruzsa embed: set must be non-empty");
  std::int64_t modulus;
  if (modulus_override.has_value()) {
    modulus = *modulus_override;
    if (modulus % 2 == 0 || modulus < 3) {
      throw std::invalid_argument("ruzsa embed: modulus override must be odd and >= 3");
    }
  } else {
    std::int64_t needed = 4 * static_cast<std::int64_t>(two_a_minus_two_a(a).size());
    modulus = needed + 1;
    if (modulus % 2 == 0) ++modulus;
  }
  std::int64_t quad_cost = static_cast<std::int64_t>(a.size()) * a.size() *
                           a.size() * a.size();
  if (quad_cost > quadruple_cap) {
    throw ResourceLimitError("ruzsa embed: quadruple verification exceeds cap");
  }

  DetRng rng(seed);
  EmbeddingSearch search;
  const std::int64_t half = modulus / 2 + 1;  // window length ceil(N/2)
  for (std::int64_t trial = 1; trial <= trials; ++trial) {
    std::int64_t lambda =
        1 + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(modulus - 1)));
    if (gcd64(lambda, modulus) != 1) continue;
    std::int64_t offset =
        static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(modulus)));
    // Split residues by a half-length window starting at the offset and take
    // the fuller side; pigeonhole makes it at least half of A.
    std::vector<std::int64_t> inside, outside;
    for (std::int64_t x : a.values()) {
      std::int64_t r = static_cast<std::int64_t>(
          (static_cast<__int128>(lambda) * x) % modulus);
      if (r < 0) r += modulus;
      std::int64_t shifted = r - offset;
      if (shifted < 0) shifted += modulus;
      (shifted < half ? inside : outside).push_back(x);
    }
    std::vector<std::int64_t>& majority = inside.size() >= outside.size() ? inside : outside;
    if (2 * majority.size() < a.size()) continue;
    search.best_subset_size = std::max(search.best_subset_size, majority.size());

    std::int64_t checked = 0;
    if (!freiman_verifies(majority, lambda, modulus, checked)) continue;

    EmbeddingResult result;
    result.subset = IntegerSet(majority);
    result.modulus = modulus;
    result.multiplier = lambda;
    result.quadruples_checked = checked;
    result.trials_used = trial;
    for (std::int64_t x : result.subset.values()) {
      std::int64_t r = static_cast<std::int64_t>(
          (static_cast<__int128>(lambda) * x) % modulus);
      if (r < 0) r += modulus;
      result.map.push_back({x, r});
    }
    search.accepted = true;
    search.result = std::move(result);
    return search;
  }
  return search;
}

DisjointDilateReport verify_disjoint_dilate(const IntegerSet& x_prime,
                                            const IntegerSet& x, const IntegerSet& y,
                                            double size_ratio_floor,
                                            double doubling_cap) {
  for (std::int64_t v : x_prime.values()) {
    if (!x.contains(v)) {
      throw PreconditionError("disjoint dilate: X' must be contained in X");
    }
  }
  for (std::int64_t v : x.values()) {
    if (!y.contains(v)) {
      throw PreconditionError("disjoint dilate: X must be contained in Y");
    }
  }
  DisjointDilateReport report;
  report.size_ratio = x.empty() ? 0.0
                                : static_cast<double>(x_prime.size()) /
                                      static_cast<double>(x.size());
  report.size_pass = report.size_ratio >= size_ratio_floor && !x_prime.empty();
  if (!x_prime.empty()) {
    report.doubling_ratio = static_cast<double>(sumset_size(x_prime)) /
                            static_cast<double>(x_prime.size());
    report.doubling_pass = report.doubling_ratio <= doubling_cap;
  } else {
    report.doubling_pass = true;  // vacuous
  }
  report.disjoint_pass = true;
  for (std::int64_t v : x_prime.values()) {
    if (y.contains(2 * v)) {
      report.disjoint_pass = false;
      break;
    }
  }
  return report;
}

std::optional<IntegerSet> pipeline_extract(const IntegerSet& x, const IntegerSet& y,
                                           int k, std::size_t size_cap) {
  for (std::int64_t v : x.values()) {
    if (!y.contains(v)) {
      throw PreconditionError("pipeline extract: X must be contained in Y");
    }
  }
  if (k < 1) throw std::invalid_argument("pipeline extract: k must be >= 1");
  if (x.size() > size_cap || x.size() > 64) {
    throw ResourceLimitError("pipeline extract: set larger than the search cap");
  }
  if (static_cast<std::size_t>(k) > x.size()) return std::nullopt;
  // Conflict graph of X with respect to Y.
  const auto& v = x.values();
  std::vector<std::uint64_t> adj(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (y.contains(v[i] + v[j])) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
    }
  }
  MisSolver solver(adj);
  std::uint64_t best = solver.solve(0, k);
  if (__builtin_popcountll(best) < k) return std::nullopt;
  // Trim to exactly k elements (any subset of an independent set works).
  std::vector<std::int64_t> out;
  std::uint64_t mask = best;
  while (mask && static_cast<int>(out.size()) < k) {
    int b = __builtin_ctzll(mask);
    mask &= mask - 1;
    out.push_back(v[static_cast<std::size_t>(b)]);
  }
  return IntegerSet(std::move(out));
}

MinMResult min_M_over_universe(int n, int m, std::int64_t enumeration_cap) {
  if (n < 1 || m < n) throw std::invalid_argument("min M: need 1 <= n <= m");
  // C(m, n) guard.
  double log_count = 0.0;
  for (int i = 0; i < n; ++i) {
    log_count += std::log2(static_cast<double>(m - i) / static_cast<double>(i + 1));
  }
  if (log_count > std::log2(static_cast<double>(enumeration_cap))) {
    throw ResourceLimitError("min M: C(m, n) exceeds the enumeration cap");
  }
  MinMResult result;
  result.value = n + 1;  // sentinel above any possible M
  std::vector<int> choice(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) choice[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    std::vector<std::int64_t> values(choice.begin(), choice.end());
    IntegerSet candidate(std::move(values));
    ++result.sets_examined;
    ExactMResult m_res = exact_M(candidate);
    if (m_res.value < result.value) {
      result.value = m_res.value;
      result.argmin = candidate;
    }
    // Next n-combination of [1..m].
    int pos = n - 1;
    while (pos >= 0 && choice[static_cast<std::size_t>(pos)] == m - (n - 1 - pos)) --pos;
    if (pos < 0) break;
    ++choice[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < n; ++q) {
      choice[static_cast<std::size_t>(q)] = choice[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return result;
}

}  // namespace addcomb
