#include "addcomb/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace addcomb {
namespace oracle {

DualFunction fourier_naive(const DenseFunction& f) {
  const FiniteAbelianGroup& g = f.group();
  const std::int64_t n = g.order();
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
  for (std::int64_t c = 0; c < n; ++c) {
    Character gamma = Character::from_dual_index(g, c);
    std::complex<double> acc = 0.0;
    for (std::int64_t x = 0; x < n; ++x) {
      acc += f[x] * std::conj(gamma.eval_index(x));
    }
    out[static_cast<std::size_t>(c)] = acc / static_cast<double>(n);
  }
  return DualFunction(g, std::move(out));
}

double grid_norm_naive(const RealTable& f, int p, int q) {
  const int nx = f.rows;
  const int ny = f.cols;
  std::vector<int> x(static_cast<std::size_t>(p), 0);
  std::vector<int> y(static_cast<std::size_t>(q), 0);
  double total = 0.0;
  std::int64_t tuples = 0;
  while (true) {
    // Full product over the p x q grid of arguments.
    double prod = 1.0;
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        prod *= f.get(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]);
      }
    }
    total += prod;
    ++tuples;
    int pos = 0;
    while (pos < p && ++x[static_cast<std::size_t>(pos)] == nx) {
      x[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == p) {
      pos = 0;
      while (pos < q && ++y[static_cast<std::size_t>(pos)] == ny) {
        y[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == q) break;
    }
  }
  double mean = total / static_cast<double>(tuples);
  return std::pow(std::abs(mean), 1.0 / (static_cast<double>(p) * q));
}

BigInt homomorphism_count_naive(const CountingInstance& inst) {
  const int k = inst.graph.vertex_count;
  std::vector<std::int64_t> x(static_cast<std::size_t>(k), 0);
  BigInt count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
      auto [i, j] = inst.graph.edges[e];
      if (!inst.tables[e].get(static_cast<int>(x[static_cast<std::size_t>(i)]),
                              static_cast<int>(x[static_cast<std::size_t>(j)]))) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int pos = 0;
    while (pos < k &&
           ++x[static_cast<std::size_t>(pos)] == inst.set_sizes[static_cast<std::size_t>(pos)]) {
      x[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return count;
}

BigInt configuration_count_naive(const FiniteAbelianGroup& group,
                                 const std::vector<std::int64_t>& set, int k) {
  if (!group.odd_order()) {
    throw std::invalid_argument("configuration oracle: group order must be odd");
  }
  const std::int64_t n = group.order();
  std::vector<char> in_set(static_cast<std::size_t>(n), 0);
  for (std::int64_t v : set) in_set[static_cast<std::size_t>(v)] = 1;
  std::vector<std::int64_t> halve_table(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) halve_table[static_cast<std::size_t>(x)] = group.halve(x);

  std::vector<std::int64_t> x(static_cast<std::size_t>(k), 0);
  BigInt count = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = i; j < k; ++j) {
        std::int64_t mid = halve_table[static_cast<std::size_t>(
            group.add(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]))];
        if (!in_set[static_cast<std::size_t>(mid)]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
    int pos = 0;
    while (pos < k && ++x[static_cast<std::size_t>(pos)] == n) {
      x[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return count;
}

std::int64_t ordered_midpoint_pairs(const FiniteAbelianGroup& group,
                                    const std::vector<std::int64_t>& set) {
  std::vector<char> in_set(static_cast<std::size_t>(group.order()), 0);
  for (std::int64_t v : set) in_set[static_cast<std::size_t>(v)] = 1;
  // (x, y) with midpoint z in A, found by walking (x, z) and solving y = 2z-x.
  std::int64_t count = 0;
  for (std::int64_t x : set) {
    for (std::int64_t z : set) {
      std::int64_t y = group.sub(group.scale(2, z), x);
      if (in_set[static_cast<std::size_t>(y)]) ++count;
    }
  }
  return count;
}

std::vector<std::int64_t> bohr_members_naive(const std::vector<Character>& frequencies,
                                             double width) {
  if (frequencies.empty()) {
    throw std::invalid_argument("bohr oracle: frequency set must be non-empty");
  }
  const FiniteAbelianGroup& g = frequencies.front().group();
  std::vector<std::int64_t> members;
  for (std::int64_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (const Character& gamma : frequencies) {
      if (gamma.distance_to_one(x) > width) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(x);
  }
  return members;
}

int max_sumfree_naive(const IntegerSet& a) {
  const auto& v = a.values();
  const std::size_t n = v.size();
  if (n > 25) throw std::invalid_argument("sumfree oracle: set too large to enumerate");
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::int64_t> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(v[i]);
    }
    IntegerSet b(subset);
    if (static_cast<int>(b.size()) > best && is_sumfree_wrt(b, a)) {
      best = static_cast<int>(b.size());
    }
  }
  return best;
}

bool freiman_equivalence_naive(const std::vector<std::int64_t>& subset,
                               const std::vector<std::int64_t>& residues,
                               std::int64_t modulus) {
  const std::size_t n = subset.size();
  if (residues.size() != n) {
    throw std::invalid_argument("freiman oracle: arity mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          bool lhs = subset[i] + subset[j] == subset[k] + subset[l];
          bool rhs = (residues[i] + residues[j]) % modulus ==
                     (residues[k] + residues[l]) % modulus;
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace oracle
}  // namespace addcomb
