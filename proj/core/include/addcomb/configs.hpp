#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addcomb/group.hpp"
#include "addcomb/rational.hpp"

namespace addcomb {

/// Graph on the elements of A (odd-order group) with x ~ y when the midpoint
/// (x+y)/2 lies in A. Every vertex has an implicit loop since (x+x)/2 = x.
/// Adjacency is stored as bitsets over the vertex list.
class MidpointGraph {
 public:
  MidpointGraph(const FiniteAbelianGroup& group, const std::vector<std::int64_t>& set);

  const FiniteAbelianGroup& group() const { return *group_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  std::int64_t vertex_element(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const std::vector<std::int64_t>& vertices() const { return vertices_; }
  bool adjacent(int u, int v) const;
  const std::vector<std::uint64_t>& adjacency_words(int v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  std::size_t words_per_row() const { return words_; }

 private:
  const FiniteAbelianGroup* group_;
  std::vector<std::int64_t> vertices_;  // sorted element indices
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> adjacency_;
};

struct ConfigurationCount {
  BigInt ordered_count;                 // tuples in G^k meeting every midpoint test
  BigRational probability;              // ordered_count / |G|^k
  BigInt nondegenerate_count;           // tuples with pairwise distinct entries
  std::vector<BigInt> cliques_by_size;  // cliques_by_size[c-1] = #cliques of size c
};

/// Exact count of ordered tuples (x_1..x_k) in G^k with (x_i+x_j)/2 in A for
/// all 1 <= i <= j <= k. Diagonal pairs force every x_i into A, so the count
/// equals the number of ordered k-tuples of midpoint-graph vertices that are
/// pairwise adjacent or equal; cliques are counted by size and combined with
/// surjection numbers. node_cap bounds the clique recursion.
ConfigurationCount count_k_configurations(const FiniteAbelianGroup& group,
                                          const std::vector<std::int64_t>& set, int k,
                                          std::int64_t node_cap = 200'000'000);

/// k pairwise-distinct generators of a configuration inside A, or nullopt.
std::optional<std::vector<std::int64_t>> find_nondegenerate_configuration(
    const FiniteAbelianGroup& group, const std::vector<std::int64_t>& set, int k,
    std::int64_t node_cap = 200'000'000);

struct DegenerateBoundReport {
  BigRational probability;
  BigRational bound;  // C(k,2)/|G|
  bool pass = false;
};

/// For configuration-free A: probability <= C(k,2)/|G|. Throws
/// PreconditionError when A does contain a non-degenerate k-configuration.
DegenerateBoundReport degenerate_bound_check(const FiniteAbelianGroup& group,
                                             const std::vector<std::int64_t>& set, int k);

/// True when A (as integers) contains no x < z with (x+z)/2 in A.
bool is_threeap_free(const std::vector<std::int64_t>& set);

/// A 3AP-free subset of [N] = {1..N} from the digit-sphere construction,
/// scanning a small base/dimension grid and keeping the largest output.
/// The result is re-verified 3AP-free before returning.
std::vector<std::int64_t> behrend_set(std::int64_t n);

/// Reduction of A subset of [N] into Z/(2N+1), as element indices.
std::vector<std::int64_t> embed_interval(const std::vector<std::int64_t>& set,
                                         std::int64_t n);

/// Brute-force check that integers A contain k pairwise-distinct elements
/// whose pairwise means all lie in A (means must be integers).
bool integers_contain_nondegenerate_configuration(const std::vector<std::int64_t>& set,
                                                  int k);

struct EmbeddingAgreement {
  bool integer_side = false;
  bool group_side = false;
  bool agree = false;
};

/// Brute-forces both sides of the interval-to-cyclic-group transfer: A has a
/// non-degenerate k-configuration iff its reduction mod 2N+1 does.
EmbeddingAgreement embedding_configuration_agreement(const std::vector<std::int64_t>& set,
                                                     std::int64_t n, int k);

/// Seeded independent-inclusion subset of the group's element indices.
std::vector<std::int64_t> random_subset(const FiniteAbelianGroup& group, double density,
                                        std::uint64_t seed);
/// Seeded independent-inclusion subset of [1..n].
std::vector<std::int64_t> random_subset(std::int64_t n, double density,
                                        std::uint64_t seed);

}  // namespace addcomb
