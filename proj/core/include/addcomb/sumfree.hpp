#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addcomb/rational.hpp"

namespace addcomb {

/// A finite set of integers, kept sorted and distinct.
class IntegerSet {
 public:
  IntegerSet() = default;
  explicit IntegerSet(std::vector<std::int64_t> values);

  const std::vector<std::int64_t>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  bool contains(std::int64_t x) const;
  std::int64_t max() const { return values_.back(); }

  bool operator==(const IntegerSet& other) const { return values_ == other.values_; }

 private:
  std::vector<std::int64_t> values_;
};

/// b1 + b2 not in A for every pair of distinct b1, b2 in B.
bool is_sumfree_wrt(const IntegerSet& b, const IntegerSet& a);

struct ExactMResult {
  int value = 0;
  IntegerSet witness;
};

/// M(A): the largest B subset of A that is sum-free with respect to A,
/// computed as a maximum independent set in the conflict graph
/// (b1 ~ b2 iff b1 + b2 in A) by branch and bound with a greedy initial
/// bound. Throws ResourceLimitError when |A| exceeds the cap.
ExactMResult exact_M(const IntegerSet& a, std::size_t size_cap = 40);

/// Greedy extraction: repeatedly take the maximum of the surviving pool and
/// drop everything that would complete a sum into A. The output is always
/// sum-free with respect to A.
IntegerSet greedy_sumfree(const IntegerSet& a);

struct EmbeddingResult {
  IntegerSet subset;                                     // A' with |A'| >= |A|/2
  std::int64_t modulus = 0;                              // odd N > 4|2A-2A|
  std::vector<std::pair<std::int64_t, std::int64_t>> map;  // a -> residue
  std::int64_t multiplier = 0;
  std::int64_t quadruples_checked = 0;
  std::int64_t trials_used = 0;
};

struct EmbeddingSearch {
  bool accepted = false;
  std::size_t best_subset_size = 0;  // largest |A'| seen when exhausted
  std::optional<EmbeddingResult> result;
};

/// Randomised search for a Freiman 2-isomorphic copy of at least half of A
/// inside Z/N: sample a multiplier coprime to N and a window offset, take the
/// preimage of the fuller half-window, and accept only after the sum-equality
/// equivalence has been verified exhaustively over all quadruples. The
/// verification is authoritative; the sampling is just a way to find maps.
EmbeddingSearch ruzsa_embed(const IntegerSet& a, std::int64_t trials, std::uint64_t seed,
                            std::optional<std::int64_t> modulus_override = std::nullopt,
                            std::int64_t quadruple_cap = 100'000'000);

struct DoublingStats {
  std::int64_t size = 0;
  std::int64_t sumset_size = 0;        // |A+A|
  std::int64_t double_difference = 0;  // |2A-2A|
  double sumset_ratio = 0.0;
  double double_difference_ratio = 0.0;
};

DoublingStats doubling_stats(const IntegerSet& a);

/// |A+A| for arbitrary integer sets.
std::int64_t sumset_size(const IntegerSet& a);
/// The set 2A - 2A.
IntegerSet two_a_minus_two_a(const IntegerSet& a);

struct DisjointDilateReport {
  bool size_pass = false;      // |X'| >= size_ratio_floor * |X|
  bool doubling_pass = false;  // |X'+X'| <= doubling_cap * |X'|
  bool disjoint_pass = false;  // (2.X') disjoint from Y
  double size_ratio = 0.0;
  double doubling_ratio = 0.0;
};

/// Verifier for externally produced X' (the source construction is not
/// reproduced here). Requires X' subset of X subset of Y.
DisjointDilateReport verify_disjoint_dilate(const IntegerSet& x_prime,
                                            const IntegerSet& x, const IntegerSet& y,
                                            double size_ratio_floor,
                                            double doubling_cap);

/// Exact search for S subset of X with |S| = k sum-free with respect to Y.
std::optional<IntegerSet> pipeline_extract(const IntegerSet& x, const IntegerSet& y,
                                           int k, std::size_t size_cap = 64);

struct MinMResult {
  int value = 0;
  IntegerSet argmin;
  std::int64_t sets_examined = 0;
};

/// min over A subset of [m], |A| = n of M(A): an upper bound for the extremal
/// quantity over all integer sets of size n, restricted to the universe [m].
/// Throws ResourceLimitError when C(m, n) exceeds the enumeration cap.
MinMResult min_M_over_universe(int n, int m, std::int64_t enumeration_cap = 50'000'000);

}  // namespace addcomb
