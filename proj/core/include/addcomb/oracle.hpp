#pragma once

#include <cstdint>
#include <vector>

#include "addcomb/gridnorm.hpp"
#include "addcomb/group.hpp"
#include "addcomb/harmonic.hpp"
#include "addcomb/rational.hpp"
#include "addcomb/sumfree.hpp"

namespace addcomb {

/// Brute-force reference implementations. Each one is written as the flattest
/// possible enumeration of the defining formula, independent of the
/// optimised code paths it is used to check. The verification suite runs
/// them side by side with the real implementations.
namespace oracle {

/// Fourier transform by literal character sums, no axis factorisation.
DualFunction fourier_naive(const DenseFunction& f);

/// Grid semi-norm by full enumeration of X^p x Y^q.
double grid_norm_naive(const RealTable& f, int p, int q);

/// Homomorphism count by full enumeration of the tuple space.
BigInt homomorphism_count_naive(const CountingInstance& inst);

/// Ordered k-tuples over G^k whose every pairwise midpoint (i <= j) lies in
/// the set, by literal odometer enumeration.
BigInt configuration_count_naive(const FiniteAbelianGroup& group,
                                 const std::vector<std::int64_t>& set, int k);

/// Ordered pairs (x, y) in A^2 whose midpoint lies in A, counted by the
/// 3AP-style loop over (x, midpoint) instead of (x, y).
std::int64_t ordered_midpoint_pairs(const FiniteAbelianGroup& group,
                                    const std::vector<std::int64_t>& set);

/// Bohr membership by direct evaluation of every |gamma(x) - 1|.
std::vector<std::int64_t> bohr_members_naive(const std::vector<Character>& frequencies,
                                             double width);

/// M(A) by enumeration of all subsets (|A| <= 25 or so).
int max_sumfree_naive(const IntegerSet& a);

/// The Freiman sum-equality equivalence for an explicit residue assignment.
bool freiman_equivalence_naive(const std::vector<std::int64_t>& subset,
                               const std::vector<std::int64_t>& residues,
                               std::int64_t modulus);

}  // namespace oracle
}  // namespace addcomb
