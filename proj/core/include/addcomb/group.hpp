#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "addcomb/error.hpp"

namespace addcomb {

/// All roots of unity are evaluated through this one function so that equal
/// phases produce bit-identical doubles everywhere in the library.
/// Returns exp(2*pi*i * num / den); num is reduced modulo den first.
std::complex<double> unit_root(std::int64_t num, std::int64_t den);

/// A finite abelian group presented as a product of cyclic factors
/// Z/m_1 x ... x Z/m_r. Elements are addressed by a mixed-radix index in
/// [0, order): index = c_0 + m_0*(c_1 + m_1*(c_2 + ...)).
///
/// The class is immutable and all operations are pure, so instances can be
/// shared freely across threads.
class FiniteAbelianGroup {
 public:
  /// Throws std::invalid_argument on an empty list or a modulus < 1.
  explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::int64_t order() const { return order_; }
  std::size_t factor_count() const { return moduli_.size(); }
  bool odd_order() const { return order_ % 2 != 0; }
  /// lcm of the factor orders; the exponent of the group.
  std::int64_t exponent() const { return exponent_; }

  std::vector<std::int64_t> coords_of(std::int64_t index) const;
  /// Coordinates are reduced modulo the factor orders (negatives allowed).
  std::int64_t index_of(std::span<const std::int64_t> coords) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }
  /// Image of a under the multiplication-by-k map.
  std::int64_t scale(std::int64_t k, std::int64_t a) const;
  /// The unique x with 2x = a. Throws PreconditionError on even order.
  std::int64_t halve(std::int64_t a) const;

  bool operator==(const FiniteAbelianGroup& other) const {
    return moduli_ == other.moduli_;
  }

 private:
  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
  std::vector<std::int64_t> inv2_;  // per-factor inverse of 2, odd order only
};

/// Convenience for make_group({...}).
FiniteAbelianGroup make_group(std::vector<std::int64_t> moduli);

/// An element of a specific group. A thin value type: the parent group must
/// outlive the element. Arithmetic checks that operands share a group.
class GroupElement {
 public:
  GroupElement(const FiniteAbelianGroup& group, std::int64_t index)
      : group_(&group), index_(index) {}
  static GroupElement from_coords(const FiniteAbelianGroup& group,
                                  std::span<const std::int64_t> coords) {
    return GroupElement(group, group.index_of(coords));
  }

  const FiniteAbelianGroup& group() const { return *group_; }
  std::int64_t index() const { return index_; }
  std::vector<std::int64_t> coords() const { return group_->coords_of(index_); }

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b);

 private:
  const FiniteAbelianGroup* group_;
  std::int64_t index_;
};

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement neg(const GroupElement& x);
GroupElement psi_apply(std::int64_t k, const GroupElement& x);
GroupElement halve(const GroupElement& x);

/// A character of the group, represented exactly by its integer coefficient
/// tuple: value at x is exp(2*pi*i * sum_j coeffs[j]*x_j / m_j). Equality is
/// exact integer comparison, which makes frequency-set dedup exact.
class Character {
 public:
  Character(const FiniteAbelianGroup& group, std::vector<std::int64_t> coeffs);
  static Character trivial(const FiniteAbelianGroup& group);
  /// Characters carry the same mixed-radix indexing as elements.
  static Character from_dual_index(const FiniteAbelianGroup& group, std::int64_t index);

  const FiniteAbelianGroup& group() const { return *group_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t dual_index() const;
  bool is_trivial() const;

  std::complex<double> eval_index(std::int64_t element_index) const;
  std::complex<double> eval(const GroupElement& x) const;
  /// |gamma(x) - 1|, the quantity Bohr sets are built from.
  double distance_to_one(std::int64_t element_index) const;

  /// The character x -> gamma(k*x); coefficients multiply by k.
  Character composed_with_multiplier(std::int64_t k) const;

  bool operator==(const Character& other) const {
    return *group_ == *other.group_ && coeffs_ == other.coeffs_;
  }

 private:
  /// Phase of gamma(x) as an exact fraction num/exponent() of a full turn.
  std::int64_t phase_numerator(std::int64_t element_index) const;

  const FiniteAbelianGroup* group_;
  std::vector<std::int64_t> coeffs_;
};

std::complex<double> eval_character(const Character& gamma, const GroupElement& x);
Character compose_character_with_psi(const Character& gamma, std::int64_t k);

/// The multiplication-by-k map x -> kx.
class MultiplicationMap {
 public:
  explicit MultiplicationMap(std::int64_t k) : k_(k) {}
  std::int64_t multiplier() const { return k_; }
  bool invertible_on(const FiniteAbelianGroup& group) const;
  /// Throws PreconditionError when gcd(k, |G|) != 1.
  MultiplicationMap inverse_on(const FiniteAbelianGroup& group) const;
  std::int64_t apply(const FiniteAbelianGroup& group, std::int64_t index) const {
    return group.scale(k_, index);
  }

 private:
  std::int64_t k_;
};

/// Euclid helpers shared by the modules that reason about coprimality.
std::int64_t gcd64(std::int64_t a, std::int64_t b);
/// Inverse of a modulo m; throws PreconditionError when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace addcomb
