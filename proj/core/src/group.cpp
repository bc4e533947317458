#include "addcomb/group.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace addcomb {

std::complex<double> unit_root(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num < 0) num += den;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                             static_cast<double>(den));
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  a %= m;
  if (a < 0) a += m;
  std::int64_t r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) {
    throw PreconditionError("mod_inverse: " + std::to_string(a) +
                            " is not invertible modulo " + std::to_string(m));
  }
  s0 %= m;
  if (s0 < 0) s0 += m;
  return s0;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> moduli)
    : moduli_(std::move(moduli)) {
  if (moduli_.empty()) {
    throw std::invalid_argument("group: modulus list must be non-empty");
  }
  strides_.reserve(moduli_.size());
  for (std::int64_t m : moduli_) {
    if (m < 1) throw std::invalid_argument("group: moduli must be >= 1");
    strides_.push_back(order_);
    order_ *= m;
    exponent_ = std::lcm(exponent_, m);
  }
  if (order_ % 2 != 0) {
    inv2_.reserve(moduli_.size());
    for (std::int64_t m : moduli_) inv2_.push_back(m == 1 ? 0 : mod_inverse(2, m));
  }
}

FiniteAbelianGroup make_group(std::vector<std::int64_t> moduli) {
  return FiniteAbelianGroup(std::move(moduli));
}

std::vector<std::int64_t> FiniteAbelianGroup::coords_of(std::int64_t index) const {
  std::vector<std::int64_t> coords(moduli_.size());
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    coords[j] = index % moduli_[j];
    index /= moduli_[j];
  }
  return coords;
}

std::int64_t FiniteAbelianGroup::index_of(std::span<const std::int64_t> coords) const {
  if (coords.size() != moduli_.size()) {
    throw std::invalid_argument("group: coordinate arity mismatch");
  }
  std::int64_t index = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    std::int64_t c = coords[j] % moduli_[j];
    if (c < 0) c += moduli_[j];
    index += c * strides_[j];
  }
  return index;
}

std::int64_t FiniteAbelianGroup::add(std::int64_t a, std::int64_t b) const {
  std::int64_t out = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    std::int64_t m = moduli_[j];
    std::int64_t c = (a % m) + (b % m);
    if (c >= m) c -= m;
    out += c * strides_[j];
    a /= m;
    b /= m;
  }
  return out;
}

std::int64_t FiniteAbelianGroup::neg(std::int64_t a) const {
  std::int64_t out = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    std::int64_t m = moduli_[j];
    std::int64_t c = a % m;
    if (c != 0) c = m - c;
    out += c * strides_[j];
    a /= m;
  }
  return out;
}

std::int64_t FiniteAbelianGroup::scale(std::int64_t k, std::int64_t a) const {
  std::int64_t out = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    std::int64_t m = moduli_[j];
    std::int64_t kj = k % m;
    if (kj < 0) kj += m;
    out += ((a % m) * kj % m) * strides_[j];
    a /= m;
  }
  return out;
}

std::int64_t FiniteAbelianGroup::halve(std::int64_t a) const {
  if (!odd_order()) {
    throw PreconditionError("halve: group order must be odd");
  }
  std::int64_t out = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    std::int64_t m = moduli_[j];
    out += ((a % m) * inv2_[j] % m) * strides_[j];
    a /= m;
  }
  return out;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (!(*a.group_ == *b.group_)) {
    throw std::invalid_argument("element addition: group mismatch");
  }
  return GroupElement(*a.group_, a.group_->add(a.index_, b.index_));
}

GroupElement operator-(const GroupElement& a) {
  return GroupElement(*a.group_, a.group_->neg(a.index_));
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) {
  if (!(*a.group_ == *b.group_)) {
    throw std::invalid_argument("element subtraction: group mismatch");
  }
  return GroupElement(*a.group_, a.group_->sub(a.index_, b.index_));
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return *a.group_ == *b.group_ && a.index_ == b.index_;
}

GroupElement add(const GroupElement& x, const GroupElement& y) { return x + y; }
GroupElement neg(const GroupElement& x) { return -x; }

GroupElement psi_apply(std::int64_t k, const GroupElement& x) {
  return GroupElement(x.group(), x.group().scale(k, x.index()));
}

GroupElement halve(const GroupElement& x) {
  return GroupElement(x.group(), x.group().halve(x.index()));
}

Character::Character(const FiniteAbelianGroup& group, std::vector<std::int64_t> coeffs)
    : group_(&group), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group.factor_count()) {
    throw std::invalid_argument("character: coefficient arity mismatch");
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    coeffs_[j] %= group.moduli()[j];
    if (coeffs_[j] < 0) coeffs_[j] += group.moduli()[j];
  }
}

Character Character::trivial(const FiniteAbelianGroup& group) {
  return Character(group, std::vector<std::int64_t>(group.factor_count(), 0));
}

Character Character::from_dual_index(const FiniteAbelianGroup& group,
                                     std::int64_t index) {
  return Character(group, group.coords_of(index));
}

std::int64_t Character::dual_index() const { return group_->index_of(coeffs_); }

bool Character::is_trivial() const {
  for (std::int64_t c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::int64_t Character::phase_numerator(std::int64_t element_index) const {
  // sum_j c_j x_j / m_j expressed over the common denominator exponent():
  // each term contributes ((c_j x_j) mod m_j) * (L/m_j) with L = exponent().
  const std::int64_t L = group_->exponent();
  std::int64_t num = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    std::int64_t m = group_->moduli()[j];
    std::int64_t t = (coeffs_[j] * (element_index % m)) % m;
    num = (num + t * (L / m)) % L;
    element_index /= m;
  }
  return num;
}

std::complex<double> Character::eval_index(std::int64_t element_index) const {
  return unit_root(phase_numerator(element_index), group_->exponent());
}

std::complex<double> Character::eval(const GroupElement& x) const {
  if (!(x.group() == *group_)) {
    throw std::invalid_argument("character evaluation: group mismatch");
  }
  return eval_index(x.index());
}

double Character::distance_to_one(std::int64_t element_index) const {
  return std::abs(eval_index(element_index) - 1.0);
}

Character Character::composed_with_multiplier(std::int64_t k) const {
  std::vector<std::int64_t> coeffs(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    std::int64_t m = group_->moduli()[j];
    std::int64_t kj = k % m;
    if (kj < 0) kj += m;
    coeffs[j] = coeffs_[j] * kj % m;
  }
  return Character(*group_, std::move(coeffs));
}

std::complex<double> eval_character(const Character& gamma, const GroupElement& x) {
  return gamma.eval(x);
}

Character compose_character_with_psi(const Character& gamma, std::int64_t k) {
  return gamma.composed_with_multiplier(k);
}

bool MultiplicationMap::invertible_on(const FiniteAbelianGroup& group) const {
  std::int64_t k = k_ % group.order();
  if (k < 0) k += group.order();
  return gcd64(k, group.order()) == 1;
}

MultiplicationMap MultiplicationMap::inverse_on(const FiniteAbelianGroup& group) const {
  if (!invertible_on(group)) {
    throw PreconditionError("multiplication map: not invertible on this group");
  }
  return MultiplicationMap(mod_inverse(k_ % group.exponent(), group.exponent()));
}

}  // namespace addcomb
