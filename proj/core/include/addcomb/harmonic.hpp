#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "addcomb/group.hpp"

namespace addcomb {

/// Size cutoff below which convolutions use direct O(|G|^2) summation and
/// above which they go through the Fourier transform. Both paths agree to
/// 1e-9 and the cutoff can be overridden per call.
inline constexpr std::int64_t kConvolutionCutoff = 512;

class Measure;

/// A complex-valued function on a group, stored densely by element index.
/// Expectations over G use the averaging normalisation E_x = |G|^{-1} sum_x.
class DenseFunction {
 public:
  explicit DenseFunction(const FiniteAbelianGroup& group)
      : group_(&group), values_(static_cast<std::size_t>(group.order())) {}
  DenseFunction(const FiniteAbelianGroup& group, std::vector<std::complex<double>> values);

  static DenseFunction constant(const FiniteAbelianGroup& group, std::complex<double> c);
  static DenseFunction indicator(const FiniteAbelianGroup& group,
                                 const std::vector<std::int64_t>& set);

  const FiniteAbelianGroup& group() const { return *group_; }
  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
  const std::vector<std::complex<double>>& values() const { return values_; }
  std::vector<std::complex<double>>& values() { return values_; }
  std::complex<double> operator[](std::int64_t i) const {
    return values_[static_cast<std::size_t>(i)];
  }
  std::complex<double>& operator[](std::int64_t i) {
    return values_[static_cast<std::size_t>(i)];
  }

  std::complex<double> mean() const;

  DenseFunction& operator+=(const DenseFunction& other);
  DenseFunction& operator-=(const DenseFunction& other);
  DenseFunction& operator*=(std::complex<double> scalar);
  friend DenseFunction operator+(DenseFunction a, const DenseFunction& b) { return a += b; }
  friend DenseFunction operator-(DenseFunction a, const DenseFunction& b) { return a -= b; }
  friend DenseFunction operator*(DenseFunction a, std::complex<double> s) { return a *= s; }

 private:
  const FiniteAbelianGroup* group_;
  std::vector<std::complex<double>> values_;
};

/// A probability measure in the paper-convention sense: a nonnegative table
/// with average value 1 (so ||mu||_1 = 1 under the averaging normalisation).
/// The constructor renormalises when |E mu - 1| < 1e-9 and rejects anything
/// further off; negative entries are rejected outright.
class Measure {
 public:
  Measure(const FiniteAbelianGroup& group, std::vector<double> values);

  static Measure uniform(const FiniteAbelianGroup& group);
  static Measure point_mass(const FiniteAbelianGroup& group, std::int64_t at);

  const FiniteAbelianGroup& group() const { return *group_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::int64_t i) const { return values_[static_cast<std::size_t>(i)]; }

  /// mu(A) = E_x 1_A(x) mu(x).
  double mass_of(const std::vector<std::int64_t>& set) const;
  std::vector<std::int64_t> support() const;
  DenseFunction as_function() const;

 private:
  const FiniteAbelianGroup* group_;
  std::vector<double> values_;
};

/// mu_S: value |G|/|S| on S, zero elsewhere. Throws on empty S.
Measure normalized_indicator(const FiniteAbelianGroup& group,
                             const std::vector<std::int64_t>& set);

/// (f*g)(x) = E_y f(y) g(x-y).
DenseFunction convolve(const DenseFunction& f, const DenseFunction& g,
                       std::int64_t direct_cutoff = kConvolutionCutoff);
/// (f o g)(x) = E_y f(y) conj(g(y-x)).
DenseFunction diff_convolve(const DenseFunction& f, const DenseFunction& g,
                            std::int64_t direct_cutoff = kConvolutionCutoff);

Measure convolve(const Measure& a, const Measure& b,
                 std::int64_t direct_cutoff = kConvolutionCutoff);
Measure diff_convolve(const Measure& a, const Measure& b,
                      std::int64_t direct_cutoff = kConvolutionCutoff);

/// Table over the dual group, indexed by the mixed-radix index of the
/// character coefficient tuple. The dual always carries counting measure.
class DualFunction {
 public:
  DualFunction(const FiniteAbelianGroup& group, std::vector<std::complex<double>> values)
      : group_(&group), values_(std::move(values)) {}

  const FiniteAbelianGroup& group() const { return *group_; }
  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
  const std::vector<std::complex<double>>& values() const { return values_; }
  std::complex<double> operator[](std::int64_t dual_index) const {
    return values_[static_cast<std::size_t>(dual_index)];
  }
  std::complex<double> at(const Character& gamma) const {
    return values_[static_cast<std::size_t>(gamma.dual_index())];
  }

 private:
  const FiniteAbelianGroup* group_;
  std::vector<std::complex<double>> values_;
};

/// fhat(gamma) = E_x f(x) conj(gamma(x)).
DualFunction fourier(const DenseFunction& f);
DualFunction fourier(const Measure& mu);
/// f(x) = sum_gamma fhat(gamma) gamma(x).
DenseFunction inverse_fourier(const DualFunction& fhat);

inline constexpr double kInfiniteP = std::numeric_limits<double>::infinity();

/// L^p norm under an optional weight measure (uniform when absent). The
/// p = infinity branch takes max |f| over the support of the weight.
/// Throws std::invalid_argument for p < 1.
double lp_norm(const DenseFunction& f, double p, const Measure* weight = nullptr);

/// <f, g>_{L^2(mu)} = E_x f(x) conj(g(x)) mu(x); uniform mu when absent.
std::complex<double> inner(const DenseFunction& f, const DenseFunction& g,
                           const Measure* weight = nullptr);

/// tau_x f (y) = f(y - x).
DenseFunction translate(const DenseFunction& f, std::int64_t x);
Measure translate(const Measure& mu, std::int64_t x);

/// Spec_t(mu) = {gamma : |muhat(gamma)| >= t}, sorted by dual index.
/// Threshold must lie in (0, 1].
std::vector<Character> spectrum(const Measure& mu, double threshold);

/// k-fold convolution power mu * ... * mu, computed by pointwise powering of
/// the Fourier transform. Throws for k < 1.
Measure convolution_power(const Measure& mu, int k);

}  // namespace addcomb
