#include "addcomb/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace addcomb {

namespace {

using cd = std::complex<double>;

void check_same_group(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b,
                      const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": group mismatch");
}

/// One naive DFT pass along a single cyclic factor. sign = -1 gives the
/// forward kernel conj(gamma(x)), sign = +1 the inverse kernel gamma(x).
void axis_dft(std::vector<cd>& a, std::int64_t m, std::int64_t stride, int sign) {
  if (m == 1) return;
  std::vector<cd> roots(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r) {
    roots[static_cast<std::size_t>(r)] = unit_root(sign * r, m);
  }
  const std::int64_t total = static_cast<std::int64_t>(a.size());
  std::vector<cd> line(static_cast<std::size_t>(m));
  std::vector<cd> out(static_cast<std::size_t>(m));
  for (std::int64_t block = 0; block < total; block += stride * m) {
    for (std::int64_t low = 0; low < stride; ++low) {
      for (std::int64_t x = 0; x < m; ++x) {
        line[static_cast<std::size_t>(x)] =
            a[static_cast<std::size_t>(block + low + x * stride)];
      }
      for (std::int64_t c = 0; c < m; ++c) {
        cd acc = 0.0;
        for (std::int64_t x = 0; x < m; ++x) {
          acc += line[static_cast<std::size_t>(x)] *
                 roots[static_cast<std::size_t>((c * x) % m)];
        }
        out[static_cast<std::size_t>(c)] = acc;
      }
      for (std::int64_t c = 0; c < m; ++c) {
        a[static_cast<std::size_t>(block + low + c * stride)] =
            out[static_cast<std::size_t>(c)];
      }
    }
  }
}

std::vector<cd> multi_dft(const FiniteAbelianGroup& g, std::vector<cd> a, int sign) {
  std::int64_t stride = 1;
  for (std::int64_t m : g.moduli()) {
    axis_dft(a, m, stride, sign);
    stride *= m;
  }
  return a;
}

}  // namespace

DenseFunction::DenseFunction(const FiniteAbelianGroup& group,
                             std::vector<std::complex<double>> values)
    : group_(&group), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != group.order()) {
    throw std::invalid_argument("dense function: table length must equal |G|");
  }
}

DenseFunction DenseFunction::constant(const FiniteAbelianGroup& group, cd c) {
  DenseFunction f(group);
  std::fill(f.values_.begin(), f.values_.end(), c);
  return f;
}

DenseFunction DenseFunction::indicator(const FiniteAbelianGroup& group,
                                       const std::vector<std::int64_t>& set) {
  DenseFunction f(group);
  for (std::int64_t x : set) f[x] = 1.0;
  return f;
}

cd DenseFunction::mean() const {
  cd acc = 0.0;
  for (const cd& v : values_) acc += v;
  return acc / static_cast<double>(values_.size());
}

DenseFunction& DenseFunction::operator+=(const DenseFunction& other) {
  check_same_group(*group_, other.group(), "function addition");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

DenseFunction& DenseFunction::operator-=(const DenseFunction& other) {
  check_same_group(*group_, other.group(), "function subtraction");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

DenseFunction& DenseFunction::operator*=(cd scalar) {
  for (cd& v : values_) v *= scalar;
  return *this;
}

Measure::Measure(const FiniteAbelianGroup& group, std::vector<double> values)
    : group_(&group), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != group.order()) {
    throw std::invalid_argument("measure: table length must equal |G|");
  }
  double sum = 0.0;
  for (double v : values_) {
    if (v < 0.0) throw std::invalid_argument("measure: negative entry");
    sum += v;
  }
  double avg = sum / static_cast<double>(values_.size());
  if (std::abs(avg - 1.0) >= 1e-9) {
    throw std::invalid_argument("measure: average deviates from 1 by " +
                                std::to_string(std::abs(avg - 1.0)));
  }
  if (avg != 1.0 && avg > 0.0) {
    for (double& v : values_) v /= avg;
  }
}

Measure Measure::uniform(const FiniteAbelianGroup& group) {
  return Measure(group, std::vector<double>(static_cast<std::size_t>(group.order()), 1.0));
}

Measure Measure::point_mass(const FiniteAbelianGroup& group, std::int64_t at) {
  std::vector<double> v(static_cast<std::size_t>(group.order()), 0.0);
  v[static_cast<std::size_t>(at)] = static_cast<double>(group.order());
  return Measure(group, std::move(v));
}

double Measure::mass_of(const std::vector<std::int64_t>& set) const {
  double acc = 0.0;
  for (std::int64_t x : set) acc += values_[static_cast<std::size_t>(x)];
  return acc / static_cast<double>(values_.size());
}

std::vector<std::int64_t> Measure::support() const {
  std::vector<std::int64_t> s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > 0.0) s.push_back(static_cast<std::int64_t>(i));
  }
  return s;
}

DenseFunction Measure::as_function() const {
  std::vector<cd> v(values_.begin(), values_.end());
  return DenseFunction(*group_, std::move(v));
}

Measure normalized_indicator(const FiniteAbelianGroup& group,
                             const std::vector<std::int64_t>& set) {
  if (set.empty()) throw std::invalid_argument("normalized indicator: empty set");
  std::vector<double> v(static_cast<std::size_t>(group.order()), 0.0);
  double height = static_cast<double>(group.order()) / static_cast<double>(set.size());
  for (std::int64_t x : set) v[static_cast<std::size_t>(x)] = height;
  return Measure(group, std::move(v));
}

namespace {

DenseFunction convolve_direct(const DenseFunction& f, const DenseFunction& g) {
  const FiniteAbelianGroup& grp = f.group();
  const std::int64_t n = grp.order();
  DenseFunction out(grp);
  for (std::int64_t x = 0; x < n; ++x) {
    cd acc = 0.0;
    for (std::int64_t y = 0; y < n; ++y) acc += f[y] * g[grp.sub(x, y)];
    out[x] = acc / static_cast<double>(n);
  }
  return out;
}

DenseFunction diff_convolve_direct(const DenseFunction& f, const DenseFunction& g) {
  const FiniteAbelianGroup& grp = f.group();
  const std::int64_t n = grp.order();
  DenseFunction out(grp);
  for (std::int64_t x = 0; x < n; ++x) {
    cd acc = 0.0;
    for (std::int64_t y = 0; y < n; ++y) acc += f[y] * std::conj(g[grp.sub(y, x)]);
    out[x] = acc / static_cast<double>(n);
  }
  return out;
}

}  // namespace

DenseFunction convolve(const DenseFunction& f, const DenseFunction& g,
                       std::int64_t direct_cutoff) {
  check_same_group(f.group(), g.group(), "convolution");
  const FiniteAbelianGroup& grp = f.group();
  if (grp.order() <= direct_cutoff) return convolve_direct(f, g);
  DualFunction fh = fourier(f);
  DualFunction gh = fourier(g);
  std::vector<cd> prod(fh.values());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= gh.values()[i];
  return inverse_fourier(DualFunction(grp, std::move(prod)));
}

DenseFunction diff_convolve(const DenseFunction& f, const DenseFunction& g,
                            std::int64_t direct_cutoff) {
  check_same_group(f.group(), g.group(), "difference convolution");
  const FiniteAbelianGroup& grp = f.group();
  if (grp.order() <= direct_cutoff) return diff_convolve_direct(f, g);
  DualFunction fh = fourier(f);
  DualFunction gh = fourier(g);
  std::vector<cd> prod(fh.values());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= std::conj(gh.values()[i]);
  return inverse_fourier(DualFunction(grp, std::move(prod)));
}

namespace {

/// Measures stay measures under convolution; tiny negative values from the
/// Fourier path round to zero. Anything worse is a genuine bug.
Measure as_measure(const DenseFunction& f) {
  std::vector<double> v(f.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double re = f.values()[i].real();
    v[i] = (re < 0.0 && re > -1e-9) ? 0.0 : re;
  }
  return Measure(f.group(), std::move(v));
}

}  // namespace

Measure convolve(const Measure& a, const Measure& b, std::int64_t direct_cutoff) {
  return as_measure(convolve(a.as_function(), b.as_function(), direct_cutoff));
}

Measure diff_convolve(const Measure& a, const Measure& b, std::int64_t direct_cutoff) {
  return as_measure(diff_convolve(a.as_function(), b.as_function(), direct_cutoff));
}

DualFunction fourier(const DenseFunction& f) {
  std::vector<cd> a = multi_dft(f.group(), f.values(), -1);
  const double scale = 1.0 / static_cast<double>(f.group().order());
  for (cd& v : a) v *= scale;
  return DualFunction(f.group(), std::move(a));
}

DualFunction fourier(const Measure& mu) { return fourier(mu.as_function()); }

DenseFunction inverse_fourier(const DualFunction& fhat) {
  std::vector<cd> a = multi_dft(fhat.group(), fhat.values(), +1);
  return DenseFunction(fhat.group(), std::move(a));
}

double lp_norm(const DenseFunction& f, double p, const Measure* weight) {
  if (weight != nullptr) check_same_group(f.group(), weight->group(), "lp norm");
  if (p == kInfiniteP) {
    double best = 0.0;
    for (std::int64_t i = 0; i < f.size(); ++i) {
      if (weight != nullptr && (*weight)[i] <= 0.0) continue;
      best = std::max(best, std::abs(f[i]));
    }
    return best;
  }
  if (!(p >= 1.0)) throw std::invalid_argument("lp norm: p must be >= 1 or infinity");
  double acc = 0.0;
  for (std::int64_t i = 0; i < f.size(); ++i) {
    double w = weight != nullptr ? (*weight)[i] : 1.0;
    if (w == 0.0) continue;
    acc += std::pow(std::abs(f[i]), p) * w;
  }
  acc /= static_cast<double>(f.size());
  return std::pow(acc, 1.0 / p);
}

std::complex<double> inner(const DenseFunction& f, const DenseFunction& g,
                           const Measure* weight) {
  check_same_group(f.group(), g.group(), "inner product");
  if (weight != nullptr) check_same_group(f.group(), weight->group(), "inner product");
  cd acc = 0.0;
  for (std::int64_t i = 0; i < f.size(); ++i) {
    double w = weight != nullptr ? (*weight)[i] : 1.0;
    acc += f[i] * std::conj(g[i]) * w;
  }
  return acc / static_cast<double>(f.size());
}

DenseFunction translate(const DenseFunction& f, std::int64_t x) {
  const FiniteAbelianGroup& grp = f.group();
  DenseFunction out(grp);
  for (std::int64_t y = 0; y < grp.order(); ++y) out[y] = f[grp.sub(y, x)];
  return out;
}

Measure translate(const Measure& mu, std::int64_t x) {
  const FiniteAbelianGroup& grp = mu.group();
  std::vector<double> v(static_cast<std::size_t>(grp.order()));
  for (std::int64_t y = 0; y < grp.order(); ++y) {
    v[static_cast<std::size_t>(y)] = mu[grp.sub(y, x)];
  }
  return Measure(grp, std::move(v));
}

std::vector<Character> spectrum(const Measure& mu, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("spectrum: threshold must lie in (0, 1]");
  }
  DualFunction muhat = fourier(mu);
  std::vector<Character> result;
  for (std::int64_t i = 0; i < muhat.size(); ++i) {
    if (std::abs(muhat[i]) >= threshold) {
      result.push_back(Character::from_dual_index(mu.group(), i));
    }
  }
  return result;
}

Measure convolution_power(const Measure& mu, int k) {
  if (k < 1) throw std::invalid_argument("convolution power: k must be >= 1");
  if (k == 1) return mu;
  DualFunction muhat = fourier(mu);
  std::vector<cd> powered(muhat.values());
  for (cd& v : powered) {
    cd base = v;
    cd acc = 1.0;
    for (int e = k; e > 0; e >>= 1) {
      if (e & 1) acc *= base;
      base *= base;
    }
    v = acc;
  }
  DenseFunction back = inverse_fourier(DualFunction(mu.group(), std::move(powered)));
  std::vector<double> v(back.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double re = back.values()[i].real();
    v[i] = (re < 0.0 && re > -1e-9) ? 0.0 : re;
  }
  return Measure(mu.group(), std::move(v));
}

}  // namespace addcomb
