#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "addcomb/group.hpp"
#include "addcomb/harmonic.hpp"

namespace addcomb {

/// Per-element radius data r(x) = max_{gamma in Gamma} |gamma(x) - 1|,
/// kept both by element and sorted, so that the size of any dilate is an
/// O(log |G|) count. Radii are cached doubles and every threshold test uses
/// exact <= on the cached values, which makes dilate sizes reproducible.
struct RadiusProfile {
  std::vector<double> radius_by_element;
  std::vector<double> sorted_radius;
  std::vector<std::int64_t> sorted_element;

  /// #{x : r(x) <= w}
  std::int64_t count_le(double w) const;
  /// #{x : r(x) < w}
  std::int64_t count_lt(double w) const;
};

/// A Bohr set is the formal pair (frequency set, width). The frequency set is
/// an ordered list that may contain duplicates: intersection concatenates
/// lists and rank counts entries, exactly mirroring the formal calculus.
/// The physical member set is derived data.
class BohrSet {
 public:
  /// Throws std::invalid_argument for an empty frequency set, width < 0, or
  /// mixed parent groups.
  BohrSet(std::vector<Character> frequency_set, double width);

  const FiniteAbelianGroup& group() const;
  const std::vector<Character>& frequency_set() const { return frequency_set_; }
  double width() const { return width_; }
  std::int64_t rank() const { return static_cast<std::int64_t>(frequency_set_.size()); }
  const RadiusProfile& profile() const { return *profile_; }

  bool contains(std::int64_t x) const;
  std::int64_t size() const;
  /// Member element indices in increasing order.
  std::vector<std::int64_t> members() const;
  /// |B_delta| without constructing the dilate.
  std::int64_t size_at_dilate(double delta) const;

  /// Same frequency set, width delta * width; the radius profile is shared.
  BohrSet dilate(double delta) const;
  /// Frequency set {gamma o psi^{-1}}; requires psi invertible on the group.
  BohrSet image_under(const MultiplicationMap& psi) const;

  Measure normalized_measure() const;

 private:
  BohrSet(std::vector<Character> frequency_set, double width,
          std::shared_ptr<const RadiusProfile> profile);

  std::vector<Character> frequency_set_;
  double width_;
  std::shared_ptr<const RadiusProfile> profile_;
};

BohrSet bohr_build(std::vector<Character> frequency_set, double width);

/// Formal intersection: concatenated frequency lists, min width.
BohrSet intersect(const BohrSet& a, const BohrSet& b);

struct SizeBoundReport {
  std::int64_t size = 0;
  double lower_bound = 0.0;
  bool pass = false;
};

/// |B| >= (rho/8)^d |G|; rho is clamped into [0, 2] for the bound, which is
/// the range where the inequality is stated.
SizeBoundReport size_bound_check(const BohrSet& bohr);

struct RegularityReport {
  bool regular = false;
  std::optional<double> violating_delta;
};

/// Exact regularity check: (1-100*delta*d)|B| <= |B_{1-delta}| and
/// |B_{1+delta}| <= (1+100*delta*d)|B| for every delta in (0, 1/(100d)].
/// Both sides are step/linear functions of delta, so the check only needs to
/// be evaluated at the radius-profile breakpoints plus the right endpoint.
RegularityReport is_regular(const BohrSet& bohr);

/// Finds delta in [1/2, 1] whose dilate is regular, scanning the profile
/// breakpoints, the gaps between them, and a uniform grid. Existence is
/// guaranteed, so exhaustion throws InternalAnomaly.
double find_regular_dilate(const BohrSet& bohr, double grid_resolution = 1e-4);

/// |B + B_delta| <= 2|B| for regular B and delta in (0, 1/(100d)]; the
/// sumset is computed exactly.
bool sumset_growth_check(const BohrSet& bohr, double delta);

/// mu_B <= 2 (mu_{B_{1+k*delta}} * nu) pointwise, for nu supported on the
/// k-fold sumset of B_delta and delta <= c/(k*d). The constant c is a knob
/// (default 1/100) because the source statement leaves it unspecified.
bool domination_check(const BohrSet& bohr, int k, double delta, const Measure& nu,
                      double c = 0.01);

struct CanonicalFrequencyResult {
  std::vector<Character> deduplicated;
  /// Whether every input character lies in the union of psi_2-orbits
  /// {gamma psi_2^a : gamma in Delta_r, |a| <= s - r} over the history.
  bool covered = false;
  /// sum_r (2(s-r)+1) |Delta_r|: the quadratic bound on the rank.
  std::int64_t rank_bound = 0;
};

/// History entry: the fresh frequencies Delta_r added at step r and the sign
/// sigma_r of the psi_2 twist applied at that step (sigma of entry 0 is
/// unused). Entry 0 conventionally holds {trivial}.
using FrequencyHistory = std::vector<std::pair<std::vector<Character>, int>>;

CanonicalFrequencyResult canonical_frequency_set(const std::vector<Character>& gamma,
                                                 const FrequencyHistory& history);

}  // namespace addcomb
