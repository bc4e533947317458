#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addcomb/bohr.hpp"
#include "addcomb/gridnorm.hpp"
#include "addcomb/group.hpp"
#include "addcomb/harmonic.hpp"

namespace addcomb {

/// JSON wire formats. Group descriptors look like {"moduli":[3,5]}; elements
/// serialize as coordinate lists, or as plain integers for single-factor
/// groups. Function tables are arrays of [re, im] pairs, measures plain real
/// arrays, both alongside their group descriptor.

std::string group_to_json(const FiniteAbelianGroup& group);
FiniteAbelianGroup group_from_json(const std::string& text);

std::string elements_to_json(const FiniteAbelianGroup& group,
                             const std::vector<std::int64_t>& elements);
std::vector<std::int64_t> elements_from_json(const FiniteAbelianGroup& group,
                                             const std::string& text);

/// DenseFunction, Measure and BohrSet all hold a pointer to their group, so
/// deserialisation returns the group together with the raw data; the caller
/// keeps the group alive and builds the view from it.
struct FunctionData {
  FiniteAbelianGroup group;
  std::vector<std::complex<double>> values;
  DenseFunction function() const { return DenseFunction(group, values); }
};

struct MeasureData {
  FiniteAbelianGroup group;
  std::vector<double> values;
  Measure measure() const { return Measure(group, values); }
};

struct BohrData {
  FiniteAbelianGroup group;
  std::vector<std::vector<std::int64_t>> frequency_coeffs;
  double width = 0.0;
  /// Builds the Bohr set over a caller-owned group equal to `group`.
  BohrSet build(const FiniteAbelianGroup& owner) const;
};

std::string function_to_json(const DenseFunction& f);
FunctionData function_from_json(const std::string& text);

std::string measure_to_json(const Measure& mu);
MeasureData measure_from_json(const std::string& text);

std::string bohr_to_json(const BohrSet& bohr);
BohrData bohr_from_json(const std::string& text);

std::string instance_to_json(const CountingInstance& inst);
CountingInstance instance_from_json(const std::string& text);

/// Set files: one integer per line in interval mode, one comma-separated
/// coordinate tuple per line in product-group mode (plain integers are
/// accepted for single-factor groups). '#' starts a comment line.
std::vector<std::int64_t> parse_integer_lines(const std::string& text);
std::vector<std::int64_t> parse_element_lines(const FiniteAbelianGroup& group,
                                              const std::string& text);
std::string element_lines(const FiniteAbelianGroup& group,
                          const std::vector<std::int64_t>& elements);

}  // namespace addcomb
