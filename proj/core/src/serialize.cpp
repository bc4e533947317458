#include "addcomb/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace addcomb {

namespace {

using nlohmann::json;

json group_json(const FiniteAbelianGroup& group) {
  return json{{"moduli", group.moduli()}};
}

FiniteAbelianGroup group_from(const json& j) {
  if (!j.contains("moduli")) {
    throw std::invalid_argument("group json: missing \"moduli\"");
  }
  return FiniteAbelianGroup(j.at("moduli").get<std::vector<std::int64_t>>());
}

json element_json(const FiniteAbelianGroup& group, std::int64_t index) {
  if (group.factor_count() == 1) return json(index);
  return json(group.coords_of(index));
}

std::int64_t element_from(const FiniteAbelianGroup& group, const json& j) {
  if (j.is_number_integer()) {
    if (group.factor_count() != 1) {
      throw std::invalid_argument("element json: plain integer needs a single-factor group");
    }
    std::int64_t v = j.get<std::int64_t>() % group.order();
    if (v < 0) v += group.order();
    return v;
  }
  auto coords = j.get<std::vector<std::int64_t>>();
  return group.index_of(coords);
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed json");
  return j;
}

}  // namespace

std::string group_to_json(const FiniteAbelianGroup& group) {
  return group_json(group).dump();
}

FiniteAbelianGroup group_from_json(const std::string& text) {
  return group_from(parse(text));
}

std::string elements_to_json(const FiniteAbelianGroup& group,
                             const std::vector<std::int64_t>& elements) {
  json arr = json::array();
  for (std::int64_t x : elements) arr.push_back(element_json(group, x));
  return json{{"group", group_json(group)}, {"elements", arr}}.dump();
}

std::vector<std::int64_t> elements_from_json(const FiniteAbelianGroup& group,
                                             const std::string& text) {
  json j = parse(text);
  const json& arr = j.contains("elements") ? j.at("elements") : j;
  std::vector<std::int64_t> out;
  for (const json& e : arr) out.push_back(element_from(group, e));
  return out;
}

std::string function_to_json(const DenseFunction& f) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(json::array({v.real(), v.imag()}));
  return json{{"group", group_json(f.group())}, {"values", values}}.dump();
}

FunctionData function_from_json(const std::string& text) {
  json j = parse(text);
  FunctionData data{group_from(j.at("group")), {}};
  for (const json& v : j.at("values")) {
    data.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
  }
  return data;
}

std::string measure_to_json(const Measure& mu) {
  return json{{"group", group_json(mu.group())}, {"values", mu.values()}}.dump();
}

MeasureData measure_from_json(const std::string& text) {
  json j = parse(text);
  return MeasureData{group_from(j.at("group")),
                     j.at("values").get<std::vector<double>>()};
}

std::string bohr_to_json(const BohrSet& bohr) {
  json freqs = json::array();
  for (const Character& gamma : bohr.frequency_set()) freqs.push_back(gamma.coeffs());
  return json{{"group", group_json(bohr.group())},
              {"frequencies", freqs},
              {"width", bohr.width()}}
      .dump();
}

BohrData bohr_from_json(const std::string& text) {
  json j = parse(text);
  BohrData data{group_from(j.at("group")), {}, j.at("width").get<double>()};
  for (const json& c : j.at("frequencies")) {
    data.frequency_coeffs.push_back(c.get<std::vector<std::int64_t>>());
  }
  return data;
}

BohrSet BohrData::build(const FiniteAbelianGroup& owner) const {
  if (!(owner == group)) {
    throw std::invalid_argument("bohr data: owner group does not match descriptor");
  }
  std::vector<Character> freqs;
  freqs.reserve(frequency_coeffs.size());
  for (const auto& coeffs : frequency_coeffs) freqs.emplace_back(owner, coeffs);
  return BohrSet(std::move(freqs), width);
}

std::string instance_to_json(const CountingInstance& inst) {
  json edges = json::array();
  for (auto [i, j] : inst.graph.edges) edges.push_back(json::array({i, j}));
  json tables = json::array();
  for (const BitTable& t : inst.tables) {
    tables.push_back(json{{"rows", t.rows()}, {"cols", t.cols()}, {"bits", t.bits()}});
  }
  return json{{"k", inst.graph.vertex_count},
              {"edges", edges},
              {"sizes", inst.set_sizes},
              {"tables", tables}}
      .dump();
}

CountingInstance instance_from_json(const std::string& text) {
  json j = parse(text);
  int k = j.at("k").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j.at("edges")) {
    edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  }
  OrientedGraph graph(k, std::move(edges));
  auto sizes = j.at("sizes").get<std::vector<std::int64_t>>();
  std::vector<BitTable> tables;
  for (const json& t : j.at("tables")) {
    tables.push_back(BitTable::from_bits(t.at("rows").get<int>(), t.at("cols").get<int>(),
                                         t.at("bits").get<std::string>()));
  }
  return CountingInstance(std::move(graph), std::move(sizes), std::move(tables));
}

std::vector<std::int64_t> parse_integer_lines(const std::string& text) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t pos = 0;
    std::int64_t v = std::stoll(line.substr(start), &pos);
    out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> parse_element_lines(const FiniteAbelianGroup& group,
                                              const std::string& text) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::vector<std::int64_t> coords;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      coords.push_back(std::stoll(field));
    }
    if (coords.size() == 1 && group.factor_count() == 1) {
      std::int64_t v = coords[0] % group.order();
      if (v < 0) v += group.order();
      out.push_back(v);
    } else {
      out.push_back(group.index_of(coords));
    }
  }
  return out;
}

std::string element_lines(const FiniteAbelianGroup& group,
                          const std::vector<std::int64_t>& elements) {
  std::ostringstream out;
  for (std::int64_t x : elements) {
    if (group.factor_count() == 1) {
      out << x << '\n';
    } else {
      auto coords = group.coords_of(x);
      for (std::size_t j = 0; j < coords.size(); ++j) {
        if (j > 0) out << ',';
        out << coords[j];
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace addcomb
