#include "addcomb/gridnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "addcomb/error.hpp"

namespace addcomb {

OrientedGraph::OrientedGraph(int k, std::vector<std::pair<int, int>> edge_list)
    : vertex_count(k), edges(std::move(edge_list)) {
  if (k < 1) throw std::invalid_argument("oriented graph: need at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : edges) {
    if (i < 0 || j >= k || i >= j) {
      throw std::invalid_argument("oriented graph: edges must satisfy 0 <= i < j < k");
    }
    if (!seen.insert({i, j}).second) {
      throw std::invalid_argument("oriented graph: parallel edge");
    }
  }
}

std::vector<int> OrientedGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
  for (auto [i, j] : edges) {
    ++deg[static_cast<std::size_t>(i)];
    ++deg[static_cast<std::size_t>(j)];
  }
  return deg;
}

int OrientedGraph::kappa() const {
  int degree_one = 0;
  for (int d : degrees()) {
    if (d == 1) ++degree_one;
  }
  return 2 * edge_count() - degree_one;
}

OrientedGraph transitive_complete_graph(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) edges.push_back({i, j});
  }
  return OrientedGraph(k, std::move(edges));
}

OrientedGraph path_graph(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  return OrientedGraph(k, std::move(edges));
}

OrientedGraph single_edge() { return OrientedGraph(2, {{0, 1}}); }

BitTable::BitTable(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_(static_cast<std::size_t>((cols + 63) / 64)),
      words_(static_cast<std::size_t>(rows) * words_per_row_, 0) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("bit table: empty dimension");
}

void BitTable::set(int r, int c, bool v) {
  auto& w = words_[static_cast<std::size_t>(r) * words_per_row_ +
                   static_cast<std::size_t>(c >> 6)];
  std::uint64_t mask = std::uint64_t{1} << (c & 63);
  if (v) {
    w |= mask;
  } else {
    w &= ~mask;
  }
}

std::int64_t BitTable::ones() const {
  std::int64_t total = 0;
  for (std::uint64_t w : words_) total += __builtin_popcountll(w);
  return total;
}

std::int64_t BitTable::row_ones(int r) const {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < words_per_row_; ++k) {
    total += __builtin_popcountll(words_[static_cast<std::size_t>(r) * words_per_row_ + k]);
  }
  return total;
}

BigRational BitTable::density() const {
  return BigRational(BigInt(ones()),
                     BigInt(static_cast<std::int64_t>(rows_) * cols_));
}

std::string BitTable::bits() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
  }
  return s;
}

BitTable BitTable::from_bits(int rows, int cols, const std::string& bits) {
  if (static_cast<std::int64_t>(bits.size()) !=
      static_cast<std::int64_t>(rows) * cols) {
    throw std::invalid_argument("bit table: bit string length mismatch");
  }
  BitTable t(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      char ch = bits[static_cast<std::size_t>(r) * cols + c];
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("bit table: bits must be '0' or '1'");
      }
      if (ch == '1') t.set(r, c, true);
    }
  }
  return t;
}

RealTable RealTable::from_bits(const BitTable& t) {
  RealTable out(t.rows(), t.cols());
  for (int r = 0; r < t.rows(); ++r) {
    for (int c = 0; c < t.cols(); ++c) out.set(r, c, t.get(r, c) ? 1.0 : 0.0);
  }
  return out;
}

CountingInstance::CountingInstance(OrientedGraph g, std::vector<std::int64_t> sizes,
                                   std::vector<BitTable> edge_tables)
    : graph(std::move(g)), set_sizes(std::move(sizes)), tables(std::move(edge_tables)) {
  if (static_cast<int>(set_sizes.size()) != graph.vertex_count) {
    throw std::invalid_argument("counting instance: one size per vertex required");
  }
  if (tables.size() != graph.edges.size()) {
    throw std::invalid_argument("counting instance: one table per edge required");
  }
  for (std::size_t e = 0; e < tables.size(); ++e) {
    auto [i, j] = graph.edges[e];
    if (tables[e].rows() != set_sizes[static_cast<std::size_t>(i)] ||
        tables[e].cols() != set_sizes[static_cast<std::size_t>(j)]) {
      throw std::invalid_argument("counting instance: table shape mismatch on an edge");
    }
  }
}

BigRational CountingInstance::product_density() const {
  BigRational prod(1);
  for (std::size_t e = 0; e < tables.size(); ++e) prod *= tables[e].density();
  return prod;
}

BigInt CountingInstance::tuple_space() const {
  BigInt total = 1;
  for (std::int64_t s : set_sizes) total *= s;
  return total;
}

namespace {

/// Candidate masks only make sense for ground sets of at most 64 elements;
/// larger instances fall back to plain nested iteration per vertex.
class DfsCounter {
 public:
  explicit DfsCounter(const CountingInstance& inst) : inst_(inst) {
    int k = inst.graph.vertex_count;
    incoming_.resize(static_cast<std::size_t>(k));
    for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
      auto [i, j] = inst.graph.edges[e];
      incoming_[static_cast<std::size_t>(j)].push_back({i, static_cast<int>(e)});
    }
    assignment_.resize(static_cast<std::size_t>(k), 0);
  }

  BigInt count() {
    BigInt total = 0;
    descend(0, total);
    return total;
  }

 private:
  void descend(int v, BigInt& total) {
    const int k = inst_.graph.vertex_count;
    if (v == k) {
      ++total;
      return;
    }
    const std::int64_t n = inst_.set_sizes[static_cast<std::size_t>(v)];
    for (std::int64_t x = 0; x < n; ++x) {
      bool ok = true;
      for (auto [u, e] : incoming_[static_cast<std::size_t>(v)]) {
        if (!inst_.tables[static_cast<std::size_t>(e)].get(
                static_cast<int>(assignment_[static_cast<std::size_t>(u)]),
                static_cast<int>(x))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assignment_[static_cast<std::size_t>(v)] = x;
      descend(v + 1, total);
    }
  }

  const CountingInstance& inst_;
  std::vector<std::vector<std::pair<int, int>>> incoming_;  // (source vertex, edge idx)
  std::vector<std::int64_t> assignment_;
};

}  // namespace

HomomorphismCount homomorphism_density(const CountingInstance& inst,
                                       const BigInt& tuple_space_cap) {
  BigInt space = inst.tuple_space();
  if (space > tuple_space_cap) {
    throw ResourceLimitError("homomorphism density: tuple space exceeds cap");
  }
  DfsCounter counter(inst);
  BigInt count = counter.count();
  return {count, BigRational(count, space)};
}

SampledDensity homomorphism_density_sampled(const CountingInstance& inst,
                                            std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("sampled density: samples must be >= 1");
  DetRng rng(seed);
  const int k = inst.graph.vertex_count;
  std::vector<std::int64_t> x(static_cast<std::size_t>(k));
  std::int64_t hits = 0;
  for (std::int64_t s = 0; s < samples; ++s) {
    for (int v = 0; v < k; ++v) {
      x[static_cast<std::size_t>(v)] = static_cast<std::int64_t>(
          rng.next_below(static_cast<std::uint64_t>(inst.set_sizes[static_cast<std::size_t>(v)])));
    }
    bool ok = true;
    for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
      auto [i, j] = inst.graph.edges[e];
      if (!inst.tables[e].get(static_cast<int>(x[static_cast<std::size_t>(i)]),
                              static_cast<int>(x[static_cast<std::size_t>(j)]))) {
        ok = false;
        break;
      }
    }
    if (ok) ++hits;
  }
  double p = static_cast<double>(hits) / static_cast<double>(samples);
  double se = std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(samples));
  return {p, se, samples};
}

double grid_norm(const RealTable& f, int p, int q, double cost_cap) {
  if (p < 1 || q < 1) throw std::invalid_argument("grid norm: p, q must be >= 1");
  const int nx = f.rows;
  const int ny = f.cols;
  double cost = std::pow(static_cast<double>(ny), q) * static_cast<double>(nx) * q;
  if (cost > cost_cap) {
    throw ResourceLimitError("grid norm: evaluation cost exceeds cap");
  }
  // E_{y in Y^q} ( E_{x in X} prod_j f(x, y_j) )^p
  std::vector<int> y(static_cast<std::size_t>(q), 0);
  double outer = 0.0;
  while (true) {
    double inner_mean = 0.0;
    for (int x = 0; x < nx; ++x) {
      double prod = 1.0;
      for (int j = 0; j < q; ++j) prod *= f.get(x, y[static_cast<std::size_t>(j)]);
      inner_mean += prod;
    }
    inner_mean /= static_cast<double>(nx);
    outer += std::pow(inner_mean, p);
    int j = 0;
    while (j < q) {
      if (++y[static_cast<std::size_t>(j)] < ny) break;
      y[static_cast<std::size_t>(j)] = 0;
      ++j;
    }
    if (j == q) break;
  }
  outer /= std::pow(static_cast<double>(ny), q);
  return std::pow(std::abs(outer), 1.0 / (static_cast<double>(p) * q));
}

double deviation_delta(double eps, int edge_count) {
  return eps * eps / (static_cast<double>(edge_count) * edge_count) / 16000.0;
}

double delta_tilde(double eps, const OrientedGraph& graph) {
  int kappa = graph.kappa();
  if (kappa == 0) {
    throw std::invalid_argument("delta tilde: kappa(H) = 0 (all degrees at most 1)");
  }
  return eps * eps / (static_cast<double>(kappa) * kappa) / 1000.0;
}

DeviationReport deviation_test(const CountingInstance& inst, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("deviation test: eps must lie in (0, 1]");
  }
  DeviationReport report;
  report.density = homomorphism_density(inst).density;
  report.expected = inst.product_density();
  report.lhs = boost::multiprecision::abs(report.density - report.expected);
  report.rhs = exact_rational(eps) * report.expected;
  report.fired = report.lhs >= report.rhs;
  report.delta = deviation_delta(eps, inst.graph.edge_count());
  return report;
}

namespace {

BigRational rectangle_mean(const BitTable& table, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  BigInt ones = 0;
  for (int r : rows) {
    for (int c : cols) {
      if (table.get(r, c)) ++ones;
    }
  }
  return BigRational(ones, BigInt(static_cast<std::int64_t>(rows.size()) *
                                  static_cast<std::int64_t>(cols.size())));
}

std::vector<int> mask_to_indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

/// Exhaustive rectangle search. For each row subset S the best column subset
/// of a given size is the top columns ranked by their count within S, so only
/// 2^rows * cols log cols work is needed.
std::optional<RectangleWitness> rectangle_exhaustive(const BitTable& table,
                                                     const BigRational& threshold) {
  const int nr = table.rows();
  const int nc = table.cols();
  for (std::uint32_t mask = 1; mask < (1u << nr); ++mask) {
    std::vector<int> rows = mask_to_indices(mask);
    std::vector<std::pair<std::int64_t, int>> col_counts(static_cast<std::size_t>(nc));
    for (int c = 0; c < nc; ++c) {
      std::int64_t cnt = 0;
      for (int r : rows) {
        if (table.get(r, c)) ++cnt;
      }
      col_counts[static_cast<std::size_t>(c)] = {cnt, c};
    }
    std::sort(col_counts.begin(), col_counts.end(),
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first > b.first : a.second < b.second;
              });
    std::int64_t running = 0;
    for (int t = 1; t <= nc; ++t) {
      running += col_counts[static_cast<std::size_t>(t - 1)].first;
      BigRational mean(BigInt(running),
                       BigInt(static_cast<std::int64_t>(rows.size()) * t));
      if (mean >= threshold) {
        std::vector<int> cols;
        for (int u = 0; u < t; ++u) cols.push_back(col_counts[static_cast<std::size_t>(u)].second);
        std::sort(cols.begin(), cols.end());
        return RectangleWitness{rows, cols, mean};
      }
    }
  }
  return std::nullopt;
}

/// Greedy peeling: repeatedly drop the row or column of least in-rectangle
/// density; keep the best rectangle seen. Heuristic, flagged by the caller.
std::optional<RectangleWitness> rectangle_peeling(const BitTable& table,
                                                  const BigRational& threshold) {
  std::vector<int> rows(static_cast<std::size_t>(table.rows()));
  std::vector<int> cols(static_cast<std::size_t>(table.cols()));
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  while (!rows.empty() && !cols.empty()) {
    BigRational mean = rectangle_mean(table, rows, cols);
    if (mean >= threshold) return RectangleWitness{rows, cols, mean};
    // Find the worst row and worst column by in-rectangle count.
    std::int64_t worst_row_cnt = -1, worst_col_cnt = -1;
    std::size_t worst_row = 0, worst_col = 0;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      std::int64_t cnt = 0;
      for (int c : cols) {
        if (table.get(rows[a], c)) ++cnt;
      }
      if (worst_row_cnt < 0 || cnt < worst_row_cnt) {
        worst_row_cnt = cnt;
        worst_row = a;
      }
    }
    for (std::size_t b = 0; b < cols.size(); ++b) {
      std::int64_t cnt = 0;
      for (int r : rows) {
        if (table.get(r, cols[b])) ++cnt;
      }
      if (worst_col_cnt < 0 || cnt < worst_col_cnt) {
        worst_col_cnt = cnt;
        worst_col = b;
      }
    }
    // Drop whichever is sparser relative to its length.
    double row_density = rows.empty() ? 1.0
                                      : static_cast<double>(worst_row_cnt) /
                                            static_cast<double>(cols.size());
    double col_density = cols.empty() ? 1.0
                                      : static_cast<double>(worst_col_cnt) /
                                            static_cast<double>(rows.size());
    if (row_density <= col_density) {
      if (rows.size() == 1) break;
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(worst_row));
    } else {
      if (cols.size() == 1) break;
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(worst_col));
    }
  }
  return std::nullopt;
}

}  // namespace

RectangleSearchResult find_dense_rectangle(const BitTable& table, double delta,
                                           int exhaustive_limit) {
  if (!(delta > 0.0)) throw std::invalid_argument("rectangle search: delta must be > 0");
  BigRational threshold = (BigRational(1) + exact_rational(delta)) * table.density();
  RectangleSearchResult result;
  if (table.rows() <= exhaustive_limit && table.cols() <= exhaustive_limit) {
    result.witness = rectangle_exhaustive(table, threshold);
    result.exhaustive = true;
  } else {
    result.witness = rectangle_peeling(table, threshold);
    result.exhaustive = false;
  }
  return result;
}

std::optional<std::vector<int>> find_low_degree_set(const BitTable& table, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("low-degree search: delta must be > 0");
  BigRational threshold = (BigRational(1) - exact_rational(delta)) * table.density();
  std::vector<int> s;
  for (int r = 0; r < table.rows(); ++r) {
    BigRational row_mean(BigInt(table.row_ones(r)), BigInt(table.cols()));
    if (row_mean <= threshold) s.push_back(r);
  }
  if (s.empty()) return std::nullopt;
  return s;
}

DichotomyWitness counting_dichotomy(const CountingInstance& inst, double eps) {
  DeviationReport deviation = deviation_test(inst, eps);
  if (!deviation.fired) {
    throw PreconditionError("counting dichotomy: deviation test did not fire");
  }
  const double delta = deviation.delta;
  DichotomyWitness witness;
  for (std::size_t e = 0; e < inst.tables.size(); ++e) {
    RectangleSearchResult rect = find_dense_rectangle(inst.tables[e], delta);
    if (rect.witness.has_value()) {
      witness.kind = WitnessKind::rectangle;
      witness.edge_index = static_cast<int>(e);
      witness.row_set = rect.witness->row_set;
      witness.col_set = rect.witness->col_set;
      witness.achieved = rect.witness->mean;
      witness.exhaustive = rect.exhaustive;
      if (verify_witness(inst, witness, delta)) return witness;
    }
    auto low = find_low_degree_set(inst.tables[e], delta);
    if (low.has_value()) {
      witness.kind = WitnessKind::low_degree;
      witness.edge_index = static_cast<int>(e);
      witness.row_set = *low;
      witness.col_set.clear();
      // Achieved value: the largest row mean inside S.
      BigRational worst(0);
      for (int r : witness.row_set) {
        BigRational m(BigInt(inst.tables[e].row_ones(r)), BigInt(inst.tables[e].cols()));
        if (m > worst) worst = m;
      }
      witness.achieved = worst;
      witness.exhaustive = true;
      if (verify_witness(inst, witness, delta)) return witness;
    }
  }
  witness = DichotomyWitness{};
  witness.kind = WitnessKind::none;
  return witness;
}

bool verify_witness(const CountingInstance& inst, const DichotomyWitness& w,
                    double delta) {
  if (w.kind == WitnessKind::none) return false;
  const BitTable& table = inst.tables[static_cast<std::size_t>(w.edge_index)];
  BigRational alpha = table.density();
  BigRational delta_rat = exact_rational(delta);
  if (w.kind == WitnessKind::rectangle) {
    if (w.row_set.empty() || w.col_set.empty()) return false;
    BigRational mean = rectangle_mean(table, w.row_set, w.col_set);
    return mean >= (BigRational(1) + delta_rat) * alpha;
  }
  if (w.row_set.empty()) return false;
  BigRational threshold = (BigRational(1) - delta_rat) * alpha;
  for (int r : w.row_set) {
    BigRational m(BigInt(table.row_ones(r)), BigInt(table.cols()));
    if (m > threshold) return false;
  }
  return true;
}

TechnicalReport verify_technical_witness(const BitTable& f, const TechnicalClaim& claim,
                                         double cost_cap) {
  TechnicalReport report;
  double alpha = static_cast<double>(f.ones()) /
                 (static_cast<double>(f.rows()) * static_cast<double>(f.cols()));
  if (claim.kind == TechnicalClaim::Kind::grid_norm_lower) {
    report.lhs = grid_norm(RealTable::from_bits(f), claim.r, claim.p, cost_cap);
    report.rhs = (1.0 + claim.delta_tilde) * alpha;
  } else {
    // ||E_y f(., y) - alpha||_p over uniform X.
    double acc = 0.0;
    for (int r = 0; r < f.rows(); ++r) {
      double row_mean = static_cast<double>(f.row_ones(r)) / static_cast<double>(f.cols());
      acc += std::pow(std::abs(row_mean - alpha), claim.p);
    }
    acc /= static_cast<double>(f.rows());
    report.lhs = std::pow(acc, 1.0 / claim.p);
    report.rhs = claim.delta_tilde * alpha;
  }
  report.pass = report.lhs >= report.rhs;
  return report;
}

}  // namespace addcomb
