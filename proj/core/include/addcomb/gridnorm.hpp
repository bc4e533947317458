#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "addcomb/rational.hpp"
#include "addcomb/rng.hpp"

namespace addcomb {

/// An oriented graph on vertices 0..k-1 whose edges (i, j) all satisfy i < j.
struct OrientedGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  OrientedGraph(int k, std::vector<std::pair<int, int>> edge_list);

  int edge_count() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;
  /// kappa(H) = 2|E| - #(degree-1 vertices) = sum of degrees exceeding 1.
  int kappa() const;
};

OrientedGraph transitive_complete_graph(int k);
OrientedGraph path_graph(int k);
OrientedGraph single_edge();

/// Dense 0/1 matrix with popcount-friendly row storage.
class BitTable {
 public:
  BitTable(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const {
    return (words_[static_cast<std::size_t>(r) * words_per_row_ +
                   static_cast<std::size_t>(c >> 6)] >>
            (c & 63)) &
           1u;
  }
  void set(int r, int c, bool v);
  std::int64_t ones() const;
  std::int64_t row_ones(int r) const;
  /// Exact density as a rational count / (rows * cols).
  BigRational density() const;

  /// Row-major string of '0'/'1', the wire format used in instance files.
  std::string bits() const;
  static BitTable from_bits(int rows, int cols, const std::string& bits);

 private:
  int rows_;
  int cols_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> words_;
};

/// Real-valued matrix used by the grid semi-norms.
struct RealTable {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;

  RealTable(int r, int c) : rows(r), cols(c), values(static_cast<std::size_t>(r) * c) {}
  double get(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
  void set(int r, int c, double v) { values[static_cast<std::size_t>(r) * cols + c] = v; }
  static RealTable from_bits(const BitTable& t);
};

/// One counting problem: an oriented graph, ground sets X_i given by their
/// sizes, and a 0/1 table A_{i,j} on X_i x X_j for every edge.
struct CountingInstance {
  OrientedGraph graph;
  std::vector<std::int64_t> set_sizes;
  std::vector<BitTable> tables;  // parallel to graph.edges

  CountingInstance(OrientedGraph g, std::vector<std::int64_t> sizes,
                   std::vector<BitTable> edge_tables);

  BigRational edge_density(int edge_index) const {
    return tables[static_cast<std::size_t>(edge_index)].density();
  }
  BigRational product_density() const;
  BigInt tuple_space() const;
};

struct HomomorphismCount {
  BigInt count;
  BigRational density;
};

/// Exact count of tuples (x_1..x_k) whose every edge pair lands in the edge
/// table, via depth-first assignment with bitset candidate pruning. The cap
/// bounds the tuple space, not the visited nodes; exceeding it throws
/// ResourceLimitError.
HomomorphismCount homomorphism_density(const CountingInstance& inst,
                                       const BigInt& tuple_space_cap = BigInt(1) << 62);

struct SampledDensity {
  double estimate = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
};

/// Monte Carlo fallback for instances too large for the exact cap.
SampledDensity homomorphism_density_sampled(const CountingInstance& inst,
                                            std::int64_t samples, std::uint64_t seed);

/// Grid semi-norm |E_{x in X^p, y in Y^q} prod f(x_i, y_j)|^{1/pq}, evaluated
/// through the factorisation E_y (E_x prod_j f(x, y_j))^p at cost
/// O(|Y|^q |X| q). Throws ResourceLimitError past the cost cap.
double grid_norm(const RealTable& f, int p, int q, double cost_cap = 5e8);

/// delta(eps, m) = eps^2 m^{-2} / 16000.
double deviation_delta(double eps, int edge_count);

/// delta~ = eps^2 kappa(H)^{-2} / 1000; requires kappa(H) >= 2.
double delta_tilde(double eps, const OrientedGraph& graph);

struct DeviationReport {
  bool fired = false;
  BigRational lhs;       // |density - prod alpha|
  BigRational rhs;       // eps * prod alpha
  BigRational density;   // exact homomorphism density
  BigRational expected;  // prod alpha
  double delta = 0.0;    // delta(eps, m)
};

/// fired iff |density - prod alpha| >= eps * prod alpha, all in exact
/// rational arithmetic (eps enters as an exact dyadic rational).
DeviationReport deviation_test(const CountingInstance& inst, double eps);

struct RectangleWitness {
  std::vector<int> row_set;
  std::vector<int> col_set;
  BigRational mean;
};

/// Searches for S x T with mean >= (1+delta) * table density. Exhaustive and
/// authoritative up to `exhaustive_limit` rows/cols; beyond that a greedy
/// peeling heuristic is used and flagged in the result.
struct RectangleSearchResult {
  std::optional<RectangleWitness> witness;
  bool exhaustive = true;
};
RectangleSearchResult find_dense_rectangle(const BitTable& table, double delta,
                                           int exhaustive_limit = 12);

/// S = {x : row mean <= (1-delta) * density}; nullopt when empty.
std::optional<std::vector<int>> find_low_degree_set(const BitTable& table, double delta);

enum class WitnessKind { rectangle, low_degree, none };

struct DichotomyWitness {
  WitnessKind kind = WitnessKind::none;
  int edge_index = -1;
  std::vector<int> row_set;
  std::vector<int> col_set;  // empty for low_degree
  BigRational achieved;      // rectangle mean or worst row mean
  bool exhaustive = true;
};

/// Requires deviation_test(inst, eps).fired; scans edges in order, trying the
/// rectangle alternative then the low-degree alternative at
/// delta = delta(eps, m), and returns the first witness that re-verifies.
/// kind == none means no witness was found, which is reportable but not an
/// error at this scale.
DichotomyWitness counting_dichotomy(const CountingInstance& inst, double eps);

/// Exact re-verification of a witness against the raw table at the given
/// increment parameter delta.
bool verify_witness(const CountingInstance& inst, const DichotomyWitness& witness,
                    double delta);

struct TechnicalClaim {
  enum class Kind { grid_norm_lower, row_deviation_lower } kind;
  int r = 1;  // grid-norm first parameter (unused for row deviation)
  int p = 1;
  double delta_tilde = 0.0;
};

struct TechnicalReport {
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Numeric check of the two technical conclusion shapes:
///  - ||f||_{U(r,p)} >= (1 + delta~) alpha
///  - ||E_y f(.,y) - alpha||_p >= delta~ alpha
TechnicalReport verify_technical_witness(const BitTable& f, const TechnicalClaim& claim,
                                         double cost_cap = 5e8);

}  // namespace addcomb
