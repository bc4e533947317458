#include "addcomb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "addcomb/bohr.hpp"
#include "addcomb/configs.hpp"
#include "addcomb/gridnorm.hpp"
#include "addcomb/group.hpp"
#include "addcomb/harmonic.hpp"
#include "addcomb/increment.hpp"
#include "addcomb/oracle.hpp"
#include "addcomb/report.hpp"
#include "addcomb/rng.hpp"
#include "addcomb/sumfree.hpp"

namespace addcomb {

namespace {

DenseFunction random_function(const FiniteAbelianGroup& g, DetRng& rng) {
  DenseFunction f(g);
  for (std::int64_t x = 0; x < g.order(); ++x) {
    f[x] = {2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
  }
  return f;
}

std::vector<std::int64_t> nonempty_random_subset(const FiniteAbelianGroup& g,
                                                 double density, std::uint64_t seed) {
  for (std::uint64_t bump = 0;; ++bump) {
    auto s = random_subset(g, density, seed + 7919 * bump);
    if (!s.empty()) return s;
  }
}

// ---------------------------------------------------------------- criterion 1

CriterionResult harmonic_identities() {
  CriterionResult r{1, "harmonic-identities", "harmonic", true, "", 0.0};
  const double tol = 1e-10;
  double worst = 0.0;
  for (auto moduli : std::vector<std::vector<std::int64_t>>{{101}, {4, 9}, {2, 3, 5}}) {
    FiniteAbelianGroup g(moduli);
    for (int trial = 0; trial < 100; ++trial) {
      DetRng rng(1000 + static_cast<std::uint64_t>(trial) + 131 * g.order());
      DenseFunction f = random_function(g, rng);
      DenseFunction h = random_function(g, rng);
      DenseFunction gg = random_function(g, rng);
      // Adjoint property.
      double adjoint =
          std::abs(inner(convolve(f, gg), h) - inner(f, diff_convolve(h, gg)));
      // Convolution theorem.
      DualFunction lhs = fourier(convolve(f, gg));
      DualFunction fh = fourier(f);
      DualFunction gh = fourier(gg);
      double convthm = 0.0;
      for (std::int64_t i = 0; i < lhs.size(); ++i) {
        convthm = std::max(convthm, std::abs(lhs[i] - fh[i] * gh[i]));
      }
      // Parseval.
      double energy = 0.0;
      for (std::int64_t i = 0; i < fh.size(); ++i) energy += std::norm(fh[i]);
      double parseval =
          std::abs(energy - std::pow(lp_norm(f, 2.0), 2.0));
      worst = std::max({worst, adjoint, convthm, parseval});
      if (worst > tol) {
        r.pass = false;
        r.detail = "identity residual " + format_double(worst) + " on |G|=" +
                   std::to_string(g.order());
        return r;
      }
    }
  }
  r.detail = "300 triples, worst residual " + format_double(worst);
  return r;
}

// ---------------------------------------------------------------- criterion 2

CriterionResult bohr_size_bound() {
  CriterionResult r{2, "bohr-size-bound", "bohr", true, "", 0.0};
  int checked = 0;
  for (std::int64_t n : {101, 1009}) {
    FiniteAbelianGroup g({n});
    for (int d = 1; d <= 3; ++d) {
      for (int trial = 0; trial < 50; ++trial) {
        DetRng rng(2000 + static_cast<std::uint64_t>(trial) + 17 * d + 977 * n);
        std::vector<Character> freq;
        for (int i = 0; i < d; ++i) {
          freq.push_back(Character(
              g, {static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(n)))}));
        }
        BohrSet base(freq, 2.0);
        for (int i = 1; i <= 20; ++i) {
          double rho = static_cast<double>(i) / 10.0;
          SizeBoundReport report = size_bound_check(base.dilate(rho / 2.0));
          ++checked;
          if (!report.pass) {
            r.pass = false;
            r.detail = "bound failed at N=" + std::to_string(n) + " d=" +
                       std::to_string(d) + " rho=" + format_double(rho);
            return r;
          }
        }
      }
    }
  }
  r.detail = std::to_string(checked) + " (Gamma, rho) pairs, zero violations";
  return r;
}

// ---------------------------------------------------------------- criterion 3

CriterionResult regular_dilate() {
  CriterionResult r{3, "regular-dilate", "bohr", true, "", 0.0};
  for (int trial = 0; trial < 100; ++trial) {
    DetRng rng(3000 + static_cast<std::uint64_t>(trial));
    std::int64_t n = 64 + static_cast<std::int64_t>(rng.next_below(5000 - 64 + 1));
    int d = 1 + static_cast<int>(rng.next_below(4));
    FiniteAbelianGroup g({n});
    std::vector<Character> freq;
    for (int i = 0; i < d; ++i) {
      freq.push_back(Character(
          g, {static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(n)))}));
    }
    double width = 0.05 + 1.95 * rng.next_double();
    BohrSet bohr(freq, width);
    double delta;
    try {
      delta = find_regular_dilate(bohr);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = "search failed on trial " + std::to_string(trial) + ": " + e.what();
      return r;
    }
    if (!(delta >= 0.5 && delta <= 1.0) || !is_regular(bohr.dilate(delta)).regular) {
      r.pass = false;
      r.detail = "returned dilate not regular on trial " + std::to_string(trial);
      return r;
    }
  }
  r.detail = "100 seeded Bohr sets regularised, zero failures";
  return r;
}

// ---------------------------------------------------------------- criterion 4

CriterionResult configuration_count_oracle() {
  CriterionResult r{4, "configuration-count-oracle", "configs", true, "", 0.0};
  FiniteAbelianGroup z7({7});
  for (std::uint32_t mask = 0; mask < 128; ++mask) {
    std::vector<std::int64_t> set;
    for (int b = 0; b < 7; ++b) {
      if (mask & (1u << b)) set.push_back(b);
    }
    BigInt fast = count_k_configurations(z7, set, 3).ordered_count;
    BigInt naive = oracle::configuration_count_naive(z7, set, 3);
    if (fast != naive) {
      r.pass = false;
      r.detail = "Z/7 mask " + std::to_string(mask) + ": fast " + fast.str() +
                 " != naive " + naive.str();
      return r;
    }
  }
  FiniteAbelianGroup z15({3, 5});
  for (int trial = 0; trial < 200; ++trial) {
    DetRng rng(4000 + static_cast<std::uint64_t>(trial));
    double density = 0.15 + 0.7 * rng.next_double();
    std::vector<std::int64_t> set = random_subset(z15, density, 4100 + trial);
    for (int k : {3, 4}) {
      BigInt fast = count_k_configurations(z15, set, k).ordered_count;
      BigInt naive = oracle::configuration_count_naive(z15, set, k);
      if (fast != naive) {
        r.pass = false;
        r.detail = "Z/3xZ/5 trial " + std::to_string(trial) + " k=" + std::to_string(k);
        return r;
      }
    }
  }
  r.detail = "128 exhaustive + 400 seeded counts agree exactly";
  return r;
}

// ---------------------------------------------------------------- criterion 5

CriterionResult count_invariance() {
  CriterionResult r{5, "count-invariance", "configs", true, "", 0.0};
  for (std::int64_t n : {7, 9}) {
    FiniteAbelianGroup g({n});
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::int64_t> set;
      for (std::int64_t b = 0; b < n; ++b) {
        if (mask & (1u << b)) set.push_back(b);
      }
      BigInt reference = count_k_configurations(g, set, 3).ordered_count;
      for (std::int64_t t = 0; t < n; ++t) {
        std::vector<std::int64_t> shifted;
        for (std::int64_t x : set) shifted.push_back(g.add(x, t));
        if (count_k_configurations(g, shifted, 3).ordered_count != reference) {
          r.pass = false;
          r.detail = "translate " + std::to_string(t) + " changed the count, N=" +
                     std::to_string(n);
          return r;
        }
      }
      for (std::int64_t lambda = 1; lambda < n; ++lambda) {
        if (gcd64(lambda, n) != 1) continue;
        std::vector<std::int64_t> dilated;
        for (std::int64_t x : set) dilated.push_back(g.scale(lambda, x));
        if (count_k_configurations(g, dilated, 3).ordered_count != reference) {
          r.pass = false;
          r.detail = "dilation " + std::to_string(lambda) + " changed the count, N=" +
                     std::to_string(n);
          return r;
        }
      }
    }
  }
  r.detail = "all subsets of Z/7 and Z/9: counts invariant under every translate "
             "and coprime dilation";
  return r;
}

// ---------------------------------------------------------------- criterion 6

CriterionResult interval_embedding() {
  CriterionResult r{6, "interval-embedding", "configs", true, "", 0.0};
  for (int trial = 0; trial < 100; ++trial) {
    DetRng rng(6000 + static_cast<std::uint64_t>(trial));
    double density = 0.1 + 0.8 * rng.next_double();
    std::vector<std::int64_t> set = random_subset(static_cast<std::int64_t>(30), density,
                                                  6100 + static_cast<std::uint64_t>(trial));
    for (int k : {2, 3}) {
      EmbeddingAgreement agreement = embedding_configuration_agreement(set, 30, k);
      if (!agreement.agree) {
        r.pass = false;
        r.detail = "trial " + std::to_string(trial) + " k=" + std::to_string(k) +
                   ": integer side " + std::to_string(agreement.integer_side) +
                   ", group side " + std::to_string(agreement.group_side);
        return r;
      }
    }
  }
  r.detail = "100 seeded sets, both sides agree at k=2 and k=3";
  return r;
}

// ---------------------------------------------------------------- criterion 7

CriterionResult grid_norm_oracle() {
  CriterionResult r{7, "grid-norm-oracle", "gridnorm", true, "", 0.0};
  const double tol = 1e-10;
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    DetRng rng(7000 + static_cast<std::uint64_t>(trial));
    int nx = 1 + static_cast<int>(rng.next_below(4));
    int ny = 1 + static_cast<int>(rng.next_below(4));
    BitTable table(nx, ny);
    for (int x = 0; x < nx; ++x) {
      for (int y = 0; y < ny; ++y) table.set(x, y, rng.bernoulli(0.5));
    }
    RealTable f = RealTable::from_bits(table);
    for (int p = 1; p <= 3; ++p) {
      for (int q = 1; q <= 3; ++q) {
        double fast = grid_norm(f, p, q);
        double naive = oracle::grid_norm_naive(f, p, q);
        worst = std::max(worst, std::abs(fast - naive));
        if (worst > tol) {
          r.pass = false;
          r.detail = "trial " + std::to_string(trial) + " (p,q)=(" + std::to_string(p) +
                     "," + std::to_string(q) + ") residual " + format_double(worst);
          return r;
        }
      }
    }
    // U(1,1) equals |mean| exactly.
    double total = 0.0;
    for (double v : f.values) total += v;
    double mean = std::abs(total / static_cast<double>(f.values.size()));
    if (grid_norm(f, 1, 1) != mean) {
      r.pass = false;
      r.detail = "U(1,1) != |mean| on trial " + std::to_string(trial);
      return r;
    }
  }
  r.detail = "500 tables x 9 (p,q) pairs, worst residual " + format_double(worst);
  return r;
}

// ---------------------------------------------------------------- criterion 8

CriterionResult dichotomy_consistency() {
  CriterionResult r{8, "counting-dichotomy-consistency", "gridnorm", true, "", 0.0};
  OrientedGraph triangle = transitive_complete_graph(3);
  std::int64_t fired_count = 0;
  for (std::uint32_t m01 = 0; m01 < 16; ++m01) {
    for (std::uint32_t m02 = 0; m02 < 16; ++m02) {
      for (std::uint32_t m12 = 0; m12 < 16; ++m12) {
        auto table_of = [](std::uint32_t mask) {
          BitTable t(2, 2);
          for (int i = 0; i < 4; ++i) {
            if (mask & (1u << i)) t.set(i / 2, i % 2, true);
          }
          return t;
        };
        CountingInstance inst(triangle, {2, 2, 2},
                              {table_of(m01), table_of(m02), table_of(m12)});
        DeviationReport deviation = deviation_test(inst, 0.5);
        if (!deviation.fired) continue;
        ++fired_count;
        DichotomyWitness witness = counting_dichotomy(inst, 0.5);
        if (witness.kind == WitnessKind::none ||
            !verify_witness(inst, witness, deviation.delta)) {
          r.pass = false;
          r.detail = "no verifiable witness for masks (" + std::to_string(m01) + "," +
                     std::to_string(m02) + "," + std::to_string(m12) + ")";
          return r;
        }
      }
    }
  }
  r.detail = std::to_string(fired_count) + " of 4096 instances fired; every one "
             "yielded an exactly re-verified witness";
  return r;
}

// ---------------------------------------------------------------- criterion 9

CriterionResult sifting() {
  CriterionResult r{9, "sifting", "increment", true, "", 0.0};
  FiniteAbelianGroup g({63});
  std::int64_t worst_trials = 0;
  for (int seed = 1; seed <= 20; ++seed) {
    auto a1 = nonempty_random_subset(g, 0.5, 9000 + static_cast<std::uint64_t>(seed));
    auto a2 = nonempty_random_subset(g, 0.5, 9500 + static_cast<std::uint64_t>(seed));
    std::vector<std::int64_t> whole(static_cast<std::size_t>(g.order()));
    for (std::int64_t x = 0; x < g.order(); ++x) whole[static_cast<std::size_t>(x)] = x;
    SiftInstance inst = SiftInstance::make(g, a1, a2, whole, whole, 6, 0.25, 0.5,
                                           static_cast<std::uint64_t>(seed));
    SiftOutcome outcome = sift(inst, 100000);
    if (!outcome.accepted) {
      r.pass = false;
      r.detail = "seed " + std::to_string(seed) + " exhausted 1e5 trials";
      return r;
    }
    worst_trials = std::max(worst_trials, outcome.trials);
    // Deterministic re-verification from the recorded shifts.
    auto refine = [&](const std::vector<std::int64_t>& a) {
      std::set<std::int64_t> in_a(a.begin(), a.end());
      std::vector<std::int64_t> keep;
      for (std::int64_t x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (std::int64_t t : outcome.shifts) {
          if (!in_a.count(g.add(x, t))) {
            ok = false;
            break;
          }
        }
        if (ok) keep.push_back(x);
      }
      return keep;
    };
    std::vector<std::int64_t> a1p = refine(a1);
    std::vector<std::int64_t> a2p = refine(a2);
    if (a1p != outcome.a1_refined || a2p != outcome.a2_refined) {
      r.pass = false;
      r.detail = "seed " + std::to_string(seed) + ": refinement mismatch";
      return r;
    }
    BigRational d1(static_cast<std::int64_t>(a1p.size()), g.order());
    BigRational d2(static_cast<std::int64_t>(a2p.size()), g.order());
    if (to_double(d1) < outcome.floor1 || to_double(d2) < outcome.floor2) {
      r.pass = false;
      r.detail = "seed " + std::to_string(seed) + ": density floor violated";
      return r;
    }
    // S-mass recomputed through the harmonic module.
    std::vector<std::int64_t> level = level_set(inst);
    Measure m1 = normalized_indicator(g, a1p);
    Measure m2 = normalized_indicator(g, a2p);
    double mass = inner(diff_convolve(m1.as_function(), m2.as_function()),
                        DenseFunction::indicator(g, level))
                      .real();
    if (std::abs(mass - outcome.s_mass) > 1e-10 || mass < 1.0 - inst.delta - 1e-10) {
      r.pass = false;
      r.detail = "seed " + std::to_string(seed) + ": S-mass check failed";
      return r;
    }
  }
  r.detail = "20 seeds accepted; worst trial count " + std::to_string(worst_trials);
  return r;
}

// --------------------------------------------------------------- criterion 10

CriterionResult fourier_sum_bound() {
  CriterionResult r{10, "fourier-sum-bound", "increment", true, "", 0.0};
  for (int trial = 0; trial < 100; ++trial) {
    DetRng rng(10000 + static_cast<std::uint64_t>(trial));
    std::int64_t n = 16 + static_cast<std::int64_t>(rng.next_below(985));
    FiniteAbelianGroup g({n});
    auto b = nonempty_random_subset(g, 0.3 + 0.6 * rng.next_double(),
                                    10100 + static_cast<std::uint64_t>(trial));
    auto pick_from = [&](const std::vector<std::int64_t>& pool, std::uint64_t seed) {
      for (std::uint64_t bump = 0;; ++bump) {
        DetRng inner_rng(seed + bump);
        std::vector<std::int64_t> out;
        for (std::int64_t x : pool) {
          if (inner_rng.bernoulli(0.5)) out.push_back(x);
        }
        if (!out.empty()) return out;
      }
    };
    auto a1 = pick_from(b, 10200 + static_cast<std::uint64_t>(trial));
    auto a2 = pick_from(b, 10300 + static_cast<std::uint64_t>(trial));
    auto a1p = nonempty_random_subset(g, 0.2, 10400 + static_cast<std::uint64_t>(trial));
    auto a2p = nonempty_random_subset(g, 0.2, 10500 + static_cast<std::uint64_t>(trial));
    FourierSumReport report = fourier_sum_bound_check(g, a1p, a2p, a1, a2, b);
    if (!report.pass) {
      r.pass = false;
      r.detail = "trial " + std::to_string(trial) + ": lhs " + format_double(report.lhs) +
                 " > rhs " + format_double(report.rhs);
      return r;
    }
  }
  r.detail = "100 seeded instances, bound holds";
  return r;
}

// --------------------------------------------------------------- criterion 11

CriterionResult sumfree_exactness() {
  CriterionResult r{11, "sumfree-exactness", "sumfree", true, "", 0.0};
  // All non-empty subsets of [10].
  for (std::uint32_t mask = 1; mask < (1u << 10); ++mask) {
    std::vector<std::int64_t> values;
    for (int b = 0; b < 10; ++b) {
      if (mask & (1u << b)) values.push_back(b + 1);
    }
    IntegerSet a(values);
    if (exact_M(a).value != oracle::max_sumfree_naive(a)) {
      r.pass = false;
      r.detail = "exact_M mismatch on subset mask " + std::to_string(mask);
      return r;
    }
  }
  // M([n]) for n <= 12.
  for (int n = 1; n <= 12; ++n) {
    std::vector<std::int64_t> values;
    for (int i = 1; i <= n; ++i) values.push_back(i);
    IntegerSet a(values);
    if (exact_M(a).value != oracle::max_sumfree_naive(a)) {
      r.pass = false;
      r.detail = "M([" + std::to_string(n) + "]) mismatch";
      return r;
    }
  }
  // Greedy behaviour on 1000 seeded sets.
  for (int trial = 0; trial < 1000; ++trial) {
    DetRng rng(11000 + static_cast<std::uint64_t>(trial));
    int log_n = 3 + static_cast<int>(rng.next_below(8));  // 2^3 .. 2^10
    std::int64_t n = (std::int64_t{1} << log_n) +
                     static_cast<std::int64_t>(rng.next_below(std::uint64_t{1} << log_n));
    n = std::min<std::int64_t>(n, 1024);
    std::set<std::int64_t> sample;
    while (static_cast<std::int64_t>(sample.size()) < n) {
      sample.insert(1 + static_cast<std::int64_t>(
                            rng.next_below(static_cast<std::uint64_t>(8 * n))));
    }
    IntegerSet a(std::vector<std::int64_t>(sample.begin(), sample.end()));
    IntegerSet b = greedy_sumfree(a);
    if (!is_sumfree_wrt(b, a)) {
      r.pass = false;
      r.detail = "greedy output not sum-free on trial " + std::to_string(trial);
      return r;
    }
    int floor_log = static_cast<int>(std::floor(std::log2(static_cast<double>(a.size()))));
    if (static_cast<int>(b.size()) < floor_log) {
      r.pass = false;
      r.detail = "greedy size " + std::to_string(b.size()) + " below floor(log2 " +
                 std::to_string(a.size()) + ") on trial " + std::to_string(trial);
      return r;
    }
  }
  r.detail = "1023 exhaustive M checks, M([1..12]), 1000 greedy runs";
  return r;
}

// --------------------------------------------------------------- criterion 12

CriterionResult freiman_embedding() {
  CriterionResult r{12, "freiman-embedding", "sumfree", true, "", 0.0};
  for (int seed = 1; seed <= 50; ++seed) {
    DetRng rng(12000 + static_cast<std::uint64_t>(seed));
    std::size_t size = 1 + rng.next_below(10);
    std::set<std::int64_t> sample;
    while (sample.size() < size) {
      sample.insert(1 + static_cast<std::int64_t>(rng.next_below(200)));
    }
    IntegerSet a(std::vector<std::int64_t>(sample.begin(), sample.end()));
    EmbeddingSearch search = ruzsa_embed(a, 10000, static_cast<std::uint64_t>(seed));
    if (!search.accepted) {
      r.pass = false;
      r.detail = "seed " + std::to_string(seed) + " exhausted trials (best |A'| " +
                 std::to_string(search.best_subset_size) + ")";
      return r;
    }
    const EmbeddingResult& res = *search.result;
    if (2 * res.subset.size() < a.size()) {
      r.pass = false;
      r.detail = "seed " + std::to_string(seed) + ": |A'| below |A|/2";
      return r;
    }
    std::vector<std::int64_t> subset, residues;
    for (auto [x, phi] : res.map) {
      subset.push_back(x);
      residues.push_back(phi);
    }
    if (!oracle::freiman_equivalence_naive(subset, residues, res.modulus)) {
      r.pass = false;
      r.detail = "seed " + std::to_string(seed) + ": oracle rejects the map";
      return r;
    }
  }
  r.detail = "50 seeded embeddings verified over all quadruples";
  return r;
}

// --------------------------------------------------------------- criterion 13

CriterionResult behrend_generator() {
  CriterionResult r{13, "behrend-generator", "configs", true, "", 0.0};
  std::size_t previous = 0;
  std::ostringstream sizes;
  for (std::int64_t n : {100, 1000, 10000}) {
    std::vector<std::int64_t> set = behrend_set(n);
    // Independent quadratic 3AP scan.
    std::set<std::int64_t> lookup(set.begin(), set.end());
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        std::int64_t s = set[i] + set[j];
        if (s % 2 == 0 && lookup.count(s / 2)) {
          r.pass = false;
          r.detail = "3AP found in output for N=" + std::to_string(n);
          return r;
        }
      }
    }
    for (std::int64_t v : set) {
      if (v < 1 || v > n) {
        r.pass = false;
        r.detail = "output leaves [1, N] for N=" + std::to_string(n);
        return r;
      }
    }
    if (set.size() < previous) {
      r.pass = false;
      r.detail = "size decreased at N=" + std::to_string(n);
      return r;
    }
    previous = set.size();
    sizes << " N=" << n << ":" << set.size();
  }
  r.detail = "3AP-free, nondecreasing sizes:" + sizes.str();
  return r;
}

// --------------------------------------------------------------- criterion 14

std::string sift_csv(std::uint64_t seed) {
  FiniteAbelianGroup g({63});
  auto a1 = nonempty_random_subset(g, 0.5, 9000 + seed);
  auto a2 = nonempty_random_subset(g, 0.5, 9500 + seed);
  std::vector<std::int64_t> whole(static_cast<std::size_t>(g.order()));
  for (std::int64_t x = 0; x < g.order(); ++x) whole[static_cast<std::size_t>(x)] = x;
  SiftInstance inst = SiftInstance::make(g, a1, a2, whole, whole, 6, 0.25, 0.5, seed);
  SiftOutcome outcome = sift(inst, 100000);
  CsvWriter csv({"seed", "accepted", "trials", "alpha1", "alpha2", "s_mass", "norm"});
  csv.append_row({std::to_string(seed), outcome.accepted ? "1" : "0",
                  std::to_string(outcome.trials), to_string(outcome.alpha1),
                  to_string(outcome.alpha2), format_double(outcome.s_mass),
                  format_double(outcome.norm)});
  return csv.str();
}

std::string count_csv(std::uint64_t seed) {
  FiniteAbelianGroup g({3, 5});
  auto set = random_subset(g, 0.5, seed);
  ConfigurationCount count = count_k_configurations(g, set, 3);
  CsvWriter csv({"seed", "set_size", "ordered_count", "probability"});
  csv.append_row({std::to_string(seed), std::to_string(set.size()),
                  count.ordered_count.str(), to_string(count.probability)});
  return csv.str();
}

std::string bohr_csv(std::uint64_t seed) {
  DetRng rng(seed);
  std::int64_t n = 101 + static_cast<std::int64_t>(rng.next_below(900));
  FiniteAbelianGroup g({n});
  std::vector<Character> freq{
      Character(g, {static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(n)))})};
  BohrSet bohr(freq, 0.3 + rng.next_double());
  double delta = find_regular_dilate(bohr);
  CsvWriter csv({"seed", "order", "width", "regular_delta", "size"});
  csv.append_row({std::to_string(seed), std::to_string(n), format_double(bohr.width()),
                  format_double(delta), std::to_string(bohr.dilate(delta).size())});
  return csv.str();
}

CriterionResult csv_determinism() {
  CriterionResult r{14, "csv-determinism", "cli", true, "", 0.0};
  for (std::uint64_t seed : {1, 2, 3}) {
    if (sift_csv(seed) != sift_csv(seed) || count_csv(seed) != count_csv(seed) ||
        bohr_csv(seed) != bohr_csv(seed)) {
      r.pass = false;
      r.detail = "repeated run differed at seed " + std::to_string(seed);
      return r;
    }
  }
  r.detail = "three seeded reruns byte-identical across sift, count, bohr reports";
  return r;
}

}  // namespace

std::vector<std::string> acceptance_scopes() {
  return {"harmonic", "bohr", "configs", "gridnorm", "increment", "sumfree", "cli"};
}

std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& scope) {
  using Runner = CriterionResult (*)();
  const std::vector<std::pair<Runner, const char*>> runners = {
      {&harmonic_identities, "harmonic"},
      {&bohr_size_bound, "bohr"},
      {&regular_dilate, "bohr"},
      {&configuration_count_oracle, "configs"},
      {&count_invariance, "configs"},
      {&interval_embedding, "configs"},
      {&grid_norm_oracle, "gridnorm"},
      {&dichotomy_consistency, "gridnorm"},
      {&sifting, "increment"},
      {&fourier_sum_bound, "increment"},
      {&sumfree_exactness, "sumfree"},
      {&freiman_embedding, "sumfree"},
      {&behrend_generator, "configs"},
      {&csv_determinism, "cli"}};
  std::vector<CriterionResult> results;
  for (auto [runner, tag] : runners) {
    if (!scope.empty() && std::find(scope.begin(), scope.end(), tag) == scope.end()) {
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    CriterionResult result = runner();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace addcomb
