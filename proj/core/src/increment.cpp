#include "addcomb/increment.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "addcomb/configs.hpp"
#include "addcomb/error.hpp"
#include "addcomb/rng.hpp"

namespace addcomb {

double curly_l(double t) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw std::invalid_argument("curly L: argument must lie in (0, 1]");
  }
  return std::log(2.0 / t);
}

SiftInstance SiftInstance::make(const FiniteAbelianGroup& group,
                                std::vector<std::int64_t> a1, std::vector<std::int64_t> a2,
                                std::vector<std::int64_t> b1, std::vector<std::int64_t> b2,
                                int p, double eps, double delta, std::uint64_t seed) {
  if (a1.empty() || a2.empty() || b1.empty() || b2.empty()) {
    throw std::invalid_argument("sift instance: all four sets must be non-empty");
  }
  if (!(eps > 0.0 && eps <= 1.0) || !(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("sift instance: eps, delta must lie in (0, 1]");
  }
  if (static_cast<double>(p) < curly_l(delta) / eps) {
    throw PreconditionError("sift instance: p must be at least eps^{-1} L(delta)");
  }
  SiftInstance inst;
  inst.group = &group;
  inst.a1 = std::move(a1);
  inst.a2 = std::move(a2);
  inst.b1 = std::move(b1);
  inst.b2 = std::move(b2);
  inst.p = p;
  inst.eps = eps;
  inst.delta = delta;
  inst.seed = seed;
  return inst;
}

namespace {

struct SiftContext {
  DenseFunction a_conv;  // mu_A1 o mu_A2
  double norm = 0.0;
  std::vector<std::int64_t> level;
  std::vector<char> level_mask;
};

SiftContext sift_context(const SiftInstance& inst) {
  const FiniteAbelianGroup& g = *inst.group;
  Measure mu_a1 = normalized_indicator(g, inst.a1);
  Measure mu_a2 = normalized_indicator(g, inst.a2);
  Measure mu = diff_convolve(normalized_indicator(g, inst.b1),
                             normalized_indicator(g, inst.b2));
  SiftContext ctx{diff_convolve(mu_a1.as_function(), mu_a2.as_function()), 0.0, {}, {}};
  ctx.norm = lp_norm(ctx.a_conv, static_cast<double>(inst.p), &mu);
  double threshold = (1.0 - inst.eps) * ctx.norm;
  ctx.level_mask.assign(static_cast<std::size_t>(g.order()), 0);
  for (std::int64_t x = 0; x < g.order(); ++x) {
    if (ctx.a_conv[x].real() >= threshold) {
      ctx.level.push_back(x);
      ctx.level_mask[static_cast<std::size_t>(x)] = 1;
    }
  }
  return ctx;
}

}  // namespace

std::vector<std::int64_t> level_set(const SiftInstance& inst) {
  return sift_context(inst).level;
}

SiftOutcome sift(const SiftInstance& inst, std::int64_t max_trials) {
  const FiniteAbelianGroup& g = *inst.group;
  const std::int64_t n = g.order();
  SiftContext ctx = sift_context(inst);

  const double alpha1 = static_cast<double>(inst.a1.size()) / static_cast<double>(n);
  const double alpha2 = static_cast<double>(inst.a2.size()) / static_cast<double>(n);
  SiftOutcome outcome;
  outcome.norm = ctx.norm;
  outcome.floor1 = 0.25 * std::pow(alpha1 * ctx.norm, inst.p);
  outcome.floor2 = 0.25 * std::pow(alpha2 * ctx.norm, inst.p);

  std::vector<char> in_a1(static_cast<std::size_t>(n), 0);
  std::vector<char> in_a2(static_cast<std::size_t>(n), 0);
  for (std::int64_t x : inst.a1) in_a1[static_cast<std::size_t>(x)] = 1;
  for (std::int64_t x : inst.a2) in_a2[static_cast<std::size_t>(x)] = 1;

  DetRng rng(inst.seed);
  std::vector<std::int64_t> shifts(static_cast<std::size_t>(inst.p));
  for (std::int64_t trial = 1; trial <= max_trials; ++trial) {
    for (int i = 0; i < inst.p; ++i) {
      shifts[static_cast<std::size_t>(i)] =
          static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(n)));
    }
    // A_j' = B_j intersect (A_j - t_1) ... (A_j - t_p).
    auto refine = [&](const std::vector<std::int64_t>& base,
                      const std::vector<char>& in_a) {
      std::vector<std::int64_t> keep;
      for (std::int64_t x : base) {
        bool ok = true;
        for (int i = 0; i < inst.p; ++i) {
          if (!in_a[static_cast<std::size_t>(
                  g.add(x, shifts[static_cast<std::size_t>(i)]))]) {
            ok = false;
            break;
          }
        }
        if (ok) keep.push_back(x);
      }
      return keep;
    };
    std::vector<std::int64_t> a1p = refine(inst.b1, in_a1);
    if (a1p.empty()) continue;
    BigRational dens1(static_cast<std::int64_t>(a1p.size()),
                      static_cast<std::int64_t>(inst.b1.size()));
    if (to_double(dens1) < outcome.floor1) continue;
    std::vector<std::int64_t> a2p = refine(inst.b2, in_a2);
    if (a2p.empty()) continue;
    BigRational dens2(static_cast<std::int64_t>(a2p.size()),
                      static_cast<std::int64_t>(inst.b2.size()));
    if (to_double(dens2) < outcome.floor2) continue;

    // S-mass <mu_A1' o mu_A2', 1_S> against the cached level set.
    DenseFunction conv = diff_convolve(normalized_indicator(g, a1p).as_function(),
                                       normalized_indicator(g, a2p).as_function());
    double mass = 0.0;
    for (std::int64_t x : ctx.level) mass += conv[x].real();
    mass /= static_cast<double>(n);
    if (mass < 1.0 - inst.delta) continue;

    outcome.accepted = true;
    outcome.trials = trial;
    outcome.shifts = shifts;
    outcome.a1_refined = std::move(a1p);
    outcome.a2_refined = std::move(a2p);
    outcome.alpha1 = dens1;
    outcome.alpha2 = dens2;
    outcome.s_mass = mass;
    return outcome;
  }
  outcome.trials = max_trials;
  return outcome;
}

AveragingShiftResult averaging_shift(const DenseFunction& f, int p, const Measure& mu,
                                     const Measure& nu, const Measure& eta,
                                     double gamma) {
  if (p < 1) throw std::invalid_argument("averaging shift: p must be >= 1");
  const FiniteAbelianGroup& g = f.group();
  Measure conv = convolve(eta, nu);
  for (std::int64_t x = 0; x < g.order(); ++x) {
    if (mu[x] > gamma * conv[x]) {
      throw PreconditionError("averaging shift: mu <= gamma (eta * nu) fails pointwise");
    }
  }
  // |f|^p o nu at x equals ||f||^p over the translated measure tau_x nu.
  DenseFunction fp(g);
  for (std::int64_t x = 0; x < g.order(); ++x) {
    fp[x] = std::pow(std::abs(f[x]), p);
  }
  DenseFunction scan = diff_convolve(fp, nu.as_function());
  AveragingShiftResult result;
  double best = -1.0;
  for (std::int64_t x = 0; x < g.order(); ++x) {
    double v = scan[x].real();
    if (v > best) {
      best = v;
      result.shift = x;
    }
  }
  result.achieved = std::pow(std::max(best, 0.0), 1.0 / p);
  result.bound =
      std::pow(gamma, -1.0 / p) * lp_norm(f, static_cast<double>(p), &mu);
  // The averaging argument makes this hold with real arithmetic; a hair of
  // slack absorbs float roundoff across the two computation routes.
  result.conclusion_holds =
      result.achieved >= result.bound - 1e-12 * (1.0 + std::abs(result.bound));
  return result;
}

LiftingReport holder_lifting_scan(const std::vector<std::int64_t>& a1,
                                  const std::vector<std::int64_t>& a2, const BohrSet& bohr,
                                  const std::vector<std::int64_t>& b_prime,
                                  const std::vector<std::int64_t>& c, double eps,
                                  int p_cap) {
  const FiniteAbelianGroup& g = bohr.group();
  if (a1.empty() || a2.empty() || c.empty() || b_prime.empty()) {
    throw std::invalid_argument("lifting scan: sets must be non-empty");
  }
  {
    std::set<std::int64_t> bp(b_prime.begin(), b_prime.end());
    for (std::int64_t x : c) {
      if (!bp.count(x)) throw std::invalid_argument("lifting scan: C must lie in B'");
    }
  }
  std::vector<std::int64_t> b_members = bohr.members();
  double mu_b = static_cast<double>(b_members.size()) / static_cast<double>(g.order());
  Measure mu_a1 = normalized_indicator(g, a1);
  Measure mu_a2 = normalized_indicator(g, a2);
  Measure mu_c = normalized_indicator(g, c);

  LiftingReport report;
  DenseFunction conv = convolve(mu_a1.as_function(), mu_a2.as_function());
  report.deviation = std::abs(
      inner(conv, mu_c.as_function()).real() - 1.0 / mu_b);
  report.threshold = eps / mu_b;
  report.alternative_i = report.deviation < report.threshold;
  if (report.alternative_i) return report;

  Measure mu_bohr = normalized_indicator(g, b_members);
  DenseFunction f1 = mu_a1.as_function() - mu_bohr.as_function();
  DenseFunction f2 = mu_a2.as_function() - mu_bohr.as_function();
  DenseFunction lifted = convolve(f1, f2);
  Measure mu_bp = normalized_indicator(g, b_prime);
  report.norm_target = 0.5 * eps / mu_b;
  for (int p = 1; p <= p_cap; ++p) {
    double norm = lp_norm(lifted, static_cast<double>(p), &mu_bp);
    if (norm >= report.norm_target) {
      report.p = p;
      report.norm_at_p = norm;
      break;
    }
  }
  return report;
}

FourierSumReport fourier_sum_bound_check(const FiniteAbelianGroup& group,
                                         const std::vector<std::int64_t>& a1_refined,
                                         const std::vector<std::int64_t>& a2_refined,
                                         const std::vector<std::int64_t>& a1,
                                         const std::vector<std::int64_t>& a2,
                                         const std::vector<std::int64_t>& b) {
  if (a1_refined.empty() || a2_refined.empty() || a1.empty() || a2.empty() || b.empty()) {
    throw std::invalid_argument("fourier sum bound: sets must be non-empty");
  }
  {
    std::set<std::int64_t> bs(b.begin(), b.end());
    for (std::int64_t x : a1) {
      if (!bs.count(x)) throw std::invalid_argument("fourier sum bound: A1 must lie in B");
    }
    for (std::int64_t x : a2) {
      if (!bs.count(x)) throw std::invalid_argument("fourier sum bound: A2 must lie in B");
    }
  }
  DualFunction h1 = fourier(normalized_indicator(group, a1_refined));
  DualFunction h2 = fourier(normalized_indicator(group, a2_refined));
  DualFunction h3 = fourier(normalized_indicator(group, a1));
  DualFunction h4 = fourier(normalized_indicator(group, a2));
  FourierSumReport report;
  for (std::int64_t i = 0; i < h1.size(); ++i) {
    report.lhs += std::abs(h1[i]) * std::abs(h2[i]) * std::abs(h3[i]) * std::abs(h4[i]);
  }
  double alpha1 = static_cast<double>(a1.size()) / static_cast<double>(b.size());
  double alpha2 = static_cast<double>(a2.size()) / static_cast<double>(b.size());
  double mu_b = static_cast<double>(b.size()) / static_cast<double>(group.order());
  report.rhs = 1.0 / std::sqrt(alpha1 * alpha2) / mu_b;
  report.pass = report.lhs <= report.rhs + 1e-9 * report.rhs;
  return report;
}

TranslateDichotomyResult translate_dichotomy(const FiniteAbelianGroup& group,
                                             const std::vector<std::int64_t>& set,
                                             const std::vector<BohrSet>& family,
                                             double gamma, int k,
                                             std::optional<double> alpha_opt) {
  if (family.empty()) {
    throw std::invalid_argument("translate dichotomy: family must be non-empty");
  }
  TranslateDichotomyResult result;
  result.gamma = gamma;
  result.alpha = alpha_opt.value_or(static_cast<double>(set.size()) /
                                    static_cast<double>(group.order()));
  result.increment_threshold =
      (1.0 + gamma / (4.0 * static_cast<double>(k))) * result.alpha;

  std::vector<char> in_set(static_cast<std::size_t>(group.order()), 0);
  for (std::int64_t x : set) in_set[static_cast<std::size_t>(x)] = 1;
  std::vector<std::vector<std::int64_t>> members;
  members.reserve(family.size());
  for (const BohrSet& bohr : family) members.push_back(bohr.members());

  std::vector<double> densities(family.size());
  for (std::int64_t x = 0; x < group.order(); ++x) {
    // mu_{B'}(A - x) = |A intersect (B' + x)| / |B'|.
    for (std::size_t f = 0; f < family.size(); ++f) {
      std::int64_t hits = 0;
      for (std::int64_t bmem : members[f]) {
        if (in_set[static_cast<std::size_t>(group.add(bmem, x))]) ++hits;
      }
      densities[f] = static_cast<double>(hits) / static_cast<double>(members[f].size());
    }
    bool uniform = true;
    for (double d : densities) {
      if (std::abs(d - result.alpha) > gamma * result.alpha) {
        uniform = false;
        break;
      }
    }
    if (uniform) {
      result.verdict = TranslateVerdict::uniform;
      result.shift = x;
      result.densities = densities;
      return result;
    }
    for (std::size_t f = 0; f < family.size(); ++f) {
      if (densities[f] >= result.increment_threshold) {
        result.verdict = TranslateVerdict::increment;
        result.shift = x;
        result.bohr_index = static_cast<int>(f);
        result.densities = densities;
        return result;
      }
    }
  }
  result.verdict = TranslateVerdict::none;
  return result;
}

IncrementSearchReport increment_search(const FiniteAbelianGroup& group,
                                       const std::vector<std::int64_t>& set,
                                       const BohrSet& bohr, int k,
                                       const IncrementSearchConfig& config) {
  if (!group.odd_order()) {
    throw PreconditionError("increment search: group order must be odd");
  }
  if (!is_regular(bohr).regular) {
    throw PreconditionError("increment search: ambient Bohr set must be regular");
  }
  IncrementSearchReport report;
  std::vector<std::int64_t> b_members = bohr.members();
  {
    std::set<std::int64_t> bm(b_members.begin(), b_members.end());
    for (std::int64_t x : set) {
      if (!bm.count(x)) {
        throw std::invalid_argument("increment search: A must lie in B");
      }
    }
  }
  report.proportion = count_k_configurations(group, set, k).probability;
  report.base_density = BigRational(static_cast<std::int64_t>(set.size()),
                                    static_cast<std::int64_t>(b_members.size()));
  const double target_bump =
      config.delta_target_scale * std::pow(static_cast<double>(k), -5.0);
  report.target = (1.0 + target_bump) * to_double(report.base_density);
  BigRational target_exact = (BigRational(1) + exact_rational(target_bump)) *
                             report.base_density;
  if (set.empty()) return report;

  // Candidate Delta pool: characters ranked by |mu_A spectrum|, largest
  // first, trivial excluded.
  Measure mu_a = normalized_indicator(group, set);
  DualFunction muhat = fourier(mu_a);
  std::vector<std::pair<double, std::int64_t>> ranked;
  for (std::int64_t i = 1; i < muhat.size(); ++i) {
    ranked.push_back({std::abs(muhat[i]), i});
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  if (static_cast<int>(ranked.size()) > config.max_spectrum_frequencies) {
    ranked.resize(static_cast<std::size_t>(config.max_spectrum_frequencies));
  }

  std::vector<char> in_set(static_cast<std::size_t>(group.order()), 0);
  for (std::int64_t x : set) in_set[static_cast<std::size_t>(x)] = 1;
  const std::int64_t inv2 = mod_inverse(2, group.exponent());

  for (int sigma : {1, -1}) {
    std::int64_t mult = sigma == 1 ? 2 : inv2;
    std::vector<Character> base_freq = bohr.frequency_set();
    for (const Character& gamma : bohr.frequency_set()) {
      base_freq.push_back(gamma.composed_with_multiplier(mult));
    }
    for (int pool = 0; pool <= static_cast<int>(ranked.size()); ++pool) {
      std::vector<Character> freq = base_freq;
      std::vector<Character> delta_set;
      for (int i = 0; i < pool; ++i) {
        delta_set.push_back(Character::from_dual_index(
            group, ranked[static_cast<std::size_t>(i)].second));
        freq.push_back(delta_set.back());
      }
      double rho_candidate = bohr.width();
      for (int step = 0; step < config.max_rho_steps; ++step) {
        if (rho_candidate < config.rho_min_factor * bohr.width()) break;
        BohrSet trial(freq, rho_candidate);
        double reg_delta;
        try {
          reg_delta = find_regular_dilate(trial);
        } catch (const InternalAnomaly&) {
          rho_candidate *= config.rho_shrink_factor;
          continue;
        }
        BohrSet regular = trial.dilate(reg_delta);
        std::vector<std::int64_t> members = regular.members();
        if (members.empty()) break;
        std::int64_t scan = std::min(group.order(), config.shift_cap);
        for (std::int64_t x = 0; x < scan; ++x) {
          ++report.candidates_tried;
          std::int64_t hits = 0;
          for (std::int64_t m : members) {
            if (in_set[static_cast<std::size_t>(group.add(m, x))]) ++hits;
          }
          BigRational density(hits, static_cast<std::int64_t>(members.size()));
          if (density >= target_exact) {
            IncrementWitness witness;
            witness.shift = x;
            witness.sigma = sigma;
            witness.delta_set = delta_set;
            witness.rho_prime = regular.width();
            witness.achieved = density;
            witness.bohr_size = static_cast<std::int64_t>(members.size());
            report.witness_found = true;
            report.witness = std::move(witness);
            return report;
          }
        }
        rho_candidate *= config.rho_shrink_factor;
      }
    }
  }
  return report;
}

}  // namespace addcomb
