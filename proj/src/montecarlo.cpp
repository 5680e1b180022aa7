#include "balance/montecarlo.hpp"

#include <cmath>

#include "balance/analysis.hpp"
#include "balance/strategies.hpp"

namespace balance {

namespace {

void finish(TrialReport& report) {
    report.estimate = report.trials == 0 ? 0.0
                                         : static_cast<double>(report.successes) / static_cast<double>(report.trials);
    report.half_width = normal_half_width(report.estimate, report.trials);
}

}  // namespace

double normal_half_width(double estimate, std::uint64_t trials) noexcept {
    if (trials == 0) return 0.0;
    return 1.96 * std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(trials));
}

TrialReport simulate_random_player(const GameSpec& spec, double r, std::uint64_t trials, std::uint64_t seed,
                                   const VerifierLimits& limits) {
    spec.validate();
    check_enumeration_limit(spec.q, limits.masks);
    TrialReport report;
    report.spec = spec;
    report.r = r;
    report.trials = trials;
    report.seed = seed;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const StrategyMatrix s = random_strategy(spec.n, spec.q, {r, trial_seed(seed, t)});
        if (find_winning_mask(spec, s, limits.masks)) ++report.successes;
    }
    finish(report);
    return report;
}

ConcentrationReport concentration_experiment(int q, double r, double delta, std::uint64_t trials,
                                             std::uint64_t seed) {
    ConcentrationReport report;
    report.q = q;
    report.r = r;
    report.delta = delta;
    report.trials = trials;
    report.seed = seed;
    report.chernoff_bound = analysis::chernoff_tail_bound(q, delta);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const StrategyMatrix row = random_strategy(1, q, {r, trial_seed(seed, t)});
        const double fraction = static_cast<double>(row_profile(row).qvec[0]) / static_cast<double>(q);
        if (std::abs(fraction - r) > delta) ++report.exceedances;
    }
    report.empirical_tail =
        trials == 0 ? 0.0 : static_cast<double>(report.exceedances) / static_cast<double>(trials);
    return report;
}

TrialReport random_perfect_rate(int n, int q, Prior prior, std::uint64_t trials, std::uint64_t seed,
                                const VerifierLimits& limits) {
    const GameSpec spec = GameSpec::make(n, q, 0, prior);
    check_enumeration_limit(q, limits.masks);
    TrialReport report;
    report.spec = spec;
    report.r = 2.0 / 3.0;
    report.trials = trials;
    report.seed = seed;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const StrategyMatrix s = uniform_random_strategy(n, q, trial_seed(seed, t));
        if (!find_winning_mask(spec, s, limits.masks)) ++report.successes;
    }
    finish(report);

    // log of 2^n n! q! / 3^(n q)
    const double log_formula = n * std::log(2.0) + std::lgamma(n + 1.0) + std::lgamma(q + 1.0) -
                               static_cast<double>(n) * q * std::log(3.0);
    report.formula_rate = std::exp(log_formula);
    try {
        const std::uint64_t perfect = census_perfect(n, q, prior, 0, limits);
        report.exact_rate = static_cast<double>(perfect) / std::pow(3.0, static_cast<double>(n) * q);
    } catch (const ResourceError&) {
    }
    return report;
}

}  // namespace balance
