#pragma once

// Seeded Monte Carlo experiments on randomized players. Trial i uses the
// seed trial_seed(master_seed, i), so any subset of trials can be replayed
// on its own and the aggregate does not depend on evaluation order.

#include <cstdint>
#include <optional>

#include "balance/verifier.hpp"

namespace balance {

struct TrialReport {
    GameSpec spec;
    double r = 0.0;  ///< on-balance probability, or 2/3 for uniform matrices
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double half_width = 0.0;  ///< 95% normal-approximation half-width
    std::uint64_t seed = 0;
    std::optional<double> formula_rate;  ///< closed-form reference, when one exists
    std::optional<double> exact_rate;    ///< census-derived rate, when computable

    friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

/// Fraction of random_strategy(n, q, r) draws that the exhaustive adversary
/// defeats.
TrialReport simulate_random_player(const GameSpec& spec, double r, std::uint64_t trials, std::uint64_t seed,
                                   const VerifierLimits& limits = {});

struct ConcentrationReport {
    int q = 0;
    double r = 0.0;
    double delta = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t exceedances = 0;
    double empirical_tail = 0.0;  ///< frequency of |q_1/q - r| > delta
    double chernoff_bound = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const ConcentrationReport&, const ConcentrationReport&) = default;
};

/// Draws independent rows of q cells (on-balance with probability r) and
/// compares the deviation frequency of the on-balance fraction with
/// 2 exp(-2 delta^2 q).
ConcentrationReport concentration_experiment(int q, double r, double delta, std::uint64_t trials,
                                             std::uint64_t seed);

/// Fraction of uniformly random n x q matrices that certify PlayerMustWin in
/// the honest game. Includes 2^n n! q! / 3^(n q) as formula_rate and the
/// census rate when the census fits in `limits`.
TrialReport random_perfect_rate(int n, int q, Prior prior, std::uint64_t trials, std::uint64_t seed,
                                const VerifierLimits& limits = {});

/// 1.96 sqrt(p (1-p) / trials).
double normal_half_width(double estimate, std::uint64_t trials) noexcept;

}  // namespace balance
