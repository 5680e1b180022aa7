#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "balance/types.hpp"

namespace balance {

/// Number of on-balance rounds per coin.
struct RowProfile {
    std::vector<int> qvec;

    friend bool operator==(const RowProfile&, const RowProfile&) = default;
};

struct RandomStrategyParams {
    double r = 2.0 / 3.0;  ///< probability a coin is on the balance in a round
    std::uint64_t seed = 0;
};

/// Row i is the q-digit binary expansion of i (MSB first), 0->L, 1->R.
/// Throws CapacityError when n > 2^q.
StrategyMatrix binary_strategy(int n, int q);

/// Row i is the q-digit ternary expansion of i (MSD first), 0->L, 1->R, 2->O.
/// Throws CapacityError when n > 3^q.
StrategyMatrix ternary_strategy(int n, int q);

/// First n codes of {L,R,O}^q in lexicographic order (L<R<O), skipping the
/// all-Off code and any code whose partial complement was already taken.
/// Throws CapacityError when n > (3^q - 1)/2.
StrategyMatrix complement_free_strategy(int n, int q);

/// Each cell independently Left w.p. r/2, Right w.p. r/2, Off w.p. 1-r.
StrategyMatrix random_strategy(int n, int q, const RandomStrategyParams& params);

/// Each cell uniform over the three placements.
StrategyMatrix uniform_random_strategy(int n, int q, std::uint64_t seed);

RowProfile row_profile(const StrategyMatrix& strategy);

/// Two codes are partially complementary when they are Off in the same
/// rounds and opposite (L vs R) everywhere else. The all-Off code is its own
/// partial complement.
bool partially_complementary(std::span<const Placement> a, std::span<const Placement> b);

std::vector<Placement> partial_complement(std::span<const Placement> row);

// Reproducible randomness shared by the strategy builders and the Monte Carlo
// drivers. Per-trial seeds are splitmix64(master_seed + trial_index), and all
// draws go through mt19937_64 with an explicit 53-bit uniform conversion so
// results do not depend on the standard library's distributions.

std::uint64_t splitmix64(std::uint64_t x) noexcept;

inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) noexcept {
    return splitmix64(master_seed + trial);
}

/// Uniform double in [0, 1).
inline double uniform01(std::mt19937_64& rng) noexcept {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace balance
