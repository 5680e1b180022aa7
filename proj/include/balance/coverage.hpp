#pragma once

// Mask-space bookkeeping shared by the adversary and the verifier.
//
// Masks are identified with their lexicographic index in [0, 3^q). The set of
// masks under which a hypothesis survives is the Hamming ball of radius k
// around its predicted mask; counting, for every mask, how many balls cover
// it gives the survivor count of every possible reply in one pass.

#include <cstdint>
#include <span>
#include <vector>

#include "balance/types.hpp"

namespace balance {

/// Calls f(index) for every mask within Hamming distance `radius` of
/// `center`, over {L,R,D}^length. Each mask is visited exactly once.
template <typename F>
void for_each_in_ball(std::uint64_t center, int length, int radius, F&& f) {
    std::vector<std::uint64_t> pow3(static_cast<std::size_t>(length) + 1, 1);
    for (int j = 1; j <= length; ++j) pow3[static_cast<std::size_t>(j)] = pow3[static_cast<std::size_t>(j) - 1] * 3;

    // Changes are applied at strictly increasing digit positions so that each
    // substitution pattern is generated once.
    auto recurse = [&](auto&& self, std::uint64_t current, int from, int budget) -> void {
        f(current);
        if (budget == 0) return;
        for (int pos = from; pos < length; ++pos) {
            const std::uint64_t weight = pow3[static_cast<std::size_t>(pos)];
            const std::uint64_t digit = (center / weight) % 3;
            for (std::uint64_t alt = 1; alt < 3; ++alt) {
                const std::uint64_t replaced = current - digit * weight + ((digit + alt) % 3) * weight;
                self(self, replaced, pos + 1, budget - 1);
            }
        }
    };
    recurse(recurse, center, 0, radius);
}

/// Per-mask survivor counts for a whole strategy, saturating at 255.
class MaskCoverage {
public:
    MaskCoverage(const GameSpec& spec, const StrategyMatrix& strategy);

    std::uint64_t mask_count() const noexcept { return counts_.size(); }
    std::uint8_t survivors(std::uint64_t mask_index) const { return counts_[mask_index]; }

    /// Smallest mask index with at least `threshold` survivors, or -1.
    std::int64_t first_with_at_least(int threshold) const noexcept;

private:
    std::vector<std::uint8_t> counts_;
};

}  // namespace balance
