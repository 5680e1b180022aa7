#include "balance/coverage.hpp"

#include "balance/game.hpp"

namespace balance {

MaskCoverage::MaskCoverage(const GameSpec& spec, const StrategyMatrix& strategy) {
    strategy.check_shape(spec);
    counts_.assign(checked_pow(3, spec.q), 0);
    for (int i = 0; i < strategy.rows(); ++i) {
        for (Sign s : signs_for(spec.prior)) {
            for_each_in_ball(predicted_mask_index(strategy.row(i), s), spec.q, spec.k, [&](std::uint64_t m) {
                if (counts_[m] < 255) ++counts_[m];
            });
        }
    }
}

std::int64_t MaskCoverage::first_with_at_least(int threshold) const noexcept {
    for (std::size_t m = 0; m < counts_.size(); ++m)
        if (counts_[m] >= threshold) return static_cast<std::int64_t>(m);
    return -1;
}

}  // namespace balance
