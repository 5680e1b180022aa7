#pragma once

#include "balance/types.hpp"

namespace fixtures {

inline balance::StrategyMatrix four_by_two() { return balance::StrategyMatrix::from_strings({"LL", "LR", "RL", "RR"}); }

// Loses to (L^, R^, D^): coins 3 and 6 stay ambiguous.
inline balance::StrategyMatrix eight_losing() {
    return balance::StrategyMatrix::from_strings({"RLL", "RLR", "RLO", "RRL", "LRR", "LRO", "LOL", "LOR"});
}

inline balance::StrategyMatrix eight_perfect() {
    return balance::StrategyMatrix::from_strings({"RLR", "RRO", "ROL", "LLR", "LRO", "LOL", "OLL", "ORL"});
}

inline balance::StrategyMatrix thirteen() {
    return balance::StrategyMatrix::from_strings(
        {"LLL", "LLR", "LRL", "LRR", "ORR", "OLR", "ROL", "LOL", "RLO", "LLO", "OOR", "LOO", "ORO"});
}

}  // namespace fixtures
