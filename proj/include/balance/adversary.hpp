#pragma once

#include <optional>
#include <vector>

#include "balance/types.hpp"

namespace balance {

enum class AttackMethod : std::uint8_t { Exhaustive, DuplicateRows, PartialComplement, AllOffRow };

const char* to_string(AttackMethod method) noexcept;

/// A mask that leaves the player with at least two indistinguishable
/// hypotheses.
struct AttackResult {
    Mask mask;
    std::vector<Hypothesis> survivors;
    AttackMethod method = AttackMethod::Exhaustive;
};

/// Guards on exhaustive mask enumeration.
struct EnumerationLimits {
    int max_rounds = 16;  ///< largest q whose 3^q masks may be enumerated
};

void check_enumeration_limit(int q, const EnumerationLimits& limits);

/// Lexicographically first mask (L^ < R^ < D^) with >= 2 survivors, or
/// nothing when the strategy is perfect. Throws ResourceError when q exceeds
/// limits.max_rounds.
std::optional<AttackResult> find_winning_mask(const GameSpec& spec, const StrategyMatrix& strategy,
                                              const EnumerationLimits& limits = {});

/// Structural attacks for the honest game (spec.k must be 0), tried in order:
///   1. duplicated rows: the image mask of the shared row;
///   2. unknown prior, a partially complementary pair: L^ where the first
///      row has L, R^ where it has R, D^ on the shared Off rounds;
///   3. unknown prior, an all-Off row: the all-D^ mask.
/// Pairs are scanned in (i, j) order. Returns nothing if no weakness exists.
std::optional<AttackResult> constructive_attack(const GameSpec& spec, const StrategyMatrix& strategy);

}  // namespace balance
