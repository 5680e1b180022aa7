#pragma once

// Transcription tables and the lie-tolerant survival rule.
//
// A hypothesis (coin, sign) predicts one mask: the coin's row mapped
// L->L^, R->R^, O->D^ when heavy and L->R^, R->L^, O->D^ when light. It
// survives a mask M when M differs from that prediction in at most k rounds.
// At k = 0 this is exactly the character-counting rule of the transcription
// tables.

#include <cstdint>
#include <span>
#include <vector>

#include "balance/types.hpp"

namespace balance {

/// Table cell for one placement under one announced outcome.
ObsEntry transcribe_cell(Placement placement, MaskSymbol symbol, Prior prior) noexcept;

/// Cell-wise transcription of S under M. Throws DimensionError when the
/// mask length differs from the matrix width.
ObservationMatrix transcribe(const StrategyMatrix& strategy, const Mask& mask, Prior prior);

MaskSymbol predicted_symbol(Placement placement, Sign sign) noexcept;

Mask predicted_mask(std::span<const Placement> row, Sign sign);

/// Same as predicted_mask(row, sign).index(), without allocating.
std::uint64_t predicted_mask_index(std::span<const Placement> row, Sign sign) noexcept;

/// Hamming distance between `mask` and the mask predicted by (row, sign).
int lie_count(std::span<const Placement> row, const Mask& mask, Sign sign);

/// Hypotheses whose lie count under `mask` is at most spec.k, ordered by
/// (coin, sign). Only Heavy signs are considered under the heavy prior.
std::vector<Hypothesis> surviving_hypotheses(const GameSpec& spec, const StrategyMatrix& strategy, const Mask& mask);

/// 1 survivor: identified; 0: the balance lied; >= 2: balance wins.
Verdict adjudicate(const GameSpec& spec, const StrategyMatrix& strategy, const Mask& mask);

/// Verdict classification of an already computed survivor set.
Verdict verdict_from_survivors(std::vector<Hypothesis> survivors);

/// Signs admissible under a prior.
std::span<const Sign> signs_for(Prior prior) noexcept;

}  // namespace balance
