#include "balance/game.hpp"

#include <array>

namespace balance {

namespace {

constexpr std::array<Sign, 1> kHeavyOnly{Sign::Heavy};
constexpr std::array<Sign, 2> kBothSigns{Sign::Heavy, Sign::Light};

// Rows: L, R, O. Columns: L^, R^, D^.
constexpr ObsEntry kHeavyTable[3][3] = {
    {ObsEntry::Plus, ObsEntry::Cross, ObsEntry::Cross},
    {ObsEntry::Cross, ObsEntry::Plus, ObsEntry::Cross},
    {ObsEntry::Cross, ObsEntry::Cross, ObsEntry::Plus},
};

constexpr ObsEntry kUnknownTable[3][3] = {
    {ObsEntry::Plus, ObsEntry::Minus, ObsEntry::Cross},
    {ObsEntry::Minus, ObsEntry::Plus, ObsEntry::Cross},
    {ObsEntry::Cross, ObsEntry::Cross, ObsEntry::PlusMinus},
};

void check_mask_length(const StrategyMatrix& strategy, const Mask& mask) {
    if (mask.size() != strategy.cols())
        throw DimensionError("mask has length " + std::to_string(mask.size()) + " but the strategy has " +
                             std::to_string(strategy.cols()) + " rounds");
}

}  // namespace

std::span<const Sign> signs_for(Prior prior) noexcept {
    if (prior == Prior::Heavy) return kHeavyOnly;
    return kBothSigns;
}

ObsEntry transcribe_cell(Placement placement, MaskSymbol symbol, Prior prior) noexcept {
    const auto row = static_cast<std::size_t>(placement);
    const auto col = static_cast<std::size_t>(symbol);
    return prior == Prior::Heavy ? kHeavyTable[row][col] : kUnknownTable[row][col];
}

ObservationMatrix transcribe(const StrategyMatrix& strategy, const Mask& mask, Prior prior) {
    check_mask_length(strategy, mask);
    ObservationMatrix out(strategy.rows(), strategy.cols());
    for (int i = 0; i < strategy.rows(); ++i)
        for (int j = 0; j < strategy.cols(); ++j) out(i, j) = transcribe_cell(strategy(i, j), mask[j], prior);
    return out;
}

MaskSymbol predicted_symbol(Placement placement, Sign sign) noexcept {
    switch (placement) {
        case Placement::Left: return sign == Sign::Heavy ? MaskSymbol::LeftHeavy : MaskSymbol::RightHeavy;
        case Placement::Right: return sign == Sign::Heavy ? MaskSymbol::RightHeavy : MaskSymbol::LeftHeavy;
        case Placement::Off: break;
    }
    return MaskSymbol::Draw;
}

Mask predicted_mask(std::span<const Placement> row, Sign sign) {
    std::vector<MaskSymbol> symbols;
    symbols.reserve(row.size());
    for (Placement p : row) symbols.push_back(predicted_symbol(p, sign));
    return Mask(std::move(symbols));
}

std::uint64_t predicted_mask_index(std::span<const Placement> row, Sign sign) noexcept {
    std::uint64_t idx = 0;
    for (Placement p : row) idx = idx * 3 + static_cast<std::uint64_t>(predicted_symbol(p, sign));
    return idx;
}

int lie_count(std::span<const Placement> row, const Mask& mask, Sign sign) {
    if (static_cast<int>(row.size()) != mask.size())
        throw DimensionError("row and mask lengths differ");
    int lies = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
        if (predicted_symbol(row[j], sign) != mask[static_cast<int>(j)]) ++lies;
    return lies;
}

std::vector<Hypothesis> surviving_hypotheses(const GameSpec& spec, const StrategyMatrix& strategy, const Mask& mask) {
    strategy.check_shape(spec);
    check_mask_length(strategy, mask);
    std::vector<Hypothesis> survivors;
    for (int i = 0; i < strategy.rows(); ++i)
        for (Sign s : signs_for(spec.prior))
            if (lie_count(strategy.row(i), mask, s) <= spec.k) survivors.push_back({i, s});
    return survivors;
}

Verdict verdict_from_survivors(std::vector<Hypothesis> survivors) {
    Verdict v;
    if (survivors.empty())
        v.kind = VerdictKind::PlayerCatchesLie;
    else if (survivors.size() == 1)
        v.kind = VerdictKind::PlayerIdentifies;
    else
        v.kind = VerdictKind::BalanceWins;
    v.survivors = std::move(survivors);
    return v;
}

Verdict adjudicate(const GameSpec& spec, const StrategyMatrix& strategy, const Mask& mask) {
    return verdict_from_survivors(surviving_hypotheses(spec, strategy, mask));
}

}  // namespace balance
