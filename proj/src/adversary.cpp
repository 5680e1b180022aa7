#include "balance/adversary.hpp"

#include <algorithm>
#include <stdexcept>

#include "balance/coverage.hpp"
#include "balance/game.hpp"
#include "balance/strategies.hpp"

namespace balance {

namespace {

// Every attack is re-adjudicated before it leaves this module.
AttackResult sealed(const GameSpec& spec, const StrategyMatrix& strategy, Mask mask, AttackMethod method) {
    Verdict v = adjudicate(spec, strategy, mask);
    if (v.kind != VerdictKind::BalanceWins)
        throw std::logic_error("attack mask " + mask.to_string() + " does not defeat the strategy");
    return AttackResult{std::move(mask), std::move(v.survivors), method};
}

}  // namespace

const char* to_string(AttackMethod method) noexcept {
    switch (method) {
        case AttackMethod::Exhaustive: return "exhaustive";
        case AttackMethod::DuplicateRows: return "duplicate-rows";
        case AttackMethod::PartialComplement: return "partial-complement";
        case AttackMethod::AllOffRow: return "all-off-row";
    }
    return "?";
}

void check_enumeration_limit(int q, const EnumerationLimits& limits) {
    if (q > limits.max_rounds)
        throw ResourceError("mask enumeration over 3^" + std::to_string(q) + " masks exceeds the cap of 3^" +
                            std::to_string(limits.max_rounds));
}

std::optional<AttackResult> find_winning_mask(const GameSpec& spec, const StrategyMatrix& strategy,
                                              const EnumerationLimits& limits) {
    spec.validate();
    strategy.check_shape(spec);
    check_enumeration_limit(spec.q, limits);
    MaskCoverage coverage(spec, strategy);
    const std::int64_t first = coverage.first_with_at_least(2);
    if (first < 0) return std::nullopt;
    return sealed(spec, strategy, Mask::from_index(static_cast<std::uint64_t>(first), spec.q),
                  AttackMethod::Exhaustive);
}

std::optional<AttackResult> constructive_attack(const GameSpec& spec, const StrategyMatrix& strategy) {
    spec.validate();
    strategy.check_shape(spec);
    if (spec.k != 0) throw DomainError("constructive attacks exist only for the honest game (k = 0)");

    const int n = strategy.rows();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto a = strategy.row(i);
            auto b = strategy.row(j);
            if (std::equal(a.begin(), a.end(), b.begin()))
                return sealed(spec, strategy, predicted_mask(a, Sign::Heavy), AttackMethod::DuplicateRows);
        }
    }
    if (spec.prior == Prior::Heavy) return std::nullopt;

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (partially_complementary(strategy.row(i), strategy.row(j)))
                return sealed(spec, strategy, predicted_mask(strategy.row(i), Sign::Heavy),
                              AttackMethod::PartialComplement);
        }
    }
    for (int i = 0; i < n; ++i) {
        auto row = strategy.row(i);
        if (std::all_of(row.begin(), row.end(), [](Placement p) { return p == Placement::Off; }))
            return sealed(spec, strategy, predicted_mask(row, Sign::Heavy), AttackMethod::AllOffRow);
    }
    return std::nullopt;
}

}  // namespace balance
