#include "balance/verifier.hpp"

#include <functional>

#include "balance/analysis.hpp"
#include "balance/coverage.hpp"
#include "balance/game.hpp"
#include "balance/strategies.hpp"

namespace balance {

namespace {

// Largest q for which per-code coverage tables are materialized.
constexpr int kMaxTabulatedRounds = 12;

void check_tabulation_limit(int q) {
    if (q > kMaxTabulatedRounds)
        throw ResourceError("strategy enumeration over 3^" + std::to_string(q) + " row codes is not supported (max q = " +
                            std::to_string(kMaxTabulatedRounds) + ")");
}

// For every row code (index in [0, 3^q)), the mask indices under which one
// of its hypotheses survives. An all-Off row under the unknown prior lists
// its ball twice, once per sign.
std::vector<std::vector<std::uint32_t>> cover_lists(int q, int k, Prior prior) {
    const std::uint64_t codes = checked_pow(3, q);
    std::vector<std::vector<std::uint32_t>> lists(codes);
    std::vector<Placement> row(static_cast<std::size_t>(q));
    for (std::uint64_t c = 0; c < codes; ++c) {
        std::uint64_t v = c;
        for (int j = q - 1; j >= 0; --j) {
            row[static_cast<std::size_t>(j)] = static_cast<Placement>(v % 3);
            v /= 3;
        }
        for (Sign s : signs_for(prior))
            for_each_in_ball(predicted_mask_index(row, s), q, k,
                             [&](std::uint64_t m) { lists[c].push_back(static_cast<std::uint32_t>(m)); });
    }
    return lists;
}

// Adds one row's coverage; on the first mask reaching two survivors the
// partial update is undone and false returned.
bool try_add(std::vector<std::uint8_t>& counts, const std::vector<std::uint32_t>& cover) {
    for (std::size_t i = 0; i < cover.size(); ++i) {
        if (++counts[cover[i]] >= 2) {
            for (std::size_t u = 0; u <= i; ++u) --counts[cover[u]];
            return false;
        }
    }
    return true;
}

void remove(std::vector<std::uint8_t>& counts, const std::vector<std::uint32_t>& cover) {
    for (std::uint32_t m : cover) --counts[m];
}

StrategyMatrix matrix_from_codes(const std::vector<std::uint64_t>& codes, int q) {
    StrategyMatrix s(static_cast<int>(codes.size()), q);
    for (int i = 0; i < s.rows(); ++i) {
        std::uint64_t v = codes[static_cast<std::size_t>(i)];
        for (int j = q - 1; j >= 0; --j) {
            s(i, j) = static_cast<Placement>(v % 3);
            v /= 3;
        }
    }
    return s;
}

std::vector<StrategyMatrix> builder_candidates(int n, int q) {
    std::vector<StrategyMatrix> out;
    for (auto build : {&complement_free_strategy, &ternary_strategy, &binary_strategy}) {
        try {
            out.push_back(build(n, q));
        } catch (const CapacityError&) {
        }
    }
    return out;
}

GameValue exhaustive_value(const GameSpec& spec, const VerifierLimits& limits) {
    check_enumeration_limit(spec.q, limits.masks);
    GameValue value;
    value.mode = ProofMode::Exhaustive;

    for (auto& candidate : builder_candidates(spec.n, spec.q)) {
        ++value.instances_checked;
        if (certify(spec, candidate, limits).outcome == CertificateOutcome::PlayerMustWin) {
            value.winner = Winner::Player;
            value.witness = std::move(candidate);
            return value;
        }
    }

    check_tabulation_limit(spec.q);
    const auto lists = cover_lists(spec.q, spec.k, spec.prior);
    const std::uint64_t codes = lists.size();
    std::vector<std::uint8_t> counts(codes, 0);
    std::vector<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(spec.n));
    std::uint64_t nodes = 0;

    // Rows are taken in strictly increasing code order: row order does not
    // affect certification, and two equal rows always share a zero-lie mask.
    std::function<bool(std::uint64_t)> extend = [&](std::uint64_t start) -> bool {
        if (static_cast<int>(chosen.size()) == spec.n) return true;
        const std::uint64_t still_needed = static_cast<std::uint64_t>(spec.n) - chosen.size();
        for (std::uint64_t c = start; c + still_needed <= codes; ++c) {
            if (++nodes > limits.search_nodes)
                throw ResourceError("exhaustive game search exceeded " + std::to_string(limits.search_nodes) +
                                    " nodes");
            if (!try_add(counts, lists[c])) continue;
            chosen.push_back(c);
            if (extend(c + 1)) return true;
            chosen.pop_back();
            remove(counts, lists[c]);
        }
        return false;
    };

    const bool found = extend(0);
    value.instances_checked += nodes;
    if (found) {
        value.winner = Winner::Player;
        value.witness = matrix_from_codes(chosen, spec.q);
    } else {
        value.winner = Winner::Balance;
    }
    return value;
}

GameValue constructive_value(const GameSpec& spec, const VerifierLimits& limits) {
    GameValue value;
    if (spec.k == 0) {
        value.mode = ProofMode::Constructive;
        std::optional<StrategyMatrix> witness;
        try {
            witness = spec.prior == Prior::Heavy ? ternary_strategy(spec.n, spec.q)
                                                 : complement_free_strategy(spec.n, spec.q);
        } catch (const CapacityError&) {
        }
        if (witness) {
            // The witness is re-certified whenever its masks can be enumerated.
            if (spec.q <= limits.masks.max_rounds) {
                value.instances_checked = 1;
                if (certify(spec, *witness, limits).outcome != CertificateOutcome::PlayerMustWin)
                    throw std::logic_error("builder witness failed certification");
            }
            value.winner = Winner::Player;
            value.witness = std::move(witness);
        } else {
            // Pigeonhole: duplicated rows, a partially complementary pair or
            // an all-Off row must exist, and constructive_attack exploits it.
            value.winner = Winner::Balance;
        }
        return value;
    }

    value.mode = ProofMode::Counting;
    const std::uint64_t mass = expected_survivor_mass(spec);
    if (mass > checked_pow(3, spec.q)) {
        value.winner = Winner::Balance;
        return value;
    }
    throw ResourceError("no constructive argument decides " + spec.to_string() + "; use exhaustive mode");
}

}  // namespace

const char* to_string(Winner w) noexcept { return w == Winner::Player ? "player" : "balance"; }

const char* to_string(ProofMode m) noexcept {
    switch (m) {
        case ProofMode::Exhaustive: return "exhaustive";
        case ProofMode::Constructive: return "constructive";
        case ProofMode::Counting: return "counting";
    }
    return "?";
}

const char* to_string(CertificateOutcome o) noexcept {
    return o == CertificateOutcome::PlayerMustWin ? "player-must-win" : "balance-wins";
}

Certificate certify(const GameSpec& spec, const StrategyMatrix& strategy, const VerifierLimits& limits) {
    Certificate cert;
    cert.attack = find_winning_mask(spec, strategy, limits.masks);
    cert.outcome = cert.attack ? CertificateOutcome::BalanceWins : CertificateOutcome::PlayerMustWin;
    cert.masks_checked = checked_pow(3, spec.q);
    return cert;
}

std::uint64_t survivor_mass(const GameSpec& spec, const StrategyMatrix& strategy, const VerifierLimits& limits) {
    spec.validate();
    strategy.check_shape(spec);
    check_enumeration_limit(spec.q, limits.masks);
    const std::uint64_t masks = checked_pow(3, spec.q);
    std::uint64_t total = 0;
    for (std::uint64_t m = 0; m < masks; ++m)
        total += surviving_hypotheses(spec, strategy, Mask::from_index(m, spec.q)).size();
    return total;
}

std::uint64_t expected_survivor_mass(const GameSpec& spec) {
    spec.validate();
    return static_cast<std::uint64_t>(spec.signs_per_coin()) * static_cast<std::uint64_t>(spec.n) *
           analysis::hamming_ball_volume(spec.q, spec.k, 3);
}

GameValue game_value(const GameSpec& spec, ProofMode mode, const VerifierLimits& limits) {
    spec.validate();
    if (mode == ProofMode::Exhaustive) return exhaustive_value(spec, limits);
    return constructive_value(spec, limits);
}

std::uint64_t census_perfect(int n, int q, Prior prior, int k, const VerifierLimits& limits) {
    const GameSpec spec = GameSpec::make(n, q, k, prior);
    const std::uint64_t codes = checked_pow(3, q);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > limits.census_matrices / codes)
            throw ResourceError("census over 3^" + std::to_string(n * q) + " matrices exceeds the cap of " +
                                std::to_string(limits.census_matrices));
        total *= codes;
    }
    check_enumeration_limit(spec.q, limits.masks);
    check_tabulation_limit(q);

    const auto lists = cover_lists(q, k, prior);
    std::vector<std::uint8_t> counts(codes, 0);
    std::vector<std::uint64_t> odometer(static_cast<std::size_t>(n), 0);
    std::uint64_t perfect = 0;
    for (std::uint64_t m = 0; m < total; ++m) {
        int added = 0;
        bool ok = true;
        for (; added < n; ++added) {
            if (!try_add(counts, lists[odometer[static_cast<std::size_t>(added)]])) {
                ok = false;
                break;
            }
        }
        if (ok) ++perfect;
        for (int i = 0; i < added; ++i) remove(counts, lists[odometer[static_cast<std::size_t>(i)]]);

        for (int i = n - 1; i >= 0; --i) {
            if (++odometer[static_cast<std::size_t>(i)] < codes) break;
            odometer[static_cast<std::size_t>(i)] = 0;
        }
    }
    return perfect;
}

PerfectCountReference perfect_count_reference(int n, int q) {
    std::uint64_t factorial_n = 1;
    for (int i = 2; i <= n; ++i) factorial_n = factorial_n * static_cast<std::uint64_t>(i);
    std::uint64_t factorial_q = 1;
    for (int i = 2; i <= q; ++i) factorial_q = factorial_q * static_cast<std::uint64_t>(i);
    const std::uint64_t base = checked_pow(2, n) * factorial_n;
    return {base * factorial_q, base};
}

std::vector<SweepRow> theorem_sweep(int q_max, Prior prior, int k, const VerifierLimits& limits) {
    std::vector<SweepRow> rows;
    for (int q = 1; q <= q_max; ++q) {
        if (k > q) continue;
        SweepRow row;
        row.q = q;
        const std::uint64_t space = checked_pow(3, q);
        const std::uint64_t c = prior == Prior::Heavy ? 1 : 2;
        if (k == 0) row.honest_threshold = prior == Prior::Heavy ? space : (space - 1) / 2;
        const std::uint64_t paper_ball = c * analysis::hamming_ball_volume(q, k, 2);
        const std::uint64_t exact_ball = c * analysis::hamming_ball_volume(q, k, 3);
        row.paper_counting_threshold = (space + paper_ball - 1) / paper_ball;
        row.exact_counting_threshold = (space + exact_ball - 1) / exact_ball;

        // Perfect strategies stay perfect when a row is dropped, so the player
        // wins exactly on an initial segment of n.
        for (int n = 1; static_cast<std::uint64_t>(n) <= space + 1; ++n) {
            const GameSpec spec = GameSpec::make(n, q, k, prior);
            std::optional<GameValue> value;
            try {
                value = game_value(spec, ProofMode::Exhaustive, limits);
            } catch (const ResourceError&) {
                try {
                    value = game_value(spec, ProofMode::Constructive, limits);
                } catch (const ResourceError&) {
                }
            }
            if (!value) break;
            if (value->winner == Winner::Player) {
                row.player_max_n = n;
                row.player_mode = value->mode;
            } else {
                row.balance_min_n = n;
                row.balance_mode = value->mode;
                break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace balance
