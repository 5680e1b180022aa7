#pragma once

// Must-win certification by exhaustive enumeration, plus the brute-force
// censuses that the threshold theorems are checked against.

#include <cstdint>
#include <optional>
#include <vector>

#include "balance/adversary.hpp"
#include "balance/types.hpp"

namespace balance {

enum class CertificateOutcome : std::uint8_t { PlayerMustWin, BalanceWins };

struct Certificate {
    CertificateOutcome outcome = CertificateOutcome::PlayerMustWin;
    std::optional<AttackResult> attack;  ///< set iff outcome == BalanceWins
    std::uint64_t masks_checked = 0;
};

enum class Winner : std::uint8_t { Player, Balance };

/// Strength of the argument behind a game value.
///   Exhaustive:   complete search over strategies.
///   Constructive: builder witness or structural converse (k = 0 theorems).
///   Counting:     expected survivor count over uniform masks exceeds one.
enum class ProofMode : std::uint8_t { Exhaustive, Constructive, Counting };

const char* to_string(Winner w) noexcept;
const char* to_string(ProofMode m) noexcept;
const char* to_string(CertificateOutcome o) noexcept;

struct GameValue {
    Winner winner = Winner::Balance;
    std::optional<StrategyMatrix> witness;  ///< a perfect strategy when the player wins
    std::uint64_t instances_checked = 0;
    ProofMode mode = ProofMode::Exhaustive;
};

struct VerifierLimits {
    EnumerationLimits masks;
    /// Search-node budget of the exhaustive game-value search.
    std::uint64_t search_nodes = 100'000'000;
    /// Largest 3^(n q) the flat census may enumerate.
    std::uint64_t census_matrices = 100'000'000;
};

/// PlayerMustWin iff every one of the 3^q masks leaves at most one survivor.
Certificate certify(const GameSpec& spec, const StrategyMatrix& strategy, const VerifierLimits& limits = {});

/// Sum over all 3^q masks of the number of surviving hypotheses, computed
/// mask by mask through surviving_hypotheses().
std::uint64_t survivor_mass(const GameSpec& spec, const StrategyMatrix& strategy, const VerifierLimits& limits = {});

/// c * n * sum_{j<=k} C(q,j) 2^j with c = 1 (heavy) or 2 (unknown): the value
/// survivor_mass() takes for every strategy.
std::uint64_t expected_survivor_mass(const GameSpec& spec);

/// Exhaustive mode first tries the builder outputs, then runs a complete
/// branch-and-bound over row multisets (rows in non-decreasing code order,
/// pruned as soon as some mask has two survivors). Certification is
/// invariant under row order and survivor counts never drop when rows are
/// added, so the search decides the game exactly.
///
/// Constructive mode uses the threshold theorems for k = 0 and the counting
/// bound for k > 0; it throws ResourceError when neither decides.
GameValue game_value(const GameSpec& spec, ProofMode mode, const VerifierLimits& limits = {});

/// Exact number of n x q matrices (ordered rows) that certify PlayerMustWin,
/// by flat enumeration of all 3^(n q) matrices.
std::uint64_t census_perfect(int n, int q, Prior prior, int k = 0, const VerifierLimits& limits = {});

/// Reference counts for a full complement-free codebook.
struct PerfectCountReference {
    std::uint64_t with_column_factor = 0;  ///< 2^n n! q!
    std::uint64_t codebook_times_order = 0;  ///< 2^n n!
};

PerfectCountReference perfect_count_reference(int n, int q);

struct SweepRow {
    int q = 0;
    std::optional<int> player_max_n;   ///< largest n the player wins
    std::optional<int> balance_min_n;  ///< smallest n the balance wins
    ProofMode player_mode = ProofMode::Exhaustive;
    ProofMode balance_mode = ProofMode::Exhaustive;
    std::optional<std::uint64_t> honest_threshold;  ///< 3^q or (3^q-1)/2 when k = 0
    std::uint64_t paper_counting_threshold = 0;      ///< smallest n with c n sum C(q,j) >= 3^q
    std::uint64_t exact_counting_threshold = 0;      ///< smallest n with c n sum C(q,j) 2^j >= 3^q
};

/// Boundary between player and balance wins for q = 1..q_max. Exhaustive
/// search is used while it fits in `limits`; otherwise the constructive or
/// counting argument. An undecided side is left empty.
std::vector<SweepRow> theorem_sweep(int q_max, Prior prior, int k, const VerifierLimits& limits = {});

}  // namespace balance
