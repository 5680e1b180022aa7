#pragma once

// Domain types of the predetermined balance game.
//
// A player fixes an n x q strategy matrix over {Left, Right, Off} before any
// weighing; the balance then answers with a length-q mask over
// {LeftHeavy, RightHeavy, Draw}. Coin indices are 0-based throughout the
// library and printed 1-based by the CLI.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "balance/errors.hpp"

namespace balance {

enum class Prior : std::uint8_t { Heavy, Unknown };

enum class Placement : std::uint8_t { Left = 0, Right = 1, Off = 2 };

enum class MaskSymbol : std::uint8_t { LeftHeavy = 0, RightHeavy = 1, Draw = 2 };

/// Evidence characters of the transcription tables: +, -, x, +/-.
enum class ObsEntry : std::uint8_t { Plus, Minus, Cross, PlusMinus };

enum class Sign : std::uint8_t { Heavy, Light };

char to_char(Placement p) noexcept;
char to_char(MaskSymbol m) noexcept;
char to_char(Sign s) noexcept;
const char* to_string(ObsEntry e) noexcept;
const char* to_string(Prior p) noexcept;

Placement placement_from_char(char c);
MaskSymbol mask_symbol_from_char(char c);
Prior prior_from_string(std::string_view s);

/// (n coins, q rounds, k lies, prior).
struct GameSpec {
    int n = 1;
    int q = 1;
    int k = 0;
    Prior prior = Prior::Heavy;

    /// Validating constructor: n >= 1, q >= 1, 0 <= k <= q.
    static GameSpec make(int n, int q, int k, Prior prior);

    /// Parses "n,q,k,prior", e.g. "4,2,0,heavy".
    static GameSpec parse(std::string_view text);

    void validate() const;
    std::string to_string() const;

    /// Hypotheses per coin: 1 for the heavy prior, 2 for unknown.
    int signs_per_coin() const noexcept { return prior == Prior::Heavy ? 1 : 2; }

    friend bool operator==(const GameSpec&, const GameSpec&) = default;
};

/// Row-major n x q grid of placements.
class StrategyMatrix {
public:
    StrategyMatrix() = default;
    StrategyMatrix(int n, int q, Placement fill = Placement::Off);
    explicit StrategyMatrix(const std::vector<std::vector<Placement>>& rows);

    /// Rows as strings over {L,R,O}.
    static StrategyMatrix from_strings(const std::vector<std::string>& rows);

    int rows() const noexcept { return n_; }
    int cols() const noexcept { return q_; }

    Placement operator()(int i, int j) const { return cells_[index(i, j)]; }
    Placement& operator()(int i, int j) { return cells_[index(i, j)]; }

    std::span<const Placement> row(int i) const {
        return {cells_.data() + static_cast<std::size_t>(i) * q_, static_cast<std::size_t>(q_)};
    }
    std::span<Placement> row(int i) {
        return {cells_.data() + static_cast<std::size_t>(i) * q_, static_cast<std::size_t>(q_)};
    }

    std::string row_string(int i) const;
    std::vector<std::string> to_strings() const;

    /// Throws DimensionError unless the shape is spec.n x spec.q.
    void check_shape(const GameSpec& spec) const;

    friend bool operator==(const StrategyMatrix&, const StrategyMatrix&) = default;

private:
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * q_ + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    int q_ = 0;
    std::vector<Placement> cells_;
};

/// A length-q verdict string announced by the balance.
class Mask {
public:
    Mask() = default;
    explicit Mask(std::vector<MaskSymbol> symbols) : symbols_(std::move(symbols)) {}
    Mask(std::initializer_list<MaskSymbol> symbols) : symbols_(symbols) {}

    /// Parses a string over {L,R,D}.
    static Mask parse(std::string_view text);

    /// Inverse of index(): base-3 digits, first symbol most significant,
    /// LeftHeavy < RightHeavy < Draw.
    static Mask from_index(std::uint64_t index, int length);

    /// Position of this mask in lexicographic order over {L,R,D}^q.
    std::uint64_t index() const noexcept;

    int size() const noexcept { return static_cast<int>(symbols_.size()); }
    MaskSymbol operator[](int j) const { return symbols_[static_cast<std::size_t>(j)]; }
    std::span<const MaskSymbol> symbols() const noexcept { return symbols_; }

    std::string to_string() const;

    friend bool operator==(const Mask&, const Mask&) = default;

private:
    std::vector<MaskSymbol> symbols_;
};

/// n x q grid of evidence characters, same shape as its strategy matrix.
class ObservationMatrix {
public:
    ObservationMatrix(int n, int q) : n_(n), q_(q), cells_(static_cast<std::size_t>(n) * q, ObsEntry::Cross) {}

    int rows() const noexcept { return n_; }
    int cols() const noexcept { return q_; }
    ObsEntry operator()(int i, int j) const { return cells_[static_cast<std::size_t>(i) * q_ + j]; }
    ObsEntry& operator()(int i, int j) { return cells_[static_cast<std::size_t>(i) * q_ + j]; }

    friend bool operator==(const ObservationMatrix&, const ObservationMatrix&) = default;

private:
    int n_;
    int q_;
    std::vector<ObsEntry> cells_;
};

struct Hypothesis {
    int coin = 0;
    Sign sign = Sign::Heavy;

    /// 1-based human form, e.g. "6+" (heavy) or "3-" (light).
    std::string to_string() const;

    friend auto operator<=>(const Hypothesis&, const Hypothesis&) = default;
};

enum class VerdictKind : std::uint8_t { PlayerIdentifies, PlayerCatchesLie, BalanceWins };

const char* to_string(VerdictKind kind) noexcept;

/// Outcome of one concrete playout. `survivors` holds the identified
/// hypothesis, nothing, or the (>= 2) indistinguishable hypotheses.
struct Verdict {
    VerdictKind kind = VerdictKind::PlayerCatchesLie;
    std::vector<Hypothesis> survivors;

    bool player_wins() const noexcept { return kind != VerdictKind::BalanceWins; }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Integer power with overflow detection; throws CapacityError on overflow.
std::uint64_t checked_pow(std::uint64_t base, int exponent);

}  // namespace balance
