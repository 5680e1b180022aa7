#include "balance/types.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace balance {

char to_char(Placement p) noexcept {
    switch (p) {
        case Placement::Left: return 'L';
        case Placement::Right: return 'R';
        case Placement::Off: return 'O';
    }
    return '?';
}

char to_char(MaskSymbol m) noexcept {
    switch (m) {
        case MaskSymbol::LeftHeavy: return 'L';
        case MaskSymbol::RightHeavy: return 'R';
        case MaskSymbol::Draw: return 'D';
    }
    return '?';
}

char to_char(Sign s) noexcept { return s == Sign::Heavy ? '+' : '-'; }

const char* to_string(ObsEntry e) noexcept {
    switch (e) {
        case ObsEntry::Plus: return "+";
        case ObsEntry::Minus: return "-";
        case ObsEntry::Cross: return "x";
        case ObsEntry::PlusMinus: return "+-";
    }
    return "?";
}

const char* to_string(Prior p) noexcept { return p == Prior::Heavy ? "heavy" : "unknown"; }

const char* to_string(VerdictKind kind) noexcept {
    switch (kind) {
        case VerdictKind::PlayerIdentifies: return "player-identifies";
        case VerdictKind::PlayerCatchesLie: return "player-catches-lie";
        case VerdictKind::BalanceWins: return "balance-wins";
    }
    return "?";
}

Placement placement_from_char(char c) {
    switch (c) {
        case 'L': return Placement::Left;
        case 'R': return Placement::Right;
        case 'O': return Placement::Off;
        default: throw ParseError(std::string("invalid placement '") + c + "', expected L, R or O");
    }
}

MaskSymbol mask_symbol_from_char(char c) {
    switch (c) {
        case 'L': return MaskSymbol::LeftHeavy;
        case 'R': return MaskSymbol::RightHeavy;
        case 'D': return MaskSymbol::Draw;
        default: throw ParseError(std::string("invalid mask symbol '") + c + "', expected L, R or D");
    }
}

Prior prior_from_string(std::string_view s) {
    if (s == "heavy") return Prior::Heavy;
    if (s == "unknown") return Prior::Unknown;
    throw ParseError("invalid prior '" + std::string(s) + "', expected heavy or unknown");
}

GameSpec GameSpec::make(int n, int q, int k, Prior prior) {
    GameSpec spec{n, q, k, prior};
    spec.validate();
    return spec;
}

void GameSpec::validate() const {
    if (n < 1) throw DimensionError("coin count must be positive, got " + std::to_string(n));
    if (q < 1) throw DimensionError("round count must be positive, got " + std::to_string(q));
    if (k < 0 || k > q)
        throw DimensionError("lie budget must lie in [0, q], got " + std::to_string(k));
}

GameSpec GameSpec::parse(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 4)
        throw ParseError("spec must have the form n,q,k,prior (got '" + std::string(text) + "')");

    auto to_int = [&](std::string_view field, const char* name) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw ParseError(std::string("spec field ") + name + " is not an integer: '" + std::string(field) + "'");
        return value;
    };
    return make(to_int(parts[0], "n"), to_int(parts[1], "q"), to_int(parts[2], "k"), prior_from_string(parts[3]));
}

std::string GameSpec::to_string() const {
    return std::to_string(n) + "," + std::to_string(q) + "," + std::to_string(k) + "," + balance::to_string(prior);
}

StrategyMatrix::StrategyMatrix(int n, int q, Placement fill) : n_(n), q_(q) {
    if (n < 0 || q < 0) throw DimensionError("negative strategy matrix shape");
    cells_.assign(static_cast<std::size_t>(n) * q, fill);
}

StrategyMatrix::StrategyMatrix(const std::vector<std::vector<Placement>>& rows) {
    n_ = static_cast<int>(rows.size());
    q_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    cells_.reserve(static_cast<std::size_t>(n_) * q_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != q_) throw DimensionError("strategy matrix rows have unequal lengths");
        cells_.insert(cells_.end(), r.begin(), r.end());
    }
}

StrategyMatrix StrategyMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<std::vector<Placement>> cells;
    cells.reserve(rows.size());
    for (const auto& s : rows) {
        std::vector<Placement> r;
        r.reserve(s.size());
        for (char c : s) r.push_back(placement_from_char(c));
        cells.push_back(std::move(r));
    }
    return StrategyMatrix(cells);
}

std::string StrategyMatrix::row_string(int i) const {
    std::string out;
    out.reserve(static_cast<std::size_t>(q_));
    for (Placement p : row(i)) out.push_back(to_char(p));
    return out;
}

std::vector<std::string> StrategyMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out.push_back(row_string(i));
    return out;
}

void StrategyMatrix::check_shape(const GameSpec& spec) const {
    if (n_ != spec.n || q_ != spec.q)
        throw DimensionError("strategy matrix is " + std::to_string(n_) + "x" + std::to_string(q_) +
                             " but the game is " + std::to_string(spec.n) + "x" + std::to_string(spec.q));
}

Mask Mask::parse(std::string_view text) {
    if (text.empty()) throw ParseError("mask is empty");
    std::vector<MaskSymbol> symbols;
    symbols.reserve(text.size());
    for (std::size_t j = 0; j < text.size(); ++j) {
        try {
            symbols.push_back(mask_symbol_from_char(text[j]));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), 1, static_cast<int>(j) + 1);
        }
    }
    return Mask(std::move(symbols));
}

Mask Mask::from_index(std::uint64_t index, int length) {
    std::vector<MaskSymbol> symbols(static_cast<std::size_t>(length));
    for (int j = length - 1; j >= 0; --j) {
        symbols[static_cast<std::size_t>(j)] = static_cast<MaskSymbol>(index % 3);
        index /= 3;
    }
    return Mask(std::move(symbols));
}

std::uint64_t Mask::index() const noexcept {
    std::uint64_t idx = 0;
    for (MaskSymbol m : symbols_) idx = idx * 3 + static_cast<std::uint64_t>(m);
    return idx;
}

std::string Mask::to_string() const {
    std::string out;
    out.reserve(symbols_.size());
    for (MaskSymbol m : symbols_) out.push_back(to_char(m));
    return out;
}

std::string Hypothesis::to_string() const { return std::to_string(coin + 1) + to_char(sign); }

std::uint64_t checked_pow(std::uint64_t base, int exponent) {
    std::uint64_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
            throw CapacityError("integer overflow computing " + std::to_string(base) + "^" + std::to_string(exponent));
        result *= base;
    }
    return result;
}

}  // namespace balance
