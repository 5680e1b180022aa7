#include "balance/strategies.hpp"

#include <algorithm>
#include <unordered_set>

namespace balance {

namespace {

void check_shape_args(int n, int q) {
    if (n < 1) throw DimensionError("coin count must be positive");
    if (q < 1) throw DimensionError("round count must be positive");
}

// Writes `value` as q base-`radix` digits, most significant first.
void write_digits(std::span<Placement> row, std::uint64_t value, int radix) {
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
        *it = static_cast<Placement>(value % static_cast<std::uint64_t>(radix));
        value /= static_cast<std::uint64_t>(radix);
    }
}

std::uint64_t code_index(std::span<const Placement> row) {
    std::uint64_t idx = 0;
    for (Placement p : row) idx = idx * 3 + static_cast<std::uint64_t>(p);
    return idx;
}

}  // namespace

StrategyMatrix binary_strategy(int n, int q) {
    check_shape_args(n, q);
    if (q < 63 && static_cast<std::uint64_t>(n) > (std::uint64_t{1} << q))
        throw CapacityError("binary strategy holds at most 2^" + std::to_string(q) + " coins, got " +
                            std::to_string(n));
    StrategyMatrix s(n, q);
    for (int i = 0; i < n; ++i) write_digits(s.row(i), static_cast<std::uint64_t>(i), 2);
    return s;
}

StrategyMatrix ternary_strategy(int n, int q) {
    check_shape_args(n, q);
    if (q < 40 && static_cast<std::uint64_t>(n) > checked_pow(3, q))
        throw CapacityError("ternary strategy holds at most 3^" + std::to_string(q) + " coins, got " +
                            std::to_string(n));
    StrategyMatrix s(n, q);
    for (int i = 0; i < n; ++i) write_digits(s.row(i), static_cast<std::uint64_t>(i), 3);
    return s;
}

StrategyMatrix complement_free_strategy(int n, int q) {
    check_shape_args(n, q);
    if (q < 40 && static_cast<std::uint64_t>(n) > (checked_pow(3, q) - 1) / 2)
        throw CapacityError("complement-free strategy holds at most (3^" + std::to_string(q) + "-1)/2 coins, got " +
                            std::to_string(n));

    StrategyMatrix s(n, q);
    std::unordered_set<std::uint64_t> kept;
    std::vector<Placement> code(static_cast<std::size_t>(q), Placement::Left);
    int taken = 0;
    for (std::uint64_t value = 0; taken < n; ++value) {
        write_digits(code, value, 3);
        if (std::all_of(code.begin(), code.end(), [](Placement p) { return p == Placement::Off; })) continue;
        if (kept.contains(code_index(partial_complement(code)))) continue;
        kept.insert(value);
        std::copy(code.begin(), code.end(), s.row(taken).begin());
        ++taken;
    }
    return s;
}

StrategyMatrix random_strategy(int n, int q, const RandomStrategyParams& params) {
    check_shape_args(n, q);
    if (!(params.r >= 0.0 && params.r <= 1.0))
        throw DomainError("on-balance probability r must lie in [0, 1], got " + std::to_string(params.r));
    std::mt19937_64 rng(params.seed);
    const double half = params.r / 2.0;
    StrategyMatrix s(n, q);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < q; ++j) {
            const double u = uniform01(rng);
            s(i, j) = u < half ? Placement::Left : (u < params.r ? Placement::Right : Placement::Off);
        }
    }
    return s;
}

StrategyMatrix uniform_random_strategy(int n, int q, std::uint64_t seed) {
    check_shape_args(n, q);
    std::mt19937_64 rng(seed);
    StrategyMatrix s(n, q);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < q; ++j) s(i, j) = static_cast<Placement>(static_cast<int>(uniform01(rng) * 3.0));
    return s;
}

RowProfile row_profile(const StrategyMatrix& strategy) {
    RowProfile profile;
    profile.qvec.reserve(static_cast<std::size_t>(strategy.rows()));
    for (int i = 0; i < strategy.rows(); ++i) {
        auto row = strategy.row(i);
        profile.qvec.push_back(
            static_cast<int>(std::count_if(row.begin(), row.end(), [](Placement p) { return p != Placement::Off; })));
    }
    return profile;
}

std::vector<Placement> partial_complement(std::span<const Placement> row) {
    std::vector<Placement> out;
    out.reserve(row.size());
    for (Placement p : row) {
        switch (p) {
            case Placement::Left: out.push_back(Placement::Right); break;
            case Placement::Right: out.push_back(Placement::Left); break;
            case Placement::Off: out.push_back(Placement::Off); break;
        }
    }
    return out;
}

bool partially_complementary(std::span<const Placement> a, std::span<const Placement> b) {
    if (a.size() != b.size()) return false;
    auto c = partial_complement(a);
    return std::equal(c.begin(), c.end(), b.begin());
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace balance
