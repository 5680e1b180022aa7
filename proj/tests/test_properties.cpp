#include <doctest.h>

#include <cmath>
#include <set>

#include "balance/adversary.hpp"
#include "balance/game.hpp"
#include "balance/verifier.hpp"
#include "oracles.hpp"

using namespace balance;

namespace {

// Every n x q matrix with n * q <= limit, visited in odometer order.
template <typename F>
void for_each_small_matrix(int n, int q, F&& f) {
    const std::uint64_t total = checked_pow(3, n * q);
    std::vector<std::string> rows(static_cast<std::size_t>(n), std::string(static_cast<std::size_t>(q), 'L'));
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (auto& row : rows)
            for (auto& cell : row) {
                cell = "LRO"[c % 3];
                c /= 3;
            }
        f(rows);
    }
}

const Prior kPriors[] = {Prior::Heavy, Prior::Unknown};

}  // namespace

TEST_CASE("k = 0 survival equals the table reading") {
    for (int n = 1; n <= 4; ++n)
        for (int q = 1; n * q <= 8; ++q)
            for (Prior prior : kPriors) {
                const bool unknown = prior == Prior::Unknown;
                const auto spec = GameSpec::make(n, q, 0, prior);
                std::vector<std::string> mask_text;
                std::vector<Mask> masks;
                for (std::uint64_t m = 0; m < checked_pow(3, q); ++m) {
                    mask_text.push_back(oracle::mask_string(m, q));
                    masks.push_back(Mask::parse(mask_text.back()));
                }
                for_each_small_matrix(n, q, [&](const std::vector<std::string>& rows) {
                    const auto s = StrategyMatrix::from_strings(rows);
                    for (std::size_t m = 0; m < masks.size(); ++m) {
                        const std::string& ms = mask_text[m];
                        std::vector<Hypothesis> want;
                        for (int i = 0; i < n; ++i) {
                            if (oracle::survives_by_table(rows[i], ms, unknown, false)) want.push_back({i, Sign::Heavy});
                            if (unknown && oracle::survives_by_table(rows[i], ms, unknown, true))
                                want.push_back({i, Sign::Light});
                        }
                        const auto got = surviving_hypotheses(spec, s, masks[m]);
                        if (got != want) {
                            CAPTURE(spec.to_string());
                            CAPTURE(ms);
                            CHECK(got == want);
                            return;
                        }
                    }
                });
            }
}

TEST_CASE("survivor mass is the same for every matrix") {
    oracle::Lcg rng(2024);
    for (int q = 1; q <= 5; ++q)
        for (int k = 0; k <= std::min(q, 2); ++k)
            for (Prior prior : kPriors)
                for (int t = 0; t < 20; ++t) {
                    const int n = 1 + rng.below(6);
                    const auto spec = GameSpec::make(n, q, k, prior);
                    const auto s = StrategyMatrix::from_strings(oracle::random_rows(rng, n, q));
                    double ball = 0;
                    for (int j = 0; j <= k; ++j) ball += oracle::binomial(q, j) * std::pow(2.0, j);
                    const auto want = static_cast<std::uint64_t>(spec.signs_per_coin() * n * ball);
                    CHECK(survivor_mass(spec, s) == want);
                }
}

TEST_CASE("predicted masks are injective") {
    for (int q = 1; q <= 5; ++q) {
        std::set<std::uint64_t> heavy;
        std::set<std::uint64_t> light;
        const std::uint64_t codes = checked_pow(3, q);
        for (std::uint64_t c = 0; c < codes; ++c) {
            std::string text = oracle::mask_string(c, q);
            for (auto& ch : text)
                if (ch == 'D') ch = 'O';
            const auto s = StrategyMatrix::from_strings({text});
            const auto h = predicted_mask_index(s.row(0), Sign::Heavy);
            const auto l = predicted_mask_index(s.row(0), Sign::Light);
            heavy.insert(h);
            light.insert(l);
            CHECK((h == l) == (text.find_first_not_of('O') == std::string::npos));
        }
        CHECK(heavy.size() == codes);
        CHECK(light.size() == codes);
    }
}

TEST_CASE("adjudication is deterministic") {
    oracle::Lcg rng(5);
    for (int t = 0; t < 200; ++t) {
        const int q = 1 + rng.below(4);
        const int n = 1 + rng.below(5);
        const auto spec = GameSpec::make(n, q, rng.below(q + 1), rng.below(2) ? Prior::Heavy : Prior::Unknown);
        const auto s = StrategyMatrix::from_strings(oracle::random_rows(rng, n, q));
        const auto m = Mask::from_index(static_cast<std::uint64_t>(rng.below(static_cast<int>(checked_pow(3, q)))), q);
        const Verdict v = adjudicate(spec, s, m);
        CHECK(v == adjudicate(spec, s, m));
        CHECK((v.kind == VerdictKind::BalanceWins) == (v.survivors.size() >= 2));
        CHECK((v.kind == VerdictKind::PlayerCatchesLie) == v.survivors.empty());
    }
}

TEST_CASE("attacks are sound and agree with certification") {
    oracle::Lcg rng(77);
    for (int t = 0; t < 3000; ++t) {
        const int q = 1 + rng.below(4);
        const int n = 1 + rng.below(std::max(1, 12 / q));
        const int k = rng.below(2) ? 0 : rng.below(q + 1);
        const auto spec = GameSpec::make(n, q, k, rng.below(2) ? Prior::Heavy : Prior::Unknown);
        const auto s = StrategyMatrix::from_strings(oracle::random_rows(rng, n, q));
        const auto attack = find_winning_mask(spec, s);
        const auto cert = certify(spec, s);
        CHECK(attack.has_value() == (cert.outcome == CertificateOutcome::BalanceWins));
        if (attack) {
            const auto v = adjudicate(spec, s, attack->mask);
            CHECK(v.kind == VerdictKind::BalanceWins);
            CHECK(v.survivors == attack->survivors);
        }
        if (k == 0) {
            // A structural attack exists only when some attack exists, and for
            // the unknown prior it exists exactly then.
            const auto structural = constructive_attack(spec, s);
            if (structural) {
                CHECK(attack.has_value());
                CHECK(adjudicate(spec, s, structural->mask).kind == VerdictKind::BalanceWins);
            }
            if (spec.prior == Prior::Unknown || !attack) CHECK(structural.has_value() == attack.has_value());
        }
    }
}

TEST_CASE("converse theorems") {
    oracle::Lcg rng(13);
    for (int q = 1; q <= 3; ++q) {
        const int heavy_n = static_cast<int>(checked_pow(3, q)) + 1;
        const int unknown_n = static_cast<int>((checked_pow(3, q) - 1) / 2) + 1;
        for (int t = 0; t < 100; ++t) {
            const auto hs = StrategyMatrix::from_strings(oracle::random_rows(rng, heavy_n, q));
            CHECK(find_winning_mask(GameSpec::make(heavy_n, q, 0, Prior::Heavy), hs).has_value());
            CHECK(constructive_attack(GameSpec::make(heavy_n, q, 0, Prior::Heavy), hs).has_value());
            const auto us = StrategyMatrix::from_strings(oracle::random_rows(rng, unknown_n, q));
            CHECK(constructive_attack(GameSpec::make(unknown_n, q, 0, Prior::Unknown), us).has_value());
        }
    }
}
