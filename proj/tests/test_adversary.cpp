#include <doctest.h>

#include "balance/adversary.hpp"
#include "balance/coverage.hpp"
#include "balance/game.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace balance;

TEST_CASE("exhaustive attack") {
    CHECK_FALSE(find_winning_mask(GameSpec::make(4, 2, 0, Prior::Heavy), fixtures::four_by_two()));

    const auto dup = find_winning_mask(GameSpec::make(3, 1, 0, Prior::Heavy), StrategyMatrix::from_strings({"L", "L", "R"}));
    REQUIRE(dup);
    CHECK(dup->mask.to_string() == "L");
    CHECK(dup->survivors == std::vector<Hypothesis>{{0, Sign::Heavy}, {1, Sign::Heavy}});
    CHECK(dup->method == AttackMethod::Exhaustive);

    const auto eight = find_winning_mask(GameSpec::make(8, 3, 0, Prior::Unknown), fixtures::eight_losing());
    REQUIRE(eight);
    CHECK(adjudicate(GameSpec::make(8, 3, 0, Prior::Unknown), fixtures::eight_losing(), eight->mask).kind ==
          VerdictKind::BalanceWins);
}

TEST_CASE("enumeration cap") {
    const auto spec = GameSpec::make(2, 17, 0, Prior::Heavy);
    const StrategyMatrix s(2, 17);
    CHECK_THROWS_AS(find_winning_mask(spec, s), ResourceError);
    CHECK_THROWS_AS(find_winning_mask(GameSpec::make(2, 5, 0, Prior::Heavy), StrategyMatrix(2, 5), {4}), ResourceError);
    CHECK_NOTHROW(check_enumeration_limit(16, {}));
}

TEST_CASE("every matrix loses at (3,2,1,heavy)") {
    const auto spec = GameSpec::make(3, 2, 1, Prior::Heavy);
    for (std::uint64_t code = 0; code < 729; ++code) {
        StrategyMatrix s(3, 2);
        std::uint64_t c = code;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) {
                s(i, j) = static_cast<Placement>(c % 3);
                c /= 3;
            }
        CHECK(find_winning_mask(spec, s).has_value());
    }
}

TEST_CASE("constructive attacks") {
    const auto unknown = GameSpec::make(3, 3, 0, Prior::Unknown);
    const auto pc = constructive_attack(unknown, StrategyMatrix::from_strings({"LLL", "LOR", "ROL"}));
    REQUIRE(pc);
    CHECK(pc->method == AttackMethod::PartialComplement);
    CHECK(pc->mask.to_string() == "LDR");
    CHECK(pc->survivors == std::vector<Hypothesis>{{1, Sign::Heavy}, {2, Sign::Light}});

    const auto off = constructive_attack(unknown, StrategyMatrix::from_strings({"LLL", "OOO", "RRL"}));
    REQUIRE(off);
    CHECK(off->method == AttackMethod::AllOffRow);
    CHECK(off->mask.to_string() == "DDD");
    CHECK(off->survivors == std::vector<Hypothesis>{{1, Sign::Heavy}, {1, Sign::Light}});

    const auto dup = constructive_attack(GameSpec::make(3, 2, 0, Prior::Heavy), StrategyMatrix::from_strings({"LR", "OO", "LR"}));
    REQUIRE(dup);
    CHECK(dup->method == AttackMethod::DuplicateRows);
    CHECK(dup->mask.to_string() == "LR");

    CHECK_FALSE(constructive_attack(GameSpec::make(4, 2, 0, Prior::Heavy), fixtures::four_by_two()));
    CHECK_FALSE(constructive_attack(GameSpec::make(9, 2, 0, Prior::Heavy),
                                    StrategyMatrix::from_strings({"LL", "LR", "LO", "RL", "RR", "RO", "OL", "OR", "OO"})));
    CHECK_THROWS_AS(constructive_attack(GameSpec::make(2, 2, 1, Prior::Heavy), StrategyMatrix(2, 2)), DomainError);
}

TEST_CASE("coverage counts agree with direct survival") {
    oracle::Lcg rng(11);
    for (int t = 0; t < 200; ++t) {
        const int q = 1 + rng.below(4);
        const int n = 1 + rng.below(6);
        const int k = rng.below(q + 1);
        const Prior prior = rng.below(2) ? Prior::Unknown : Prior::Heavy;
        const auto spec = GameSpec::make(n, q, k, prior);
        const auto s = StrategyMatrix::from_strings(oracle::random_rows(rng, n, q));
        const MaskCoverage cov(spec, s);
        for (std::uint64_t m = 0; m < cov.mask_count(); ++m) {
            const auto direct = surviving_hypotheses(spec, s, Mask::from_index(m, q)).size();
            CHECK(cov.survivors(m) == std::min<std::size_t>(direct, 255));
        }
    }
}

TEST_CASE("hamming ball enumeration") {
    std::vector<std::uint64_t> seen;
    for_each_in_ball(Mask::parse("LRD").index(), 3, 1, [&](std::uint64_t m) { seen.push_back(m); });
    CHECK(seen.size() == 7);
    for (auto m : seen) {
        const std::string s = Mask::from_index(m, 3).to_string();
        int diff = 0;
        for (int j = 0; j < 3; ++j) diff += s[j] != "LRD"[j];
        CHECK(diff <= 1);
    }
}
