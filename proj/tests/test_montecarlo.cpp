#include <doctest.h>

#include <cmath>

#include "balance/montecarlo.hpp"

using namespace balance;

TEST_CASE("random player simulation") {
    const auto spec = GameSpec::make(4, 2, 0, Prior::Heavy);
    const auto off = simulate_random_player(spec, 0.0, 200, 1);
    CHECK(off.successes == 200);
    CHECK(off.estimate == 1.0);
    CHECK(off.half_width == 0.0);

    // At r = 1 the rows are drawn from {L,R}^2; the player survives only with
    // four distinct rows: 4!/4^4.
    const auto on = simulate_random_player(spec, 1.0, 20000, 2);
    const double exact = 1.0 - 24.0 / 256.0;
    CHECK(on.estimate > 0.0);
    CHECK(std::abs(on.estimate - exact) <= 3.0 * on.half_width);

    CHECK(simulate_random_player(spec, 0.5, 500, 9) == simulate_random_player(spec, 0.5, 500, 9));
    CHECK_THROWS_AS(simulate_random_player(GameSpec::make(2, 18, 0, Prior::Heavy), 0.5, 1, 1), ResourceError);
}

TEST_CASE("convergence of the win-rate estimate") {
    const auto spec = GameSpec::make(3, 2, 0, Prior::Heavy);
    const auto a = simulate_random_player(spec, 2.0 / 3.0, 2000, 5);
    const auto b = simulate_random_player(spec, 2.0 / 3.0, 50000, 5);
    CHECK(b.half_width < a.half_width);
    // Three distinct rows out of 9 equally likely codes: 1 - (9*8*7)/9^3.
    const double exact = 1.0 - 504.0 / 729.0;
    CHECK(std::abs(b.estimate - exact) <= 3.0 * b.half_width);
}

TEST_CASE("concentration experiment") {
    const auto r = concentration_experiment(100, 2.0 / 3.0, 0.1, 2000, 3);
    CHECK(r.empirical_tail <= r.chernoff_bound);
    CHECK(r.chernoff_bound == doctest::Approx(0.27067).epsilon(1e-4));
    const auto never = concentration_experiment(20, 0.6, 0.6, 500, 3);
    CHECK(never.exceedances == 0);
    CHECK(concentration_experiment(30, 0.5, 0.1, 300, 8) == concentration_experiment(30, 0.5, 0.1, 300, 8));
}

TEST_CASE("random perfect rate") {
    const auto one = random_perfect_rate(1, 1, Prior::Heavy, 100, 4);
    REQUIRE(one.exact_rate);
    CHECK(*one.exact_rate == 1.0);
    CHECK(one.estimate == 1.0);

    const auto r = random_perfect_rate(4, 2, Prior::Unknown, 20000, 6);
    REQUIRE(r.exact_rate);
    CHECK(*r.exact_rate == doctest::Approx(384.0 / 6561.0));
    REQUIRE(r.formula_rate);
    CHECK(*r.formula_rate == doctest::Approx(768.0 / 6561.0));
    CHECK(std::abs(r.estimate - *r.exact_rate) <= 3.0 * r.half_width);
    CHECK(random_perfect_rate(2, 2, Prior::Heavy, 300, 6) == random_perfect_rate(2, 2, Prior::Heavy, 300, 6));

    VerifierLimits tiny;
    tiny.census_matrices = 10;
    CHECK_FALSE(random_perfect_rate(2, 2, Prior::Heavy, 10, 6, tiny).exact_rate);
}

TEST_CASE("normal half width") {
    CHECK(normal_half_width(0.5, 0) == 0.0);
    CHECK(normal_half_width(0.5, 100) == doctest::Approx(1.96 * 0.05));
}
