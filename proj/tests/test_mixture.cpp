#include <catch2/catch_amalgamated.hpp>

#include "semihyper/lottery.hpp"
#include "support.hpp"

using namespace semihyper;
using testsupport::abc;
using testsupport::random_lottery;

TEST_CASE("prize sets reject duplicates and emptiness", "[mixture]") {
    CHECK_THROWS_AS(PrizeSet({}), argument_error);
    CHECK_THROWS_AS(PrizeSet({"a", "a"}), argument_error);
    CHECK(PrizeSet({"a", "b"}).size() == 2);
}

TEST_CASE("lottery validity", "[mixture]") {
    auto ps = abc();
    CHECK_THROWS_AS(Lottery(ps, {0.5, 0.2, 0.2}), argument_error);
    CHECK_THROWS_AS(Lottery(ps, {1.2, -0.2, 0.0}), argument_error);
    Lottery half = Lottery::from_map(ps, {{"a", 0.5}, {"b", 0.5}});
    CHECK(half.prob(0) == 0.5);
    CHECK(half.prob(2) == 0.0);
}

TEST_CASE("mix endpoint and commutation identities", "[mixture]") {
    auto ps = abc();
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        Lottery x = random_lottery(rng, ps), y = random_lottery(rng, ps);
        CHECK(approx_equal(mix(x, 1.0, y), x));
        CHECK(approx_equal(mix(x, 0.3, y), mix(y, 0.7, x)));
    }
    Lottery da = Lottery::degenerate(ps, "a"), db = Lottery::degenerate(ps, "b");
    Lottery m = mix(da, 0.5, db);
    CHECK(m.prob(0) == Catch::Approx(0.5).margin(1e-15));
    CHECK(m.prob(1) == Catch::Approx(0.5).margin(1e-15));
}

TEST_CASE("mix argument and domain errors", "[mixture]") {
    auto ps = abc();
    Lottery x = Lottery::degenerate(ps, "a");
    CHECK_THROWS_AS(mix(x, 1.5, x), argument_error);
    auto other = make_prizes({"p", "q"});
    CHECK_THROWS_AS(mix(x, 0.5, Lottery::degenerate(other, "p")), domain_error);
}

TEST_CASE("mixture axiom 3 on a sampled grid", "[mixture]") {
    auto ps = abc();
    Rng rng(12);
    const double grid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (int i = 0; i < 40; ++i) {
        Lottery x = random_lottery(rng, ps), y = random_lottery(rng, ps);
        for (double lam : grid)
            for (double mu : grid) {
                Lottery lhs = mix(mix(x, mu, y), lam, y);
                Lottery rhs = mix(x, lam * mu, y);
                for (std::size_t p = 0; p < ps->size(); ++p)
                    CHECK(lhs.prob(p) == Catch::Approx(rhs.prob(p)).margin(1e-12));
            }
    }
}

TEST_CASE("mix preserves the sum-to-one invariant", "[mixture]") {
    auto ps = abc();
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        Lottery m = mix(random_lottery(rng, ps), rng.uniform(), random_lottery(rng, ps));
        double total = 0.0;
        for (double p : m.probs()) total += p;
        CHECK(total == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("expected utility values", "[mixture]") {
    auto ps = abc();
    UtilityFunction u10 = UtilityFunction::from_map(ps, {{"a", 1.0}, {"b", 0.0}, {"c", 0.0}});
    CHECK(expected_utility(u10, Lottery::degenerate(ps, "a")) == 1.0);
    CHECK(expected_utility(u10, Lottery::from_map(ps, {{"a", 0.5}, {"b", 0.5}})) ==
          Catch::Approx(0.5).margin(1e-15));

    UtilityFunction u = UtilityFunction::from_map(ps, {{"a", 2.0}, {"b", -1.0}, {"c", 0.0}});
    Lottery x = Lottery::from_map(ps, {{"a", 0.3}, {"b", 0.7}});
    CHECK(expected_utility(u, x) == Catch::Approx(0.3 * 2.0 + 0.7 * (-1.0)).margin(1e-15));
    CHECK(expected_utility(u, x) == Catch::Approx(-0.1).margin(1e-12));

    auto other = make_prizes({"p"});
    CHECK_THROWS_AS(expected_utility(u, Lottery::degenerate(other, "p")), domain_error);
}

TEST_CASE("expected utility is mixture linear", "[mixture]") {
    auto ps = abc();
    Rng rng(14);
    for (int i = 0; i < 200; ++i) {
        Lottery x = random_lottery(rng, ps), y = random_lottery(rng, ps);
        UtilityFunction u = testsupport::random_utility(rng, ps);
        double lam = rng.uniform();
        double lhs = expected_utility(u, mix(x, lam, y));
        double rhs = lam * expected_utility(u, x) + (1.0 - lam) * expected_utility(u, y);
        CHECK(lhs == Catch::Approx(rhs).margin(1e-12));
    }
}
