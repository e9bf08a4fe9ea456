#include <catch2/catch_amalgamated.hpp>

#include "semihyper/discounting.hpp"
#include "support.hpp"

using namespace semihyper;

TEST_CASE("model constraints", "[discounting]") {
    CHECK_THROWS_AS(DiscountModel::exponential(1.0), constraint_error);
    CHECK_THROWS_AS(DiscountModel::exponential(0.0), constraint_error);
    CHECK_THROWS_AS(DiscountModel::quasi_hyperbolic(0.0, 0.9), constraint_error);
    CHECK_THROWS_AS(DiscountModel::quasi_hyperbolic(1.1, 0.9), constraint_error);
    CHECK_THROWS_AS(DiscountModel(3, 0.9, {0.8, 0.6}), constraint_error); // decreasing bias
    CHECK_NOTHROW(DiscountModel(3, 0.9, {0.6, 0.6}));
    // strict mode rejects ties
    CHECK_THROWS_AS(DiscountModel(3, 0.9, {0.6, 0.6}, true), constraint_error);
    CHECK_NOTHROW(DiscountModel(3, 0.9, {0.6, 0.8}, true));
}

TEST_CASE("discount factors", "[discounting]") {
    CHECK(DiscountModel::exponential(0.9).factor(1) == 1.0);
    CHECK(DiscountModel::exponential(0.9).factor(3) == Catch::Approx(0.81).margin(1e-15));

    DiscountModel qh = DiscountModel::quasi_hyperbolic(0.7, 0.9);
    CHECK(qh.factor(2) == Catch::Approx(0.63).margin(1e-15));
    CHECK(qh.factor(3) == Catch::Approx(0.567).margin(1e-15));

    DiscountModel sh3(3, 0.9, {0.6, 0.8});
    CHECK(sh3.factor(3) == Catch::Approx(0.54 * 0.72).margin(1e-15)); // product of beta_i*delta
    CHECK(sh3.factor(3) == Catch::Approx(0.3888).margin(1e-12));
    CHECK(sh3.factor(4) == Catch::Approx(0.34992).margin(1e-12));
}

TEST_CASE("factors are positive, nonincreasing, with ratio <= delta", "[discounting]") {
    Rng rng(21);
    for (int rep = 0; rep < 30; ++rep) {
        DiscountModel m = testsupport::random_model(rng, rng.uniform_int(1, 4));
        double prev = m.factor(1);
        CHECK(prev == 1.0);
        for (int t = 1; t <= 50; ++t) {
            double next = m.factor(t + 1);
            CHECK(next > 0.0);
            CHECK(next <= prev + 1e-15);
            CHECK(next / prev <= m.delta() + 1e-12);
            if (t >= m.bias_horizon())
                CHECK(next / prev == Catch::Approx(m.delta()).margin(1e-12));
            prev = next;
        }
    }
}

TEST_CASE("beta = 1 collapses quasi-hyperbolic to exponential", "[discounting]") {
    DiscountModel qh = DiscountModel::quasi_hyperbolic(1.0, 0.9);
    DiscountModel ex = DiscountModel::exponential(0.9);
    for (int t = 1; t <= 40; ++t) CHECK(qh.factor(t) == ex.factor(t));
}

TEST_CASE("hayashi reparameterization", "[discounting]") {
    DiscountModel m = DiscountModel::from_hayashi({0.54, 0.72}, 0.9);
    CHECK(m.bias_horizon() == 3);
    CHECK(m.betas()[0] == Catch::Approx(0.6).margin(1e-15));
    CHECK(m.betas()[1] == Catch::Approx(0.8).margin(1e-15));

    CHECK(DiscountModel::from_hayashi({0.9}, 0.9).betas()[0] == Catch::Approx(1.0).margin(1e-15));
    CHECK_THROWS_AS(DiscountModel::from_hayashi({0.95}, 0.9), constraint_error);

    // The bias-segment factors equal the raw products of the compounded factors.
    std::vector<double> bp = {0.4, 0.45, 0.6};
    DiscountModel h = DiscountModel::from_hayashi(bp, 0.7);
    double prod = 1.0;
    for (std::size_t i = 0; i < bp.size(); ++i) {
        prod *= bp[i];
        CHECK(h.factor(static_cast<int>(i) + 2) == Catch::Approx(prod).margin(1e-12));
    }
}

TEST_CASE("total weights", "[discounting]") {
    CHECK(DiscountModel::exponential(0.9).total_weight() == Catch::Approx(10.0).margin(1e-12));
    CHECK(DiscountModel::quasi_hyperbolic(0.7, 0.9).total_weight() ==
          Catch::Approx(7.3).margin(1e-12));
    Rng rng(22);
    for (int rep = 0; rep < 10; ++rep) {
        DiscountModel m = testsupport::random_model(rng, rng.uniform_int(1, 4));
        CHECK(m.total_weight(1) == 1.0);
        // Brute-force partial sums approach the closed form from below.
        double brute = m.total_weight(4000);
        CHECK(brute <= m.total_weight() + 1e-12);
        CHECK(m.total_weight() - brute < 1e-9);
    }
}

TEST_CASE("classify recovers the stated profiles", "[discounting]") {
    Classification ex = classify(WeightProfile({1.0, 0.9, 0.81, 0.729}));
    REQUIRE(ex.kind == WeightClass::Exponential);
    CHECK(ex.model->delta() == Catch::Approx(0.9).margin(1e-12));

    Classification qh = classify(WeightProfile({1.0, 0.63, 0.567, 0.5103}));
    REQUIRE(qh.kind == WeightClass::QuasiHyperbolic);
    CHECK(qh.model->delta() == Catch::Approx(0.9).margin(1e-12));
    CHECK(qh.model->betas()[0] == Catch::Approx(0.7).margin(1e-12));

    Classification none = classify(WeightProfile({1.0, 0.9, 0.45}));
    CHECK(none.kind == WeightClass::None);
    CHECK(none.reason.find("geometric tail") != std::string::npos);
}

TEST_CASE("classify edge verdicts", "[discounting]") {
    Classification zero = classify(WeightProfile({1.0, 0.0, 0.5}));
    CHECK(zero.kind == WeightClass::None);
    CHECK(zero.reason.find("inessential") != std::string::npos);

    CHECK(classify(WeightProfile({1.0, 0.9})).kind == WeightClass::Ambiguous);

    // Growing tail: delta outside (0,1).
    Classification grow = classify(WeightProfile({1.0, 1.2, 1.44, 1.728}));
    CHECK(grow.kind == WeightClass::None);

    // Decreasing bias ratios.
    Classification dec = classify(WeightProfile({1.0, 0.9, 0.45, 0.405, 0.3645}));
    CHECK(dec.kind == WeightClass::None);
    CHECK(dec.reason.find("early-bias") != std::string::npos);
}

TEST_CASE("classify round-trips sampled models", "[discounting]") {
    Rng rng(23);
    for (int rep = 0; rep < 60; ++rep) {
        int T = rng.uniform_int(1, 4);
        DiscountModel m = testsupport::random_model(rng, T);
        int n = T + 2 + rng.uniform_int(0, 3);
        Classification c = classify(WeightProfile::from_model(m, n));
        REQUIRE(c.classified());
        CHECK(c.model->bias_horizon() == T);
        CHECK(c.model->delta() == Catch::Approx(m.delta()).margin(1e-9));
        for (std::size_t i = 0; i < m.betas().size(); ++i)
            CHECK(c.model->betas()[i] == Catch::Approx(m.betas()[i]).margin(1e-9));
    }
}
