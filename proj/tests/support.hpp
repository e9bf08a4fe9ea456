#pragma once

#include <vector>

#include "semihyper/discounting.hpp"
#include "semihyper/lottery.hpp"
#include "semihyper/random.hpp"
#include "semihyper/representation.hpp"
#include "semihyper/streams.hpp"

namespace testsupport {

using namespace semihyper;

inline PrizeSetPtr abc() { return make_prizes({"a", "b", "c"}); }

inline Lottery random_lottery(Rng& rng, const PrizeSetPtr& prizes) {
    std::vector<double> raw(prizes->size());
    double total = 0.0;
    for (double& p : raw) {
        p = rng.uniform() + 1e-6;
        total += p;
    }
    for (double& p : raw) p /= total;
    // Renormalize exactly enough for the validity tolerance.
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) s += raw[i];
    raw.back() = 1.0 - s;
    return Lottery(prizes, std::move(raw));
}

inline UtilityFunction random_utility(Rng& rng, const PrizeSetPtr& prizes) {
    std::vector<double> v(prizes->size());
    for (double& x : v) x = rng.uniform(-2.0, 2.0);
    // Keep it clearly non-constant.
    v[0] = 2.0 + rng.uniform();
    v[1] = -1.0 - rng.uniform();
    return UtilityFunction(prizes, std::move(v));
}

/// A valid SH(T) model; betas kept away from 1 so that T is identified.
inline DiscountModel random_model(Rng& rng, int T, double delta_lo = 0.5, double delta_hi = 0.95) {
    double delta = rng.uniform(delta_lo, delta_hi);
    std::vector<double> betas(static_cast<std::size_t>(T - 1));
    double b = rng.uniform(0.3, 0.6);
    for (auto& beta : betas) {
        beta = b;
        b = std::min(0.95, b + rng.uniform(0.0, 0.2));
    }
    return DiscountModel(T, delta, std::move(betas));
}

inline FiniteStream random_stream(Rng& rng, const PrizeSetPtr& prizes, int n) {
    std::vector<Lottery> periods;
    periods.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) periods.push_back(random_lottery(rng, prizes));
    return FiniteStream(std::move(periods));
}

} // namespace testsupport
