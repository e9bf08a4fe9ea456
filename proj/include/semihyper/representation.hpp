#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semihyper/discounting.hpp"
#include "semihyper/streams.hpp"

namespace semihyper {

enum class Ordering { PreferFirst, Indifferent, PreferSecond };

inline Ordering order_of(double diff, double eps = kIndiffEps) {
    if (diff > eps) return Ordering::PreferFirst;
    if (diff < -eps) return Ordering::PreferSecond;
    return Ordering::Indifferent;
}

inline Ordering flipped(Ordering o) {
    switch (o) {
        case Ordering::PreferFirst: return Ordering::PreferSecond;
        case Ordering::PreferSecond: return Ordering::PreferFirst;
        default: return Ordering::Indifferent;
    }
}

inline const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::PreferFirst: return ">";
        case Ordering::PreferSecond: return "<";
        default: return "=";
    }
}

/// The representation-uniqueness freedom: u' = A*u + B with A > 0, and
/// w' = C*w with C > 0.
struct UniquenessTransform {
    double A = 1.0;
    double B = 0.0;
    double C = 1.0;

    UniquenessTransform() = default;
    UniquenessTransform(double a, double b, double c) : A(a), B(b), C(c) {
        if (!(A > 0.0) || !(C > 0.0))
            throw constraint_error("uniqueness transform requires A > 0 and C > 0");
    }
};

/// An additively separable utility functional over streams: a utility table
/// on prizes together with period weights. Weights are either an explicit
/// finite profile (a stream length is implied) or a discount model applied
/// over a finite or infinite horizon, times a positive scale factor.
///
/// Stream values are sums of weighted per-period expected utilities; infinite
/// horizons use the discount model's closed-form tail.
class Representation {
public:
    Representation(UtilityFunction u, WeightProfile w)
        : u_(std::move(u)), backend_(std::move(w)), horizon_(static_cast<int>(profile().size())) {
        init_cache();
    }

    Representation(UtilityFunction u, DiscountModel m, int horizon)
        : u_(std::move(u)), backend_(std::move(m)), horizon_(horizon) {
        if (horizon < 1) throw argument_error("horizon must be >= 1");
        init_cache();
    }

    /// Infinite-horizon discounted representation.
    Representation(UtilityFunction u, DiscountModel m)
        : u_(std::move(u)), backend_(std::move(m)), horizon_(std::nullopt) {
        init_cache();
    }

    const UtilityFunction& utility() const { return u_; }
    bool infinite_horizon() const { return !horizon_.has_value(); }
    int horizon() const {
        if (!horizon_) throw domain_error("representation has an infinite horizon");
        return *horizon_;
    }

    const DiscountModel* model() const { return std::get_if<DiscountModel>(&backend_); }
    bool model_backed() const { return model() != nullptr; }
    double weight_scale() const { return scale_; }

    /// Scaled period weight w_t; zero beyond a finite horizon.
    double weight(int t) const {
        if (t < 1) throw argument_error("period index must be >= 1");
        if (horizon_ && t > *horizon_) return 0.0;
        if (t <= static_cast<int>(cached_w_.size())) return cached_w_[static_cast<std::size_t>(t - 1)];
        return scale_ * model()->factor(t);
    }

    /// Sum of scaled weights for t = 1..upto.
    double weight_sum(int upto) const {
        if (upto <= 0) return 0.0;
        if (horizon_) upto = std::min(upto, *horizon_);
        if (upto <= static_cast<int>(cached_cum_.size())) return cached_cum_[static_cast<std::size_t>(upto - 1)];
        return scale_ * model()->total_weight(upto);
    }

    /// Total weight; requires a summable (model-backed) tail when infinite.
    double total_weight() const {
        if (horizon_) return weight_sum(*horizon_);
        return scale_ * model()->total_weight();
    }

    Representation scaled(double C) const {
        if (!(C > 0.0)) throw constraint_error("weight scale must be positive");
        Representation r(*this);
        r.scale_ *= C;
        r.init_cache();
        return r;
    }

    Representation with_utility(UtilityFunction u) const {
        Representation r(*this);
        r.u_ = std::move(u);
        return r;
    }

private:
    const WeightProfile& profile() const { return std::get<WeightProfile>(backend_); }

    void init_cache() {
        if (!u_.non_constant())
            throw constraint_error("representation requires a non-constant utility");
        int cap = horizon_ ? *horizon_ : kWorkingHorizon;
        cached_w_.resize(static_cast<std::size_t>(cap));
        cached_cum_.resize(static_cast<std::size_t>(cap));
        double cum = 0.0;
        const DiscountModel* m = model();
        double d = 1.0;
        for (int t = 1; t <= cap; ++t) {
            double base;
            if (m) {
                if (t > 1) {
                    d *= m->delta();
                    if (t <= m->bias_horizon()) d *= m->betas()[static_cast<std::size_t>(t - 2)];
                }
                base = d;
            } else {
                base = profile().at(t);
            }
            cum += scale_ * base;
            cached_w_[static_cast<std::size_t>(t - 1)] = scale_ * base;
            cached_cum_[static_cast<std::size_t>(t - 1)] = cum;
        }
    }

    static constexpr int kWorkingHorizon = 512;

    UtilityFunction u_;
    std::variant<WeightProfile, DiscountModel> backend_;
    std::optional<int> horizon_;
    double scale_ = 1.0;
    std::vector<double> cached_w_;
    std::vector<double> cached_cum_;
};

inline double evaluate(const Representation& rep, const FiniteStream& x) {
    if (rep.infinite_horizon())
        throw domain_error("finite stream under an infinite-horizon representation; embed it first");
    if (x.length() != rep.horizon())
        throw domain_error("stream length does not match the representation horizon");
    double total = 0.0;
    for (int t = 1; t <= x.length(); ++t)
        total += rep.weight(t) * expected_utility(rep.utility(), x.at(t));
    return total;
}

inline double evaluate(const Representation& rep, const InfiniteStream& x) {
    if (!rep.infinite_horizon())
        throw domain_error("infinite stream under a finite-horizon representation");
    double total = 0.0;
    const int L = x.prefix_length();
    for (int t = 1; t <= L; ++t)
        total += rep.weight(t) * expected_utility(rep.utility(), x.at(t));
    total += expected_utility(rep.utility(), x.tail()) * (rep.total_weight() - rep.weight_sum(L));
    return total;
}

inline double evaluate(const Representation& rep, const Stream& x) {
    return std::visit([&](const auto& s) { return evaluate(rep, s); }, x);
}

template <typename S>
inline Ordering compare(const Representation& rep, const S& x, const S& y, double eps = kIndiffEps) {
    return order_of(evaluate(rep, x) - evaluate(rep, y), eps);
}

inline Ordering compare(const Representation& rep, const Stream& x, const Stream& y,
                        double eps = kIndiffEps) {
    return order_of(evaluate(rep, x) - evaluate(rep, y), eps);
}

/// Truncated values U_1..U_Tmax of an infinite-horizon evaluation; U_T sums
/// the first T weighted period utilities.
inline std::vector<double> partial_sums(const Representation& rep, const InfiniteStream& x, int T_max) {
    if (!rep.infinite_horizon())
        throw domain_error("partial sums require an infinite-horizon representation");
    if (T_max < 1) throw argument_error("T_max must be >= 1");
    std::vector<double> sums(static_cast<std::size_t>(T_max));
    double acc = 0.0;
    double tail_eu = expected_utility(rep.utility(), x.tail());
    for (int t = 1; t <= T_max; ++t) {
        double eu = t <= x.prefix_length() ? expected_utility(rep.utility(), x.at(t)) : tail_eu;
        acc += rep.weight(t) * eu;
        sums[static_cast<std::size_t>(t - 1)] = acc;
    }
    return sums;
}

/// u' = A*u + B, w' = C*w. Preferences are unchanged.
inline Representation apply_transform(const Representation& rep, const UniquenessTransform& tr) {
    if (!(tr.A > 0.0) || !(tr.C > 0.0))
        throw constraint_error("uniqueness transform requires A > 0 and C > 0");
    return rep.with_utility(rep.utility().affine(tr.A, tr.B)).scaled(tr.C);
}

/// Rescale to the canonical form u(x0) = 0, max|u| = 1, w_1 = 1.
inline Representation normalize(const Representation& rep, const Lottery& x0) {
    if (!(rep.weight(1) > 0.0))
        throw constraint_error("cannot normalize: period 1 is inessential (w_1 = 0)");
    UtilityFunction u = rep.utility().affine(1.0, -expected_utility(rep.utility(), x0));
    double m = u.max_abs();
    if (!(m > 0.0))
        throw constraint_error("cannot normalize: utility is constant");
    u = u.affine(1.0 / m, 0.0);
    return rep.with_utility(std::move(u)).scaled(1.0 / rep.weight(1));
}

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<UniquenessTransform> transform; // maps the second representation onto the first
    std::optional<std::pair<Stream, Stream>> counterexample;
    std::string reason;
};

namespace detail {

/// A pair of streams the two representations rank differently, built from the
/// first weight-ratio disagreement: the mixture weight lambda that makes
/// (best at t, worst at t+1) indifferent to the lambda-mixture of the
/// two-period extremes pins w_t / w_{t+1}, so a lambda between the two
/// representations' indifference points separates them.
inline std::optional<std::pair<Stream, Stream>> weight_counterexample(const Representation& a,
                                                                      const Representation& b) {
    const auto& prizes = a.utility().prizes();
    std::size_t best = 0, worst = 0;
    for (std::size_t i = 0; i < prizes->size(); ++i) {
        if (a.utility().value(i) > a.utility().value(best)) best = i;
        if (a.utility().value(i) < a.utility().value(worst)) worst = i;
    }
    Lottery B = Lottery::degenerate(prizes, prizes->id(best));
    Lottery W = Lottery::degenerate(prizes, prizes->id(worst));

    const bool infinite = a.infinite_horizon();
    const int reach = infinite ? std::max(a.model()->bias_horizon(), b.model()->bias_horizon()) + 2
                               : a.horizon();

    auto make = [&](int t, const Lottery& p, const Lottery& q) -> Stream {
        if (infinite) {
            InfiniteStream s = InfiniteStream::constant(W).with(t, p).with(t + 1, q);
            return s;
        }
        FiniteStream s = FiniteStream::constant(W, reach).with(t, p).with(t + 1, q);
        return s;
    };
    auto verdicts_differ = [&](const Stream& x, const Stream& y) {
        return compare(a, x, y) != compare(b, x, y);
    };

    for (int t = 1; t + 1 <= reach; ++t) {
        double wa_t = a.weight(t), wa_n = a.weight(t + 1);
        double wb_t = b.weight(t), wb_n = b.weight(t + 1);
        if (wa_t + wa_n <= 0.0 || wb_t + wb_n <= 0.0) continue;
        double la = wa_t / (wa_t + wa_n);
        double lb = wb_t / (wb_t + wb_n);
        double lam = 0.5 * (la + lb);
        Stream y = make(t, B, W);
        Stream xz = infinite
                        ? Stream(mix_streams(std::get<InfiniteStream>(make(t, B, B)), lam,
                                             std::get<InfiniteStream>(make(t, W, W))))
                        : Stream(mix_streams(std::get<FiniteStream>(make(t, B, B)), lam,
                                             std::get<FiniteStream>(make(t, W, W))));
        if (verdicts_differ(y, xz)) return std::make_pair(y, xz);
        // Periods essential in one representation only.
        Stream p1 = make(t, B, W), p2 = make(t, W, W);
        if (verdicts_differ(p1, p2)) return std::make_pair(p1, p2);
        Stream q1 = make(t, W, B), q2 = make(t, W, W);
        if (verdicts_differ(q1, q2)) return std::make_pair(q1, q2);
    }
    return std::nullopt;
}

inline std::optional<std::pair<Stream, Stream>> utility_counterexample(const Representation& a,
                                                                       const Representation& b) {
    const auto& prizes = a.utility().prizes();
    auto constant = [&](const Lottery& l) -> Stream {
        if (a.infinite_horizon()) return InfiniteStream::constant(l);
        return FiniteStream::constant(l, a.horizon());
    };
    // Any prize pair ranked differently?
    for (std::size_t i = 0; i < prizes->size(); ++i)
        for (std::size_t j = i + 1; j < prizes->size(); ++j) {
            Stream x = constant(Lottery::degenerate(prizes, prizes->id(i)));
            Stream y = constant(Lottery::degenerate(prizes, prizes->id(j)));
            if (compare(a, x, y) != compare(b, x, y)) return std::make_pair(x, y);
        }
    // Same ranking but different cardinal position of some prize: separate it
    // from a best/worst mixture at a lambda between the two normalized values.
    auto normalized = [&](const UtilityFunction& u, std::size_t i) {
        return (u.value(i) - u.min_value()) / u.range();
    };
    std::size_t best = 0, worst = 0;
    for (std::size_t i = 0; i < prizes->size(); ++i) {
        if (a.utility().value(i) > a.utility().value(best)) best = i;
        if (a.utility().value(i) < a.utility().value(worst)) worst = i;
    }
    for (std::size_t i = 0; i < prizes->size(); ++i) {
        double va = normalized(a.utility(), i), vb = normalized(b.utility(), i);
        if (std::fabs(va - vb) < 10 * kIndiffEps) continue;
        double lam = 0.5 * (va + vb);
        Lottery mixq = mix(Lottery::degenerate(prizes, prizes->id(best)), lam,
                           Lottery::degenerate(prizes, prizes->id(worst)));
        Stream x = constant(Lottery::degenerate(prizes, prizes->id(i)));
        Stream y = constant(mixq);
        if (compare(a, x, y) != compare(b, x, y)) return std::make_pair(x, y);
    }
    return std::nullopt;
}

} // namespace detail

/// Decides whether some uniqueness transform maps rep2 onto rep1. On success
/// the recovered (A, B, C) is returned; on failure a pair of streams the two
/// representations rank differently is produced whenever the horizons are
/// comparable.
inline EquivalenceResult equivalent(const Representation& rep1, const Representation& rep2,
                                    double eps = 1e-9) {
    if (!same_prizes(rep1.utility().prizes(), rep2.utility().prizes()))
        throw domain_error("equivalent: representations over different prize sets");
    EquivalenceResult out;

    if (rep1.infinite_horizon() != rep2.infinite_horizon()) {
        out.reason = "horizons differ (finite vs infinite)";
        return out;
    }
    if (!rep1.infinite_horizon() && rep1.horizon() != rep2.horizon()) {
        out.reason = "stream lengths differ";
        return out;
    }

    // A from the utility ranges, B from alignment at the minimum.
    double A = rep1.utility().range() / rep2.utility().range();
    double B = rep1.utility().min_value() - A * rep2.utility().min_value();
    for (std::size_t i = 0; i < rep1.utility().values().size(); ++i) {
        double mapped = A * rep2.utility().value(i) + B;
        if (std::fabs(mapped - rep1.utility().value(i)) >
            eps * std::max(1.0, rep1.utility().max_abs())) {
            out.reason = "utilities are not related by a positive affine transform";
            out.counterexample = detail::utility_counterexample(rep1, rep2);
            return out;
        }
    }

    // C from the first essential period.
    double C = 0.0;
    const int reach = rep1.infinite_horizon()
                          ? std::max(rep1.model()->bias_horizon(), rep2.model()->bias_horizon()) + 2
                          : rep1.horizon();
    for (int t = 1; t <= reach; ++t) {
        if (rep2.weight(t) > 0.0 && rep1.weight(t) > 0.0) {
            C = rep1.weight(t) / rep2.weight(t);
            break;
        }
    }
    if (!(C > 0.0)) {
        out.reason = "no commonly essential period to scale on";
        out.counterexample = detail::weight_counterexample(rep1, rep2);
        return out;
    }

    // Factor sequences agree through the bias reach and the geometric tails
    // share delta; QH with beta = 1 therefore matches plain exponential.
    bool weights_match = true;
    if (rep1.infinite_horizon())
        weights_match = std::fabs(rep1.model()->delta() - rep2.model()->delta()) <= eps;
    for (int t = 1; t <= reach && weights_match; ++t)
        weights_match = std::fabs(rep1.weight(t) - C * rep2.weight(t)) <=
                        eps * std::max(1.0, std::fabs(rep1.weight(t)));
    if (!weights_match) {
        out.reason = "weights are not a positive rescaling of each other";
        out.counterexample = detail::weight_counterexample(rep1, rep2);
        return out;
    }

    out.equivalent = true;
    out.transform = UniquenessTransform(A, B, C);
    return out;
}

} // namespace semihyper
