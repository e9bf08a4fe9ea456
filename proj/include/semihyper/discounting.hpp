#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semihyper/errors.hpp"

namespace semihyper {

/// Semi-hyperbolic discount model SH(T).
///
/// D(1) = 1; D(t) = prod_{i=1}^{t-1} (beta_i * delta) for 1 < t <= T;
/// D(t) = delta^(t-T) * D(T) for t > T. Equivalently
/// D(t) = delta^(t-1) * prod_{i < min(t,T)} beta_i.
///
/// T = 1 is exponential discounting, T = 2 quasi-hyperbolic. Constraints:
/// delta in (0,1), each beta_i in (0,1], beta_1 <= ... <= beta_{T-1}.
/// A strict-monotonicity mode (beta_1 < ... < beta_{T-1}) is available as an
/// opt-in validation flag.
class DiscountModel {
public:
    DiscountModel(int T, double delta, std::vector<double> betas, bool strict_bias = false)
        : T_(T), delta_(delta), betas_(std::move(betas)) {
        if (T_ < 1) throw constraint_error("bias horizon T must be >= 1");
        if (!(delta_ > 0.0 && delta_ < 1.0) || !std::isfinite(delta_))
            throw constraint_error("delta must lie in (0,1)");
        if (betas_.size() != static_cast<std::size_t>(T_ - 1))
            throw constraint_error("expected T-1 bias weights");
        for (std::size_t i = 0; i < betas_.size(); ++i) {
            if (!(betas_[i] > 0.0 && betas_[i] <= 1.0) || !std::isfinite(betas_[i]))
                throw constraint_error("beta_" + std::to_string(i + 1) + " must lie in (0,1]");
            if (i > 0) {
                if (strict_bias ? !(betas_[i - 1] < betas_[i]) : !(betas_[i - 1] <= betas_[i]))
                    throw constraint_error("bias weights must be " +
                                           std::string(strict_bias ? "strictly increasing" : "nondecreasing") +
                                           " (violated at beta_" + std::to_string(i + 1) + ")");
            }
        }
    }

    /// SH(1): D(t) = delta^(t-1).
    static DiscountModel exponential(double delta) { return DiscountModel(1, delta, {}); }

    /// SH(2): D(1) = 1, D(t) = beta * delta^(t-1) for t >= 2.
    static DiscountModel quasi_hyperbolic(double beta, double delta) {
        return DiscountModel(2, delta, {beta});
    }

    /// Alternative parameterization with compounded per-period factors
    /// beta'_t = beta_t * delta on the bias segment.
    static DiscountModel from_hayashi(const std::vector<double>& beta_primes, double delta) {
        if (!(delta > 0.0 && delta < 1.0))
            throw constraint_error("delta must lie in (0,1)");
        std::vector<double> betas(beta_primes.size());
        for (std::size_t i = 0; i < beta_primes.size(); ++i) {
            betas[i] = beta_primes[i] / delta;
            if (!(betas[i] > 0.0 && betas[i] <= 1.0))
                throw constraint_error("beta'_" + std::to_string(i + 1) +
                                       " / delta falls outside (0,1]");
        }
        return DiscountModel(static_cast<int>(beta_primes.size()) + 1, delta, std::move(betas));
    }

    int bias_horizon() const { return T_; }
    double delta() const { return delta_; }
    const std::vector<double>& betas() const { return betas_; }

    /// D(t), t >= 1.
    double factor(int t) const {
        if (t < 1) throw argument_error("period index must be >= 1");
        double d = 1.0;
        for (int i = 2; i <= t; ++i) {
            d *= delta_;
            if (i <= T_) d *= betas_[static_cast<std::size_t>(i - 2)];
        }
        return d;
    }

    /// Sum of D(t) for t = 1..horizon.
    double total_weight(int horizon) const {
        if (horizon < 0) throw argument_error("horizon must be nonnegative");
        double sum = 0.0, d = 1.0;
        for (int t = 1; t <= horizon; ++t) {
            if (t > 1) {
                d *= delta_;
                if (t <= T_) d *= betas_[static_cast<std::size_t>(t - 2)];
            }
            sum += d;
        }
        return sum;
    }

    /// Sum of D(t) over all t, by the closed form
    /// sum_{t<T} D(t) + D(T) / (1 - delta).
    double total_weight() const {
        return total_weight(T_ - 1) + factor(T_) / (1.0 - delta_);
    }

    friend bool operator==(const DiscountModel& a, const DiscountModel& b) {
        return a.T_ == b.T_ && a.delta_ == b.delta_ && a.betas_ == b.betas_;
    }

private:
    int T_;
    double delta_;
    std::vector<double> betas_;
};

/// A finite nonnegative weight sequence w_1..w_n with at least one positive
/// entry; period ratios gamma_t = w_{t+1} / w_t are derived on demand.
class WeightProfile {
public:
    explicit WeightProfile(std::vector<double> weights) : weights_(std::move(weights)) {
        if (weights_.empty()) throw argument_error("weight profile must be non-empty");
        bool any_positive = false;
        for (double w : weights_) {
            if (!std::isfinite(w) || w < 0.0)
                throw argument_error("weights must be finite and nonnegative");
            if (w > 0.0) any_positive = true;
        }
        if (!any_positive) throw argument_error("at least one weight must be positive");
    }

    static WeightProfile from_model(const DiscountModel& m, int n) {
        std::vector<double> w(static_cast<std::size_t>(n));
        double d = 1.0;
        for (int t = 1; t <= n; ++t) {
            if (t > 1) {
                d *= m.delta();
                if (t <= m.bias_horizon()) d *= m.betas()[static_cast<std::size_t>(t - 2)];
            }
            w[static_cast<std::size_t>(t - 1)] = d;
        }
        return WeightProfile(std::move(w));
    }

    std::size_t size() const { return weights_.size(); }
    double at(int t) const { return weights_.at(static_cast<std::size_t>(t - 1)); } // 1-based
    const std::vector<double>& weights() const { return weights_; }

    /// gamma_t = w_{t+1} / w_t for t = 1..n-1; requires w_t > 0.
    std::vector<double> ratios() const {
        std::vector<double> g(weights_.size() - 1);
        for (std::size_t t = 0; t + 1 < weights_.size(); ++t) {
            if (weights_[t] <= 0.0)
                throw domain_error("ratio undefined: zero weight at period " + std::to_string(t + 1));
            g[t] = weights_[t + 1] / weights_[t];
        }
        return g;
    }

private:
    std::vector<double> weights_;
};

enum class WeightClass { Exponential, QuasiHyperbolic, SemiHyperbolic, Ambiguous, None };

inline const char* to_string(WeightClass c) {
    switch (c) {
        case WeightClass::Exponential: return "EXPONENTIAL";
        case WeightClass::QuasiHyperbolic: return "QUASI_HYPERBOLIC";
        case WeightClass::SemiHyperbolic: return "SH";
        case WeightClass::Ambiguous: return "AMBIGUOUS";
        case WeightClass::None: return "NONE";
    }
    return "?";
}

struct Classification {
    WeightClass kind = WeightClass::None;
    std::optional<DiscountModel> model;
    std::string reason;

    bool classified() const {
        return kind == WeightClass::Exponential || kind == WeightClass::QuasiHyperbolic ||
               kind == WeightClass::SemiHyperbolic;
    }
};

/// Decides whether a weight profile is (proportional to) an SH(T) factor
/// sequence and recovers the parameters.
///
/// Picks the smallest T whose tail ratios gamma_T..gamma_{n-1} agree within
/// eps; that common ratio is delta and beta_t = gamma_t / delta for t < T.
/// Confirming a tail needs at least two tail ratios, so profiles too short to
/// pin any T (n < T+2 for every candidate) come back AMBIGUOUS. Zero weights
/// and constraint violations come back NONE with the failed constraint named.
inline Classification classify(const WeightProfile& w, double eps = 1e-9) {
    Classification out;
    const std::size_t n = w.size();
    for (std::size_t t = 0; t < n; ++t) {
        if (w.weights()[t] == 0.0) {
            out.kind = WeightClass::None;
            out.reason = "inessential period " + std::to_string(t + 1) + " (zero weight)";
            return out;
        }
    }
    if (n < 3) {
        out.kind = WeightClass::Ambiguous;
        out.reason = "profile too short to confirm a geometric tail (need n >= 3)";
        return out;
    }

    const std::vector<double> gamma = w.ratios();
    const std::size_t n_ratios = gamma.size();

    // Smallest T with gamma_T..gamma_{n-1} constant within eps; need >= 2
    // tail ratios, so T <= n-2.
    std::optional<int> found_T;
    double delta = 0.0;
    for (std::size_t T = 1; T + 1 <= n_ratios; ++T) {
        double lo = gamma[T - 1], hi = gamma[T - 1];
        for (std::size_t t = T; t < n_ratios; ++t) {
            lo = std::min(lo, gamma[t]);
            hi = std::max(hi, gamma[t]);
        }
        if (hi - lo <= eps) {
            double sum = 0.0;
            for (std::size_t t = T - 1; t < n_ratios; ++t) sum += gamma[t];
            delta = sum / static_cast<double>(n_ratios - T + 1);
            found_T = static_cast<int>(T);
            break;
        }
    }
    if (!found_T) {
        out.kind = WeightClass::None;
        out.reason = "no geometric tail: no T <= n-2 with constant ratios within eps";
        return out;
    }

    const int T = *found_T;
    if (!(delta > 0.0 && delta < 1.0)) {
        out.kind = WeightClass::None;
        std::ostringstream msg;
        msg << "tail ratio delta=" << delta << " outside (0,1) (impatience/convergence constraint)";
        out.reason = msg.str();
        return out;
    }

    std::vector<double> betas(static_cast<std::size_t>(T - 1));
    for (int t = 1; t < T; ++t) {
        double b = gamma[static_cast<std::size_t>(t - 1)] / delta;
        if (b > 1.0 && b <= 1.0 + eps) b = 1.0; // clamp roundoff at the boundary
        if (!(b > 0.0 && b <= 1.0)) {
            out.kind = WeightClass::None;
            std::ostringstream msg;
            msg << "beta_" << t << "=" << b << " outside (0,1] (early-bias constraint)";
            out.reason = msg.str();
            return out;
        }
        betas[static_cast<std::size_t>(t - 1)] = b;
    }
    for (int t = 1; t + 1 < T; ++t) {
        if (betas[static_cast<std::size_t>(t)] + eps < betas[static_cast<std::size_t>(t - 1)]) {
            out.kind = WeightClass::None;
            out.reason = "bias weights decrease at beta_" + std::to_string(t + 1) +
                         " (early-bias constraint)";
            return out;
        }
        betas[static_cast<std::size_t>(t)] =
            std::max(betas[static_cast<std::size_t>(t)], betas[static_cast<std::size_t>(t - 1)]);
    }

    out.model = DiscountModel(T, delta, std::move(betas));
    out.kind = T == 1   ? WeightClass::Exponential
               : T == 2 ? WeightClass::QuasiHyperbolic
                        : WeightClass::SemiHyperbolic;
    return out;
}

} // namespace semihyper
