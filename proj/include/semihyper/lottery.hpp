#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semihyper/errors.hpp"

namespace semihyper {

/// Componentwise tolerance for lottery validity and value equality.
inline constexpr double kProbTol = 1e-12;

/// Default indifference band for utility comparisons.
inline constexpr double kIndiffEps = 1e-9;

/// A finite, ordered set of prize labels. Shared immutably between all
/// lotteries and utility tables of one session.
class PrizeSet {
public:
    explicit PrizeSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
        if (ids_.empty()) throw argument_error("prize set must be non-empty");
        for (std::size_t i = 0; i < ids_.size(); ++i)
            for (std::size_t j = i + 1; j < ids_.size(); ++j)
                if (ids_[i] == ids_[j])
                    throw argument_error("duplicate prize id: " + ids_[i]);
    }

    std::size_t size() const { return ids_.size(); }
    const std::string& id(std::size_t i) const { return ids_.at(i); }
    const std::vector<std::string>& ids() const { return ids_; }

    std::optional<std::size_t> find(const std::string& id) const {
        auto it = std::find(ids_.begin(), ids_.end(), id);
        if (it == ids_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - ids_.begin());
    }

    std::size_t index_of(const std::string& id) const {
        if (auto i = find(id)) return *i;
        throw domain_error("unknown prize id: " + id);
    }

    friend bool operator==(const PrizeSet& a, const PrizeSet& b) { return a.ids_ == b.ids_; }

private:
    std::vector<std::string> ids_;
};

using PrizeSetPtr = std::shared_ptr<const PrizeSet>;

inline PrizeSetPtr make_prizes(std::vector<std::string> ids) {
    return std::make_shared<const PrizeSet>(std::move(ids));
}

inline bool same_prizes(const PrizeSetPtr& a, const PrizeSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// A finite probability distribution over a prize set; the element of the
/// mixture set. Immutable after construction; probabilities are validated to
/// be nonnegative and to sum to one within kProbTol.
class Lottery {
public:
    Lottery(PrizeSetPtr prizes, std::vector<double> probs)
        : prizes_(std::move(prizes)), probs_(std::move(probs)) {
        if (!prizes_) throw argument_error("lottery requires a prize set");
        if (probs_.size() != prizes_->size())
            throw argument_error("lottery probability vector length mismatch");
        double total = 0.0;
        for (double p : probs_) {
            if (!(p >= -kProbTol) || !std::isfinite(p))
                throw argument_error("lottery probabilities must be nonnegative");
            total += p;
        }
        if (std::fabs(total - 1.0) > 1e3 * kProbTol)
            throw argument_error("lottery probabilities must sum to 1");
        for (double& p : probs_) p = std::max(p, 0.0);
    }

    static Lottery degenerate(const PrizeSetPtr& prizes, const std::string& prize_id) {
        std::vector<double> probs(prizes->size(), 0.0);
        probs[prizes->index_of(prize_id)] = 1.0;
        return Lottery(prizes, std::move(probs));
    }

    static Lottery uniform(const PrizeSetPtr& prizes) {
        std::vector<double> probs(prizes->size(), 1.0 / static_cast<double>(prizes->size()));
        return Lottery(prizes, std::move(probs));
    }

    static Lottery from_map(const PrizeSetPtr& prizes, const std::map<std::string, double>& support) {
        std::vector<double> probs(prizes->size(), 0.0);
        for (const auto& [id, p] : support) probs[prizes->index_of(id)] = p;
        return Lottery(prizes, std::move(probs));
    }

    const PrizeSetPtr& prizes() const { return prizes_; }
    const std::vector<double>& probs() const { return probs_; }
    double prob(std::size_t i) const { return probs_.at(i); }

    friend bool approx_equal(const Lottery& a, const Lottery& b, double tol = kProbTol) {
        if (!same_prizes(a.prizes_, b.prizes_)) return false;
        for (std::size_t i = 0; i < a.probs_.size(); ++i)
            if (std::fabs(a.probs_[i] - b.probs_[i]) > tol) return false;
        return true;
    }

private:
    PrizeSetPtr prizes_;
    std::vector<double> probs_;
};

/// The mixture operation: pointwise lam*x + (1-lam)*y.
inline Lottery mix(const Lottery& x, double lam, const Lottery& y) {
    if (!same_prizes(x.prizes(), y.prizes()))
        throw domain_error("mix: lotteries over different prize sets");
    if (!(lam >= 0.0 && lam <= 1.0))
        throw argument_error("mix: coefficient outside [0,1]");
    std::vector<double> probs(x.probs().size());
    for (std::size_t i = 0; i < probs.size(); ++i)
        probs[i] = lam * x.prob(i) + (1.0 - lam) * y.prob(i);
    return Lottery(x.prizes(), std::move(probs));
}

/// A utility table on prizes. Mixture-linear utility on lotteries is its
/// expectation.
class UtilityFunction {
public:
    UtilityFunction(PrizeSetPtr prizes, std::vector<double> values)
        : prizes_(std::move(prizes)), values_(std::move(values)) {
        if (!prizes_) throw argument_error("utility requires a prize set");
        if (values_.size() != prizes_->size())
            throw argument_error("utility value vector length mismatch");
        for (double v : values_)
            if (!std::isfinite(v)) throw argument_error("utility values must be finite");
    }

    static UtilityFunction from_map(const PrizeSetPtr& prizes, const std::map<std::string, double>& values) {
        std::vector<double> v(prizes->size(), 0.0);
        if (values.size() != prizes->size())
            throw domain_error("utility table must cover every prize");
        for (const auto& [id, val] : values) v[prizes->index_of(id)] = val;
        return UtilityFunction(prizes, std::move(v));
    }

    const PrizeSetPtr& prizes() const { return prizes_; }
    const std::vector<double>& values() const { return values_; }
    double value(std::size_t i) const { return values_.at(i); }
    double value(const std::string& id) const { return values_.at(prizes_->index_of(id)); }

    double min_value() const { return *std::min_element(values_.begin(), values_.end()); }
    double max_value() const { return *std::max_element(values_.begin(), values_.end()); }
    double range() const { return max_value() - min_value(); }
    bool non_constant(double tol = kProbTol) const { return range() > tol; }

    double max_abs() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::fabs(v));
        return m;
    }

    /// u' = a*u + b.
    UtilityFunction affine(double a, double b) const {
        std::vector<double> v(values_);
        for (double& x : v) x = a * x + b;
        return UtilityFunction(prizes_, std::move(v));
    }

private:
    PrizeSetPtr prizes_;
    std::vector<double> values_;
};

/// Expected utility of a lottery: sum_p x(p) * u(p).
inline double expected_utility(const UtilityFunction& u, const Lottery& x) {
    if (!same_prizes(u.prizes(), x.prizes()))
        throw domain_error("expected_utility: utility not defined on the lottery's prize set");
    double total = 0.0;
    for (std::size_t i = 0; i < x.probs().size(); ++i)
        total += x.prob(i) * u.value(i);
    return total;
}

} // namespace semihyper
