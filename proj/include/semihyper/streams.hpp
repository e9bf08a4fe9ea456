#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "semihyper/lottery.hpp"

namespace semihyper {

/// A dated stream (x_1, ..., x_n) of lotteries over one prize set.
/// Period indices are 1-based throughout.
class FiniteStream {
public:
    explicit FiniteStream(std::vector<Lottery> periods) : periods_(std::move(periods)) {
        if (periods_.empty()) throw argument_error("stream must have at least one period");
        for (std::size_t i = 1; i < periods_.size(); ++i)
            if (!same_prizes(periods_[0].prizes(), periods_[i].prizes()))
                throw domain_error("stream periods must share one prize set");
    }

    static FiniteStream constant(const Lottery& a, int n) {
        return FiniteStream(std::vector<Lottery>(static_cast<std::size_t>(n), a));
    }

    int length() const { return static_cast<int>(periods_.size()); }
    const Lottery& at(int t) const { return periods_.at(static_cast<std::size_t>(t - 1)); }
    const std::vector<Lottery>& periods() const { return periods_; }
    const PrizeSetPtr& prizes() const { return periods_.front().prizes(); }

    FiniteStream with(int t, const Lottery& a) const {
        if (t < 1 || t > length()) throw argument_error("period index out of range");
        std::vector<Lottery> p(periods_);
        p[static_cast<std::size_t>(t - 1)] = a;
        return FiniteStream(std::move(p));
    }

private:
    std::vector<Lottery> periods_;
};

/// An infinite stream that is eventually constant: (p_1, ..., p_L, tail,
/// tail, ...). Ultimately constant streams anchored at the session's x_0 and
/// fully constant streams are the two special cases the axioms quantify over;
/// mixtures of those stay representable here because mixing two constants
/// yields a constant.
///
/// The prefix is kept canonical: trailing entries equal to the tail (within
/// kProbTol) are stripped, so stream equality is decidable componentwise.
class InfiniteStream {
public:
    InfiniteStream(std::vector<Lottery> prefix, Lottery tail)
        : prefix_(std::move(prefix)), tail_(std::move(tail)) {
        for (const auto& p : prefix_)
            if (!same_prizes(p.prizes(), tail_.prizes()))
                throw domain_error("stream periods must share one prize set");
        while (!prefix_.empty() && approx_equal(prefix_.back(), tail_)) prefix_.pop_back();
    }

    static InfiniteStream constant(const Lottery& a) { return InfiniteStream({}, a); }

    int prefix_length() const { return static_cast<int>(prefix_.size()); }
    const std::vector<Lottery>& prefix() const { return prefix_; }
    const Lottery& tail() const { return tail_; }
    const PrizeSetPtr& prizes() const { return tail_.prizes(); }
    bool is_constant() const { return prefix_.empty(); }

    const Lottery& at(int t) const {
        if (t < 1) throw argument_error("period index must be >= 1");
        if (t <= prefix_length()) return prefix_[static_cast<std::size_t>(t - 1)];
        return tail_;
    }

    InfiniteStream with(int t, const Lottery& a) const {
        if (t < 1) throw argument_error("period index must be >= 1");
        std::vector<Lottery> p(prefix_);
        while (static_cast<int>(p.size()) < t) p.push_back(tail_);
        p[static_cast<std::size_t>(t - 1)] = a;
        return InfiniteStream(std::move(p), tail_);
    }

    /// Prepend one period (the stationarity axiom's common head).
    InfiniteStream prepended(const Lottery& a) const {
        std::vector<Lottery> p;
        p.reserve(prefix_.size() + 1);
        p.push_back(a);
        p.insert(p.end(), prefix_.begin(), prefix_.end());
        return InfiniteStream(std::move(p), tail_);
    }

    /// Drop the first period (shift everything one period earlier).
    InfiniteStream dropped_head() const {
        if (prefix_.empty()) return *this;
        return InfiniteStream(std::vector<Lottery>(prefix_.begin() + 1, prefix_.end()), tail_);
    }

private:
    std::vector<Lottery> prefix_;
    Lottery tail_;
};

using Stream = std::variant<FiniteStream, InfiniteStream>;

inline bool approx_equal(const FiniteStream& a, const FiniteStream& b, double tol = kProbTol) {
    if (a.length() != b.length()) return false;
    for (int t = 1; t <= a.length(); ++t)
        if (!approx_equal(a.at(t), b.at(t), tol)) return false;
    return true;
}

inline bool approx_equal(const InfiniteStream& a, const InfiniteStream& b, double tol = kProbTol) {
    if (!approx_equal(a.tail(), b.tail(), tol)) return false;
    int len = std::max(a.prefix_length(), b.prefix_length());
    for (int t = 1; t <= len; ++t)
        if (!approx_equal(a.at(t), b.at(t), tol)) return false;
    return true;
}

/// Componentwise mixture of two streams of the same shape.
inline FiniteStream mix_streams(const FiniteStream& x, double lam, const FiniteStream& y) {
    if (x.length() != y.length())
        throw domain_error("mix_streams: streams of different length");
    std::vector<Lottery> periods;
    periods.reserve(static_cast<std::size_t>(x.length()));
    for (int t = 1; t <= x.length(); ++t) periods.push_back(mix(x.at(t), lam, y.at(t)));
    return FiniteStream(std::move(periods));
}

/// Componentwise mixture of two eventually-constant streams. The shorter
/// prefix is padded with its own tail, and the result's tail is the mixture
/// of the two tails.
inline InfiniteStream mix_streams(const InfiniteStream& x, double lam, const InfiniteStream& y) {
    int len = std::max(x.prefix_length(), y.prefix_length());
    std::vector<Lottery> prefix;
    prefix.reserve(static_cast<std::size_t>(len));
    for (int t = 1; t <= len; ++t) prefix.push_back(mix(x.at(t), lam, y.at(t)));
    return InfiniteStream(std::move(prefix), mix(x.tail(), lam, y.tail()));
}

/// [a]_k: the stream with a in period k and the anchor everywhere else.
inline InfiniteStream place_at(const Lottery& a, int k, const Lottery& anchor) {
    if (k < 1) throw argument_error("place_at: period index must be >= 1");
    std::vector<Lottery> prefix(static_cast<std::size_t>(k), anchor);
    prefix[static_cast<std::size_t>(k - 1)] = a;
    return InfiniteStream(std::move(prefix), anchor);
}

/// The stream (x_1, ..., x_{k-1}, a, x_{k+1}, ..., x_T, anchor, anchor, ...):
/// period k replaced by a, everything beyond T cut to the anchor.
inline InfiniteStream replace_and_truncate(const InfiniteStream& x, int k, const Lottery& a,
                                           int T, const Lottery& anchor) {
    if (k < 1) throw argument_error("replace_and_truncate: period index must be >= 1");
    if (T < k) throw argument_error("replace_and_truncate: requires k <= T");
    std::vector<Lottery> prefix;
    prefix.reserve(static_cast<std::size_t>(T));
    for (int t = 1; t <= T; ++t) prefix.push_back(t == k ? a : x.at(t));
    return InfiniteStream(std::move(prefix), anchor);
}

/// Exchange periods i and j.
inline FiniteStream swap_periods(const FiniteStream& x, int i, int j) {
    if (i < 1 || i > x.length() || j < 1 || j > x.length())
        throw argument_error("swap_periods: index out of range");
    std::vector<Lottery> p(x.periods());
    std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(j - 1)]);
    return FiniteStream(std::move(p));
}

/// (a, x_2, ..., x_n) -> (x_2, ..., x_n, a): the one-period shift compared by
/// the stationarity axiom.
inline FiniteStream rotate_for_stationarity(const FiniteStream& x) {
    if (x.length() < 2)
        throw argument_error("rotate_for_stationarity: stream must have length >= 2");
    std::vector<Lottery> p;
    p.reserve(static_cast<std::size_t>(x.length()));
    for (int t = 2; t <= x.length(); ++t) p.push_back(x.at(t));
    p.push_back(x.at(1));
    return FiniteStream(std::move(p));
}

/// Embed a finite stream into the infinite setting with an anchor tail.
inline InfiniteStream embed(const FiniteStream& x, const Lottery& anchor) {
    return InfiniteStream(x.periods(), anchor);
}

} // namespace semihyper
