#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "semihyper/representation.hpp"

namespace semihyper {

/// Evidence about a preference order. A source may answer only some queries
/// (a tabulated relation) or all of them (an oracle). Query counting is
/// atomic, so checkers may share one source across threads.
class PreferenceSource {
public:
    virtual ~PreferenceSource() = default;

    std::optional<Ordering> try_compare(const FiniteStream& x, const FiniteStream& y) const {
        ++queries_;
        return do_compare(x, y);
    }
    std::optional<Ordering> try_compare(const InfiniteStream& x, const InfiniteStream& y) const {
        ++queries_;
        return do_compare(x, y);
    }
    std::optional<Ordering> try_compare(const Stream& x, const Stream& y) const {
        if (std::holds_alternative<FiniteStream>(x) && std::holds_alternative<FiniteStream>(y))
            return try_compare(std::get<FiniteStream>(x), std::get<FiniteStream>(y));
        if (std::holds_alternative<InfiniteStream>(x) && std::holds_alternative<InfiniteStream>(y))
            return try_compare(std::get<InfiniteStream>(x), std::get<InfiniteStream>(y));
        return std::nullopt;
    }

    /// Whether arbitrary constructed queries are answered (adaptive searches
    /// such as bisection need this).
    virtual bool adaptive() const = 0;

    /// The representation behind this source when one is known. Checkers may
    /// use it to construct sharper probe streams; every verdict they report
    /// still comes from try_compare.
    virtual const Representation* backing() const { return nullptr; }

    /// For tabulated evidence: the streams the table quantifies over.
    virtual const std::vector<FiniteStream>* tabulated_streams() const { return nullptr; }

    long query_count() const { return queries_.load(); }

private:
    virtual std::optional<Ordering> do_compare(const FiniteStream&, const FiniteStream&) const {
        return std::nullopt;
    }
    virtual std::optional<Ordering> do_compare(const InfiniteStream&, const InfiniteStream&) const {
        return std::nullopt;
    }

    mutable std::atomic<long> queries_{0};
};

/// A total comparator over its stream domain.
class PreferenceOracle : public PreferenceSource {
public:
    bool adaptive() const override { return true; }

    Ordering compare(const FiniteStream& x, const FiniteStream& y) const {
        auto v = try_compare(x, y);
        if (!v) throw domain_error("oracle does not rank finite streams of this shape");
        return *v;
    }
    Ordering compare(const InfiniteStream& x, const InfiniteStream& y) const {
        auto v = try_compare(x, y);
        if (!v) throw domain_error("oracle does not rank infinite streams");
        return *v;
    }
    Ordering compare(const Stream& x, const Stream& y) const {
        auto v = try_compare(x, y);
        if (!v) throw domain_error("oracle cannot rank streams of mixed shape");
        return *v;
    }
};

/// Ranks streams by a representation's value, with an indifference band.
class RepresentationOracle final : public PreferenceOracle {
public:
    explicit RepresentationOracle(Representation rep, double eps = kIndiffEps)
        : rep_(std::move(rep)), eps_(eps) {}

    const Representation* backing() const override { return &rep_; }
    double indifference_eps() const { return eps_; }

private:
    std::optional<Ordering> do_compare(const FiniteStream& x, const FiniteStream& y) const override {
        if (rep_.infinite_horizon() || x.length() != rep_.horizon() || y.length() != rep_.horizon())
            return std::nullopt;
        return order_of(evaluate(rep_, x) - evaluate(rep_, y), eps_);
    }
    std::optional<Ordering> do_compare(const InfiniteStream& x, const InfiniteStream& y) const override {
        if (!rep_.infinite_horizon()) return std::nullopt;
        return order_of(evaluate(rep_, x) - evaluate(rep_, y), eps_);
    }

    Representation rep_;
    double eps_;
};

/// Wraps arbitrary comparator callbacks; a black box to every checker.
class CallbackOracle final : public PreferenceOracle {
public:
    using FiniteCmp = std::function<Ordering(const FiniteStream&, const FiniteStream&)>;
    using InfiniteCmp = std::function<Ordering(const InfiniteStream&, const InfiniteStream&)>;

    explicit CallbackOracle(FiniteCmp fin, InfiniteCmp inf = nullptr)
        : fin_(std::move(fin)), inf_(std::move(inf)) {}
    static CallbackOracle infinite(InfiniteCmp inf) { return CallbackOracle(nullptr, std::move(inf)); }

private:
    std::optional<Ordering> do_compare(const FiniteStream& x, const FiniteStream& y) const override {
        if (!fin_) return std::nullopt;
        return fin_(x, y);
    }
    std::optional<Ordering> do_compare(const InfiniteStream& x, const InfiniteStream& y) const override {
        if (!inf_) return std::nullopt;
        return inf_(x, y);
    }

    FiniteCmp fin_;
    InfiniteCmp inf_;
};

/// Tabulated preference evidence: a list of streams and a verdict matrix.
/// Entries may be missing; the weak-order checker reports incompleteness.
class FinitePreferenceRelation final : public PreferenceSource {
public:
    using Matrix = std::vector<std::vector<std::optional<Ordering>>>;

    FinitePreferenceRelation(std::vector<FiniteStream> streams, Matrix verdicts)
        : streams_(std::move(streams)), verdicts_(std::move(verdicts)) {
        if (verdicts_.size() != streams_.size())
            throw argument_error("verdict matrix must be square over the stream list");
        for (const auto& row : verdicts_)
            if (row.size() != streams_.size())
                throw argument_error("verdict matrix must be square over the stream list");
    }

    bool adaptive() const override { return false; }
    const std::vector<FiniteStream>* tabulated_streams() const override { return &streams_; }

    std::size_t size() const { return streams_.size(); }
    const FiniteStream& stream(std::size_t i) const { return streams_.at(i); }
    std::optional<Ordering> verdict(std::size_t i, std::size_t j) const {
        return verdicts_.at(i).at(j);
    }

    bool complete() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                if (i != j && !verdicts_[i][j]) return false;
        return true;
    }

    std::optional<std::size_t> find(const FiniteStream& s) const {
        for (std::size_t i = 0; i < streams_.size(); ++i)
            if (approx_equal(streams_[i], s)) return i;
        return std::nullopt;
    }

private:
    std::optional<Ordering> do_compare(const FiniteStream& x, const FiniteStream& y) const override {
        auto i = find(x), j = find(y);
        if (!i || !j) return std::nullopt;
        if (*i == *j) return Ordering::Indifferent;
        return verdicts_[*i][*j];
    }

    std::vector<FiniteStream> streams_;
    Matrix verdicts_;
};

} // namespace semihyper
