#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "semihyper/random.hpp"
#include "semihyper/streams.hpp"

namespace semihyper {

/// The finite instantiation over which universally quantified axioms are
/// certified: a lottery pool built from degenerate prizes and grid mixtures,
/// plus seeded samples of finite and eventually-constant streams.
///
/// Everything is deterministic in (configuration, seed); reports built from a
/// testbed are reproducible bit for bit.
class Testbed {
public:
    Testbed(PrizeSetPtr prizes, Lottery anchor, std::vector<double> grid, int n, int T,
            int horizon_cap = 200, std::uint64_t seed = 0)
        : prizes_(std::move(prizes)),
          anchor_(std::move(anchor)),
          grid_(std::move(grid)),
          n_(n),
          T_(T),
          horizon_cap_(horizon_cap),
          seed_(seed) {
        if (!same_prizes(anchor_.prizes(), prizes_))
            throw domain_error("anchor must live on the testbed prize set");
        if (n_ < 1) throw argument_error("stream length must be >= 1");
        if (T_ < 1) throw argument_error("bias horizon must be >= 1");
        if (horizon_cap_ < n_) throw argument_error("horizon cap must be >= stream length");
        grid_.push_back(0.0);
        grid_.push_back(1.0);
        std::sort(grid_.begin(), grid_.end());
        grid_.erase(std::unique(grid_.begin(), grid_.end()), grid_.end());
        for (double g : grid_)
            if (!(g >= 0.0 && g <= 1.0)) throw argument_error("grid coefficients must lie in [0,1]");
        build();
    }

    static Testbed standard(PrizeSetPtr prizes, Lottery anchor, int n, int T,
                            std::uint64_t seed = 0) {
        return Testbed(std::move(prizes), std::move(anchor), {0.25, 0.5, 0.75}, n, T, 200, seed);
    }

    const PrizeSetPtr& prizes() const { return prizes_; }
    const Lottery& anchor() const { return anchor_; }
    const std::vector<double>& grid() const { return grid_; }
    int n() const { return n_; }
    int T() const { return T_; }
    int horizon_cap() const { return horizon_cap_; }
    std::uint64_t seed() const { return seed_; }

    std::vector<double> interior_grid() const {
        std::vector<double> g;
        for (double v : grid_)
            if (v > 0.0 && v < 1.0) g.push_back(v);
        return g;
    }

    /// Base lotteries: degenerates, the anchor, and pairwise grid mixtures.
    const std::vector<Lottery>& pool() const { return pool_; }

    const std::vector<FiniteStream>& finite_streams() const { return finite_; }
    const std::vector<InfiniteStream>& infinite_streams() const { return infinite_; }

    Lottery random_pool_lottery(Rng& rng) const { return pool_[rng.index(pool_.size())]; }

private:
    void build() {
        // Pool: degenerates first, then the anchor, then pairwise mixtures at
        // interior grid points; duplicates dropped.
        for (std::size_t i = 0; i < prizes_->size(); ++i)
            push_unique(pool_, Lottery::degenerate(prizes_, prizes_->id(i)));
        push_unique(pool_, anchor_);
        const auto interior = interior_grid();
        for (std::size_t i = 0; i < prizes_->size(); ++i)
            for (std::size_t j = i + 1; j < prizes_->size(); ++j)
                for (double lam : interior)
                    push_unique(pool_, mix(Lottery::degenerate(prizes_, prizes_->id(i)), lam,
                                           Lottery::degenerate(prizes_, prizes_->id(j))));

        Rng rng(seed_ ^ 0x5eedbed5u);

        // Finite streams: the all-anchor stream, a few structured one-slot
        // variations, then a seeded sample of pool tuples.
        finite_.push_back(FiniteStream::constant(anchor_, n_));
        for (int k = 1; k <= std::min(n_, 2); ++k)
            for (std::size_t p = 0; p < std::min<std::size_t>(pool_.size(), 3); ++p)
                finite_.push_back(FiniteStream::constant(anchor_, n_).with(k, pool_[p]));
        while (static_cast<int>(finite_.size()) < kMaxStreams) {
            std::vector<Lottery> periods;
            periods.reserve(static_cast<std::size_t>(n_));
            for (int t = 0; t < n_; ++t) periods.push_back(pool_[rng.index(pool_.size())]);
            finite_.push_back(FiniteStream(std::move(periods)));
        }

        // Infinite streams: the constant anchor, single-period placements,
        // pool constants, then seeded ultimately-constant prefixes.
        infinite_.push_back(InfiniteStream::constant(anchor_));
        for (std::size_t p = 0; p < std::min<std::size_t>(pool_.size(), 3); ++p) {
            infinite_.push_back(place_at(pool_[p], 1, anchor_));
            infinite_.push_back(InfiniteStream::constant(pool_[p]));
        }
        while (static_cast<int>(infinite_.size()) < kMaxStreams) {
            int len = rng.uniform_int(1, std::max(2, n_));
            std::vector<Lottery> prefix;
            prefix.reserve(static_cast<std::size_t>(len));
            for (int t = 0; t < len; ++t) prefix.push_back(pool_[rng.index(pool_.size())]);
            infinite_.push_back(InfiniteStream(std::move(prefix), anchor_));
        }
    }

    static void push_unique(std::vector<Lottery>& v, const Lottery& l) {
        for (const auto& existing : v)
            if (approx_equal(existing, l)) return;
        v.push_back(l);
    }

    static constexpr int kMaxStreams = 16;

    PrizeSetPtr prizes_;
    Lottery anchor_;
    std::vector<double> grid_;
    int n_;
    int T_;
    int horizon_cap_;
    std::uint64_t seed_;
    std::vector<Lottery> pool_;
    std::vector<FiniteStream> finite_;
    std::vector<InfiniteStream> infinite_;
};

} // namespace semihyper
