#pragma once

#include <steffenlab/multigraph.hpp>

#include <cstdint>
#include <random>
#include <span>

namespace steffenlab {

// Cycle of length g with every edge repeated mu times.
Multigraph mu_cycle(int g, int mu);

// Complete graph on n vertices with every edge repeated mu times.
Multigraph mu_complete(int n, int mu);

// Cycle 0..g-1 whose i-th edge {i, i+1 mod g} has multiplicity mults[i].
Multigraph ring(int g, std::span<const int> mults);

// Platform-stable draws; std::uniform_int_distribution is implementation-defined.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [lo, hi].
    int uniform(int lo, int hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    bool percent(int p) { return uniform(0, 99) < p; }

private:
    std::mt19937_64 engine_;
};

// Mixture of dense random graphs and sparse tree-plus-chords graphs (the
// latter biased toward girth 5..7), with multiplicities in 1..max_mu.
Multigraph random_multigraph(SeededRng& rng, int max_n, int max_mu);

} // namespace steffenlab
