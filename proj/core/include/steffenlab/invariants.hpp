#pragma once

#include <steffenlab/multigraph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace steffenlab {

// Girth of the underlying simple graph. Parallel edges never form 2-cycles.
struct Girth {
    std::optional<int> length; // empty means infinite (acyclic)

    static Girth infinite() { return {}; }
    bool finite() const { return length.has_value(); }
    bool at_least(int g) const { return !length || *length >= g; }
    bool operator==(const Girth&) const = default;
};

// Closed walk v_0 .. v_{k-1} v_0 of distinct vertices, k >= 3.
struct CycleSeq {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    VertexSet vertex_set() const { return VertexSet::of(vertices); }
    bool operator==(const CycleSeq&) const = default;
};

// Rotate to start at the smallest vertex, then pick the smaller direction.
CycleSeq canonical_rotation(const CycleSeq& c);

// True when `c` is a cycle of the simple graph restricted to `within`.
bool is_cycle_in(const SimpleGraphView& view, const CycleSeq& c, VertexSet within);

struct DensityWitness {
    int gamma = 0;
    VertexSet witness;
};

inline constexpr int default_density_cap = 22;

Girth girth(const Multigraph& g);
Girth girth(const SimpleGraphView& view, VertexSet within);

// Minimum-length cycle inside `within`, smallest canonical sequence among ties.
std::optional<CycleSeq> shortest_cycle(const SimpleGraphView& view, VertexSet within);

// max over odd |S| >= 3 of ceil(2 |E(G[S])| / (|S| - 1)); lexicographically
// least maximizing set as witness.
DensityWitness density(const Multigraph& g, int cap = default_density_cap);

// ceil(2 * edges / (size - 1)) for an odd vertex set of the given size.
int density_ratio(int edges, int size);

int steffen_bound(const Multigraph& g);
int steffen_bound(int Delta, int mu, const Girth& g);

struct ShortCycleViolation {
    int clause = 0; // 1..4
    std::vector<int> vertices;

    bool operator==(const ShortCycleViolation&) const = default;
};

struct ShortCycleReport {
    std::vector<ShortCycleViolation> violations;
    // Number of vertex tuples inspected per clause (index 0 unused).
    long checked[5] = {0, 0, 0, 0, 0};
};

// Neighbourhood constraints around a shortest cycle `c` of G[within]:
//   (1) |c| >= 5: each outside vertex sees at most one cycle vertex
//   (2) |c| >= 7: adjacent outside pairs see at most one in total
//   (3) |c| >= 8: outside 5-vertex paths see at most two in total
//   (4) |c| >= 6: outside 3-vertex paths see at most two in total
// Throws NotShortestCycle when `c` is not a shortest cycle of G[within].
ShortCycleReport check_short_cycle_properties(const Multigraph& g, const CycleSeq& c, VertexSet within);

nlohmann::ordered_json to_json(const Girth& g);
nlohmann::ordered_json to_json(const ShortCycleViolation& v);

} // namespace steffenlab
