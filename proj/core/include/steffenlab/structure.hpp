#pragma once

#include <steffenlab/coloring.hpp>
#include <steffenlab/invariants.hpp>
#include <steffenlab/multigraph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace steffenlab {

// Greedy peeling: cycles[i] is a shortest cycle of the underlying graph minus
// the vertices of cycles[0..i-1]; what remains (v0) induces a forest.
struct CyclePartition {
    std::vector<CycleSeq> cycles;
    VertexSet v0;

    // Vertex set in which cycles[i] is shortest.
    VertexSet stage(std::size_t i, int n) const;
    bool operator==(const CyclePartition&) const = default;
};

CyclePartition cycle_partition(const Multigraph& g);

// Independent re-verification; returns human-readable problems, empty when valid.
std::vector<std::string> verify_cycle_partition(const Multigraph& g, const CyclePartition& p);

// t internally disjoint paths from `apex` (in V0) to distinct vertices of
// cycle `target`; all path vertices except the last lie in V0.
struct Fan {
    int apex = 0;
    std::size_t target = 0;
    std::vector<std::vector<int>> paths;

    int t() const { return static_cast<int>(paths.size()); }
    VertexSet vertices() const;
    // |T^0|: fan vertices off the target cycle.
    int tree_size() const { return vertices().size() - t(); }
};

std::optional<Fan> max_fan(const Multigraph& g, const CyclePartition& p, int apex, std::size_t target);

// |T^0| >= (t-1)|C|/2 - (t-1), evaluated exactly.
bool fan_bound_holds(int t, int tree_size, int cycle_length);
bool fan_bound_check(const Fan& f, const CycleSeq& target_cycle);

bool is_ring_graph(const Multigraph& g);

// Every simple cycle of the view, each once, ordered by (length, canonical sequence).
std::vector<CycleSeq> enumerate_cycles(const SimpleGraphView& view, std::size_t cap = 1'000'000);

struct RingSubgraph {
    CycleSeq cycle;
    std::vector<int> multiplicities; // multiplicities[i] on (cycle[i], cycle[i+1 mod len])
    int chi = 0;

    // The ring as a graph on the original vertex labels.
    Multigraph as_subgraph(int n) const;
};

std::optional<RingSubgraph> find_ring_subgraph_with_chi(
    const Multigraph& g, int target, const SolveOptions& opts = {}, std::size_t cycle_cap = 1'000'000);

nlohmann::ordered_json to_json(const CyclePartition& p);
nlohmann::ordered_json to_json(const Fan& f);
nlohmann::ordered_json to_json(const RingSubgraph& r);

} // namespace steffenlab
