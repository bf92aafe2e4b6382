#include <steffenlab/structure.hpp>

#include <algorithm>
#include <deque>

namespace steffenlab {

VertexSet CyclePartition::stage(std::size_t i, int n) const
{
    VertexSet rest = VertexSet::first(n);
    for (std::size_t j = 0; j < i && j < cycles.size(); ++j)
        rest = rest - cycles[j].vertex_set();
    return rest;
}

CyclePartition cycle_partition(const Multigraph& g)
{
    const auto view = underlying_simple(g);
    CyclePartition p;
    VertexSet rest = g.vertices();
    while (auto c = shortest_cycle(view, rest)) {
        rest = rest - c->vertex_set();
        p.cycles.push_back(std::move(*c));
    }
    p.v0 = rest;
    return p;
}

std::vector<std::string> verify_cycle_partition(const Multigraph& g, const CyclePartition& p)
{
    std::vector<std::string> problems;
    const auto view = underlying_simple(g);
    VertexSet seen;
    for (std::size_t i = 0; i < p.cycles.size(); ++i) {
        const auto& c = p.cycles[i];
        const VertexSet stage = p.stage(i, g.order());
        if ((c.vertex_set() & seen).size() != 0)
            problems.push_back("cycle " + std::to_string(i) + " overlaps an earlier cycle");
        seen = seen | c.vertex_set();
        if (!is_cycle_in(view, c, stage)) {
            problems.push_back("cycle " + std::to_string(i) + " is not a cycle of its stage");
            continue;
        }
        const Girth stage_girth = girth(view, stage);
        if (!stage_girth.finite() || *stage_girth.length != c.length())
            problems.push_back("cycle " + std::to_string(i) + " is not shortest in its stage");
    }
    if ((seen & p.v0).size() != 0)
        problems.push_back("V0 meets a cycle");
    if ((seen | p.v0) != g.vertices())
        problems.push_back("cycles and V0 do not cover the vertex set");
    if (girth(view, p.v0).finite())
        problems.push_back("V0 is not acyclic");
    return problems;
}

VertexSet Fan::vertices() const
{
    VertexSet s;
    for (const auto& path : paths)
        for (int v : path)
            s.insert(v);
    return s;
}

std::optional<Fan> max_fan(const Multigraph& g, const CyclePartition& p, int apex, std::size_t target)
{
    if (apex < 0 || apex >= g.order() || !p.v0.contains(apex))
        throw Error(ErrorKind::VertexNotInV0, "apex " + std::to_string(apex) + " is not in V0");
    if (target >= p.cycles.size())
        throw Error(ErrorKind::BadParameter, "cycle index " + std::to_string(target) + " out of range");

    const auto view = underlying_simple(g);
    const VertexSet on_cycle = p.cycles[target].vertex_set();
    const int n = g.order();
    // Vertex x in V0 splits into in = 2x and out = 2x + 1; a cycle vertex y is
    // the single node 2y with unit capacity into the sink.
    const int nodes = 2 * n + 1;
    const int sink = 2 * n;
    const int source = 2 * apex + 1;
    std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
    auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * nodes + b)]; };
    for (int x : p.v0) {
        if (x != apex)
            at(2 * x, 2 * x + 1) = 1;
        for (int w : view.adj[static_cast<std::size_t>(x)]) {
            if (p.v0.contains(w) && w != apex)
                at(2 * x + 1, 2 * w) = 1;
            else if (on_cycle.contains(w))
                at(2 * x + 1, 2 * w) = 1;
        }
    }
    for (int y : on_cycle)
        at(2 * y, sink) = 1;
    const std::vector<int> original = cap;

    int flow = 0;
    std::vector<int> prev(static_cast<std::size_t>(nodes));
    while (true) {
        std::fill(prev.begin(), prev.end(), -1);
        prev[static_cast<std::size_t>(source)] = source;
        std::deque<int> queue {source};
        while (!queue.empty() && prev[static_cast<std::size_t>(sink)] < 0) {
            const int a = queue.front();
            queue.pop_front();
            for (int b = 0; b < nodes; ++b)
                if (prev[static_cast<std::size_t>(b)] < 0 && at(a, b) > 0) {
                    prev[static_cast<std::size_t>(b)] = a;
                    queue.push_back(b);
                }
        }
        if (prev[static_cast<std::size_t>(sink)] < 0)
            break;
        for (int b = sink; b != source; b = prev[static_cast<std::size_t>(b)]) {
            const int a = prev[static_cast<std::size_t>(b)];
            --at(a, b);
            ++at(b, a);
        }
        ++flow;
    }
    if (flow == 0)
        return std::nullopt;

    // Flow on an original arc = original capacity minus residual.
    std::vector<int> used(static_cast<std::size_t>(nodes * nodes), 0);
    for (std::size_t i = 0; i < used.size(); ++i)
        used[i] = std::max(0, original[i] - cap[i]);
    Fan fan;
    fan.apex = apex;
    fan.target = target;
    for (int unit = 0; unit < flow; ++unit) {
        std::vector<int> path {apex};
        int a = source;
        while (a != sink) {
            int b = 0;
            while (used[static_cast<std::size_t>(a * nodes + b)] == 0)
                ++b;
            --used[static_cast<std::size_t>(a * nodes + b)];
            if (b != sink && b / 2 != path.back())
                path.push_back(b / 2);
            a = b;
        }
        fan.paths.push_back(std::move(path));
    }
    return fan;
}

bool fan_bound_holds(int t, int tree_size, int cycle_length)
{
    return 2 * tree_size >= (t - 1) * cycle_length - 2 * (t - 1);
}

bool fan_bound_check(const Fan& f, const CycleSeq& target_cycle)
{
    return fan_bound_holds(f.t(), f.tree_size(), target_cycle.length());
}

bool is_ring_graph(const Multigraph& g)
{
    const int n = g.order();
    if (n < 3)
        return false;
    for (int v = 0; v < n; ++v)
        if (g.neighbors(v).size() != 2)
            return false;
    VertexSet reached {0};
    std::deque<int> queue {0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u) - reached) {
            reached.insert(w);
            queue.push_back(w);
        }
    }
    return reached.size() == n;
}

namespace {

    void collect_cycles(const SimpleGraphView& view, VertexSet allowed, std::vector<int>& path, VertexSet& on_path,
        std::vector<CycleSeq>& out, std::size_t cap)
    {
        const int s = path.front();
        const int last = path.back();
        if (path.size() >= 3 && view.adjacent(last, s) && path[1] < last) {
            if (out.size() >= cap)
                throw Error(ErrorKind::InstanceTooLarge, "cycle enumeration exceeded " + std::to_string(cap) + " cycles");
            out.push_back(CycleSeq {path});
        }
        for (int y : view.adj[static_cast<std::size_t>(last)] & allowed) {
            if (on_path.contains(y))
                continue;
            path.push_back(y);
            on_path.insert(y);
            collect_cycles(view, allowed, path, on_path, out, cap);
            on_path.erase(y);
            path.pop_back();
        }
    }

} // namespace

std::vector<CycleSeq> enumerate_cycles(const SimpleGraphView& view, std::size_t cap)
{
    std::vector<CycleSeq> out;
    for (int s = 0; s < view.n; ++s) {
        VertexSet allowed;
        for (int v = s + 1; v < view.n; ++v)
            allowed.insert(v);
        std::vector<int> path {s};
        VertexSet on_path {s};
        collect_cycles(view, allowed, path, on_path, out, cap);
    }
    std::sort(out.begin(), out.end(), [](const CycleSeq& a, const CycleSeq& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return out;
}

Multigraph RingSubgraph::as_subgraph(int n) const
{
    std::vector<EdgeSpec> edges;
    const auto len = cycle.vertices.size();
    for (std::size_t i = 0; i < len; ++i)
        edges.push_back({cycle.vertices[i], cycle.vertices[(i + 1) % len], multiplicities[i]});
    return Multigraph::build(n, edges);
}

namespace {

    int ring_chi(const std::vector<int>& mults, const SolveOptions& opts)
    {
        std::vector<EdgeSpec> edges;
        const int len = static_cast<int>(mults.size());
        for (int i = 0; i < len; ++i)
            edges.push_back({i, (i + 1) % len, mults[static_cast<std::size_t>(i)]});
        return chromatic_index(Multigraph::build(len, edges), ChiMode::Search, opts).chi;
    }

} // namespace

std::optional<RingSubgraph> find_ring_subgraph_with_chi(
    const Multigraph& g, int target, const SolveOptions& opts, std::size_t cycle_cap)
{
    if (target < 1)
        throw Error(ErrorKind::BadParameter, "target chromatic index must be positive");
    for (auto& cycle : enumerate_cycles(underlying_simple(g), cycle_cap)) {
        const auto len = cycle.vertices.size();
        std::vector<int> mults(len);
        for (std::size_t i = 0; i < len; ++i)
            mults[i] = g.multiplicity(cycle.vertices[i], cycle.vertices[(i + 1) % len]);
        int chi = ring_chi(mults, opts);
        // Dropping one copy lowers the index by at most one, so descending
        // from the maximal ring hits every value down to the simple cycle's.
        while (chi > target) {
            auto it = std::find_if(mults.begin(), mults.end(), [](int m) { return m > 1; });
            if (it == mults.end())
                break;
            --*it;
            chi = ring_chi(mults, opts);
        }
        if (chi == target)
            return RingSubgraph {std::move(cycle), std::move(mults), chi};
    }
    return std::nullopt;
}

nlohmann::ordered_json to_json(const CyclePartition& p)
{
    nlohmann::ordered_json j;
    auto cycles = nlohmann::ordered_json::array();
    for (const auto& c : p.cycles)
        cycles.push_back(c.vertices);
    j["cycles"] = std::move(cycles);
    j["v0"] = p.v0.to_vector();
    return j;
}

nlohmann::ordered_json to_json(const Fan& f)
{
    nlohmann::ordered_json j;
    j["apex"] = f.apex;
    j["target"] = f.target;
    j["t"] = f.t();
    j["paths"] = f.paths;
    j["treeSize"] = f.tree_size();
    return j;
}

nlohmann::ordered_json to_json(const RingSubgraph& r)
{
    nlohmann::ordered_json j;
    j["cycle"] = r.cycle.vertices;
    j["multiplicities"] = r.multiplicities;
    j["chi"] = r.chi;
    return j;
}

} // namespace steffenlab
