#include <steffenlab/invariants.hpp>

#include <algorithm>
#include <deque>

namespace steffenlab {

CycleSeq canonical_rotation(const CycleSeq& c)
{
    const auto& vs = c.vertices;
    const std::size_t k = vs.size();
    if (k == 0)
        return c;
    const auto start = static_cast<std::size_t>(std::min_element(vs.begin(), vs.end()) - vs.begin());
    CycleSeq fwd, bwd;
    fwd.vertices.reserve(k);
    bwd.vertices.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        fwd.vertices.push_back(vs[(start + i) % k]);
        bwd.vertices.push_back(vs[(start + k - i) % k]);
    }
    return bwd.vertices < fwd.vertices ? bwd : fwd;
}

bool is_cycle_in(const SimpleGraphView& view, const CycleSeq& c, VertexSet within)
{
    const auto& vs = c.vertices;
    if (vs.size() < 3)
        return false;
    VertexSet seen;
    for (int v : vs) {
        if (v < 0 || v >= view.n || !within.contains(v) || seen.contains(v))
            return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!view.adjacent(vs[i], vs[(i + 1) % vs.size()]))
            return false;
    return true;
}

Girth girth(const SimpleGraphView& view, VertexSet within)
{
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(view.n));
    std::vector<int> parent(static_cast<std::size_t>(view.n));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(view.n));
    for (int root : within) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            const int du = dist[static_cast<std::size_t>(u)];
            // Nothing shorter can close from this depth on.
            if (best >= 0 && 2 * du + 1 >= best)
                break;
            for (int w : view.adj[static_cast<std::size_t>(u)] & within) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = du + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    const int len = du + dist[static_cast<std::size_t>(w)] + 1;
                    if (best < 0 || len < best)
                        best = len;
                }
            }
        }
    }
    if (best < 0)
        return Girth::infinite();
    return Girth {best};
}

Girth girth(const Multigraph& g)
{
    return girth(underlying_simple(g), g.vertices());
}

namespace {

    bool extend_cycle(const SimpleGraphView& view, VertexSet allowed, const std::vector<int>& dist, int length,
        std::vector<int>& path, VertexSet& on_path)
    {
        const int s = path.front();
        const int last = path.back();
        const int k = static_cast<int>(path.size());
        if (k == length)
            return view.adjacent(last, s);
        for (int y : view.adj[static_cast<std::size_t>(last)] & allowed) {
            if (on_path.contains(y) || y == s)
                continue;
            const int d = dist[static_cast<std::size_t>(y)];
            if (d < 0 || d > length - k)
                continue;
            path.push_back(y);
            on_path.insert(y);
            if (extend_cycle(view, allowed, dist, length, path, on_path))
                return true;
            on_path.erase(y);
            path.pop_back();
        }
        return false;
    }

} // namespace

std::optional<CycleSeq> shortest_cycle(const SimpleGraphView& view, VertexSet within)
{
    const Girth g = girth(view, within);
    if (!g.finite())
        return std::nullopt;
    const int length = *g.length;
    std::vector<int> dist(static_cast<std::size_t>(view.n));
    for (int s : within) {
        // Cycles whose smallest vertex is s.
        VertexSet allowed;
        for (int v : within)
            if (v >= s)
                allowed.insert(v);
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue {s};
        dist[static_cast<std::size_t>(s)] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : view.adj[static_cast<std::size_t>(u)] & allowed)
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
        }
        std::vector<int> path {s};
        VertexSet on_path {s};
        if (extend_cycle(view, allowed, dist, length, path, on_path))
            return CycleSeq {path};
    }
    return std::nullopt;
}

int density_ratio(int edges, int size)
{
    const int denom = size - 1;
    return (2 * edges + denom - 1) / denom;
}

namespace {

    bool lex_less(VertexSet a, VertexSet b)
    {
        auto ia = a.begin(), ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
            if (*ia != *ib)
                return *ia < *ib;
        return ia == a.end() && ib != b.end();
    }

} // namespace

DensityWitness density(const Multigraph& g, int cap)
{
    const int n = g.order();
    DensityWitness best;
    if (n < 3)
        return best;
    if (n > cap)
        throw Error(ErrorKind::InstanceTooLarge,
            "density enumeration over n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    const std::uint32_t total = std::uint32_t {1} << n;
    std::vector<std::int32_t> edges(total, 0);
    bool have = false;
    for (std::uint32_t s = 1; s < total; ++s) {
        const int low = std::countr_zero(s);
        const std::uint32_t rest = s & (s - 1);
        std::int32_t e = edges[rest];
        for (int u : VertexSet(rest) & g.neighbors(low))
            e += g.multiplicity(low, u);
        edges[s] = e;
        const int size = std::popcount(s);
        if (size < 3 || size % 2 == 0)
            continue;
        const int ratio = density_ratio(e, size);
        const VertexSet set(s);
        if (!have || ratio > best.gamma || (ratio == best.gamma && lex_less(set, best.witness))) {
            best.gamma = ratio;
            best.witness = set;
            have = true;
        }
    }
    return best;
}

int steffen_bound(int Delta, int mu, const Girth& g)
{
    if (mu == 0)
        return Delta;
    if (!g.finite())
        return Delta + 1;
    const int half = *g.length / 2;
    return Delta + (mu + half - 1) / half;
}

int steffen_bound(const Multigraph& g)
{
    const auto inv = basic_invariants(g);
    return steffen_bound(inv.Delta, inv.mu, girth(g));
}

namespace {

    void five_paths(const SimpleGraphView& view, VertexSet outside, std::vector<int>& path, VertexSet& on_path,
        const auto& visit)
    {
        if (path.size() == 5) {
            if (path.front() < path.back())
                visit(path);
            return;
        }
        for (int y : view.adj[static_cast<std::size_t>(path.back())] & outside) {
            if (on_path.contains(y))
                continue;
            path.push_back(y);
            on_path.insert(y);
            five_paths(view, outside, path, on_path, visit);
            on_path.erase(y);
            path.pop_back();
        }
    }

} // namespace

ShortCycleReport check_short_cycle_properties(const Multigraph& g, const CycleSeq& c, VertexSet within)
{
    const auto view = underlying_simple(g);
    const Girth stage = girth(view, within);
    if (!is_cycle_in(view, c, within) || !stage.finite() || *stage.length != c.length())
        throw Error(ErrorKind::NotShortestCycle,
            "cycle of length " + std::to_string(c.length()) + " is not a shortest cycle of the given vertex set");

    ShortCycleReport report;
    const int len = c.length();
    const VertexSet on_cycle = c.vertex_set();
    const VertexSet outside = within - on_cycle;
    auto hits = [&](int v) { return (view.adj[static_cast<std::size_t>(v)] & on_cycle).size(); };

    if (len >= 5) {
        for (int v : outside) {
            ++report.checked[1];
            if (hits(v) > 1)
                report.violations.push_back({1, {v}});
        }
    }
    if (len >= 7) {
        for (int u : outside)
            for (int v : view.adj[static_cast<std::size_t>(u)] & outside) {
                if (v < u)
                    continue;
                ++report.checked[2];
                if (hits(u) + hits(v) > 1)
                    report.violations.push_back({2, {u, v}});
            }
    }
    if (len >= 8) {
        for (int start : outside) {
            std::vector<int> path {start};
            VertexSet on_path {start};
            five_paths(view, outside, path, on_path, [&](const std::vector<int>& p) {
                ++report.checked[3];
                int sum = 0;
                for (int v : p)
                    sum += hits(v);
                if (sum > 2)
                    report.violations.push_back({3, p});
            });
        }
    }
    if (len >= 6) {
        for (int mid : outside) {
            const auto nbrs = (view.adj[static_cast<std::size_t>(mid)] & outside).to_vector();
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                    ++report.checked[4];
                    if (hits(nbrs[i]) + hits(mid) + hits(nbrs[j]) > 2)
                        report.violations.push_back({4, {nbrs[i], mid, nbrs[j]}});
                }
        }
    }
    return report;
}

nlohmann::ordered_json to_json(const Girth& g)
{
    if (!g.finite())
        return nullptr;
    return *g.length;
}

nlohmann::ordered_json to_json(const ShortCycleViolation& v)
{
    return {{"clause", v.clause}, {"vertices", v.vertices}};
}

} // namespace steffenlab
