#include <steffenlab/enumeration.hpp>
#include <steffenlab/invariants.hpp>

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace steffenlab {

void validate(const EnumSpec& spec)
{
    if (spec.nMax > max_enumeration_order)
        throw Error(ErrorKind::InstanceTooLarge,
            "enumeration beyond n = " + std::to_string(max_enumeration_order) + " is not exhaustive-feasible");
    if (spec.nMin < 1 || spec.nMin > spec.nMax)
        throw Error(ErrorKind::ConfigError, "need 1 <= nMin <= nMax");
    if (spec.maxMu < 1 || spec.maxMu > 255)
        throw Error(ErrorKind::ConfigError, "maxMu must lie in 1..255");
    if (spec.girthMin < 3)
        throw Error(ErrorKind::ConfigError, "girthMin must be >= 3");
    if (spec.maxEdgeCopies < 0)
        throw Error(ErrorKind::ConfigError, "maxEdgeCopies must be >= 0");
}

nlohmann::ordered_json to_json(const EnumSpec& spec)
{
    return {
        {"nMin", spec.nMin},
        {"nMax", spec.nMax},
        {"maxMu", spec.maxMu},
        {"girthMin", spec.girthMin},
        {"requireCycle", spec.requireCycle},
        {"connectedOnly", spec.connectedOnly},
        {"allowIsolated", spec.allowIsolated},
        {"maxEdgeCopies", spec.maxEdgeCopies},
    };
}

EnumSpec enum_spec_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw Error(ErrorKind::ConfigError, "enumeration spec must be a JSON object");
    EnumSpec spec;
    try {
        for (const auto& [name, value] : j.items()) {
            if (name == "nMin")
                spec.nMin = value.get<int>();
            else if (name == "nMax")
                spec.nMax = value.get<int>();
            else if (name == "maxMu")
                spec.maxMu = value.get<int>();
            else if (name == "girthMin")
                spec.girthMin = value.get<int>();
            else if (name == "requireCycle")
                spec.requireCycle = value.get<bool>();
            else if (name == "connectedOnly")
                spec.connectedOnly = value.get<bool>();
            else if (name == "allowIsolated")
                spec.allowIsolated = value.get<bool>();
            else if (name == "maxEdgeCopies")
                spec.maxEdgeCopies = value.get<int>();
            else
                throw Error(ErrorKind::ConfigError, "unknown enumeration field '" + name + "'");
        }
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::ConfigError, std::string("bad enumeration field: ") + ex.what());
    }
    return spec;
}

std::vector<Multigraph> simple_graphs(int n, int girth_min, int max_edges)
{
    if (n < 0 || n > max_enumeration_order)
        throw Error(ErrorKind::InstanceTooLarge, "simple graph generation supports n <= 10");
    std::vector<Multigraph> level {Multigraph(std::min(n, 1))};
    for (int size = 2; size <= n; ++size) {
        std::vector<Multigraph> next;
        std::unordered_set<std::string> seen;
        const int fresh = size - 1;
        for (const auto& h : level) {
            const auto base = h.edges();
            for (std::uint32_t mask = 0; mask < (std::uint32_t {1} << fresh); ++mask) {
                if (h.size() + std::popcount(mask) > max_edges)
                    continue;
                std::vector<EdgeSpec> edges = base;
                for (int u : VertexSet(mask))
                    edges.push_back({u, fresh, 1});
                Multigraph g = Multigraph::build(size, edges);
                // Only cycles through the new vertex can be short.
                if (std::popcount(mask) >= 2 && !girth(g).at_least(girth_min))
                    continue;
                auto form = canonical_form(g);
                if (seen.insert(form.key).second)
                    next.push_back(from_canonical(form));
            }
        }
        level = std::move(next);
    }
    return level;
}

void GraphStream::resume_after(const CanonicalForm& key)
{
    pos_ = static_cast<std::size_t>(std::upper_bound(keys_.begin(), keys_.end(), key) - keys_.begin());
}

namespace {

    bool connected(const Multigraph& g)
    {
        if (g.order() == 0)
            return true;
        VertexSet reached {0};
        std::vector<int> stack {0};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u) - reached) {
                reached.insert(w);
                stack.push_back(w);
            }
        }
        return reached.size() == g.order();
    }

    bool admissible(const Multigraph& h, const EnumSpec& spec)
    {
        if (!spec.allowIsolated)
            for (int v = 0; v < h.order(); ++v)
                if (h.degree(v) == 0)
                    return false;
        if (spec.connectedOnly && !connected(h))
            return false;
        if (spec.requireCycle && !girth(h).finite())
            return false;
        return true;
    }

    // Multiplicity vectors over the edges of h that are lexicographically
    // least in their orbit under Aut(h); one per isomorphism class.
    std::vector<CanonicalForm> decorate(const Multigraph& h, const EnumSpec& spec)
    {
        const auto edges = h.edges();
        const std::size_t e = edges.size();
        std::vector<std::vector<std::size_t>> edge_perms;
        for (const auto& p : automorphisms(h)) {
            std::vector<std::size_t> sigma(e);
            bool identity = true;
            for (std::size_t i = 0; i < e; ++i) {
                int a = p[static_cast<std::size_t>(edges[i].u)];
                int b = p[static_cast<std::size_t>(edges[i].v)];
                if (a > b)
                    std::swap(a, b);
                auto it = std::lower_bound(edges.begin(), edges.end(), EdgeSpec {a, b, 1},
                    [](const EdgeSpec& x, const EdgeSpec& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
                sigma[i] = static_cast<std::size_t>(it - edges.begin());
                identity = identity && sigma[i] == i;
            }
            if (!identity)
                edge_perms.push_back(std::move(sigma));
        }

        std::vector<CanonicalForm> out;
        std::vector<int> x(e, 1);
        auto orbit_least = [&] {
            for (const auto& sigma : edge_perms)
                for (std::size_t i = 0; i < e; ++i) {
                    const int y = x[sigma[i]];
                    if (y != x[i]) {
                        if (y < x[i])
                            return false;
                        break;
                    }
                }
            return true;
        };
        auto emit = [&] {
            std::vector<EdgeSpec> multi = edges;
            for (std::size_t i = 0; i < e; ++i)
                multi[i].mult = x[i];
            out.push_back(canonical_form(Multigraph::build(h.order(), multi)));
        };
        auto fill = [&](auto&& self, std::size_t i, int used) -> void {
            if (i == e) {
                if (orbit_least())
                    emit();
                return;
            }
            const int reserve = static_cast<int>(e - i - 1);
            for (int m = 1; m <= spec.maxMu && used + m + reserve <= spec.maxEdgeCopies; ++m) {
                x[i] = m;
                self(self, i + 1, used + m);
            }
        };
        if (static_cast<int>(e) <= spec.maxEdgeCopies)
            fill(fill, 0, 0);
        return out;
    }

} // namespace

GraphStream enumerate_multigraphs(const EnumSpec& spec, int workers)
{
    validate(spec);
    std::vector<Multigraph> shapes;
    for (int n = spec.nMin; n <= spec.nMax; ++n)
        for (auto& h : simple_graphs(n, spec.girthMin, spec.maxEdgeCopies))
            if (admissible(h, spec))
                shapes.push_back(std::move(h));

    std::vector<std::vector<CanonicalForm>> per_shape(shapes.size());
    std::atomic<std::size_t> cursor {0};
    auto work = [&] {
        for (std::size_t i = cursor++; i < shapes.size(); i = cursor++)
            per_shape[i] = decorate(shapes[i], spec);
    };
    const int threads = std::max(1, workers);
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    std::vector<CanonicalForm> keys;
    for (auto& batch : per_shape)
        keys.insert(keys.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw std::logic_error("orbit representatives produced a repeated canonical key");
    return GraphStream(std::move(keys));
}

} // namespace steffenlab
