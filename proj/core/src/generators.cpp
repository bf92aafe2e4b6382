#include <steffenlab/generators.hpp>
#include <steffenlab/invariants.hpp>

#include <vector>

namespace steffenlab {

Multigraph mu_cycle(int g, int mu)
{
    if (g < 3 || mu < 1)
        throw Error(ErrorKind::BadParameter, "mu_cycle needs g >= 3 and mu >= 1");
    std::vector<int> mults(static_cast<std::size_t>(g), mu);
    return ring(g, mults);
}

Multigraph mu_complete(int n, int mu)
{
    if (n < 2 || mu < 1)
        throw Error(ErrorKind::BadParameter, "mu_complete needs n >= 2 and mu >= 1");
    std::vector<EdgeSpec> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v, mu});
    return Multigraph::build(n, edges);
}

Multigraph ring(int g, std::span<const int> mults)
{
    if (g < 3)
        throw Error(ErrorKind::BadParameter, "ring needs g >= 3");
    if (static_cast<int>(mults.size()) != g)
        throw Error(ErrorKind::BadParameter,
            "ring of length " + std::to_string(g) + " needs " + std::to_string(g) + " multiplicities");
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < g; ++i) {
        if (mults[static_cast<std::size_t>(i)] < 1)
            throw Error(ErrorKind::BadParameter, "ring multiplicities must be >= 1");
        edges.push_back({i, (i + 1) % g, mults[static_cast<std::size_t>(i)]});
    }
    return Multigraph::build(g, edges);
}

Multigraph random_multigraph(SeededRng& rng, int max_n, int max_mu)
{
    if (max_n < 1 || max_n > max_vertices || max_mu < 1)
        throw Error(ErrorKind::BadParameter, "random_multigraph needs 1 <= max_n <= 64 and max_mu >= 1");
    const int n = rng.uniform(std::min(3, max_n), max_n);
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    auto link = [&](int u, int v) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    };

    const int style = rng.uniform(0, 2);
    if (style == 0) {
        static constexpr int densities[] = {15, 30, 50};
        const int p = densities[rng.uniform(0, 2)];
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.percent(p))
                    link(u, v);
    } else {
        const int floor = style == 2 ? rng.uniform(5, 7) : 3;
        for (int v = 1; v < n; ++v)
            link(rng.uniform(0, v - 1), v);
        const int chords = rng.uniform(0, n);
        for (int i = 0; i < chords; ++i) {
            const int u = rng.uniform(0, n - 1);
            const int v = rng.uniform(0, n - 1);
            if (u == v || adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                continue;
            if (style == 2) {
                // skip chords that would close a cycle shorter than `floor`
                std::vector<EdgeSpec> current;
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                            current.push_back({a, b, 1});
                current.push_back({u, v, 1});
                if (!girth(Multigraph::build(n, current)).at_least(floor))
                    continue;
            }
            link(u, v);
        }
    }

    std::vector<EdgeSpec> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                edges.push_back({u, v, rng.uniform(1, max_mu)});
    return Multigraph::build(n, edges);
}

} // namespace steffenlab
