#include <steffenlab/coloring.hpp>

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace steffenlab {

std::vector<std::vector<std::pair<int, int>>> EdgeColoring::classes() const
{
    std::vector<std::vector<std::pair<int, int>>> out(static_cast<std::size_t>(std::max(k, 0)));
    for (const auto& [pair, cols] : colors)
        for (int c : cols)
            if (c >= 1 && c <= k)
                out[static_cast<std::size_t>(c - 1)].push_back(pair);
    for (auto& cls : out)
        std::sort(cls.begin(), cls.end());
    return out;
}

bool validate_coloring(const Multigraph& g, const EdgeColoring& c)
{
    std::size_t covered = 0;
    for (const auto& e : g.edges()) {
        auto it = c.colors.find({e.u, e.v});
        if (it == c.colors.end() || static_cast<int>(it->second.size()) != e.mult)
            throw Error(ErrorKind::CoverageMismatch,
                "pair {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} copies not covered exactly");
        ++covered;
    }
    for (const auto& [pair, cols] : c.colors)
        if (!cols.empty() && (pair.first >= pair.second || pair.second >= g.order() || pair.first < 0
                || g.multiplicity(pair.first, pair.second) == 0))
            throw Error(ErrorKind::CoverageMismatch,
                "coloring names pair {" + std::to_string(pair.first) + "," + std::to_string(pair.second)
                    + "} absent from the graph");
    (void)covered;

    std::vector<std::vector<char>> seen(static_cast<std::size_t>(g.order()),
        std::vector<char>(static_cast<std::size_t>(std::max(c.k, 0)) + 1, 0));
    for (const auto& [pair, cols] : c.colors)
        for (int col : cols) {
            if (col < 1 || col > c.k)
                return false;
            for (int v : {pair.first, pair.second}) {
                auto& slot = seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(col)];
                if (slot)
                    return false;
                slot = 1;
            }
        }
    return true;
}

namespace {

    class Deadline {
    public:
        explicit Deadline(double seconds)
            : enabled_(seconds > 0)
            , end_(std::chrono::steady_clock::now()
                  + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(enabled_ ? seconds : 0.0)))
        {
        }

        void tick()
        {
            if (enabled_ && (++ticks_ & 0x3FFU) == 0 && std::chrono::steady_clock::now() > end_)
                throw Error(ErrorKind::SolverTimeout, "edge coloring decision exceeded its time budget");
        }

    private:
        bool enabled_;
        std::chrono::steady_clock::time_point end_;
        std::uint32_t ticks_ = 0;
    };

    // Backtracking over vertex pairs. Each pair receives a whole color set of
    // size mult, which removes the symmetry between parallel copies. Colors
    // never used so far are interchangeable, so only the lowest fresh ones are
    // tried.
    class ColorSetSearch {
    public:
        ColorSetSearch(const Multigraph& g, int k, const SolveOptions& opts)
            : k_(k)
            , full_(k >= 64 ? ~std::uint64_t {0} : (std::uint64_t {1} << k) - 1)
            , deadline_(opts.timeout_seconds)
        {
            for (const auto& e : g.edges())
                slots_.push_back({e.u, e.v, e.mult, 0});
            used_.assign(static_cast<std::size_t>(g.order()), 0);
            rem_.assign(static_cast<std::size_t>(g.order()), 0);
            for (int v = 0; v < g.order(); ++v)
                rem_[static_cast<std::size_t>(v)] = g.degree(v);
            open_pairs_ = static_cast<int>(slots_.size());
            open_copies_ = g.size();
        }

        bool run()
        {
            for (int r : rem_)
                if (r > k_)
                    return false;
            return search();
        }

        EdgeColoring witness() const
        {
            EdgeColoring c;
            c.k = k_;
            for (const auto& s : slots_) {
                auto& cols = c.colors[{s.u, s.v}];
                for (int col : VertexSet(s.colors))
                    cols.push_back(col + 1);
            }
            return c;
        }

    private:
        struct Slot {
            int u, v, mult;
            std::uint64_t colors;
        };

        std::uint64_t avail(const Slot& s) const
        {
            return full_ & ~(used_[static_cast<std::size_t>(s.u)] | used_[static_cast<std::size_t>(s.v)]);
        }

        // Each color class is a matching among vertices still missing that
        // color, so it can absorb at most half of them.
        bool capacity_ok() const
        {
            int count[64] = {};
            for (std::size_t v = 0; v < rem_.size(); ++v) {
                if (rem_[v] == 0)
                    continue;
                for (int c : VertexSet(full_ & ~used_[v]))
                    ++count[c];
            }
            int capacity = 0;
            for (int c = 0; c < k_; ++c)
                capacity += count[c] / 2;
            return capacity >= open_copies_;
        }

        bool vertex_ok(int v) const
        {
            return rem_[static_cast<std::size_t>(v)] <= k_ - std::popcount(used_[static_cast<std::size_t>(v)]);
        }

        void apply(Slot& s, std::uint64_t colors, int sign)
        {
            if (sign > 0) {
                s.colors = colors;
                used_[static_cast<std::size_t>(s.u)] |= colors;
                used_[static_cast<std::size_t>(s.v)] |= colors;
            } else {
                s.colors = 0;
                used_[static_cast<std::size_t>(s.u)] &= ~colors;
                used_[static_cast<std::size_t>(s.v)] &= ~colors;
            }
            rem_[static_cast<std::size_t>(s.u)] -= sign * s.mult;
            rem_[static_cast<std::size_t>(s.v)] -= sign * s.mult;
            open_pairs_ -= sign;
            open_copies_ -= sign * s.mult;
        }

        bool search()
        {
            if (open_pairs_ == 0)
                return true;
            deadline_.tick();
            if (!capacity_ok())
                return false;

            int best = -1;
            int best_slack = 0;
            int best_load = 0;
            for (std::size_t i = 0; i < slots_.size(); ++i) {
                const auto& s = slots_[i];
                if (s.colors != 0)
                    continue;
                const int slack = std::popcount(avail(s)) - s.mult;
                if (slack < 0)
                    return false;
                const int load = rem_[static_cast<std::size_t>(s.u)] + rem_[static_cast<std::size_t>(s.v)];
                if (best < 0 || slack < best_slack || (slack == best_slack && load > best_load)) {
                    best = static_cast<int>(i);
                    best_slack = slack;
                    best_load = load;
                }
            }

            Slot& slot = slots_[static_cast<std::size_t>(best)];
            const std::uint64_t open = avail(slot);
            const std::uint64_t seen_mask = top_ >= 64 ? ~std::uint64_t {0} : (std::uint64_t {1} << top_) - 1;
            const auto reusable = VertexSet(open & seen_mask).to_vector();
            const int fresh_left = k_ - top_;
            const int m = slot.mult;
            const int max_reuse = std::min<int>(m, static_cast<int>(reusable.size()));
            const int min_reuse = std::max(0, m - fresh_left);

            for (int reuse = max_reuse; reuse >= min_reuse; --reuse) {
                const int fresh = m - reuse;
                std::uint64_t fresh_mask = 0;
                for (int i = 0; i < fresh; ++i)
                    fresh_mask |= std::uint64_t {1} << (top_ + i);
                std::vector<int> idx(static_cast<std::size_t>(reuse));
                for (int i = 0; i < reuse; ++i)
                    idx[static_cast<std::size_t>(i)] = i;
                const int pool = static_cast<int>(reusable.size());
                while (true) {
                    std::uint64_t colors = fresh_mask;
                    for (int i : idx)
                        colors |= std::uint64_t {1} << reusable[static_cast<std::size_t>(i)];
                    apply(slot, colors, +1);
                    const int saved_top = top_;
                    top_ += fresh;
                    if (vertex_ok(slot.u) && vertex_ok(slot.v) && search())
                        return true;
                    top_ = saved_top;
                    apply(slot, colors, -1);

                    // next combination of `reuse` indices out of `pool`
                    int i = reuse - 1;
                    while (i >= 0 && idx[static_cast<std::size_t>(i)] == pool - reuse + i)
                        --i;
                    if (i < 0)
                        break;
                    ++idx[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < reuse; ++j)
                        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                }
            }
            return false;
        }

        int k_;
        std::uint64_t full_;
        Deadline deadline_;
        std::vector<Slot> slots_;
        std::vector<std::uint64_t> used_;
        std::vector<int> rem_;
        int top_ = 0;
        int open_pairs_ = 0;
        int open_copies_ = 0;
    };

} // namespace

std::optional<EdgeColoring> is_k_colorable(const Multigraph& g, int k, const SolveOptions& opts)
{
    if (k < 0)
        throw Error(ErrorKind::BadParameter, "negative color count");
    if (g.size() == 0)
        return EdgeColoring {k, {}};
    if (k == 0)
        return std::nullopt;
    if (k > 64)
        throw Error(ErrorKind::InstanceTooLarge, "solver supports at most 64 colors");
    ColorSetSearch search(g, k, opts);
    if (!search.run())
        return std::nullopt;
    return search.witness();
}

int chromatic_lower_bound(const Multigraph& g)
{
    return std::max(basic_invariants(g).Delta, density(g).gamma);
}

ChromaticIndex chromatic_index(const Multigraph& g, ChiMode mode, const SolveOptions& opts)
{
    if (g.size() == 0)
        return {0, EdgeColoring {}, false};
    const auto inv = basic_invariants(g);
    const int gamma = density(g).gamma;

    if (mode == ChiMode::GsFastPath && gamma >= inv.Delta + 2) {
        auto witness = is_k_colorable(g, gamma, opts);
        if (!witness)
            throw std::logic_error("density exceeds Delta + 1 but no Gamma-coloring was found");
        return {gamma, std::move(*witness), true};
    }

    const int lower = std::max(inv.Delta, gamma);
    const int upper = inv.Delta + inv.mu;
    for (int k = lower; k <= upper; ++k)
        if (auto witness = is_k_colorable(g, k, opts))
            return {k, std::move(*witness), false};
    throw std::logic_error("no coloring within Delta + mu colors");
}

namespace {

    // True when deleting one copy of {u,v} keeps the chromatic index at chi.
    bool removal_preserves(const Multigraph& g, int u, int v, int chi, const SolveOptions& opts)
    {
        const Multigraph h = remove_edges(g, u, v, 1);
        if (chromatic_lower_bound(h) >= chi)
            return true;
        return !is_k_colorable(h, chi - 1, opts).has_value();
    }

} // namespace

bool is_critical(const Multigraph& g, int chi, const SolveOptions& opts)
{
    if (g.size() == 0)
        throw Error(ErrorKind::BadParameter, "criticality needs at least one edge");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            return false;
    for (const auto& e : g.edges())
        if (removal_preserves(g, e.u, e.v, chi, opts))
            return false;
    return true;
}

bool is_critical(const Multigraph& g, const SolveOptions& opts)
{
    if (g.size() == 0)
        throw Error(ErrorKind::BadParameter, "criticality needs at least one edge");
    return is_critical(g, chromatic_index(g, ChiMode::Search, opts).chi, opts);
}

Multigraph extract_critical(const Multigraph& g, const SolveOptions& opts)
{
    if (g.size() == 0)
        throw Error(ErrorKind::BadParameter, "critical subgraph needs at least one edge");
    const int chi = chromatic_index(g, ChiMode::Search, opts).chi;
    Multigraph current = g;
    // One pass suffices: a copy that could not be removed stays essential in
    // every later subgraph.
    for (const auto& e : g.edges())
        while (current.multiplicity(e.u, e.v) > 0 && removal_preserves(current, e.u, e.v, chi, opts))
            current = remove_edges(current, e.u, e.v, 1);
    VertexSet keep;
    for (int v = 0; v < current.order(); ++v)
        if (current.degree(v) > 0)
            keep.insert(v);
    return induced(current, keep);
}

MatchingDecomposition near_perfect_matching_decomposition(
    const Multigraph& g, std::pair<int, int> e, const SolveOptions& opts)
{
    auto [u, v] = e;
    if (u > v)
        std::swap(u, v);
    if (u < 0 || v >= g.order() || u == v || g.multiplicity(u, v) == 0)
        throw Error(ErrorKind::BadParameter, "edge copy not present in the graph");
    if (g.order() % 2 == 0)
        throw Error(ErrorKind::PreconditionFailed, "n is even");
    const auto inv = basic_invariants(g);
    const int chi = chromatic_index(g, ChiMode::Search, opts).chi;
    if (chi < inv.Delta + 2)
        throw Error(ErrorKind::PreconditionFailed,
            "chromatic index " + std::to_string(chi) + " is below Delta + 2 = " + std::to_string(inv.Delta + 2));
    if (!is_critical(g, chi, opts))
        throw Error(ErrorKind::PreconditionFailed, "graph is not critical");

    const Multigraph rest = remove_edges(g, u, v, 1);
    auto coloring = is_k_colorable(rest, chi - 1, opts);
    if (!coloring)
        throw std::logic_error("critical graph minus an edge has no (chi - 1)-coloring");

    MatchingDecomposition out;
    out.removed = {u, v};
    out.classes = coloring->classes();
    for (const auto& cls : out.classes) {
        VertexSet covered;
        for (auto [a, b] : cls) {
            covered.insert(a);
            covered.insert(b);
        }
        const VertexSet missed = g.vertices() - covered;
        out.missed_vertex.push_back(missed.size() == 1 ? missed.min() : -1);
    }
    return out;
}

DegreeIdentityReport degree_identity_check(const Multigraph& g, const SolveOptions& opts)
{
    if (g.size() == 0)
        throw Error(ErrorKind::PreconditionFailed, "graph has no edges");
    const auto inv = basic_invariants(g);
    DegreeIdentityReport report;
    report.chi = chromatic_index(g, ChiMode::Search, opts).chi;
    const int chi = report.chi;
    if (chi < inv.Delta + 2)
        throw Error(ErrorKind::PreconditionFailed,
            "chromatic index " + std::to_string(chi) + " is below Delta + 2 = " + std::to_string(inv.Delta + 2));
    if (!is_critical(g, chi, opts))
        throw Error(ErrorKind::PreconditionFailed, "graph is not critical");

    long slack_sum = 0;
    for (int w = 0; w < g.order(); ++w)
        slack_sum += chi - 1 - g.degree(w);
    for (int v = 0; v < g.order(); ++v) {
        const long others = slack_sum - (chi - 1 - g.degree(v));
        report.residuals.push_back(g.degree(v) - (others + 2));
    }

    const long n = g.order();
    for (int girth_value = 5; girth_value <= g.order(); ++girth_value) {
        const int half = girth_value / 2;
        const int form = inv.Delta + (inv.mu + half - 1) / half;
        if (form != chi || chi < inv.Delta + 2)
            continue;
        report.bound_girths.push_back(girth_value);
        // delta >= n mu / g + 1, compared exactly as g delta >= n mu + g
        const long lhs = static_cast<long>(girth_value) * inv.delta;
        const long rhs = n * inv.mu + girth_value;
        if (lhs < rhs)
            report.min_degree_bound = BoundCheck::Violated;
        else if (report.min_degree_bound == BoundCheck::NotApplicable)
            report.min_degree_bound = BoundCheck::Holds;
        if (lhs == rhs && inv.mu != girth_value)
            report.equality_only_when_mu_is_g = false;
    }
    return report;
}

nlohmann::ordered_json to_json(const EdgeColoring& c)
{
    nlohmann::ordered_json j;
    j["k"] = c.k;
    auto classes = nlohmann::ordered_json::array();
    for (const auto& cls : c.classes()) {
        auto arr = nlohmann::ordered_json::array();
        for (auto [u, v] : cls)
            arr.push_back({u, v});
        classes.push_back(std::move(arr));
    }
    j["classes"] = std::move(classes);
    return j;
}

EdgeColoring coloring_from_json(const nlohmann::json& j)
{
    try {
        EdgeColoring c;
        c.k = j.at("k").get<int>();
        int color = 0;
        for (const auto& cls : j.at("classes")) {
            ++color;
            for (const auto& p : cls) {
                int u = p.at(0).get<int>();
                int v = p.at(1).get<int>();
                if (u > v)
                    std::swap(u, v);
                c.colors[{u, v}].push_back(color);
            }
        }
        for (auto& [pair, cols] : c.colors)
            std::sort(cols.begin(), cols.end());
        return c;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::BadParameter, std::string("malformed coloring JSON: ") + ex.what());
    }
}

nlohmann::ordered_json to_json(const MatchingDecomposition& d)
{
    nlohmann::ordered_json j;
    j["removed"] = {d.removed.first, d.removed.second};
    auto classes = nlohmann::ordered_json::array();
    for (const auto& cls : d.classes) {
        auto arr = nlohmann::ordered_json::array();
        for (auto [u, v] : cls)
            arr.push_back({u, v});
        classes.push_back(std::move(arr));
    }
    j["classes"] = std::move(classes);
    j["missedVertex"] = d.missed_vertex;
    return j;
}

std::string_view to_string(BoundCheck b)
{
    switch (b) {
    case BoundCheck::Holds: return "holds";
    case BoundCheck::Violated: return "violated";
    case BoundCheck::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

} // namespace steffenlab
