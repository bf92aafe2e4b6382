#include <steffenlab/canonical.hpp>
#include <steffenlab/generators.hpp>
#include <steffenlab/scan.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace steffenlab {

std::string_view to_string(DecompositionStatus s)
{
    switch (s) {
    case DecompositionStatus::NotApplicable: return "not-applicable";
    case DecompositionStatus::NotCritical: return "not-critical";
    case DecompositionStatus::Checked: return "checked";
    case DecompositionStatus::Timeout: return "timeout";
    }
    return "unknown";
}

namespace {

    // Re-checks a decomposition of G - e from scratch: chi - 1 classes, each a
    // matching of size (n-1)/2 missing exactly one vertex, jointly covering G - e.
    std::vector<std::string> audit_decomposition(const Multigraph& g, int chi, const MatchingDecomposition& d)
    {
        std::vector<std::string> problems;
        const auto [u, v] = d.removed;
        const std::string tag = "G-{" + std::to_string(u) + "," + std::to_string(v) + "}: ";
        const int n = g.order();
        if (static_cast<int>(d.classes.size()) > chi - 1)
            problems.push_back(tag + "more than chi - 1 classes");
        Multigraph rest = remove_edges(g, u, v, 1);
        std::map<std::pair<int, int>, int> seen;
        for (std::size_t c = 0; c < d.classes.size(); ++c) {
            const auto& cls = d.classes[c];
            VertexSet covered;
            bool matching = true;
            for (auto [a, b] : cls) {
                if (covered.contains(a) || covered.contains(b))
                    matching = false;
                covered.insert(a);
                covered.insert(b);
                ++seen[{std::min(a, b), std::max(a, b)}];
            }
            const std::string where = tag + "class " + std::to_string(c + 1) + " ";
            if (!matching)
                problems.push_back(where + "is not a matching");
            if (static_cast<int>(cls.size()) != (n - 1) / 2)
                problems.push_back(where + "has " + std::to_string(cls.size()) + " edges");
            const VertexSet missed = g.vertices() - covered;
            if (missed.size() != 1
                || c >= d.missed_vertex.size() || d.missed_vertex[c] != missed.min())
                problems.push_back(where + "does not miss exactly one vertex");
        }
        if (static_cast<int>(d.classes.size()) < chi - 1)
            problems.push_back(tag + "fewer than chi - 1 classes");
        for (const auto& e : rest.edges())
            if (seen[{e.u, e.v}] != e.mult)
                problems.push_back(tag + "classes do not cover the pair {" + std::to_string(e.u) + ","
                    + std::to_string(e.v) + "} exactly");
        for (const auto& [pair, count] : seen)
            if (rest.multiplicity(pair.first, pair.second) == 0)
                problems.push_back(tag + "classes use a pair absent from G - e");
        return problems;
    }

} // namespace

DecompositionReport decomposition_check(const Multigraph& g, const SolveOptions& opts)
{
    DecompositionReport r;
    const auto inv = basic_invariants(g);
    if (inv.m == 0 || inv.mu < 2)
        return r; // chi <= Delta + mu < Delta + 2
    try {
        r.chi = chromatic_index(g, ChiMode::Search, opts).chi;
        if (r.chi < inv.Delta + 2)
            return r;
        if (!is_critical(g, r.chi, opts)) {
            r.status = DecompositionStatus::NotCritical;
            return r;
        }
        r.status = DecompositionStatus::Checked;
        if (inv.n % 2 == 0) {
            r.violations.push_back("critical graph with chi >= Delta + 2 has even order");
            return r;
        }
        // Copies of one pair are interchangeable, so one decomposition covers them all.
        for (const auto& e : g.edges()) {
            const auto d = near_perfect_matching_decomposition(g, {e.u, e.v}, opts);
            for (auto& p : audit_decomposition(g, r.chi, d))
                r.violations.push_back(std::move(p));
            r.edgeCopiesChecked += e.mult;
        }
        const auto ident = degree_identity_check(g, opts);
        r.residualsZero = std::all_of(ident.residuals.begin(), ident.residuals.end(), [](long x) { return x == 0; });
        if (!r.residualsZero)
            r.violations.push_back("nonzero degree identity residual");
        r.minDegreeBound = ident.min_degree_bound;
        r.boundGirths = ident.bound_girths;
        if (r.minDegreeBound == BoundCheck::Violated)
            r.violations.push_back("minimum degree bound fails");
        if (!ident.equality_only_when_mu_is_g)
            r.violations.push_back("minimum degree bound is tight with mu != g");
    } catch (const Error& ex) {
        if (ex.kind() != ErrorKind::SolverTimeout)
            throw;
        r.status = DecompositionStatus::Timeout;
    }
    return r;
}

namespace {

    // Paths start at the apex, are vertex-disjoint apart from it, walk along
    // edges, stay in V0 until their last vertex, and end on distinct cycle vertices.
    bool fan_valid(const Multigraph& g, const CyclePartition& p, const Fan& f)
    {
        const auto view = underlying_simple(g);
        const VertexSet on_cycle = p.cycles[f.target].vertex_set();
        VertexSet used {f.apex};
        for (const auto& path : f.paths) {
            if (path.size() < 2 || path.front() != f.apex || !on_cycle.contains(path.back()))
                return false;
            for (std::size_t i = 1; i < path.size(); ++i) {
                const int x = path[i];
                if (used.contains(x) || !view.adjacent(path[i - 1], x))
                    return false;
                if (i + 1 < path.size() && !p.v0.contains(x))
                    return false;
                used.insert(x);
            }
        }
        return true;
    }

    nlohmann::ordered_json corpus_part(const ScanConfig& config, const SolveOptions& opts, long& violations)
    {
        std::vector<std::pair<std::string, Multigraph>> graphs;
        std::set<std::string> keys;
        auto stream = enumerate_multigraphs(config.enumSpec, config.workers);
        while (auto item = stream.next()) {
            keys.insert(item->first.hex());
            graphs.emplace_back(item->first.hex(), std::move(item->second));
        }
        const long enumerated = static_cast<long>(graphs.size());
        for (auto extra : {mu_cycle(5, 3), mu_cycle(3, 3), mu_cycle(3, 5)}) {
            auto key = canonical_form(extra).hex();
            if (keys.insert(key).second)
                graphs.emplace_back(std::move(key), std::move(extra));
        }

        long not_applicable = 0, not_critical = 0, timeouts = 0;
        auto checked = nlohmann::ordered_json::array();
        auto found = nlohmann::ordered_json::array();
        for (const auto& [key, g] : graphs) {
            const auto r = decomposition_check(g, opts);
            switch (r.status) {
            case DecompositionStatus::NotApplicable: ++not_applicable; continue;
            case DecompositionStatus::NotCritical: ++not_critical; continue;
            case DecompositionStatus::Timeout: ++timeouts; continue;
            case DecompositionStatus::Checked: break;
            }
            const auto inv = basic_invariants(g);
            nlohmann::ordered_json row;
            row["graphKey"] = key;
            row["n"] = inv.n;
            row["Delta"] = inv.Delta;
            row["delta"] = inv.delta;
            row["mu"] = inv.mu;
            row["chi"] = r.chi;
            row["edgeCopiesChecked"] = r.edgeCopiesChecked;
            row["residualsZero"] = r.residualsZero;
            row["minDegreeBound"] = to_string(r.minDegreeBound);
            row["boundGirths"] = r.boundGirths;
            checked.push_back(std::move(row));
            for (const auto& v : r.violations)
                found.push_back({{"graphKey", key}, {"problem", v}});
        }
        violations += static_cast<long>(found.size());
        nlohmann::ordered_json j;
        j["enumerated"] = enumerated;
        j["explicitAdded"] = static_cast<long>(graphs.size()) - enumerated;
        j["notApplicable"] = not_applicable;
        j["notCritical"] = not_critical;
        j["timeouts"] = timeouts;
        j["checked"] = std::move(checked);
        j["violations"] = std::move(found);
        return j;
    }

    nlohmann::ordered_json random_part(const ScanConfig& config, std::uint64_t seed, long& violations)
    {
        SeededRng rng(seed);
        long cycles = 0, partition_problems = 0, fans = 0, invalid_fans = 0, fan_violations = 0;
        long clause_checks[5] = {0, 0, 0, 0, 0};
        long clause_violations[5] = {0, 0, 0, 0, 0};
        std::map<int, long> fan_sizes;
        auto details = nlohmann::ordered_json::array();

        for (int i = 0; i < config.random.count; ++i) {
            const Multigraph g = random_multigraph(rng, config.random.maxN, config.random.maxMu);
            const int n = g.order();
            const auto p = cycle_partition(g);
            for (const auto& problem : verify_cycle_partition(g, p)) {
                ++partition_problems;
                details.push_back({{"graph", i}, {"problem", problem}});
            }
            cycles += static_cast<long>(p.cycles.size());
            for (std::size_t h = 0; h < p.cycles.size(); ++h) {
                const auto report = check_short_cycle_properties(g, p.cycles[h], p.stage(h, n));
                for (int c = 1; c <= 4; ++c)
                    clause_checks[c] += report.checked[c];
                for (const auto& v : report.violations) {
                    ++clause_violations[v.clause];
                    details.push_back({{"graph", i}, {"clause", v.clause}, {"vertices", v.vertices}});
                }
                for (int apex : p.v0) {
                    const auto fan = max_fan(g, p, apex, h);
                    if (!fan)
                        continue;
                    ++fans;
                    ++fan_sizes[fan->t()];
                    if (!fan_valid(g, p, *fan)) {
                        ++invalid_fans;
                        details.push_back({{"graph", i}, {"invalidFan", to_json(*fan)}});
                    } else if (!fan_bound_check(*fan, p.cycles[h])) {
                        ++fan_violations;
                        details.push_back({{"graph", i}, {"fanBound", to_json(*fan)}});
                    }
                }
            }
        }

        const long clause_total = clause_violations[1] + clause_violations[2] + clause_violations[3] + clause_violations[4];
        violations += partition_problems + clause_total + invalid_fans + fan_violations;
        nlohmann::ordered_json hist = nlohmann::ordered_json::object();
        for (const auto& [t, count] : fan_sizes)
            hist[std::to_string(t)] = count;
        nlohmann::ordered_json j;
        j["graphs"] = config.random.count;
        j["maxN"] = config.random.maxN;
        j["maxMu"] = config.random.maxMu;
        j["partitionCycles"] = cycles;
        j["partitionProblems"] = partition_problems;
        j["clauseChecks"] = {clause_checks[1], clause_checks[2], clause_checks[3], clause_checks[4]};
        j["clauseViolations"]
            = {clause_violations[1], clause_violations[2], clause_violations[3], clause_violations[4]};
        j["fans"] = fans;
        j["fanSizes"] = std::move(hist);
        j["invalidFans"] = invalid_fans;
        j["fanBoundViolations"] = fan_violations;
        j["details"] = std::move(details);
        return j;
    }

} // namespace

LemmaSuiteReport run_lemma_suite(const ScanConfig& config, std::uint64_t seed)
{
    validate(config);
    const SolveOptions opts {config.solverTimeoutSeconds};
    LemmaSuiteReport out;
    out.json["seed"] = seed;
    out.json["enumSpec"] = to_json(config.enumSpec);
    out.json["matchingDecomposition"] = corpus_part(config, opts, out.violations);
    out.json["randomCorpus"] = random_part(config, seed, out.violations);
    out.json["violations"] = out.violations;
    return out;
}

} // namespace steffenlab
