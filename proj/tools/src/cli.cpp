#include <steffenlab/cli.hpp>

#include <steffenlab/canonical.hpp>
#include <steffenlab/generators.hpp>
#include <steffenlab/scan.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace steffenlab {

namespace {

    Multigraph load_graph(const std::string& path, std::istream& in)
    {
        if (path == "-")
            return read_mgr(in);
        std::ifstream file(path);
        if (!file)
            throw Error(ErrorKind::ConfigError, "cannot open " + path);
        return read_mgr(file);
    }

    nlohmann::ordered_json invariants_json(const Multigraph& g)
    {
        const auto inv = basic_invariants(g);
        const auto dens = density(g);
        nlohmann::ordered_json j;
        j["n"] = inv.n;
        j["m"] = inv.m;
        j["Delta"] = inv.Delta;
        j["delta"] = inv.delta;
        j["mu"] = inv.mu;
        j["girth"] = to_json(girth(g));
        j["gamma"] = dens.gamma;
        j["gammaWitness"] = dens.witness.to_vector();
        j["steffenBound"] = steffen_bound(g);
        j["graphKey"] = canonical_form(g).hex();
        return j;
    }

    struct Options {
        std::string input = "-";
        std::string mode = "search";
        double timeout = 60.0;
        std::string witness_path;
        int target = 0;
        std::string config_path;
        std::uint64_t seed = 42;
        int gen_a = 0;
        int gen_b = 0;
        std::vector<int> mults;
    };

} // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
    const std::atomic<bool>* stop)
{
    CLI::App app {"Exact edge-coloring analysis of loopless multigraphs", "steffenlab"};
    app.require_subcommand(1);
    Options o;

    auto* invariants = app.add_subcommand("invariants", "Degrees, multiplicity, girth, density and the girth bound");
    invariants->add_option("graph", o.input, "graph file in mgr format, - for stdin");

    auto* chi = app.add_subcommand("chi", "Chromatic index with a certified coloring");
    chi->add_option("graph", o.input, "graph file, - for stdin");
    chi->add_option("--mode", o.mode, "search or gs")->check(CLI::IsMember({"search", "gs"}));
    chi->add_option("--timeout", o.timeout, "per decision budget in seconds");
    chi->add_option("--witness", o.witness_path, "write the coloring as JSON to this path");

    auto* dens = app.add_subcommand("density", "Odd-subgraph density with a maximizing vertex set");
    dens->add_option("graph", o.input, "graph file, - for stdin");

    auto* critical = app.add_subcommand("critical", "Criticality test and a critical subgraph");
    critical->add_option("graph", o.input, "graph file, - for stdin");
    critical->add_option("--timeout", o.timeout, "per decision budget in seconds");

    auto* partition = app.add_subcommand("partition", "Greedy shortest-cycle partition with short-cycle checks");
    partition->add_option("graph", o.input, "graph file, - for stdin");

    auto* ring_find = app.add_subcommand("ring-find", "Search for a ring subgraph of a given chromatic index");
    ring_find->add_option("graph", o.input, "graph file, - for stdin");
    ring_find->add_option("--target", o.target, "required chromatic index")->required();
    ring_find->add_option("--timeout", o.timeout, "per decision budget in seconds");

    auto* gen = app.add_subcommand("gen", "Print a family member in mgr format");
    gen->require_subcommand(1);
    auto* gen_cycle = gen->add_subcommand("mu-cycle", "cycle of length G, every edge MU times");
    gen_cycle->add_option("G", o.gen_a)->required();
    gen_cycle->add_option("MU", o.gen_b)->required();
    auto* gen_complete = gen->add_subcommand("mu-complete", "complete graph on N vertices, every edge MU times");
    gen_complete->add_option("N", o.gen_a)->required();
    gen_complete->add_option("MU", o.gen_b)->required();
    auto* gen_ring = gen->add_subcommand("ring", "cycle of length G with per-edge multiplicities");
    gen_ring->add_option("G", o.gen_a)->required();
    gen_ring->add_option("mults", o.mults, "m1,...,mG")->required()->delimiter(',');

    auto* scan = app.add_subcommand("scan", "Exhaustive scan over an enumerated corpus");
    scan->add_option("--config", o.config_path, "scan configuration JSON")->required();

    auto* lemma = app.add_subcommand("lemma-suite", "Critical-graph and short-cycle property suite");
    lemma->add_option("--config", o.config_path, "scan configuration JSON")->required();
    lemma->add_option("--seed", o.seed, "seed for the random corpus");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const SolveOptions opts {o.timeout};
    try {
        if (invariants->parsed()) {
            out << invariants_json(load_graph(o.input, in)).dump(2) << '\n';
        } else if (chi->parsed()) {
            const auto g = load_graph(o.input, in);
            const auto r = chromatic_index(g, o.mode == "gs" ? ChiMode::GsFastPath : ChiMode::Search, opts);
            nlohmann::ordered_json j;
            j["chi"] = r.chi;
            j["mode"] = o.mode;
            j["fastPath"] = r.fast_path;
            j["lowerBound"] = chromatic_lower_bound(g);
            if (!o.witness_path.empty()) {
                std::ofstream w(o.witness_path);
                if (!w)
                    throw Error(ErrorKind::ConfigError, "cannot write " + o.witness_path);
                w << to_json(r.witness).dump() << '\n';
                j["witness"] = o.witness_path;
            } else {
                j["witness"] = to_json(r.witness);
            }
            out << j.dump() << '\n';
        } else if (dens->parsed()) {
            const auto d = density(load_graph(o.input, in));
            out << nlohmann::ordered_json {{"gamma", d.gamma}, {"witness", d.witness.to_vector()}}.dump() << '\n';
        } else if (critical->parsed()) {
            const auto g = load_graph(o.input, in);
            const int value = chromatic_index(g, ChiMode::Search, opts).chi;
            nlohmann::ordered_json j;
            j["chi"] = value;
            j["isCritical"] = is_critical(g, value, opts);
            j["criticalSubgraph"] = to_json(extract_critical(g, opts));
            out << j.dump() << '\n';
        } else if (partition->parsed()) {
            const auto g = load_graph(o.input, in);
            const auto p = cycle_partition(g);
            auto j = to_json(p);
            j["problems"] = verify_cycle_partition(g, p);
            auto violations = nlohmann::ordered_json::array();
            for (std::size_t h = 0; h < p.cycles.size(); ++h)
                for (const auto& v : check_short_cycle_properties(g, p.cycles[h], p.stage(h, g.order())).violations)
                    violations.push_back(to_json(v));
            const bool bad = !j["problems"].empty() || !violations.empty();
            j["shortCycleViolations"] = std::move(violations);
            out << j.dump() << '\n';
            return bad ? 1 : 0;
        } else if (ring_find->parsed()) {
            const auto r = find_ring_subgraph_with_chi(load_graph(o.input, in), o.target, opts);
            nlohmann::ordered_json j;
            j["found"] = r.has_value();
            j["ring"] = r ? to_json(*r) : nlohmann::ordered_json(nullptr);
            out << j.dump() << '\n';
        } else if (gen->parsed()) {
            Multigraph g(0);
            if (gen_cycle->parsed())
                g = mu_cycle(o.gen_a, o.gen_b);
            else if (gen_complete->parsed())
                g = mu_complete(o.gen_a, o.gen_b);
            else
                g = ring(o.gen_a, o.mults);
            out << serialize_mgr(g);
        } else if (scan->parsed()) {
            const auto config = load_scan_config(o.config_path);
            ScanHooks hooks;
            hooks.stop = stop;
            if (config.outputPath.empty())
                hooks.on_record = [&](const ScanRecord& r) { out << to_json(r).dump() << '\n'; };
            const auto summary = run_scan(config, hooks);
            (config.outputPath.empty() ? err : out) << to_json(summary).dump() << '\n';
            if (summary.violations() > 0)
                return 1;
            return summary.interrupted ? 130 : 0;
        } else if (lemma->parsed()) {
            const auto report = run_lemma_suite(load_scan_config(o.config_path), o.seed);
            out << report.json.dump(2) << '\n';
            return report.violations > 0 ? 1 : 0;
        }
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

} // namespace steffenlab
