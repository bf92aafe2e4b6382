#include <steffenlab/scan.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace steffenlab {

namespace {

    template <typename T>
    T field(const nlohmann::json& j, const char* name)
    {
        try {
            return j.at(name).get<T>();
        } catch (const nlohmann::json::exception& ex) {
            throw Error(ErrorKind::ConfigError, std::string("field '") + name + "': " + ex.what());
        }
    }

    void reject_unknown(const nlohmann::json& j, std::initializer_list<std::string_view> known, const char* where)
    {
        if (!j.is_object())
            throw Error(ErrorKind::ConfigError, std::string(where) + " must be a JSON object");
        for (const auto& [name, value] : j.items())
            if (std::find(known.begin(), known.end(), name) == known.end())
                throw Error(ErrorKind::ConfigError, "unknown field '" + name + "' in " + where);
    }

} // namespace

ScanConfig scan_config_from_json(const nlohmann::json& j)
{
    reject_unknown(j, {"enumSpec", "solverTimeoutSeconds", "workers", "outputPath", "checkpoint", "modes", "random"},
        "scan config");
    ScanConfig c;
    if (j.contains("enumSpec"))
        c.enumSpec = enum_spec_from_json(j["enumSpec"]);
    if (j.contains("solverTimeoutSeconds"))
        c.solverTimeoutSeconds = field<double>(j, "solverTimeoutSeconds");
    if (j.contains("workers"))
        c.workers = field<int>(j, "workers");
    if (j.contains("outputPath"))
        c.outputPath = field<std::string>(j, "outputPath");
    if (j.contains("checkpoint"))
        c.checkpoint = field<bool>(j, "checkpoint");
    if (j.contains("modes")) {
        const auto& m = j["modes"];
        reject_unknown(m, {"gsCheck", "steffenCheck", "thm13Check", "lemmaSuite"}, "modes");
        if (m.contains("gsCheck"))
            c.modes.gsCheck = field<bool>(m, "gsCheck");
        if (m.contains("steffenCheck"))
            c.modes.steffenCheck = field<bool>(m, "steffenCheck");
        if (m.contains("thm13Check"))
            c.modes.ringCheck = field<bool>(m, "thm13Check");
        if (m.contains("lemmaSuite"))
            c.modes.lemmaSuite = field<bool>(m, "lemmaSuite");
    }
    if (j.contains("random")) {
        const auto& r = j["random"];
        reject_unknown(r, {"count", "maxN", "maxMu"}, "random");
        if (r.contains("count"))
            c.random.count = field<int>(r, "count");
        if (r.contains("maxN"))
            c.random.maxN = field<int>(r, "maxN");
        if (r.contains("maxMu"))
            c.random.maxMu = field<int>(r, "maxMu");
    }
    if (const char* env = std::getenv("STEFFENLAB_WORKERS"); env && *env) {
        try {
            c.workers = std::stoi(env);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ConfigError, std::string("STEFFENLAB_WORKERS is not an integer: ") + env);
        }
    }
    validate(c);
    return c;
}

ScanConfig load_scan_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ConfigError, "cannot open config " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::ConfigError, "config " + path + " is not valid JSON: " + ex.what());
    }
    return scan_config_from_json(j);
}

nlohmann::ordered_json to_json(const ScanConfig& c)
{
    nlohmann::ordered_json j;
    j["enumSpec"] = to_json(c.enumSpec);
    j["solverTimeoutSeconds"] = c.solverTimeoutSeconds;
    j["workers"] = c.workers;
    j["outputPath"] = c.outputPath;
    j["checkpoint"] = c.checkpoint;
    j["modes"] = {{"gsCheck", c.modes.gsCheck}, {"steffenCheck", c.modes.steffenCheck},
        {"thm13Check", c.modes.ringCheck}, {"lemmaSuite", c.modes.lemmaSuite}};
    j["random"] = {{"count", c.random.count}, {"maxN", c.random.maxN}, {"maxMu", c.random.maxMu}};
    return j;
}

void validate(const ScanConfig& c)
{
    validate(c.enumSpec);
    if (c.workers < 1)
        throw Error(ErrorKind::ConfigError, "workers must be >= 1");
    if (c.solverTimeoutSeconds < 1)
        throw Error(ErrorKind::ConfigError, "solverTimeoutSeconds must be >= 1");
    if (c.random.count < 0 || c.random.maxN < 1 || c.random.maxN > max_vertices || c.random.maxMu < 1)
        throw Error(ErrorKind::ConfigError, "random corpus needs count >= 0, 1 <= maxN <= 64, maxMu >= 1");
}

std::string_view to_string(ScanStatus s)
{
    switch (s) {
    case ScanStatus::Ok: return "ok";
    case ScanStatus::Timeout: return "timeout";
    case ScanStatus::Skipped: return "skipped";
    }
    return "unknown";
}

nlohmann::ordered_json to_json(const ScanRecord& r)
{
    const bool ok = r.status == ScanStatus::Ok;
    nlohmann::ordered_json j;
    j["graphKey"] = r.graphKey;
    j["n"] = r.n;
    j["m"] = r.m;
    j["Delta"] = r.Delta;
    j["delta"] = r.delta;
    j["mu"] = r.mu;
    j["girth"] = to_json(r.girth);
    j["gamma"] = r.gamma;
    j["chi"] = ok ? nlohmann::ordered_json(r.chi) : nlohmann::ordered_json(nullptr);
    j["steffenBound"] = r.steffenBound;
    j["achievesBound"] = ok ? nlohmann::ordered_json(r.achievesBound) : nlohmann::ordered_json(nullptr);
    j["isCritical"] = ok ? nlohmann::ordered_json(r.isCritical) : nlohmann::ordered_json(nullptr);
    j["chiGEDeltaPlus2"] = ok ? nlohmann::ordered_json(r.chiGEDeltaPlus2) : nlohmann::ordered_json(nullptr);
    j["ringFound"] = r.ringFound ? nlohmann::ordered_json(*r.ringFound) : nlohmann::ordered_json(nullptr);
    j["ringWitness"] = r.ringWitness ? to_json(*r.ringWitness) : nlohmann::ordered_json(nullptr);
    j["status"] = to_string(r.status);
    return j;
}

ScanRecord scan_record_from_json(const nlohmann::json& j)
{
    try {
        ScanRecord r;
        r.graphKey = j.at("graphKey").get<std::string>();
        r.n = j.at("n").get<int>();
        r.m = j.at("m").get<int>();
        r.Delta = j.at("Delta").get<int>();
        r.delta = j.at("delta").get<int>();
        r.mu = j.at("mu").get<int>();
        if (!j.at("girth").is_null())
            r.girth = Girth {j["girth"].get<int>()};
        r.gamma = j.at("gamma").get<int>();
        r.steffenBound = j.at("steffenBound").get<int>();
        const auto status = j.at("status").get<std::string>();
        r.status = status == "ok" ? ScanStatus::Ok : status == "timeout" ? ScanStatus::Timeout : ScanStatus::Skipped;
        if (r.status == ScanStatus::Ok) {
            r.chi = j.at("chi").get<int>();
            r.achievesBound = j.at("achievesBound").get<bool>();
            r.isCritical = j.at("isCritical").get<bool>();
            r.chiGEDeltaPlus2 = j.at("chiGEDeltaPlus2").get<bool>();
        }
        if (!j.at("ringFound").is_null())
            r.ringFound = j["ringFound"].get<bool>();
        if (const auto& w = j.at("ringWitness"); !w.is_null())
            r.ringWitness = RingSubgraph {CycleSeq {w.at("cycle").get<std::vector<int>>()},
                w.at("multiplicities").get<std::vector<int>>(), w.at("chi").get<int>()};
        return r;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::ConfigError, std::string("malformed scan record: ") + ex.what());
    }
}

bool ring_hypothesis_holds(int girth_floor, const Girth& girth, int Delta, int mu, int chi)
{
    if (girth_floor < 5 || !girth.at_least(girth_floor))
        return false;
    const int half = girth_floor / 2;
    return mu >= half + 1 && chi == Delta + (mu + half - 1) / half;
}

namespace {

    // The witness must be a ring inside g whose index is recomputed independently.
    bool ring_witness_valid(const Multigraph& g, const RingSubgraph& r, int target, const SolveOptions& opts)
    {
        const auto len = r.cycle.vertices.size();
        if (len < 3 || r.multiplicities.size() != len)
            return false;
        if (!is_cycle_in(underlying_simple(g), r.cycle, g.vertices()))
            return false;
        for (std::size_t i = 0; i < len; ++i) {
            const int m = r.multiplicities[i];
            if (m < 1 || m > g.multiplicity(r.cycle.vertices[i], r.cycle.vertices[(i + 1) % len]))
                return false;
        }
        const Multigraph sub = r.as_subgraph(g.order());
        VertexSet on_ring = r.cycle.vertex_set();
        if (!is_ring_graph(induced(sub, on_ring)))
            return false;
        return chromatic_index(sub, ChiMode::Search, opts).chi == target && r.chi == target;
    }

} // namespace

ScanRecord analyze_graph(const Multigraph& g, const std::string& key, const ScanConfig& config)
{
    const SolveOptions opts {config.solverTimeoutSeconds};
    const auto inv = basic_invariants(g);
    ScanRecord r;
    r.graphKey = key;
    r.n = inv.n;
    r.m = inv.m;
    r.Delta = inv.Delta;
    r.delta = inv.delta;
    r.mu = inv.mu;
    r.girth = girth(g);
    r.gamma = density(g).gamma;
    r.steffenBound = steffen_bound(inv.Delta, inv.mu, r.girth);
    try {
        const auto result = chromatic_index(g, ChiMode::Search, opts);
        if (!validate_coloring(g, result.witness))
            throw std::logic_error("solver returned an improper coloring for " + key);
        r.chi = result.chi;
        if (config.modes.gsCheck && r.gamma >= inv.Delta + 2) {
            const auto fast = chromatic_index(g, ChiMode::GsFastPath, opts);
            if (fast.chi != r.chi)
                throw std::logic_error("search and density fast path disagree on " + key);
        }
        r.achievesBound = r.chi == r.steffenBound;
        r.chiGEDeltaPlus2 = r.chi >= inv.Delta + 2;
        r.isCritical = inv.m > 0 && is_critical(g, r.chi, opts);
        if (config.modes.ringCheck
            && ring_hypothesis_holds(config.enumSpec.girthMin, r.girth, inv.Delta, inv.mu, r.chi)) {
            auto ring = find_ring_subgraph_with_chi(g, r.chi, opts);
            if (ring && !ring_witness_valid(g, *ring, r.chi, opts))
                throw std::logic_error("ring witness failed re-validation for " + key);
            r.ringFound = ring.has_value();
            r.ringWitness = std::move(ring);
        }
    } catch (const Error& ex) {
        if (ex.kind() != ErrorKind::SolverTimeout)
            throw;
        r.status = ScanStatus::Timeout;
        r.ringFound.reset();
        r.ringWitness.reset();
    }
    return r;
}

nlohmann::ordered_json to_json(const ScanSummary& s)
{
    return {
        {"total", s.total},
        {"processed", s.processed},
        {"resumed", s.resumed},
        {"ok", s.ok},
        {"timeouts", s.timeouts},
        {"boundAchievers", s.boundAchievers},
        {"deltaPlus2", s.deltaPlus2},
        {"hypothesisFired", s.hypothesisFired},
        {"ringFound", s.ringFound},
        {"violations",
            {{"steffen", s.steffenViolations}, {"goldbergSeymour", s.gsViolations}, {"ringSubgraph", s.ringViolations}}},
        {"interrupted", s.interrupted},
    };
}

namespace {

    void tally(ScanSummary& s, const ScanRecord& r, const ScanModes& modes)
    {
        if (r.status == ScanStatus::Timeout)
            ++s.timeouts;
        if (r.status != ScanStatus::Ok)
            return;
        ++s.ok;
        s.boundAchievers += r.achievesBound;
        s.deltaPlus2 += r.chiGEDeltaPlus2;
        if (r.ringFound) {
            ++s.hypothesisFired;
            s.ringFound += *r.ringFound;
        }
        if (modes.steffenCheck)
            s.steffenViolations += r.steffen_violation();
        if (modes.gsCheck)
            s.gsViolations += r.gs_violation();
        if (modes.ringCheck)
            s.ringViolations += r.ring_violation();
    }

    std::string checkpoint_header(const ScanConfig& c)
    {
        nlohmann::ordered_json j;
        j["enumSpec"] = to_json(c.enumSpec);
        j["modes"] = {{"gsCheck", c.modes.gsCheck}, {"steffenCheck", c.modes.steffenCheck},
            {"thm13Check", c.modes.ringCheck}};
        return "# " + j.dump();
    }

    // Reads finished keys and trims the report to exactly those records, so
    // a crash between the two writes never leaves a duplicate.
    std::set<std::string> restore_checkpoint(
        const ScanConfig& c, const std::string& ckpt_path, ScanSummary& summary)
    {
        std::set<std::string> done;
        std::ifstream ckpt(ckpt_path);
        std::string line;
        if (!std::getline(ckpt, line) || line != checkpoint_header(c))
            throw Error(ErrorKind::ConfigError, "checkpoint " + ckpt_path + " belongs to a different configuration");
        while (std::getline(ckpt, line))
            if (!line.empty())
                done.insert(line);

        std::vector<std::string> kept;
        std::ifstream report(c.outputPath);
        while (std::getline(report, line)) {
            if (line.empty())
                continue;
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(line);
            } catch (const nlohmann::json::exception&) {
                continue; // torn final line
            }
            if (!j.contains("graphKey") || !done.count(j["graphKey"].get<std::string>()))
                continue;
            tally(summary, scan_record_from_json(j), c.modes);
            kept.push_back(line);
        }
        if (kept.size() != done.size())
            throw Error(ErrorKind::ConfigError, "report " + c.outputPath + " is missing checkpointed records");
        std::ofstream rewrite(c.outputPath, std::ios::trunc);
        for (const auto& l : kept)
            rewrite << l << '\n';
        return done;
    }

} // namespace

ScanSummary run_scan(const ScanConfig& config, const ScanHooks& hooks)
{
    validate(config);
    GraphStream stream = enumerate_multigraphs(config.enumSpec, config.workers);
    ScanSummary summary;
    summary.total = static_cast<long>(stream.size());

    std::set<std::string> done;
    std::ofstream report;
    std::ofstream ckpt;
    if (!config.outputPath.empty()) {
        const std::string ckpt_path = config.outputPath + ".ckpt";
        const bool resuming = config.checkpoint && std::filesystem::exists(ckpt_path);
        if (resuming)
            done = restore_checkpoint(config, ckpt_path, summary);
        summary.resumed = static_cast<long>(done.size());
        report.open(config.outputPath, resuming ? std::ios::app : std::ios::trunc);
        if (!report)
            throw Error(ErrorKind::ConfigError, "cannot write report " + config.outputPath);
        if (config.checkpoint) {
            ckpt.open(ckpt_path, resuming ? std::ios::app : std::ios::trunc);
            if (!resuming)
                ckpt << checkpoint_header(config) << '\n' << std::flush;
        }
    }

    std::vector<CanonicalForm> todo;
    for (const auto& key : stream.keys())
        if (!done.count(key.hex()))
            todo.push_back(key);

    auto stopped = [&] { return hooks.stop && hooks.stop->load(); };
    const int workers = std::max(1, config.workers);
    const std::size_t block = static_cast<std::size_t>(workers) * 8;
    for (std::size_t start = 0; start < todo.size(); start += block) {
        if (stopped()) {
            summary.interrupted = true;
            break;
        }
        const std::size_t end = std::min(todo.size(), start + block);
        std::vector<std::optional<ScanRecord>> results(end - start);
        std::atomic<std::size_t> cursor {start};
        std::exception_ptr failure;
        std::mutex failure_lock;
        auto work = [&] {
            for (std::size_t i = cursor++; i < end; i = cursor++) {
                if (stopped())
                    return;
                try {
                    results[i - start] = analyze_graph(from_canonical(todo[i]), todo[i].hex(), config);
                } catch (...) {
                    std::lock_guard guard(failure_lock);
                    if (!failure)
                        failure = std::current_exception();
                    return;
                }
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t)
                pool.emplace_back(work);
            for (auto& t : pool)
                t.join();
        }
        // Only the finished prefix is written; records stay in key order.
        std::size_t written = 0;
        for (; written < results.size() && results[written]; ++written) {
            const auto& r = *results[written];
            tally(summary, r, config.modes);
            ++summary.processed;
            if (report.is_open())
                report << to_json(r).dump() << '\n';
            if (hooks.on_record)
                hooks.on_record(r);
        }
        if (report.is_open())
            report.flush();
        if (ckpt.is_open()) {
            for (std::size_t i = 0; i < written; ++i)
                ckpt << results[i]->graphKey << '\n';
            ckpt.flush();
        }
        if (failure)
            std::rethrow_exception(failure);
        if (written < results.size()) {
            summary.interrupted = true;
            break;
        }
    }
    return summary;
}

} // namespace steffenlab
