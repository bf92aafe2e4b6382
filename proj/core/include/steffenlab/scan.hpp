#pragma once

#include <steffenlab/coloring.hpp>
#include <steffenlab/enumeration.hpp>
#include <steffenlab/structure.hpp>

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace steffenlab {

struct ScanModes {
    bool gsCheck = true;
    bool steffenCheck = true;
    bool ringCheck = true;
    bool lemmaSuite = false;

    bool operator==(const ScanModes&) const = default;
};

struct RandomCorpus {
    int count = 1000;
    int maxN = 12;
    int maxMu = 3;

    bool operator==(const RandomCorpus&) const = default;
};

struct ScanConfig {
    EnumSpec enumSpec;
    double solverTimeoutSeconds = 60.0;
    int workers = 1;
    std::string outputPath;
    bool checkpoint = true;
    ScanModes modes;
    RandomCorpus random;

    bool operator==(const ScanConfig&) const = default;
};

// Parses the JSON config and applies the STEFFENLAB_WORKERS override.
ScanConfig scan_config_from_json(const nlohmann::json& j);
ScanConfig load_scan_config(const std::string& path);
nlohmann::ordered_json to_json(const ScanConfig& c);
void validate(const ScanConfig& c);

enum class ScanStatus { Ok, Timeout, Skipped };
std::string_view to_string(ScanStatus s);

struct ScanRecord {
    std::string graphKey;
    int n = 0;
    int m = 0;
    int Delta = 0;
    int delta = 0;
    int mu = 0;
    Girth girth;
    int gamma = 0;
    int chi = 0;
    int steffenBound = 0;
    bool achievesBound = false;
    bool isCritical = false;
    bool chiGEDeltaPlus2 = false;
    std::optional<bool> ringFound; // set only when the ring-subgraph hypothesis fires
    std::optional<RingSubgraph> ringWitness;
    ScanStatus status = ScanStatus::Ok;

    bool steffen_violation() const { return status == ScanStatus::Ok && chi > steffenBound; }
    bool gs_violation() const { return status == ScanStatus::Ok && chiGEDeltaPlus2 && chi != gamma; }
    bool ring_violation() const { return ringFound.has_value() && !*ringFound; }
};

nlohmann::ordered_json to_json(const ScanRecord& r);
ScanRecord scan_record_from_json(const nlohmann::json& j);

// Gate for the ring-subgraph check with girth floor g:
// g >= 5, girth(G) >= g, mu >= floor(g/2) + 1 and chi = Delta + ceil(mu / floor(g/2)).
bool ring_hypothesis_holds(int girth_floor, const Girth& girth, int Delta, int mu, int chi);

ScanRecord analyze_graph(const Multigraph& g, const std::string& key, const ScanConfig& config);

struct ScanSummary {
    long total = 0;
    long processed = 0;
    long resumed = 0; // skipped via checkpoint
    long ok = 0;
    long timeouts = 0;
    long boundAchievers = 0;
    long deltaPlus2 = 0;
    long hypothesisFired = 0;
    long ringFound = 0;
    long steffenViolations = 0;
    long gsViolations = 0;
    long ringViolations = 0;
    bool interrupted = false;

    long violations() const { return steffenViolations + gsViolations + ringViolations; }
};

nlohmann::ordered_json to_json(const ScanSummary& s);

struct ScanHooks {
    std::function<void(const ScanRecord&)> on_record;
    // Polled between work items; when it becomes true the scan flushes and stops.
    const std::atomic<bool>* stop = nullptr;
};

// Records are emitted in canonical key order whatever the worker count. With
// an output path the report is JSONL and `<output>.ckpt` lists finished keys.
ScanSummary run_scan(const ScanConfig& config, const ScanHooks& hooks = {});

// ---- structural property suite ----

enum class DecompositionStatus { NotApplicable, NotCritical, Checked, Timeout };
std::string_view to_string(DecompositionStatus s);

struct DecompositionReport {
    DecompositionStatus status = DecompositionStatus::NotApplicable;
    int chi = 0;
    int edgeCopiesChecked = 0;
    bool residualsZero = false;
    BoundCheck minDegreeBound = BoundCheck::NotApplicable;
    std::vector<int> boundGirths;
    std::vector<std::string> violations;
};

// For critical graphs with chi >= Delta + 2: odd order, a near-perfect
// matching decomposition of G - e for every copy e, the degree identity and
// the minimum degree bound. Other graphs are reported as not applicable.
DecompositionReport decomposition_check(const Multigraph& g, const SolveOptions& opts = {});

struct LemmaSuiteReport {
    nlohmann::ordered_json json;
    long violations = 0;
};

// Critical-graph identities over the enumerated corpus (plus fixed family
// instances) and short-cycle, partition and fan checks over seeded random graphs.
LemmaSuiteReport run_lemma_suite(const ScanConfig& config, std::uint64_t seed);

} // namespace steffenlab
