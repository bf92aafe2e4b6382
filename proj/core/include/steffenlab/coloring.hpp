#pragma once

#include <steffenlab/invariants.hpp>
#include <steffenlab/multigraph.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace steffenlab {

// Colors 1..k for every parallel copy, addressed by (pair u<v, copy index).
struct EdgeColoring {
    int k = 0;
    std::map<std::pair<int, int>, std::vector<int>> colors;

    // classes()[c-1] lists the pairs carrying color c, sorted.
    std::vector<std::vector<std::pair<int, int>>> classes() const;
    bool operator==(const EdgeColoring&) const = default;
};

// Throws CoverageMismatch when the coloring does not cover exactly G's copies.
bool validate_coloring(const Multigraph& g, const EdgeColoring& c);

struct SolveOptions {
    // Per (G, k) decision budget; <= 0 disables the limit.
    double timeout_seconds = 60.0;
};

std::optional<EdgeColoring> is_k_colorable(const Multigraph& g, int k, const SolveOptions& opts = {});

enum class ChiMode { Search, GsFastPath };

struct ChromaticIndex {
    int chi = 0;
    EdgeColoring witness;
    bool fast_path = false; // answered by the density shortcut
};

// Search: linear ascent over [max(Delta, Gamma), Delta + mu].
// GsFastPath: when Gamma >= Delta + 2 the answer is Gamma, certified by a
// Gamma-coloring; otherwise falls back to Search.
ChromaticIndex chromatic_index(const Multigraph& g, ChiMode mode = ChiMode::Search, const SolveOptions& opts = {});

// Every single-copy deletion lowers the chromatic index. Graphs with an
// isolated vertex are never critical.
bool is_critical(const Multigraph& g, const SolveOptions& opts = {});
bool is_critical(const Multigraph& g, int chi, const SolveOptions& opts = {});

// Deletes copies in serialized pair order while the chromatic index is
// preserved, then drops isolated vertices.
Multigraph extract_critical(const Multigraph& g, const SolveOptions& opts = {});

struct MatchingDecomposition {
    std::pair<int, int> removed; // pair of the deleted copy
    std::vector<std::vector<std::pair<int, int>>> classes;
    std::vector<int> missed_vertex;
};

MatchingDecomposition near_perfect_matching_decomposition(
    const Multigraph& g, std::pair<int, int> e, const SolveOptions& opts = {});

enum class BoundCheck { Holds, Violated, NotApplicable };

struct DegreeIdentityReport {
    int chi = 0;
    std::vector<long> residuals;  // one per vertex, all zero when the identity holds
    BoundCheck min_degree_bound = BoundCheck::NotApplicable;
    std::vector<int> bound_girths; // the g values for which the bound form matched
    bool equality_only_when_mu_is_g = true;
};

// d(v) = sum_{w != v} (chi - 1 - d(w)) + 2 per vertex, plus the minimum
// degree bound delta >= n mu / g + 1 for every g in 5..n with
// chi = Delta + ceil(mu / floor(g/2)) >= Delta + 2.
DegreeIdentityReport degree_identity_check(const Multigraph& g, const SolveOptions& opts = {});

// max(Delta, Gamma).
int chromatic_lower_bound(const Multigraph& g);

nlohmann::ordered_json to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const MatchingDecomposition& d);
std::string_view to_string(BoundCheck b);

} // namespace steffenlab
