#pragma once

#include <steffenlab/canonical.hpp>
#include <steffenlab/multigraph.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace steffenlab {

inline constexpr int max_enumeration_order = 10;

struct EnumSpec {
    int nMin = 1;
    int nMax = 5;
    int maxMu = 1;
    int girthMin = 3;         // forests always pass unless requireCycle
    bool requireCycle = false; // drop graphs of infinite girth
    bool connectedOnly = false;
    bool allowIsolated = false; // isolated vertices never change any invariant
    int maxEdgeCopies = 10;

    bool operator==(const EnumSpec&) const = default;
};

void validate(const EnumSpec& spec);
nlohmann::ordered_json to_json(const EnumSpec& spec);
EnumSpec enum_spec_from_json(const nlohmann::json& j);

// Canonical simple graphs on exactly n vertices with girth >= girth_min and
// at most max_edges edges, built one vertex at a time.
std::vector<Multigraph> simple_graphs(int n, int girth_min, int max_edges);

// Sorted canonical keys, materialised lazily into graphs.
class GraphStream {
public:
    explicit GraphStream(std::vector<CanonicalForm> keys) : keys_(std::move(keys)) {}

    std::optional<std::pair<CanonicalForm, Multigraph>> next()
    {
        if (pos_ >= keys_.size())
            return std::nullopt;
        const auto& key = keys_[pos_++];
        return std::make_pair(key, from_canonical(key));
    }

    // Skip every key <= `key`.
    void resume_after(const CanonicalForm& key);

    std::size_t size() const { return keys_.size(); }
    std::size_t position() const { return pos_; }
    const std::vector<CanonicalForm>& keys() const { return keys_; }

private:
    std::vector<CanonicalForm> keys_;
    std::size_t pos_ = 0;
};

// One representative per isomorphism class satisfying `spec`, ordered by key.
// Underlying graphs are split across `workers` threads.
GraphStream enumerate_multigraphs(const EnumSpec& spec, int workers = 1);

} // namespace steffenlab
