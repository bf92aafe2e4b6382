#pragma once

#include <steffenlab/multigraph.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace steffenlab {

inline constexpr int default_canonical_cap = 10;

// Byte string naming an isomorphism class: the vertex count followed by the
// lower triangle of the multiplicity matrix, row by row, under the labelling
// that minimises it. Equal keys iff isomorphic.
struct CanonicalForm {
    std::string key;

    std::string hex() const;
    static CanonicalForm from_hex(std::string_view hex);

    auto operator<=>(const CanonicalForm&) const = default;
    bool operator==(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Multigraph& g, int cap = default_canonical_cap);

// The graph the key describes (vertices in canonical order).
Multigraph from_canonical(const CanonicalForm& form);

// Vertex permutations p (p[v] = image of v) with g[p[u]][p[v]] = g[u][v].
std::vector<std::vector<int>> automorphisms(const Multigraph& g, int cap = default_canonical_cap);

} // namespace steffenlab
