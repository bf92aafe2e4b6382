#pragma once

// Deliberately naive reference implementations used to cross-check the library.

#include <steffenlab/multigraph.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using steffenlab::Multigraph;

// Every parallel copy gets its own color; plain DFS over k^|E| assignments.
bool colorable(const Multigraph& g, int k);
int chromatic_index(const Multigraph& g);
bool is_critical(const Multigraph& g);

// Max over all odd vertex subsets, edges counted pair by pair.
int density(const Multigraph& g);

// All simple cycles of the underlying graph as vertex sequences starting at
// their smallest vertex, direction with the smaller second vertex.
std::vector<std::vector<int>> cycles(const Multigraph& g);
std::optional<int> girth(const Multigraph& g);
bool has_cycle_through_all(const Multigraph& g);

// Minimum row-major upper-triangle string over all n! relabelings.
std::string canonical(const Multigraph& g);

struct Filter {
    int maxMu = 1;
    int girthMin = 3;
    int maxEdgeCopies = 100;
    bool requireCycle = false;
    bool connectedOnly = false;
    bool allowIsolated = false;
};

// Isomorphism classes on exactly n vertices, by brute force over all
// multiplicity matrices. Keys are canonical() strings.
std::set<std::string> enumerate(int n, const Filter& f);

bool connected(const Multigraph& g);

// Orbits of colorings of a g-cycle's edges with c colors under the dihedral group.
long dihedral_orbits(int g, int c);

} // namespace oracle
