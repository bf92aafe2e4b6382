#pragma once

#include <steffenlab/errors.hpp>

#include <json.hpp>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace steffenlab {

// Largest vertex count the library accepts; vertex sets are 64-bit masks.
inline constexpr int max_vertices = 64;

// A set of vertices drawn from 0..63.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices)
    {
        for (int v : vertices)
            insert(v);
    }

    static constexpr VertexSet first(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    static VertexSet of(std::span<const int> vertices)
    {
        VertexSet s;
        for (int v : vertices)
            s.insert(v);
        return s;
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int min() const { return std::countr_zero(bits_); }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;

    // Ascending vertex iteration.
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

// One entry of an edge list: `mult` parallel copies between u and v.
struct EdgeSpec {
    int u = 0;
    int v = 0;
    int mult = 1;

    bool operator==(const EdgeSpec&) const = default;
};

// Underlying simple graph: u ~ v iff they share at least one edge.
struct SimpleGraphView {
    int n = 0;
    std::vector<VertexSet> adj;

    bool adjacent(int u, int v) const { return adj[u].contains(v); }
    int degree(int v) const { return adj[v].size(); }
    VertexSet vertices() const { return VertexSet::first(n); }
};

struct BasicInvariants {
    int n = 0;
    int m = 0;
    int Delta = 0;
    int delta = 0;
    int mu = 0;
    int deltaSimple = 0;

    bool operator==(const BasicInvariants&) const = default;
};

// Loopless multigraph on vertices 0..n-1, stored as a symmetric multiplicity
// matrix. Values are immutable once built; editing operations return copies.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n);

    // Repeated pairs accumulate.
    static Multigraph build(int n, std::span<const EdgeSpec> edges);
    static Multigraph build(int n, std::initializer_list<EdgeSpec> edges)
    {
        return build(n, std::span<const EdgeSpec>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }
    int size() const { return m_; }
    int multiplicity(int u, int v) const { return mult_[static_cast<std::size_t>(u * n_ + v)]; }
    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet vertices() const { return VertexSet::first(n_); }

    // Pairs with multiplicity >= 1, sorted by (min endpoint, max endpoint), u < v.
    std::vector<EdgeSpec> edges() const;
    int pair_count() const;

    bool operator==(const Multigraph& other) const = default;

private:
    void set(int u, int v, int m);

    int n_ = 0;
    int m_ = 0;
    std::vector<int> mult_;
    std::vector<int> degree_;
    std::vector<VertexSet> adj_;

    friend Multigraph remove_edges(const Multigraph&, int, int, int);
    friend Multigraph induced(const Multigraph&, VertexSet);
};

BasicInvariants basic_invariants(const Multigraph& g);
SimpleGraphView underlying_simple(const Multigraph& g);

// Removes `count` parallel copies between u and v.
Multigraph remove_edges(const Multigraph& g, int u, int v, int count = 1);

// Subgraph induced on `s`, relabelled 0..|s|-1 in ascending original order.
Multigraph induced(const Multigraph& g, VertexSet s);

Multigraph parse_mgr(std::string_view text);
Multigraph read_mgr(std::istream& in);
std::string serialize_mgr(const Multigraph& g);

nlohmann::ordered_json to_json(const Multigraph& g);
Multigraph multigraph_from_json(const nlohmann::json& j);

} // namespace steffenlab
