#include "../oracles/oracles.hpp"
#include "fixtures.hpp"

#include <steffenlab/generators.hpp>
#include <steffenlab/structure.hpp>

using namespace steffenlab;
using fixtures::error_kind;

namespace {

// C5 on 0..4, v0 = 5, a = 6, edges v0-x1, v0-a, a-x3 with x_i = i-1.
Multigraph fan_graph()
{
    auto e = fixtures::cycle(5).edges();
    e.push_back({5, 0, 1});
    e.push_back({5, 6, 1});
    e.push_back({6, 2, 1});
    return Multigraph::build(7, e);
}

} // namespace

TEST_CASE("cycle partitions")
{
    const auto p = fixtures::petersen();
    auto part = cycle_partition(p);
    CHECK(part.cycles.size() == 2);
    for (const auto& c : part.cycles)
        CHECK(c.length() == 5);
    CHECK(part.v0.empty());
    CHECK(verify_cycle_partition(p, part).empty());

    auto ring = cycle_partition(mu_cycle(5, 3));
    REQUIRE(ring.cycles.size() == 1);
    CHECK(ring.cycles[0].vertices == std::vector<int> {0, 1, 2, 3, 4});
    CHECK(ring.v0.empty());

    auto tree = cycle_partition(fixtures::path(6));
    CHECK(tree.cycles.empty());
    CHECK(tree.v0 == VertexSet::first(6));

    CHECK(to_json(ring).dump() == R"({"cycles":[[0,1,2,3,4]],"v0":[]})");
}

TEST_CASE("partition verification catches tampering")
{
    const auto g = fan_graph();
    auto part = cycle_partition(g);
    CHECK(verify_cycle_partition(g, part).empty());
    CHECK(part.v0 == VertexSet {5, 6});

    auto wrong = part;
    wrong.cycles[0] = CycleSeq {{0, 1, 2, 6, 5}}; // same length, not the canonical choice, wrong remainder
    CHECK_FALSE(verify_cycle_partition(g, wrong).empty());

    auto leftover = part;
    leftover.v0.erase(6);
    CHECK_FALSE(verify_cycle_partition(g, leftover).empty());

    // A remainder that still contains a cycle.
    const auto two = fixtures::disjoint_union(fixtures::cycle(3), fixtures::cycle(4));
    CyclePartition truncated {{CycleSeq {{0, 1, 2}}}, VertexSet {3, 4, 5, 6}};
    CHECK_FALSE(verify_cycle_partition(two, truncated).empty());
}

TEST_CASE("max fans")
{
    const auto g = fan_graph();
    const auto part = cycle_partition(g);

    auto f = max_fan(g, part, 5, 0);
    REQUIRE(f);
    CHECK(f->t() == 2);
    CHECK(f->tree_size() == 2);
    CHECK(f->vertices() == VertexSet {0, 2, 5, 6});
    CHECK(fan_bound_check(*f, part.cycles[0]));

    auto from_a = max_fan(g, part, 6, 0);
    REQUIRE(from_a);
    CHECK(from_a->t() == 2);
    auto paths = from_a->paths;
    std::sort(paths.begin(), paths.end());
    CHECK(paths == std::vector<std::vector<int>> {{6, 2}, {6, 5, 0}});

    auto lonely_edges = fixtures::cycle(5).edges();
    const auto lonely = Multigraph::build(6, lonely_edges);
    const auto lonely_part = cycle_partition(lonely);
    CHECK_FALSE(max_fan(lonely, lonely_part, 5, 0));

    CHECK(error_kind([&] { max_fan(g, part, 0, 0); }) == ErrorKind::VertexNotInV0);
    CHECK(error_kind([&] { max_fan(g, part, 5, 1); }) == ErrorKind::BadParameter);
    CHECK(to_json(*f)["t"] == 2);
}

TEST_CASE("fan bound arithmetic")
{
    CHECK(fan_bound_holds(2, 2, 5));
    CHECK(fan_bound_holds(1, 0, 9)); // a 1-fan needs nothing
    CHECK_FALSE(fan_bound_holds(3, 0, 6));
    CHECK(fan_bound_holds(3, 4, 6));
    CHECK_FALSE(fan_bound_holds(3, 3, 6));
    Fan synthetic {0, 0, {{0, 1}, {0, 2}, {0, 3}}};
    CHECK(synthetic.tree_size() == 1);
    CHECK_FALSE(fan_bound_check(synthetic, CycleSeq {{1, 2, 3, 4, 5, 6}}));
}

TEST_CASE("ring graph recognition")
{
    CHECK(is_ring_graph(mu_cycle(5, 3)));
    CHECK_FALSE(is_ring_graph(fixtures::petersen()));
    const std::vector<int> mults {3, 1, 2, 1, 3, 1, 2};
    CHECK(is_ring_graph(ring(7, mults)));
    CHECK_FALSE(is_ring_graph(Multigraph::build(6, fixtures::cycle(5).edges())));
    CHECK_FALSE(is_ring_graph(fixtures::disjoint_union(fixtures::cycle(3), fixtures::cycle(3))));
    CHECK_FALSE(is_ring_graph(fixtures::path(4)));
}

TEST_CASE("cycle enumeration agrees with the oracle")
{
    SeededRng rng(31);
    for (int i = 0; i < 200; ++i) {
        const auto g = random_multigraph(rng, 8, 2);
        const auto got = enumerate_cycles(underlying_simple(g));
        const auto expected = oracle::cycles(g);
        REQUIRE(got.size() == expected.size());
        for (std::size_t k = 0; k < got.size(); ++k)
            CHECK(got[k].vertices == expected[k]);
    }
    CHECK(error_kind([] { enumerate_cycles(underlying_simple(mu_complete(7, 1)), 10); })
        == ErrorKind::InstanceTooLarge);
}

TEST_CASE("ring subgraph search")
{
    auto self = find_ring_subgraph_with_chi(mu_cycle(5, 3), 8);
    REQUIRE(self);
    CHECK(self->as_subgraph(5) == mu_cycle(5, 3));
    CHECK(self->chi == 8);

    CHECK_FALSE(find_ring_subgraph_with_chi(fixtures::petersen(), 4));

    // 3C5 plus a chord: the answer must match maximal rings checked by hand.
    auto e = mu_cycle(5, 3).edges();
    e.push_back({0, 2, 1});
    const auto g = Multigraph::build(5, e);
    const int target = chromatic_index(g).chi;
    int best = 0;
    for (const auto& c : oracle::cycles(g)) {
        std::vector<EdgeSpec> ring_edges;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int u = c[i], v = c[(i + 1) % c.size()];
            ring_edges.push_back({u, v, g.multiplicity(u, v)});
        }
        best = std::max(best, chromatic_index(Multigraph::build(5, ring_edges)).chi);
    }
    auto found = find_ring_subgraph_with_chi(g, target);
    CHECK(found.has_value() == (best >= target));
    if (found) {
        CHECK(found->chi == target);
        CHECK(chromatic_index(found->as_subgraph(5)).chi == target);
        CHECK(is_ring_graph(induced(found->as_subgraph(5), found->cycle.vertex_set())));
    }

    // Descent below the maximal ring.
    auto lower = find_ring_subgraph_with_chi(mu_cycle(5, 3), 7);
    REQUIRE(lower);
    CHECK(chromatic_index(lower->as_subgraph(5)).chi == 7);
    CHECK(lower->chi == 7);
    CHECK_FALSE(find_ring_subgraph_with_chi(mu_cycle(5, 3), 9));
}

TEST_CASE("property: partitions verify and fans respect the bound")
{
    SeededRng rng(32);
    long fans = 0;
    for (int i = 0; i < 300; ++i) {
        const auto g = random_multigraph(rng, 12, 2);
        const auto part = cycle_partition(g);
        CHECK(verify_cycle_partition(g, part).empty());
        for (std::size_t h = 0; h < part.cycles.size(); ++h)
            for (int apex : part.v0)
                if (auto f = max_fan(g, part, apex, h)) {
                    ++fans;
                    CHECK(fan_bound_check(*f, part.cycles[h]));
                    CHECK(f->t() <= part.cycles[h].length());
                }
    }
    CHECK(fans > 0);
}

TEST_CASE("property: even rings are bipartite")
{
    SeededRng rng(33);
    for (int i = 0; i < 60; ++i) {
        const int g = 2 * rng.uniform(2, 4);
        std::vector<int> mults;
        for (int k = 0; k < g; ++k)
            mults.push_back(rng.uniform(1, 4));
        const auto r = ring(g, mults);
        CHECK(chromatic_index(r).chi == basic_invariants(r).Delta);
    }
}
