#include "fixtures.hpp"

#include <steffenlab/generators.hpp>

#include <sstream>

using namespace steffenlab;
using fixtures::error_kind;

TEST_CASE("build accumulates repeated pairs")
{
    auto g = Multigraph::build(2, {{0, 1, 3}});
    CHECK(g.size() == 3);
    CHECK(basic_invariants(g).mu == 3);

    auto h = Multigraph::build(3, {{0, 1, 1}, {1, 0, 2}, {1, 2, 1}});
    CHECK(h.multiplicity(0, 1) == 3);
    CHECK(h.multiplicity(1, 0) == 3);
    CHECK(h.size() == 4);
}

TEST_CASE("build of 3C5")
{
    std::vector<EdgeSpec> e;
    for (int i = 0; i < 5; ++i)
        e.push_back({i, (i + 1) % 5, 3});
    auto g = Multigraph::build(5, e);
    CHECK(g.size() == 15);
    CHECK(g == mu_cycle(5, 3));
}

TEST_CASE("build rejects bad edges")
{
    CHECK(error_kind([] { Multigraph::build(3, {{0, 0, 1}}); }) == ErrorKind::LoopRejected);
    CHECK(error_kind([] { Multigraph::build(3, {{0, 3, 1}}); }) == ErrorKind::VertexOutOfRange);
    CHECK(error_kind([] { Multigraph::build(3, {{-1, 1, 1}}); }) == ErrorKind::VertexOutOfRange);
    CHECK(error_kind([] { Multigraph::build(3, {{0, 1, 0}}); }) == ErrorKind::NonPositiveMultiplicity);
    CHECK(error_kind([] { Multigraph::build(3, {{0, 1, -2}}); }) == ErrorKind::NonPositiveMultiplicity);
}

TEST_CASE("basic invariants")
{
    CHECK(basic_invariants(mu_cycle(5, 3)) == BasicInvariants {5, 15, 6, 6, 3, 2});
    CHECK(basic_invariants(mu_complete(5, 2)) == BasicInvariants {5, 20, 8, 8, 2, 4});
    CHECK(basic_invariants(Multigraph(1)) == BasicInvariants {1, 0, 0, 0, 0, 0});
    CHECK(basic_invariants(Multigraph(0)) == BasicInvariants {});

    auto g = Multigraph::build(4, {{0, 1, 3}, {1, 2, 1}});
    auto inv = basic_invariants(g);
    CHECK(inv.Delta == 4);
    CHECK(inv.delta == 0);
    CHECK(inv.deltaSimple == 0);
}

TEST_CASE("underlying simple graph")
{
    auto c = underlying_simple(mu_cycle(5, 3));
    for (int i = 0; i < 5; ++i) {
        CHECK(c.adjacent(i, (i + 1) % 5));
        CHECK_FALSE(c.adjacent(i, (i + 2) % 5));
        CHECK(c.degree(i) == 2);
    }
    auto k = underlying_simple(mu_complete(5, 2));
    for (int v = 0; v < 5; ++v)
        CHECK(k.degree(v) == 4);

    auto p = underlying_simple(Multigraph::build(3, {{0, 1, 3}, {1, 2, 1}}));
    CHECK(p.adjacent(0, 1));
    CHECK(p.adjacent(1, 2));
    CHECK_FALSE(p.adjacent(0, 2));
}

TEST_CASE("remove_edges")
{
    const auto g = mu_cycle(5, 3);
    auto one = remove_edges(g, 0, 1, 1);
    CHECK(one.size() == 14);
    CHECK(one.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(0, 1) == 3); // original untouched

    auto all = remove_edges(g, 1, 0, 3);
    CHECK(all.multiplicity(0, 1) == 0);
    CHECK_FALSE(all.neighbors(0).contains(1));
    CHECK(all.edges().size() == 4);

    CHECK(error_kind([&] { remove_edges(g, 0, 2, 1); }) == ErrorKind::NotEnoughParallelEdges);
    CHECK(error_kind([&] { remove_edges(g, 0, 1, 4); }) == ErrorKind::NotEnoughParallelEdges);
}

TEST_CASE("induced subgraphs relabel in ascending order")
{
    auto p = induced(mu_cycle(5, 3), VertexSet {0, 1, 2});
    CHECK(p.order() == 3);
    CHECK(p.size() == 6);
    CHECK(p.multiplicity(0, 1) == 3);
    CHECK(p.multiplicity(1, 2) == 3);
    CHECK(p.multiplicity(0, 2) == 0);

    CHECK(induced(mu_complete(5, 2), VertexSet {0, 1, 2}) == mu_complete(3, 2));

    auto g = fixtures::petersen();
    CHECK(induced(g, g.vertices()) == g);

    auto h = induced(g, VertexSet {2, 7, 9});
    CHECK(h.multiplicity(0, 1) == g.multiplicity(2, 7));
    CHECK(h.multiplicity(1, 2) == g.multiplicity(7, 9));
    CHECK(error_kind([&] { induced(g, VertexSet {3, 12}); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("mgr text format")
{
    auto g = parse_mgr("n 2\ne 0 1 3\n");
    CHECK(g.order() == 2);
    CHECK(g.multiplicity(0, 1) == 3);

    CHECK(serialize_mgr(Multigraph::build(2, {{1, 0, 2}})) == "n 2\ne 0 1 2\n");
    CHECK(serialize_mgr(Multigraph::build(4, {{3, 2, 1}, {2, 0, 1}, {1, 0, 2}})) == "n 4\ne 0 1 2\ne 0 2 1\ne 2 3 1\n");

    CHECK(error_kind([] { parse_mgr("n 2\ne 0 2 1\n"); }) == ErrorKind::VertexOutOfRange);
    CHECK(error_kind([] { parse_mgr("n 2\ne 1 1 1\n"); }) == ErrorKind::LoopRejected);

    auto comments = parse_mgr("# a comment\n\nn 3\n# another\ne 1 2 1\n\n");
    CHECK(comments.size() == 1);
}

TEST_CASE("mgr syntax errors carry the line number")
{
    auto line_of = [](const char* text) {
        try {
            parse_mgr(text);
        } catch (const SyntaxError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("n 2\ne 0 x 1\n") == 2);
    CHECK(line_of("# c\nq 3\n") == 2);
    CHECK(line_of("e 0 1 1\n") == 1);   // edge before n
    CHECK(line_of("n 2\nn 3\n") == 2);  // n twice
    CHECK(line_of("n 2\ne 0 1\n") == 2); // missing multiplicity
    CHECK(line_of("n 2\ne 0 1 1 7\n") == 2);
    CHECK(line_of("") == 1);             // no n line at all
}

TEST_CASE("mgr and json round trips")
{
    for (const auto& g : {mu_cycle(5, 3), mu_complete(4, 2), fixtures::petersen(), Multigraph(3), Multigraph(0)}) {
        const auto text = serialize_mgr(g);
        CHECK(parse_mgr(text) == g);
        CHECK(serialize_mgr(parse_mgr(text)) == text);
        CHECK(multigraph_from_json(nlohmann::json::parse(to_json(g).dump())) == g);
        std::istringstream in(text);
        CHECK(read_mgr(in) == g);
    }
    CHECK(to_json(Multigraph::build(3, {{2, 1, 2}})).dump() == R"({"n":3,"edges":[[1,2,2]]})");
}

TEST_CASE("handshake and local effect of deletion on random graphs")
{
    SeededRng rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto g = random_multigraph(rng, 10, 4);
        long sum = 0;
        for (int v = 0; v < g.order(); ++v)
            sum += g.degree(v);
        CHECK(sum == 2L * g.size());
        const auto inv = basic_invariants(g);
        CHECK(inv.delta <= inv.Delta);
        CHECK(inv.Delta <= inv.m);
        CHECK(inv.mu <= inv.Delta);
        CHECK(inv.deltaSimple <= inv.delta);
        const auto edges = g.edges();
        if (edges.empty())
            continue;
        const auto e = edges[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(edges.size()) - 1))];
        const auto h = remove_edges(g, e.u, e.v, 1);
        for (int v = 0; v < g.order(); ++v)
            CHECK(h.degree(v) == g.degree(v) - (v == e.u || v == e.v ? 1 : 0));

        VertexSet s;
        for (int v = 0; v < g.order(); ++v)
            if (rng.percent(50))
                s.insert(v);
        const auto sub = induced(g, s);
        const auto ids = s.to_vector();
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = 0; b < ids.size(); ++b)
                if (a != b)
                    CHECK(sub.multiplicity(static_cast<int>(a), static_cast<int>(b)) == g.multiplicity(ids[a], ids[b]));
    }
}
