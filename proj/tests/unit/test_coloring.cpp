#include "../oracles/oracles.hpp"
#include "fixtures.hpp"

#include <steffenlab/coloring.hpp>
#include <steffenlab/generators.hpp>

using namespace steffenlab;
using fixtures::error_kind;

namespace {

EdgeColoring around_c5(std::vector<int> colors)
{
    EdgeColoring c;
    c.k = 3;
    // Edge i is {i, i+1 mod 5}, stored with u < v.
    for (int i = 0; i < 5; ++i)
        c.colors[{std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)}] = {colors[static_cast<std::size_t>(i)]};
    return c;
}

} // namespace

TEST_CASE("validate_coloring")
{
    const auto c5 = fixtures::cycle(5);
    CHECK(validate_coloring(c5, around_c5({1, 2, 1, 2, 3})));
    CHECK_FALSE(validate_coloring(c5, around_c5({1, 2, 1, 2, 1})));

    const auto triple = Multigraph::build(2, {{0, 1, 3}});
    EdgeColoring good {3, {{{0, 1}, {1, 2, 3}}}};
    EdgeColoring bad {3, {{{0, 1}, {1, 1, 2}}}};
    CHECK(validate_coloring(triple, good));
    CHECK_FALSE(validate_coloring(triple, bad));

    EdgeColoring out_of_range {2, {{{0, 1}, {1, 2, 3}}}};
    CHECK_FALSE(validate_coloring(triple, out_of_range));

    EdgeColoring missing {3, {{{0, 1}, {1, 2}}}};
    CHECK(error_kind([&] { validate_coloring(triple, missing); }) == ErrorKind::CoverageMismatch);
    EdgeColoring extra {3, {{{0, 1}, {1, 2, 3}}, {{0, 2}, {1}}}};
    CHECK(error_kind([&] { validate_coloring(Multigraph::build(3, {{0, 1, 3}}), extra); })
        == ErrorKind::CoverageMismatch);
}

TEST_CASE("is_k_colorable")
{
    CHECK_FALSE(is_k_colorable(fixtures::cycle(5), 2));
    auto three = is_k_colorable(fixtures::cycle(5), 3);
    REQUIRE(three);
    CHECK(validate_coloring(fixtures::cycle(5), *three));

    const auto g = mu_cycle(5, 3);
    auto eight = is_k_colorable(g, 8);
    REQUIRE(eight);
    CHECK(validate_coloring(g, *eight));
    CHECK_FALSE(is_k_colorable(g, 7));

    const auto k4 = mu_complete(4, 1);
    auto k4c = is_k_colorable(k4, 3);
    REQUIRE(k4c);
    CHECK(validate_coloring(k4, *k4c));
    CHECK(oracle::colorable(k4, 3));

    CHECK(is_k_colorable(Multigraph(3), 0));
    CHECK_FALSE(is_k_colorable(Multigraph::build(2, {{0, 1, 1}}), 0));
}

TEST_CASE("is_k_colorable is deterministic")
{
    const auto g = fixtures::petersen();
    CHECK(*is_k_colorable(g, 4) == *is_k_colorable(g, 4));
}

TEST_CASE("chromatic index examples")
{
    CHECK(chromatic_index(mu_cycle(5, 3)).chi == 8);
    CHECK(chromatic_index(mu_complete(5, 2)).chi == 10);
    CHECK(chromatic_index(fixtures::petersen()).chi == 4);
    CHECK_FALSE(is_k_colorable(fixtures::petersen(), 3));
    CHECK(chromatic_index(Multigraph(4)).chi == 0);
}

TEST_CASE("gs fast path")
{
    auto fast = chromatic_index(mu_complete(5, 2), ChiMode::GsFastPath);
    CHECK(fast.fast_path);
    CHECK(fast.chi == 10);
    CHECK(validate_coloring(mu_complete(5, 2), fast.witness));

    // Gamma = Delta + 1 here, so the fast path does not apply.
    auto fallback = chromatic_index(fixtures::cycle(5), ChiMode::GsFastPath);
    CHECK_FALSE(fallback.fast_path);
    CHECK(fallback.chi == 3);
}

TEST_CASE("witness json round trip")
{
    const auto g = mu_cycle(3, 2);
    const auto c = chromatic_index(g).witness;
    const auto j = to_json(c);
    CHECK(j["k"] == 6);
    CHECK(j["classes"].size() == 6);
    CHECK(coloring_from_json(nlohmann::json::parse(j.dump())) == c);
}

TEST_CASE("criticality")
{
    CHECK(is_critical(mu_cycle(5, 3)));
    CHECK_FALSE(is_critical(fixtures::disjoint_union(fixtures::cycle(5), fixtures::cycle(5))));
    CHECK(is_critical(Multigraph::build(2, {{0, 1, 3}})));
    CHECK_FALSE(is_critical(Multigraph::build(3, {{0, 1, 3}})));
    CHECK_FALSE(is_critical(fixtures::petersen()));
}

TEST_CASE("extract_critical")
{
    auto pendant = mu_cycle(5, 3).edges();
    pendant.push_back({0, 5, 1});
    CHECK(extract_critical(Multigraph::build(6, pendant)) == mu_cycle(5, 3));
    CHECK(extract_critical(mu_cycle(5, 3)) == mu_cycle(5, 3));

    // On a path with four vertices the index stays 2; a two-edge path is left.
    const auto core = extract_critical(fixtures::path(4));
    CHECK(core == fixtures::path(3));
    CHECK(is_critical(core));

    const auto petersen_core = extract_critical(fixtures::petersen());
    CHECK(chromatic_index(petersen_core).chi == 4);
    CHECK(is_critical(petersen_core));
}

TEST_CASE("near-perfect matching decomposition")
{
    const auto g = mu_cycle(5, 3);
    for (const auto& e : g.edges()) {
        const auto d = near_perfect_matching_decomposition(g, {e.u, e.v});
        CHECK(d.classes.size() == 7);
        for (std::size_t c = 0; c < d.classes.size(); ++c) {
            CHECK(d.classes[c].size() == 2);
            CHECK(d.missed_vertex[c] >= 0);
        }
    }
    CHECK(error_kind([] { near_perfect_matching_decomposition(fixtures::cycle(5), {0, 1}); })
        == ErrorKind::PreconditionFailed);
    auto even = mu_cycle(5, 3).edges();
    even.push_back({0, 5, 1});
    CHECK(error_kind([&] { near_perfect_matching_decomposition(Multigraph::build(6, even), {0, 1}); })
        == ErrorKind::PreconditionFailed);
    CHECK(error_kind([] { near_perfect_matching_decomposition(mu_cycle(5, 3), {0, 2}); }) == ErrorKind::BadParameter);
    // Odd order and chi = Delta + 2, but two isolated vertices break criticality.
    try {
        near_perfect_matching_decomposition(Multigraph::build(7, mu_cycle(5, 3).edges()), {0, 1});
        FAIL("expected PreconditionFailed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionFailed);
        CHECK(std::string(e.what()).find("critical") != std::string::npos);
    }
}

TEST_CASE("degree identity")
{
    auto r = degree_identity_check(mu_cycle(5, 3));
    CHECK(r.chi == 8);
    CHECK(r.residuals == std::vector<long>(5, 0));
    CHECK(r.min_degree_bound == BoundCheck::Holds);
    CHECK(r.bound_girths == std::vector<int> {5});
    CHECK(r.equality_only_when_mu_is_g);

    auto k3 = degree_identity_check(mu_cycle(3, 5));
    CHECK(k3.chi == 15);
    CHECK(k3.residuals == std::vector<long>(3, 0));
    CHECK(k3.min_degree_bound == BoundCheck::NotApplicable);

    CHECK(error_kind([] { degree_identity_check(fixtures::cycle(5)); }) == ErrorKind::PreconditionFailed);
    CHECK(error_kind([] { degree_identity_check(Multigraph(3)); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("solver timeout is reported, never a wrong answer")
{
    // A tiny budget on a hard instance must either finish or throw SolverTimeout.
    SolveOptions tiny {1e-9};
    try {
        auto r = chromatic_index(mu_complete(7, 2), ChiMode::Search, tiny);
        CHECK(r.chi == 14);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SolverTimeout);
    }
}

TEST_CASE("property: solver matches brute force on random small graphs")
{
    SeededRng rng(21);
    int compared = 0;
    for (int i = 0; i < 400; ++i) {
        const auto g = random_multigraph(rng, 6, 3);
        if (g.size() > 9)
            continue;
        ++compared;
        const auto r = chromatic_index(g);
        CHECK(r.chi == oracle::chromatic_index(g));
        CHECK(validate_coloring(g, r.witness));
        const auto inv = basic_invariants(g);
        CHECK(chromatic_lower_bound(g) <= r.chi);
        CHECK(r.chi <= inv.Delta + inv.mu);
        CHECK(r.chi <= steffen_bound(g));
        if (r.chi >= inv.Delta + 2)
            CHECK(r.chi == density(g).gamma);
        if (density(g).gamma >= inv.Delta + 2)
            CHECK(chromatic_index(g, ChiMode::GsFastPath).chi == r.chi);
        for (const auto& e : g.edges()) {
            const int smaller = chromatic_index(remove_edges(g, e.u, e.v, 1)).chi;
            CHECK((smaller == r.chi || smaller == r.chi - 1));
        }
        if (g.size() > 0)
            CHECK(is_critical(g) == oracle::is_critical(g));
    }
    CHECK(compared > 100);
}
