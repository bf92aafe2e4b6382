#pragma once

#include <steffenlab/errors.hpp>
#include <steffenlab/multigraph.hpp>

#include <doctest.h>

#include <vector>

namespace fixtures {

using steffenlab::EdgeSpec;
using steffenlab::Multigraph;

inline Multigraph petersen()
{
    std::vector<EdgeSpec> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5, 1});
        e.push_back({i, i + 5, 1});
        e.push_back({5 + i, 5 + (i + 2) % 5, 1});
    }
    return Multigraph::build(10, e);
}

inline Multigraph cycle(int n, int mult = 1)
{
    std::vector<EdgeSpec> e;
    for (int i = 0; i < n; ++i)
        e.push_back({i, (i + 1) % n, mult});
    return Multigraph::build(n, e);
}

inline Multigraph path(int n)
{
    std::vector<EdgeSpec> e;
    for (int i = 0; i + 1 < n; ++i)
        e.push_back({i, i + 1, 1});
    return Multigraph::build(n, e);
}

inline Multigraph disjoint_union(const Multigraph& a, const Multigraph& b)
{
    auto e = a.edges();
    for (auto x : b.edges())
        e.push_back({x.u + a.order(), x.v + a.order(), x.mult});
    return Multigraph::build(a.order() + b.order(), e);
}

template <typename F>
steffenlab::ErrorKind error_kind(F&& f)
{
    try {
        f();
    } catch (const steffenlab::Error& e) {
        return e.kind();
    }
    FAIL("expected a steffenlab::Error");
    return steffenlab::ErrorKind::ConfigError;
}

} // namespace fixtures
