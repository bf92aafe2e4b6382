#include <steffenlab/multigraph.hpp>

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

namespace steffenlab {

namespace {

    void check_order(int n)
    {
        if (n < 0 || n > max_vertices)
            throw Error(ErrorKind::BadParameter,
                "vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    }

    void check_pair(int n, int u, int v)
    {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorKind::VertexOutOfRange,
                "pair {" + std::to_string(u) + "," + std::to_string(v) + "} with n = " + std::to_string(n));
        if (u == v)
            throw Error(ErrorKind::LoopRejected, "loop at vertex " + std::to_string(u));
    }

} // namespace

Multigraph::Multigraph(int n)
{
    check_order(n);
    n_ = n;
    mult_.assign(static_cast<std::size_t>(n) * n, 0);
    degree_.assign(static_cast<std::size_t>(n), 0);
    adj_.assign(static_cast<std::size_t>(n), VertexSet {});
}

Multigraph Multigraph::build(int n, std::span<const EdgeSpec> edges)
{
    Multigraph g(n);
    for (const auto& e : edges) {
        check_pair(n, e.u, e.v);
        if (e.mult < 1)
            throw Error(ErrorKind::NonPositiveMultiplicity,
                "pair {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} multiplicity " + std::to_string(e.mult));
        g.set(e.u, e.v, g.multiplicity(e.u, e.v) + e.mult);
    }
    return g;
}

void Multigraph::set(int u, int v, int m)
{
    const int old = multiplicity(u, v);
    mult_[static_cast<std::size_t>(u * n_ + v)] = m;
    mult_[static_cast<std::size_t>(v * n_ + u)] = m;
    degree_[static_cast<std::size_t>(u)] += m - old;
    degree_[static_cast<std::size_t>(v)] += m - old;
    m_ += m - old;
    if (m > 0) {
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    } else {
        adj_[static_cast<std::size_t>(u)].erase(v);
        adj_[static_cast<std::size_t>(v)].erase(u);
    }
}

std::vector<EdgeSpec> Multigraph::edges() const
{
    std::vector<EdgeSpec> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (int m = multiplicity(u, v); m > 0)
                out.push_back({u, v, m});
    return out;
}

int Multigraph::pair_count() const
{
    int total = 0;
    for (const auto& a : adj_)
        total += a.size();
    return total / 2;
}

BasicInvariants basic_invariants(const Multigraph& g)
{
    BasicInvariants inv;
    inv.n = g.order();
    inv.m = g.size();
    if (g.order() == 0)
        return inv;
    inv.delta = g.degree(0);
    inv.deltaSimple = g.neighbors(0).size();
    for (int v = 0; v < g.order(); ++v) {
        inv.Delta = std::max(inv.Delta, g.degree(v));
        inv.delta = std::min(inv.delta, g.degree(v));
        inv.deltaSimple = std::min(inv.deltaSimple, g.neighbors(v).size());
        for (int u : g.neighbors(v))
            inv.mu = std::max(inv.mu, g.multiplicity(u, v));
    }
    return inv;
}

SimpleGraphView underlying_simple(const Multigraph& g)
{
    SimpleGraphView view;
    view.n = g.order();
    view.adj.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        view.adj[static_cast<std::size_t>(v)] = g.neighbors(v);
    return view;
}

Multigraph remove_edges(const Multigraph& g, int u, int v, int count)
{
    check_pair(g.order(), u, v);
    if (count < 0)
        throw Error(ErrorKind::BadParameter, "negative removal count");
    const int have = g.multiplicity(u, v);
    if (count > have)
        throw Error(ErrorKind::NotEnoughParallelEdges,
            "pair {" + std::to_string(u) + "," + std::to_string(v) + "} has " + std::to_string(have)
                + " copies, asked to remove " + std::to_string(count));
    Multigraph out = g;
    out.set(u, v, have - count);
    return out;
}

Multigraph induced(const Multigraph& g, VertexSet s)
{
    if ((s - g.vertices()).size() != 0)
        throw Error(ErrorKind::VertexOutOfRange, "induced set reaches past n = " + std::to_string(g.order()));
    const auto keep = s.to_vector();
    Multigraph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (int m = g.multiplicity(keep[i], keep[j]); m > 0)
                out.set(static_cast<int>(i), static_cast<int>(j), m);
    return out;
}

namespace {

    std::vector<std::string_view> split_ws(std::string_view line)
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t')
                ++j;
            if (j > i)
                out.push_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    }

    int parse_int(std::string_view token, int line)
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc {} || ptr != token.data() + token.size())
            throw SyntaxError(line, "expected integer, got '" + std::string(token) + "'");
        return value;
    }

} // namespace

Multigraph parse_mgr(std::string_view text)
{
    int n = -1;
    std::vector<EdgeSpec> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty() && line.front() == '#')
            continue;
        auto tokens = split_ws(line);
        if (tokens.empty())
            continue;
        if (tokens[0] == "n") {
            if (tokens.size() != 2)
                throw SyntaxError(line_no, "expected 'n <count>'");
            if (n >= 0)
                throw SyntaxError(line_no, "duplicate 'n' line");
            n = parse_int(tokens[1], line_no);
            if (n < 0 || n > max_vertices)
                throw SyntaxError(line_no, "vertex count out of range");
        } else if (tokens[0] == "e") {
            if (tokens.size() != 4)
                throw SyntaxError(line_no, "expected 'e <u> <v> <mult>'");
            if (n < 0)
                throw SyntaxError(line_no, "edge before 'n' line");
            EdgeSpec e {parse_int(tokens[1], line_no), parse_int(tokens[2], line_no), parse_int(tokens[3], line_no)};
            check_pair(n, e.u, e.v);
            edges.push_back(e);
        } else {
            throw SyntaxError(line_no, "unknown record '" + std::string(tokens[0]) + "'");
        }
    }
    if (n < 0)
        throw SyntaxError(std::max(line_no, 1), "missing 'n' line");
    return Multigraph::build(n, edges);
}

Multigraph read_mgr(std::istream& in)
{
    std::string text {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_mgr(text);
}

std::string serialize_mgr(const Multigraph& g)
{
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (const auto& e : g.edges())
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.mult) + "\n";
    return out;
}

nlohmann::ordered_json to_json(const Multigraph& g)
{
    nlohmann::ordered_json j;
    j["n"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v, e.mult});
    j["edges"] = std::move(edges);
    return j;
}

Multigraph multigraph_from_json(const nlohmann::json& j)
{
    try {
        const int n = j.at("n").get<int>();
        std::vector<EdgeSpec> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw Error(ErrorKind::BadParameter, "edge entries must be [u, v, mult]");
            edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
        }
        return Multigraph::build(n, edges);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::BadParameter, std::string("malformed graph JSON: ") + ex.what());
    }
}

} // namespace steffenlab
