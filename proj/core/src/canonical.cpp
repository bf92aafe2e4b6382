#include <steffenlab/canonical.hpp>

#include <algorithm>

namespace steffenlab {

std::string CanonicalForm::hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (unsigned char c : key) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xF]);
    }
    return out;
}

CanonicalForm CanonicalForm::from_hex(std::string_view hex)
{
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        throw Error(ErrorKind::BadParameter, std::string("bad hex digit '") + c + "' in canonical key");
    };
    if (hex.size() % 2 != 0)
        throw Error(ErrorKind::BadParameter, "canonical key has odd hex length");
    CanonicalForm f;
    for (std::size_t i = 0; i < hex.size(); i += 2)
        f.key.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    return f;
}

namespace {

    // Colour refinement: start from (degree, simple degree), then split by the
    // multiset of (neighbour colour, multiplicity) until stable. Colours are
    // ranks of sorted signatures, so the result is labelling-invariant.
    std::vector<int> refine(const Multigraph& g)
    {
        const int n = g.order();
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            sig[static_cast<std::size_t>(v)] = {g.degree(v), g.neighbors(v).size()};

        std::vector<int> color(static_cast<std::size_t>(n));
        int classes = 0;
        while (true) {
            auto sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (int v = 0; v < n; ++v)
                color[static_cast<std::size_t>(v)] = static_cast<int>(
                    std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) - sorted.begin());
            const int now = static_cast<int>(sorted.size());
            if (now == classes)
                break;
            classes = now;
            for (int v = 0; v < n; ++v) {
                std::vector<std::pair<int, int>> around;
                for (int w : g.neighbors(v))
                    around.emplace_back(color[static_cast<std::size_t>(w)], g.multiplicity(v, w));
                std::sort(around.begin(), around.end());
                auto& s = sig[static_cast<std::size_t>(v)];
                s.assign({color[static_cast<std::size_t>(v)]});
                for (auto [c, m] : around) {
                    s.push_back(c);
                    s.push_back(m);
                }
            }
        }
        return color;
    }

    class CanonicalSearch {
    public:
        CanonicalSearch(const Multigraph& g, bool collect)
            : g_(g)
            , n_(g.order())
            , color_(refine(g))
            , perm_(static_cast<std::size_t>(n_))
            , collect_(collect)
        {
            cell_color_ = color_;
            std::sort(cell_color_.begin(), cell_color_.end());
            cur_.assign(1 + static_cast<std::size_t>(n_ * (n_ - 1) / 2), '\0');
            cur_[0] = static_cast<char>(n_);
        }

        void run() { dfs(0, false); }

        const std::string& best() const { return best_; }
        const std::vector<std::vector<int>>& labelings() const { return labelings_; }

    private:
        void dfs(int level, bool equal)
        {
            if (level == n_) {
                if (!have_best_ || !equal) {
                    best_ = cur_;
                    have_best_ = true;
                    ++updates_;
                    labelings_.clear();
                }
                if (collect_)
                    labelings_.push_back(perm_);
                return;
            }
            const std::size_t offset = 1 + static_cast<std::size_t>(level * (level - 1) / 2);
            for (int v = 0; v < n_; ++v) {
                if (used_.contains(v) || color_[static_cast<std::size_t>(v)] != cell_color_[static_cast<std::size_t>(level)])
                    continue;
                for (int j = 0; j < level; ++j)
                    cur_[offset + static_cast<std::size_t>(j)]
                        = static_cast<char>(g_.multiplicity(v, perm_[static_cast<std::size_t>(j)]));
                bool still_equal = equal && have_best_;
                if (still_equal) {
                    const int cmp = cur_.compare(offset, static_cast<std::size_t>(level), best_, offset,
                        static_cast<std::size_t>(level));
                    if (cmp > 0)
                        continue;
                    if (cmp < 0)
                        still_equal = false;
                }
                perm_[static_cast<std::size_t>(level)] = v;
                used_.insert(v);
                const long before = updates_;
                dfs(level + 1, still_equal);
                used_.erase(v);
                if (updates_ != before)
                    equal = true;
            }
        }

        const Multigraph& g_;
        int n_;
        std::vector<int> color_;
        std::vector<int> cell_color_;
        std::vector<int> perm_;
        VertexSet used_;
        std::string cur_;
        std::string best_;
        bool have_best_ = false;
        bool collect_;
        long updates_ = 0;
        std::vector<std::vector<int>> labelings_;
    };

    void check_cap(const Multigraph& g, int cap)
    {
        if (g.order() > cap)
            throw Error(ErrorKind::InstanceTooLarge,
                "canonical form over n = " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
        for (const auto& e : g.edges())
            if (e.mult > 255)
                throw Error(ErrorKind::InstanceTooLarge, "multiplicity above 255 cannot be keyed");
    }

} // namespace

CanonicalForm canonical_form(const Multigraph& g, int cap)
{
    check_cap(g, cap);
    CanonicalSearch search(g, false);
    search.run();
    return CanonicalForm {search.best()};
}

Multigraph from_canonical(const CanonicalForm& form)
{
    if (form.key.empty())
        throw Error(ErrorKind::BadParameter, "empty canonical key");
    const int n = static_cast<unsigned char>(form.key[0]);
    if (form.key.size() != 1 + static_cast<std::size_t>(n * (n - 1) / 2))
        throw Error(ErrorKind::BadParameter, "canonical key length does not match its vertex count");
    std::vector<EdgeSpec> edges;
    std::size_t pos = 1;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j, ++pos)
            if (int m = static_cast<unsigned char>(form.key[pos]); m > 0)
                edges.push_back({j, i, m});
    return Multigraph::build(n, edges);
}

std::vector<std::vector<int>> automorphisms(const Multigraph& g, int cap)
{
    check_cap(g, cap);
    CanonicalSearch search(g, true);
    search.run();
    const auto& labelings = search.labelings();
    std::vector<std::vector<int>> out;
    if (labelings.empty())
        return out;
    const auto& base = labelings.front();
    for (const auto& lab : labelings) {
        std::vector<int> p(static_cast<std::size_t>(g.order()));
        for (std::size_t i = 0; i < lab.size(); ++i)
            p[static_cast<std::size_t>(base[i])] = lab[i];
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace steffenlab
