#include <bellgraph/matcher.hh>

#include <algorithm>
#include <bit>
#include <stdexcept>

using std::optional;
using std::span;
using std::vector;

namespace bellgraph
{
    namespace
    {
        // Connectivity-aware placement order: each next vertex has the most
        // already-placed neighbours, ties broken by degree then label.
        auto placement_order(const SimpleGraph & pattern, int first) -> vector<int>
        {
            int n = pattern.order();
            vector<int> order;
            vector<int> placed_neighbours(static_cast<std::size_t>(n), 0);
            vector<bool> placed(static_cast<std::size_t>(n), false);

            auto place = [&](int v) {
                order.push_back(v);
                placed[static_cast<std::size_t>(v)] = true;
                pattern.neighbourhood(v).for_each([&](int u) { ++placed_neighbours[static_cast<std::size_t>(u)]; });
            };

            if (first >= 0)
                place(first);
            while (static_cast<int>(order.size()) < n) {
                int best = -1;
                for (int v = 0; v < n; ++v) {
                    if (placed[static_cast<std::size_t>(v)])
                        continue;
                    if (best == -1
                        || placed_neighbours[static_cast<std::size_t>(v)] > placed_neighbours[static_cast<std::size_t>(best)]
                        || (placed_neighbours[static_cast<std::size_t>(v)] == placed_neighbours[static_cast<std::size_t>(best)]
                            && pattern.degree(v) > pattern.degree(best)))
                        best = v;
                }
                place(best);
            }
            return order;
        }

        struct Search
        {
            const SimpleGraph & host;
            const SimpleGraph & pattern;
            vector<int> order;
            vector<VertexSet> allowed;
            vector<VertexSet> candidates;
            Embedding mapping;
            VertexSet used;

            Search(const SimpleGraph & h, const SimpleGraph & p, int first, int through) :
                host(h),
                pattern(p),
                order(placement_order(p, first)),
                candidates(static_cast<std::size_t>(p.order()), VertexSet(h.order())),
                mapping(static_cast<std::size_t>(p.order()), -1),
                used(h.order())
            {
                int hn = host.order(), pn = pattern.order();
                allowed.reserve(static_cast<std::size_t>(pn));
                for (int v = 0; v < pn; ++v) {
                    int deg = pattern.degree(v), codeg = pn - 1 - deg;
                    VertexSet ok(hn);
                    for (int x = 0; x < hn; ++x) {
                        int hdeg = host.degree(x);
                        if (hdeg >= deg && hn - 1 - hdeg >= codeg)
                            ok.insert(x);
                    }
                    allowed.push_back(std::move(ok));
                }
                if (first >= 0) {
                    bool keep = allowed[static_cast<std::size_t>(first)].contains(through);
                    allowed[static_cast<std::size_t>(first)] = VertexSet(hn);
                    if (keep)
                        allowed[static_cast<std::size_t>(first)].insert(through);
                }
            }

            auto run(std::size_t depth) -> bool
            {
                if (depth == order.size())
                    return true;

                int p = order[depth];
                VertexSet & cand = candidates[depth];
                cand = allowed[static_cast<std::size_t>(p)];
                cand.subtract(used);
                for (std::size_t i = 0; i < depth; ++i) {
                    int q = order[i];
                    const auto & row = host.neighbourhood(mapping[static_cast<std::size_t>(q)]);
                    if (pattern.adjacent(p, q))
                        cand &= row;
                    else
                        cand.subtract(row);
                }

                auto words = cand.words();
                for (std::size_t w = 0; w < words.size(); ++w) {
                    auto word = words[w];
                    while (word) {
                        int v = static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                        word &= word - 1;
                        mapping[static_cast<std::size_t>(p)] = v;
                        used.insert(v);
                        if (run(depth + 1))
                            return true;
                        used.erase(v);
                    }
                }
                mapping[static_cast<std::size_t>(p)] = -1;
                return false;
            }
        };
    }

    auto contains_induced(const SimpleGraph & host, const SimpleGraph & pattern) -> optional<Embedding>
    {
        if (pattern.order() > host.order())
            return std::nullopt;
        if (pattern.order() == 0)
            return Embedding{};
        Search search(host, pattern, -1, -1);
        if (search.run(0))
            return search.mapping;
        return std::nullopt;
    }

    auto contains_induced_through(const SimpleGraph & host, const SimpleGraph & pattern, int through) -> optional<Embedding>
    {
        if (through < 0 || through >= host.order())
            throw std::invalid_argument("anchor vertex out of range");
        if (pattern.order() > host.order() || pattern.order() == 0)
            return std::nullopt;
        for (int first = 0; first < pattern.order(); ++first) {
            Search search(host, pattern, first, through);
            if (search.run(0))
                return search.mapping;
        }
        return std::nullopt;
    }

    auto is_free(const SimpleGraph & g, span<const SimpleGraph> forbidden) -> bool
    {
        return std::none_of(forbidden.begin(), forbidden.end(),
            [&](const SimpleGraph & f) { return contains_induced(g, f).has_value(); });
    }

    auto are_isomorphic(const SimpleGraph & g1, const SimpleGraph & g2) -> bool
    {
        if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count())
            return false;
        vector<int> d1, d2;
        for (int v = 0; v < g1.order(); ++v) {
            d1.push_back(g1.degree(v));
            d2.push_back(g2.degree(v));
        }
        std::sort(d1.begin(), d1.end());
        std::sort(d2.begin(), d2.end());
        if (d1 != d2)
            return false;
        return contains_induced(g2, g1).has_value();
    }

    auto is_induced_embedding(const SimpleGraph & host, const SimpleGraph & pattern, span<const int> embedding) -> bool
    {
        if (static_cast<int>(embedding.size()) != pattern.order())
            return false;
        VertexSet seen(host.order());
        for (int v : embedding) {
            if (v < 0 || v >= host.order() || seen.contains(v))
                return false;
            seen.insert(v);
        }
        for (int u = 0; u < pattern.order(); ++u)
            for (int v = u + 1; v < pattern.order(); ++v)
                if (pattern.adjacent(u, v) != host.adjacent(embedding[static_cast<std::size_t>(u)], embedding[static_cast<std::size_t>(v)]))
                    return false;
        return true;
    }
}
