#include <bellgraph/partitions.hh>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::to_string;
using std::vector;

namespace bellgraph
{
    auto to_string_view(PairClass c) -> std::string_view
    {
        switch (c) {
        case PairClass::Sparse: return "Sparse";
        case PairClass::Dense: return "Dense";
        case PairClass::Both: return "Both";
        case PairClass::Neither: return "Neither";
        }
        return "?";
    }

    namespace
    {
        void check_sets(const SimpleGraph & g, const VertexSet & u, const VertexSet & w)
        {
            if (u.universe() != g.order() || w.universe() != g.order())
                throw invalid_argument("vertex set does not index this graph");
            if (u != w && u.intersects(w))
                throw invalid_argument("delta needs disjoint or identical vertex sets");
        }

        void check_partition(const SimpleGraph & g, const Partition & pi)
        {
            if (pi.order() != g.order())
                throw invalid_argument("partition of " + to_string(pi.order()) + " vertices used with a graph of order " + to_string(g.order()));
        }

        // max over x in from of |N(x) & to|, or of the non-neighbour count when
        // counting_non_neighbours is set.
        auto one_sided(const SimpleGraph & g, const VertexSet & from, const VertexSet & to, bool counting_non_neighbours) -> int
        {
            int best = 0;
            int to_size = to.count();
            from.for_each([&](int x) {
                int hits = g.neighbourhood(x).intersection_count(to);
                if (counting_non_neighbours)
                    hits = to_size - hits - (to.contains(x) ? 1 : 0);
                best = std::max(best, hits);
            });
            return best;
        }
    }

    auto delta(const SimpleGraph & g, const VertexSet & u, const VertexSet & w) -> int
    {
        check_sets(g, u, w);
        return std::max(one_sided(g, u, w, false), one_sided(g, w, u, false));
    }

    auto codelta(const SimpleGraph & g, const VertexSet & u, const VertexSet & w) -> int
    {
        check_sets(g, u, w);
        return std::max(one_sided(g, u, w, true), one_sided(g, w, u, true));
    }

    auto classify_pair(const SimpleGraph & g, const VertexSet & u, const VertexSet & w, int d) -> PairClass
    {
        if (d < 0)
            throw invalid_argument("d must be non-negative");
        bool sparse = delta(g, u, w) <= d;
        bool dense = codelta(g, u, w) <= d;
        if (sparse && dense)
            return PairClass::Both;
        if (sparse)
            return PairClass::Sparse;
        if (dense)
            return PairClass::Dense;
        return PairClass::Neither;
    }

    auto verify_ld_partition(const SimpleGraph & g, const Partition & pi, int ell, int d) -> bool
    {
        check_partition(g, pi);
        if (pi.bag_count() > ell)
            return false;
        for (int i = 0; i < pi.bag_count(); ++i)
            for (int j = i; j < pi.bag_count(); ++j)
                if (classify_pair(g, pi.bag_set(i), pi.bag_set(j), d) == PairClass::Neither)
                    return false;
        return true;
    }

    auto strong_threshold(int ell, int d) -> std::uint64_t
    {
        if (ell < 0 || d < 0)
            throw invalid_argument("ell and d must be non-negative");
        if (d == 0)
            return 0;
        if (ell >= 58)
            return std::numeric_limits<std::uint64_t>::max();
        auto base = std::uint64_t{5} << ell;
        if (base > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d))
            return std::numeric_limits<std::uint64_t>::max();
        return base * static_cast<std::uint64_t>(d);
    }

    auto is_strong(const SimpleGraph & g, const Partition & pi, int ell, int d) -> bool
    {
        if (! verify_ld_partition(g, pi, ell, d))
            throw invalid_argument("is_strong needs a valid (" + to_string(ell) + ", " + to_string(d) + ")-partition");
        auto threshold = strong_threshold(ell, d);
        for (auto & bag : pi.bags())
            if (bag.size() < threshold)
                return false;
        return true;
    }

    auto prime_partition(const SimpleGraph & g, const Partition & pi, int d) -> Partition
    {
        check_partition(g, pi);
        int k = pi.bag_count();

        // profile[i][t] is the class of (V_t, V_i)
        vector<vector<PairClass>> profile(static_cast<std::size_t>(k), vector<PairClass>(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int t = 0; t < k; ++t)
                profile[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] = classify_pair(g, pi.bag_set(t), pi.bag_set(i), d);

        auto dense = [](PairClass c) { return c == PairClass::Dense || c == PairClass::Both; };
        auto sparse = [](PairClass c) { return c == PairClass::Sparse || c == PairClass::Both; };
        auto agree = [&](PairClass a, PairClass b) { return (dense(a) && dense(b)) || (sparse(a) && sparse(b)); };

        vector<int> parent(static_cast<std::size_t>(k));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x)
                x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };

        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                bool same = true;
                for (int t = 0; t < k && same; ++t)
                    same = agree(profile[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)], profile[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]);
                if (same)
                    parent[static_cast<std::size_t>(find(j))] = find(i);
            }

        vector<vector<int>> merged(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            auto & target = merged[static_cast<std::size_t>(find(i))];
            target.insert(target.end(), pi.bag(i).begin(), pi.bag(i).end());
        }
        std::erase_if(merged, [](const vector<int> & b) { return b.empty(); });
        return Partition(pi.order(), std::move(merged)).normalised();
    }

    auto density_graph(const SimpleGraph & g, const Partition & pi, int d) -> DensityGraph
    {
        check_partition(g, pi);
        DensityGraph h(pi.bag_count());
        for (int i = 0; i < pi.bag_count(); ++i)
            for (int j = i; j < pi.bag_count(); ++j) {
                auto c = classify_pair(g, pi.bag_set(i), pi.bag_set(j), d);
                if (c == PairClass::Neither)
                    throw invalid_argument("bags " + to_string(i) + " and " + to_string(j) + " are neither " + to_string(d) + "-sparse nor " + to_string(d) + "-dense");
                if (c == PairClass::Dense)
                    h.add_edge(i + 1, j + 1);
            }
        return h;
    }

    auto transform(const SimpleGraph & g, const Partition & pi, const DensityGraph & h) -> SimpleGraph
    {
        check_partition(g, pi);
        if (pi.bag_count() != h.ell())
            throw invalid_argument("partition has " + to_string(pi.bag_count()) + " bags but the density graph has " + to_string(h.ell()) + " vertices");

        SimpleGraph result = g;
        for (int i = 0; i < pi.bag_count(); ++i)
            for (int j = i; j < pi.bag_count(); ++j) {
                if (! h.adjacent(i + 1, j + 1))
                    continue;
                auto & a = pi.bag(i);
                auto & b = pi.bag(j);
                if (i == j) {
                    for (std::size_t x = 0; x < a.size(); ++x)
                        for (std::size_t y = x + 1; y < a.size(); ++y)
                            result.toggle_edge(a[x], a[y]);
                }
                else {
                    for (int x : a)
                        for (int y : b)
                            result.toggle_edge(x, y);
                }
            }
        return result;
    }

    auto sparsify(const SimpleGraph & g, const Partition & pi, int ell, int d) -> SimpleGraph
    {
        if (! is_strong(g, pi, ell, d))
            throw invalid_argument("sparsify needs a strong (" + to_string(ell) + ", " + to_string(d) + ")-partition");
        return transform(g, pi, density_graph(g, pi, d));
    }

    auto neighbourhood_difference(const SimpleGraph & g, int x, int y) -> int
    {
        return (g.neighbourhood(x) ^ g.neighbourhood(y)).count();
    }

    void for_each_partition(int order, int ell, const std::function<void(const vector<int> &)> & fn)
    {
        if (order < 0 || order > partition_enumeration_cap)
            throw invalid_argument("partition enumeration is limited to " + to_string(partition_enumeration_cap) + " vertices");
        if (order == 0) {
            fn({});
            return;
        }
        if (ell < 1)
            return;

        vector<int> assignment(static_cast<std::size_t>(order), 0);
        // used[v] = number of bags among vertices 0..v
        vector<int> used(static_cast<std::size_t>(order), 1);
        auto rec = [&](auto & self, int v) -> void {
            if (v == order) {
                fn(assignment);
                return;
            }
            int available = used[static_cast<std::size_t>(v - 1)];
            for (int b = 0; b <= available && b < ell; ++b) {
                assignment[static_cast<std::size_t>(v)] = b;
                used[static_cast<std::size_t>(v)] = std::max(available, b + 1);
                self(self, v + 1);
            }
        };
        rec(rec, 1);
    }

    auto partition_from_assignment(const vector<int> & assignment) -> Partition
    {
        int bags = 0;
        for (int b : assignment)
            bags = std::max(bags, b + 1);
        vector<vector<int>> members(static_cast<std::size_t>(bags));
        for (std::size_t v = 0; v < assignment.size(); ++v)
            members[static_cast<std::size_t>(assignment[v])].push_back(static_cast<int>(v));
        return Partition(static_cast<int>(assignment.size()), std::move(members));
    }

    auto strong_partitions(const SimpleGraph & g, int ell, int d) -> vector<Partition>
    {
        int n = g.order();
        if (n > partition_enumeration_cap)
            throw invalid_argument("partition enumeration is limited to " + to_string(partition_enumeration_cap) + " vertices");
        vector<Partition> result;
        if (n == 0) {
            result.push_back(partition_from_assignment({}));
            return result;
        }
        if (ell < 1)
            return result;

        auto threshold = strong_threshold(ell, d);
        vector<int> assignment(static_cast<std::size_t>(n), 0);
        vector<VertexSet> sets(static_cast<std::size_t>(ell), VertexSet(n));

        // delta and codelta only grow as bags grow, so a Neither pair
        // among the first v vertices rules out every completion
        auto consistent = [&](int b, int k) {
            for (int c = 0; c < k; ++c)
                if (classify_pair(g, sets[static_cast<std::size_t>(b)], sets[static_cast<std::size_t>(c)], d) == PairClass::Neither)
                    return false;
            return true;
        };

        auto rec = [&](auto & self, int v, int k) -> void {
            if (v == n) {
                for (int b = 0; b < k; ++b)
                    if (static_cast<std::uint64_t>(sets[static_cast<std::size_t>(b)].count()) < threshold)
                        return;
                result.push_back(partition_from_assignment(assignment));
                return;
            }
            for (int b = 0; b <= k && b < ell; ++b) {
                assignment[static_cast<std::size_t>(v)] = b;
                auto & bag = sets[static_cast<std::size_t>(b)];
                bag.insert(v);
                int next = std::max(k, b + 1);
                if (consistent(b, next))
                    self(self, v + 1, next);
                bag.erase(v);
            }
        };
        rec(rec, 0, 0);
        return result;
    }
}
