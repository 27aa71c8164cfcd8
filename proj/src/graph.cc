#include <bellgraph/graph.hh>

#include <algorithm>
#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::to_string;
using std::vector;

namespace bellgraph
{
    SimpleGraph::SimpleGraph(int n)
    {
        if (n < 0)
            throw invalid_argument("negative vertex count");
        if (n > max_vertices)
            throw invalid_argument("graph order " + to_string(n) + " exceeds the cap of " + to_string(max_vertices));
        _rows.assign(static_cast<std::size_t>(n), VertexSet(n));
    }

    auto SimpleGraph::from_edges(int n, std::span<const Edge> edges) -> SimpleGraph
    {
        SimpleGraph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    void SimpleGraph::check_pair(int u, int v) const
    {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw invalid_argument("vertex pair (" + to_string(u) + ", " + to_string(v) + ") out of range for order " + to_string(order()));
        if (u == v)
            throw invalid_argument("loop at vertex " + to_string(u) + " in a simple graph");
    }

    auto SimpleGraph::edge_count() const -> int
    {
        int total = 0;
        for (auto & r : _rows)
            total += r.count();
        return total / 2;
    }

    void SimpleGraph::add_edge(int u, int v)
    {
        check_pair(u, v);
        _rows[static_cast<std::size_t>(u)].insert(v);
        _rows[static_cast<std::size_t>(v)].insert(u);
    }

    void SimpleGraph::remove_edge(int u, int v)
    {
        check_pair(u, v);
        _rows[static_cast<std::size_t>(u)].erase(v);
        _rows[static_cast<std::size_t>(v)].erase(u);
    }

    void SimpleGraph::toggle_edge(int u, int v)
    {
        check_pair(u, v);
        _rows[static_cast<std::size_t>(u)].toggle(v);
        _rows[static_cast<std::size_t>(v)].toggle(u);
    }

    void SimpleGraph::set_adjacent(int u, int v, bool present)
    {
        if (present)
            add_edge(u, v);
        else
            remove_edge(u, v);
    }

    auto SimpleGraph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0; u < order(); ++u)
            _rows[static_cast<std::size_t>(u)].for_each([&](int v) {
                if (u < v)
                    result.emplace_back(u, v);
            });
        return result;
    }

    auto complement(const SimpleGraph & g) -> SimpleGraph
    {
        SimpleGraph result(g.order());
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v))
                    result.add_edge(u, v);
        return result;
    }

    auto bipartite_complement(const SimpleGraph & g, const VertexSet & w1, const VertexSet & w2) -> SimpleGraph
    {
        if (w1.universe() != g.order() || w2.universe() != g.order())
            throw invalid_argument("vertex set does not index this graph");
        if (w1.intersects(w2))
            throw invalid_argument("bipartite complement sides overlap");

        SimpleGraph result = g;
        w1.for_each([&](int u) {
            w2.for_each([&](int v) { result.toggle_edge(u, v); });
        });
        return result;
    }

    auto induced_subgraph(const SimpleGraph & g, const VertexSet & s) -> SimpleGraph
    {
        if (s.universe() != g.order())
            throw invalid_argument("vertex set does not index this graph");
        auto members = s.members();
        SimpleGraph result(static_cast<int>(members.size()));
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (g.adjacent(members[i], members[j]))
                    result.add_edge(static_cast<int>(i), static_cast<int>(j));
        return result;
    }

    auto induced_subgraph(const SimpleGraph & g, std::span<const int> s) -> SimpleGraph
    {
        VertexSet set(g.order());
        for (int v : s) {
            if (v < 0 || v >= g.order())
                throw invalid_argument("vertex " + to_string(v) + " out of range for order " + to_string(g.order()));
            if (set.contains(v))
                throw invalid_argument("vertex " + to_string(v) + " repeated in induced subgraph selection");
            set.insert(v);
        }
        return induced_subgraph(g, set);
    }

    auto disjoint_union(const SimpleGraph & g1, const SimpleGraph & g2) -> SimpleGraph
    {
        int offset = g1.order();
        SimpleGraph result(g1.order() + g2.order());
        for (auto [u, v] : g1.edges())
            result.add_edge(u, v);
        for (auto [u, v] : g2.edges())
            result.add_edge(u + offset, v + offset);
        return result;
    }

    auto edgeless_graph(int n) -> SimpleGraph
    {
        return SimpleGraph(n);
    }

    auto path_graph(int n) -> SimpleGraph
    {
        SimpleGraph g(n);
        for (int i = 0; i + 1 < n; ++i)
            g.add_edge(i, i + 1);
        return g;
    }

    auto cycle_graph(int n) -> SimpleGraph
    {
        if (n < 3)
            throw invalid_argument("a cycle needs at least 3 vertices");
        SimpleGraph g = path_graph(n);
        g.add_edge(n - 1, 0);
        return g;
    }

    auto complete_graph(int n) -> SimpleGraph
    {
        return complement(SimpleGraph(n));
    }

    auto complete_bipartite_graph(int a, int b) -> SimpleGraph
    {
        if (a < 0 || b < 0)
            throw invalid_argument("negative side in complete bipartite graph");
        SimpleGraph g(a + b);
        for (int u = 0; u < a; ++u)
            for (int v = a; v < a + b; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto connected_components(const SimpleGraph & g) -> vector<vector<int>>
    {
        vector<vector<int>> result;
        VertexSet seen(g.order());
        for (int start = 0; start < g.order(); ++start) {
            if (seen.contains(start))
                continue;
            vector<int> component{start};
            seen.insert(start);
            for (std::size_t i = 0; i < component.size(); ++i)
                g.neighbourhood(component[i]).for_each([&](int v) {
                    if (! seen.contains(v)) {
                        seen.insert(v);
                        component.push_back(v);
                    }
                });
            std::sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }
}
