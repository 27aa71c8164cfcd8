#pragma once

#include <bellgraph/vertex_set.hh>

#include <span>
#include <utility>
#include <vector>

#ifndef BELLGRAPH_MAX_VERTICES
#define BELLGRAPH_MAX_VERTICES 512
#endif

namespace bellgraph
{
    inline constexpr int max_vertices = BELLGRAPH_MAX_VERTICES;

    using Edge = std::pair<int, int>;

    /// Loop-free undirected graph on vertices 0..n-1, one bitset row per
    /// vertex. Rows are kept symmetric with an empty diagonal.
    class SimpleGraph
    {
    public:
        SimpleGraph() = default;
        explicit SimpleGraph(int n);

        static auto from_edges(int n, std::span<const Edge> edges) -> SimpleGraph;

        auto order() const -> int { return static_cast<int>(_rows.size()); }
        auto edge_count() const -> int;

        auto adjacent(int u, int v) const -> bool { return _rows[static_cast<std::size_t>(u)].contains(v); }
        auto degree(int v) const -> int { return _rows[static_cast<std::size_t>(v)].count(); }
        auto neighbourhood(int v) const -> const VertexSet & { return _rows[static_cast<std::size_t>(v)]; }

        void add_edge(int u, int v);
        void remove_edge(int u, int v);
        void toggle_edge(int u, int v);
        void set_adjacent(int u, int v, bool present);

        /// Edges as (u, v) with u < v, in lexicographic order.
        auto edges() const -> std::vector<Edge>;
        auto all_vertices() const -> VertexSet { return VertexSet::full(order()); }

        friend auto operator==(const SimpleGraph &, const SimpleGraph &) -> bool = default;

    private:
        void check_pair(int u, int v) const;

        std::vector<VertexSet> _rows;
    };

    auto complement(const SimpleGraph & g) -> SimpleGraph;

    /// Toggles every pair with one end in w1 and the other in w2.
    auto bipartite_complement(const SimpleGraph & g, const VertexSet & w1, const VertexSet & w2) -> SimpleGraph;

    /// G[s], relabelled in increasing order of the original labels.
    auto induced_subgraph(const SimpleGraph & g, const VertexSet & s) -> SimpleGraph;
    auto induced_subgraph(const SimpleGraph & g, std::span<const int> s) -> SimpleGraph;

    /// g1 on 0..n1-1 followed by g2 on n1..n1+n2-1.
    auto disjoint_union(const SimpleGraph & g1, const SimpleGraph & g2) -> SimpleGraph;

    auto edgeless_graph(int n) -> SimpleGraph;
    auto path_graph(int n) -> SimpleGraph;
    auto cycle_graph(int n) -> SimpleGraph;
    auto complete_graph(int n) -> SimpleGraph;
    auto complete_bipartite_graph(int a, int b) -> SimpleGraph;

    /// Connected components, each as sorted vertex list, ordered by smallest vertex.
    auto connected_components(const SimpleGraph & g) -> std::vector<std::vector<int>>;
}
