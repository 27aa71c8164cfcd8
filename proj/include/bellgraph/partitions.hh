#pragma once

#include <bellgraph/density_graph.hh>
#include <bellgraph/graph.hh>
#include <bellgraph/partition.hh>

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace bellgraph
{
    enum class PairClass
    {
        Sparse,
        Dense,
        Both,
        Neither
    };

    auto to_string_view(PairClass c) -> std::string_view;

    /// Max over x in u of |N(x) & w| and over y in w of |N(y) & u|. u and w
    /// must be disjoint or equal; for u == w this is the max degree of g[u].
    auto delta(const SimpleGraph & g, const VertexSet & u, const VertexSet & w) -> int;

    /// delta taken over non-neighbours, never counting a vertex as its own
    /// non-neighbour.
    auto codelta(const SimpleGraph & g, const VertexSet & u, const VertexSet & w) -> int;

    auto classify_pair(const SimpleGraph & g, const VertexSet & u, const VertexSet & w, int d) -> PairClass;

    /// At most ell bags and every (not necessarily distinct) pair of bags
    /// d-sparse or d-dense.
    auto verify_ld_partition(const SimpleGraph & g, const Partition & pi, int ell, int d) -> bool;

    /// 5 * 2^ell * d, saturating.
    auto strong_threshold(int ell, int d) -> std::uint64_t;

    /// Requires verify_ld_partition; true iff every bag reaches strong_threshold.
    auto is_strong(const SimpleGraph & g, const Partition & pi, int ell, int d) -> bool;

    /// Quotient by ~: two bags merge when every bag is d-dense to both or
    /// d-sparse to both (a Both pair counts as either, a Neither pair as
    /// neither). The relation is closed transitively. Bags are ordered by
    /// smallest vertex.
    auto prime_partition(const SimpleGraph & g, const Partition & pi, int d) -> Partition;

    /// Edge ij iff (V_i, V_j) is d-dense, loop at i iff V_i is d-dense to
    /// itself. A pair that is both sparse and dense is recorded as sparse.
    auto density_graph(const SimpleGraph & g, const Partition & pi, int d) -> DensityGraph;

    /// psi(g, pi, h): toggles cross pairs along edges of h and complements
    /// bags carrying a loop.
    auto transform(const SimpleGraph & g, const Partition & pi, const DensityGraph & h) -> SimpleGraph;

    /// phi(g, pi) for a strong (ell, d)-partition.
    auto sparsify(const SimpleGraph & g, const Partition & pi, int ell, int d) -> SimpleGraph;

    /// |N(x) symmetric-difference N(y)|.
    auto neighbourhood_difference(const SimpleGraph & g, int x, int y) -> int;

    inline constexpr int partition_enumeration_cap = 14;

    /// Calls fn(assignment) for every partition of {0..order-1} into at
    /// most ell bags, where assignment[v] is the bag of v as a restricted
    /// growth string (so bags come ordered by smallest vertex). Orders above
    /// partition_enumeration_cap are rejected.
    void for_each_partition(int order, int ell, const std::function<void(const std::vector<int> &)> & fn);

    auto partition_from_assignment(const std::vector<int> & assignment) -> Partition;

    /// Every strong (ell, d)-partition of g, in restricted-growth order.
    auto strong_partitions(const SimpleGraph & g, int ell, int d) -> std::vector<Partition>;
}
