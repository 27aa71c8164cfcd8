#pragma once

#include <bellgraph/graph.hh>

#include <cstdint>
#include <vector>

namespace bellgraph
{
    /// Upper-triangle adjacency bits (graph6 pair order) under the labelling
    /// that minimises them among all labellings listing vertices by
    /// non-decreasing degree. Two graphs of equal order are isomorphic iff
    /// their codes are equal.
    using CanonicalCode = std::uint64_t;

    inline constexpr int canonical_order_cap = 11;

    auto canonical_code(const SimpleGraph & g) -> CanonicalCode;
    auto graph_from_code(int n, CanonicalCode code) -> SimpleGraph;

    /// One representative per isomorphism class on exactly n vertices,
    /// generated by one-vertex extension, ordered by canonical code.
    auto graphs_of_order(int n) -> std::vector<SimpleGraph>;
}
