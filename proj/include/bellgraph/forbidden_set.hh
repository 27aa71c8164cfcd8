#pragma once

#include <bellgraph/graph.hh>

#include <vector>

namespace bellgraph
{
    /// Nonempty list of forbidden induced subgraphs F_1..F_n, each with at
    /// least one vertex. Copies of an earlier graph up to isomorphism are
    /// dropped; the rest are kept ordered by vertex count, ties in input
    /// order.
    class ForbiddenSet
    {
    public:
        explicit ForbiddenSet(std::vector<SimpleGraph> graphs);

        auto graphs() const -> const std::vector<SimpleGraph> & { return _graphs; }
        auto size() const -> int { return static_cast<int>(_graphs.size()); }
        auto operator[](int i) const -> const SimpleGraph & { return _graphs[static_cast<std::size_t>(i)]; }

        /// m = max |F_i|.
        auto max_order() const -> int;

    private:
        std::vector<SimpleGraph> _graphs;
    };
}
