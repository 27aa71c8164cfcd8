#pragma once

#include <bellgraph/graph.hh>

#include <optional>
#include <span>
#include <vector>

namespace bellgraph
{
    /// embedding[p] is the host vertex that pattern vertex p maps to.
    using Embedding = std::vector<int>;

    /// Exact induced-subgraph search: returns an injective map m with
    /// uv in E(pattern) <=> m(u)m(v) in E(host), or nullopt if none exists.
    auto contains_induced(const SimpleGraph & host, const SimpleGraph & pattern) -> std::optional<Embedding>;

    /// As contains_induced, restricted to embeddings whose image contains
    /// the host vertex `through`.
    auto contains_induced_through(const SimpleGraph & host, const SimpleGraph & pattern, int through)
        -> std::optional<Embedding>;

    /// True iff the host has no induced copy of any forbidden graph.
    auto is_free(const SimpleGraph & g, std::span<const SimpleGraph> forbidden) -> bool;

    auto are_isomorphic(const SimpleGraph & g1, const SimpleGraph & g2) -> bool;

    /// Checks a claimed embedding directly against both adjacency relations.
    auto is_induced_embedding(const SimpleGraph & host, const SimpleGraph & pattern, std::span<const int> embedding) -> bool;
}
