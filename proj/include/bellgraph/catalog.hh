#pragma once

#include <bellgraph/graph.hh>

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace bellgraph
{
    /// The thirteen minimal classes with infinite distinguishing number.
    /// Enumerators are in lexicographic order of their names.
    enum class MinimalClassId
    {
        K1, K2, K3, K4, K5, K6, K7,
        coK1, coK2, coK3, coK4, coK5, coK6
    };

    inline constexpr std::array<MinimalClassId, 13> all_minimal_classes = {
        MinimalClassId::K1, MinimalClassId::K2, MinimalClassId::K3, MinimalClassId::K4,
        MinimalClassId::K5, MinimalClassId::K6, MinimalClassId::K7,
        MinimalClassId::coK1, MinimalClassId::coK2, MinimalClassId::coK3,
        MinimalClassId::coK4, MinimalClassId::coK5, MinimalClassId::coK6,
    };

    auto to_string_view(MinimalClassId id) -> std::string_view;
    auto parse_class_id(std::string_view name) -> std::optional<MinimalClassId>;

    /// Named small graphs: P_n, C_n, K_n, K_{a,b}, claw, F_3 (3-fan),
    /// K_4^- (diamond), H_6, and sums with multiplicities such as 2K_2 or
    /// C_4+2K_1. Underscores and braces are optional ("P4", "K1,3").
    /// Throws std::invalid_argument for anything else.
    auto small_graph(std::string_view name) -> SimpleGraph;

    struct ClassSpec
    {
        MinimalClassId id;
        std::vector<SimpleGraph> forbidden;
    };

    auto class_spec(MinimalClassId id) -> const ClassSpec &;

    auto member_by_free(MinimalClassId id, const SimpleGraph & g) -> bool;

    inline constexpr int structural_order_cap = 12;

    /// Membership straight from the structural definition, by exhaustive
    /// search over vertex bipartitions. Orders above structural_order_cap
    /// throw.
    auto member_structural(MinimalClassId id, const SimpleGraph & g) -> bool;
}
