#pragma once

#include <bellgraph/vertex_set.hh>

#include <string>
#include <string_view>
#include <vector>

namespace bellgraph
{
    /// Ordered list of disjoint nonempty bags covering {0..order-1}. Bag
    /// members are kept sorted; bag order is significant (bag i is letter
    /// i+1 of a density graph).
    class Partition
    {
    public:
        Partition() = default;
        Partition(int order, std::vector<std::vector<int>> bags);

        auto order() const -> int { return _order; }
        auto bag_count() const -> int { return static_cast<int>(_bags.size()); }
        auto bags() const -> const std::vector<std::vector<int>> & { return _bags; }
        auto bag(int i) const -> const std::vector<int> & { return _bags[static_cast<std::size_t>(i)]; }
        auto bag_set(int i) const -> const VertexSet & { return _sets[static_cast<std::size_t>(i)]; }
        auto bag_of(int v) const -> int { return _owner[static_cast<std::size_t>(v)]; }
        auto smallest_bag() const -> int;

        /// Same bags, ordered by smallest member.
        auto normalised() const -> Partition;

        friend auto operator==(const Partition & a, const Partition & b) -> bool { return a._order == b._order && a._bags == b._bags; }

    private:
        int _order = 0;
        std::vector<std::vector<int>> _bags;
        std::vector<VertexSet> _sets;
        std::vector<int> _owner;
    };

    /// {"bags": [[...], ...]}
    auto parse_partition_json(std::string_view text, int order) -> Partition;
    auto to_partition_json(const Partition & p) -> std::string;
}
