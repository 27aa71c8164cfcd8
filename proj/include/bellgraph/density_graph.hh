#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bellgraph
{
    /// Largest alphabet whose density graphs fit a 64-bit code.
    inline constexpr int density_code_cap = 10;

    /// Undirected graph with loops on the letters 1..ell.
    class DensityGraph
    {
    public:
        DensityGraph() = default;
        explicit DensityGraph(int ell);

        /// Bit k of the code is the k-th pair (a, b), a <= b, in the order
        /// (1,1), (1,2), ..., (1,ell), (2,2), ...
        static auto from_code(int ell, std::uint64_t code) -> DensityGraph;

        auto ell() const -> int { return _ell; }
        auto adjacent(int a, int b) const -> bool;
        auto has_loop(int a) const -> bool { return adjacent(a, a); }
        void add_edge(int a, int b);
        void set_adjacent(int a, int b, bool present);

        auto code() const -> std::uint64_t;

        /// result(a, b) = (*this)(map[a-1], map[b-1]).
        auto relabelled(std::span<const int> map) const -> DensityGraph;

        /// Induced on the given letters; letters[i] becomes i+1.
        auto restricted(std::span<const int> letters) const -> DensityGraph;

        /// Pairs (a, b) with a <= b, lexicographic.
        auto edges() const -> std::vector<std::pair<int, int>>;

        friend auto operator==(const DensityGraph &, const DensityGraph &) -> bool = default;

    private:
        auto index(int a, int b) const -> std::size_t;

        int _ell = 0;
        std::vector<bool> _adj;
    };

    /// "ell=K;edges=a-b,c-c,..." where a-a is a loop. Whitespace is ignored.
    auto parse_density_spec(std::string_view text) -> DensityGraph;
    auto to_density_spec(const DensityGraph & h) -> std::string;
}
