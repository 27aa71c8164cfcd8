#pragma once

#include <bellgraph/density_graph.hh>
#include <bellgraph/graph.hh>
#include <bellgraph/partition.hh>

#include <string>
#include <string_view>
#include <vector>

namespace bellgraph
{
    /// Finite base word over {1..ell}, read as its infinite repetition.
    class PeriodicWord
    {
    public:
        PeriodicWord(int ell, std::vector<int> base);

        /// (1 2 ... ell) repeated.
        static auto identity(int ell) -> PeriodicWord;

        auto ell() const -> int { return _ell; }
        auto base() const -> const std::vector<int> & { return _base; }
        auto period() const -> int { return static_cast<int>(_base.size()); }

        /// Letter at 1-based position i of the infinite word.
        auto letter(long long i) const -> int;

        /// Letters of the base are pairwise distinct.
        auto is_cyclic() const -> bool;

        friend auto operator==(const PeriodicWord &, const PeriodicWord &) -> bool = default;

    private:
        int _ell;
        std::vector<int> _base;
    };

    /// "123" (one digit per letter) or "1,2,10" (comma separated).
    auto parse_word(std::string_view text, int ell) -> PeriodicWord;
    auto to_word_string(const PeriodicWord & w) -> std::string;

    /// Strictly increasing positive integers u_1 < ... < u_m.
    class IndexSequence
    {
    public:
        explicit IndexSequence(std::vector<long long> indices);

        static auto consecutive(long long first, int m) -> IndexSequence;

        auto size() const -> int { return static_cast<int>(_indices.size()); }
        auto operator[](int i) const -> long long { return _indices[static_cast<std::size_t>(i)]; }
        auto indices() const -> const std::vector<long long> & { return _indices; }

    private:
        std::vector<long long> _indices;
    };

    /// G_{w,H}(u): vertex i stands for u_{i+1}. u_i u_j is an edge iff
    /// |u_i - u_j| = 1 and w(u_i)w(u_j) is not in E(H), or |u_i - u_j| > 1
    /// and w(u_i)w(u_j) is in E(H).
    auto build_gwh(const PeriodicWord & w, const DensityGraph & h, const IndexSequence & u) -> SimpleGraph;

    /// G_{w,H}(1, 2, ..., m).
    auto build_factor(const PeriodicWord & w, const DensityGraph & h, int m) -> SimpleGraph;

    /// The (ell, m)-strip S_{H,m}: vertex (a, j) is (a-1)*m + (j-1).
    auto build_strip(const DensityGraph & h, int m) -> SimpleGraph;

    inline auto strip_vertex(int a, int j, int m) -> int { return (a - 1) * m + (j - 1); }

    /// Bags of positions grouped by letter, letters in increasing order,
    /// unused letters omitted. letters[i] is the letter of bag i.
    struct LetterPartition
    {
        Partition partition;
        std::vector<int> letters;
    };

    auto letter_partition(const PeriodicWord & w, const IndexSequence & u) -> LetterPartition;
}
