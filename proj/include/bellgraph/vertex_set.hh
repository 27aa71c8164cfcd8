#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bellgraph
{
    /// A subset of {0, ..., universe - 1}, stored as a packed bitset.
    class VertexSet
    {
    public:
        VertexSet() = default;
        explicit VertexSet(int universe);
        VertexSet(int universe, std::initializer_list<int> members);

        static auto from_members(int universe, std::span<const int> members) -> VertexSet;
        static auto full(int universe) -> VertexSet;

        auto universe() const -> int { return _universe; }

        auto contains(int v) const -> bool
        {
            return (_words[static_cast<unsigned>(v) >> 6] >> (static_cast<unsigned>(v) & 63u)) & 1u;
        }

        void insert(int v) { _words[static_cast<unsigned>(v) >> 6] |= bit(v); }
        void erase(int v) { _words[static_cast<unsigned>(v) >> 6] &= ~bit(v); }
        void toggle(int v) { _words[static_cast<unsigned>(v) >> 6] ^= bit(v); }

        auto count() const -> int;
        auto empty() const -> bool;
        auto members() const -> std::vector<int>;

        auto intersects(const VertexSet & other) const -> bool;
        auto intersection_count(const VertexSet & other) const -> int;
        auto is_subset_of(const VertexSet & other) const -> bool;

        auto operator&=(const VertexSet & other) -> VertexSet &;
        auto operator|=(const VertexSet & other) -> VertexSet &;
        auto operator^=(const VertexSet & other) -> VertexSet &;
        auto subtract(const VertexSet & other) -> VertexSet &;

        /// Complement within the universe.
        auto operator~() const -> VertexSet;

        template <typename Fn>
        void for_each(Fn && fn) const
        {
            for (std::size_t w = 0; w < _words.size(); ++w) {
                auto word = _words[w];
                while (word) {
                    int b = std::countr_zero(word);
                    fn(static_cast<int>(w * 64 + static_cast<std::size_t>(b)));
                    word &= word - 1;
                }
            }
        }

        /// Smallest member, or -1 when empty.
        auto first() const -> int;

        auto words() const -> std::span<const std::uint64_t> { return _words; }
        auto words() -> std::span<std::uint64_t> { return _words; }

        friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

    private:
        static auto bit(int v) -> std::uint64_t { return std::uint64_t{1} << (static_cast<unsigned>(v) & 63u); }
        void clear_tail();

        int _universe = 0;
        std::vector<std::uint64_t> _words;
    };

    inline auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    inline auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    inline auto operator^(VertexSet a, const VertexSet & b) -> VertexSet { return a ^= b; }
}
