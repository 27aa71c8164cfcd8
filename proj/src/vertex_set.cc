#include <bellgraph/vertex_set.hh>

#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::to_string;

namespace bellgraph
{
    VertexSet::VertexSet(int universe) :
        _universe(universe)
    {
        if (universe < 0)
            throw invalid_argument("negative vertex-set universe");
        _words.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
    }

    VertexSet::VertexSet(int universe, std::initializer_list<int> members) :
        VertexSet(universe)
    {
        for (int v : members) {
            if (v < 0 || v >= universe)
                throw invalid_argument("vertex " + to_string(v) + " outside universe of size " + to_string(universe));
            insert(v);
        }
    }

    auto VertexSet::from_members(int universe, std::span<const int> members) -> VertexSet
    {
        VertexSet result(universe);
        for (int v : members) {
            if (v < 0 || v >= universe)
                throw invalid_argument("vertex " + to_string(v) + " outside universe of size " + to_string(universe));
            result.insert(v);
        }
        return result;
    }

    auto VertexSet::full(int universe) -> VertexSet
    {
        VertexSet result(universe);
        for (auto & w : result._words)
            w = ~std::uint64_t{0};
        result.clear_tail();
        return result;
    }

    void VertexSet::clear_tail()
    {
        if (_universe % 64 != 0 && ! _words.empty())
            _words.back() &= (std::uint64_t{1} << (_universe % 64)) - 1;
    }

    auto VertexSet::count() const -> int
    {
        int result = 0;
        for (auto w : _words)
            result += std::popcount(w);
        return result;
    }

    auto VertexSet::empty() const -> bool
    {
        for (auto w : _words)
            if (w)
                return false;
        return true;
    }

    auto VertexSet::members() const -> std::vector<int>
    {
        std::vector<int> result;
        result.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { result.push_back(v); });
        return result;
    }

    auto VertexSet::intersects(const VertexSet & other) const -> bool
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    auto VertexSet::intersection_count(const VertexSet & other) const -> int
    {
        int result = 0;
        for (std::size_t i = 0; i < _words.size(); ++i)
            result += std::popcount(_words[i] & other._words[i]);
        return result;
    }

    auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & ~other._words[i])
                return false;
        return true;
    }

    auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto VertexSet::operator^=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] ^= other._words[i];
        return *this;
    }

    auto VertexSet::subtract(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= ~other._words[i];
        return *this;
    }

    auto VertexSet::operator~() const -> VertexSet
    {
        VertexSet result = *this;
        for (auto & w : result._words)
            w = ~w;
        result.clear_tail();
        return result;
    }

    auto VertexSet::first() const -> int
    {
        for (std::size_t w = 0; w < _words.size(); ++w)
            if (_words[w])
                return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(_words[w])));
        return -1;
    }
}
