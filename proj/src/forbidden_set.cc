#include <bellgraph/forbidden_set.hh>
#include <bellgraph/matcher.hh>

#include <algorithm>
#include <stdexcept>

namespace bellgraph
{
    ForbiddenSet::ForbiddenSet(std::vector<SimpleGraph> graphs)
    {
        if (graphs.empty())
            throw std::invalid_argument("forbidden set must not be empty");
        for (auto & g : graphs) {
            if (g.order() == 0)
                throw std::invalid_argument("forbidden graphs need at least one vertex");
            bool seen = std::any_of(_graphs.begin(), _graphs.end(), [&](const SimpleGraph & h) { return are_isomorphic(g, h); });
            if (! seen)
                _graphs.push_back(std::move(g));
        }
        std::stable_sort(_graphs.begin(), _graphs.end(), [](const SimpleGraph & a, const SimpleGraph & b) { return a.order() < b.order(); });
    }

    auto ForbiddenSet::max_order() const -> int
    {
        int m = 0;
        for (auto & g : _graphs)
            m = std::max(m, g.order());
        return m;
    }
}
