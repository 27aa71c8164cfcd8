#include <bellgraph/matcher.hh>
#include <bellgraph/speed.hh>

#include <cstdint>
#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::to_string;
using std::vector;

namespace bellgraph
{
    namespace
    {
        // Adjacency of a graph on k <= 8 vertices, bit pair_index(i, j).
        using Code = std::uint32_t;

        auto pair_index(int i, int j) -> int
        {
            return j * (j - 1) / 2 + i;
        }

        auto decode(int k, Code code) -> SimpleGraph
        {
            SimpleGraph g(k);
            for (int j = 1; j < k; ++j)
                for (int i = 0; i < j; ++i)
                    if (code >> pair_index(i, j) & 1U)
                        g.add_edge(i, j);
            return g;
        }

        auto free_through(const SimpleGraph & g, const ForbiddenSet & f, int v) -> bool
        {
            for (auto & pattern : f.graphs())
                if (contains_induced_through(g, pattern, v))
                    return false;
            return true;
        }
    }

    auto bell(int n) -> BigInt
    {
        if (n < 0 || n > bell_cap)
            throw invalid_argument("bell(n) is limited to 0 <= n <= " + to_string(bell_cap));
        vector<BigInt> row{1};
        for (int i = 0; i < n; ++i) {
            vector<BigInt> next{row.back()};
            for (auto & x : row)
                next.push_back(next.back() + x);
            row = std::move(next);
        }
        return row.front();
    }

    auto count_labelled(const ForbiddenSet & f, int n) -> BigInt
    {
        if (n < 1 || n > count_order_cap)
            throw invalid_argument("count_labelled is limited to 1 <= n <= " + to_string(count_order_cap));

        vector<Code> frontier;
        if (free_through(SimpleGraph(1), f, 0))
            frontier.push_back(0);

        for (int k = 2; k <= n; ++k) {
            vector<Code> next;
            std::uint64_t total = 0;
            int base = pair_index(0, k - 1);
            for (Code code : frontier)
                for (Code attach = 0; attach < (Code{1} << (k - 1)); ++attach) {
                    Code extended = code | attach << base;
                    if (! free_through(decode(k, extended), f, k - 1))
                        continue;
                    ++total;
                    if (k < n)
                        next.push_back(extended);
                }
            if (k == n)
                return BigInt(total);
            frontier = std::move(next);
        }
        return BigInt(frontier.size());
    }

    auto compare_speed(const ForbiddenSet & f, int n_max) -> SpeedTable
    {
        if (n_max < 1 || n_max > count_order_cap)
            throw invalid_argument("compare_speed is limited to 1 <= n_max <= " + to_string(count_order_cap));
        SpeedTable table;
        for (int n = 1; n <= n_max; ++n)
            table.rows.push_back(SpeedRow{n, count_labelled(f, n), bell(n)});
        return table;
    }
}
