#include <bellgraph/canonical.hh>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

using std::vector;

namespace bellgraph
{
    namespace
    {
        auto pair_index(int i, int j) -> int
        {
            // i < j, graph6 column order
            return j * (j - 1) / 2 + i;
        }

        struct Minimiser
        {
            const SimpleGraph & g;
            vector<vector<int>> cells;
            vector<int> labelling;
            CanonicalCode best = ~CanonicalCode{0};

            auto code() const -> CanonicalCode
            {
                CanonicalCode c = 0;
                int n = static_cast<int>(labelling.size());
                for (int j = 1; j < n; ++j)
                    for (int i = 0; i < j; ++i)
                        if (g.adjacent(labelling[static_cast<std::size_t>(i)], labelling[static_cast<std::size_t>(j)]))
                            c |= CanonicalCode{1} << pair_index(i, j);
                return c;
            }

            void run(std::size_t cell)
            {
                if (cell == cells.size()) {
                    best = std::min(best, code());
                    return;
                }
                auto & members = cells[cell];
                std::sort(members.begin(), members.end());
                do {
                    auto saved = labelling.size();
                    labelling.insert(labelling.end(), members.begin(), members.end());
                    run(cell + 1);
                    labelling.resize(saved);
                } while (std::next_permutation(members.begin(), members.end()));
            }
        };
    }

    auto canonical_code(const SimpleGraph & g) -> CanonicalCode
    {
        if (g.order() > canonical_order_cap)
            throw std::invalid_argument("canonical codes are limited to " + std::to_string(canonical_order_cap) + " vertices");
        if (g.order() <= 1)
            return 0;

        std::map<int, vector<int>> by_degree;
        for (int v = 0; v < g.order(); ++v)
            by_degree[g.degree(v)].push_back(v);

        Minimiser m{g, {}, {}};
        for (auto & [deg, members] : by_degree)
            m.cells.push_back(members);
        m.run(0);
        return m.best;
    }

    auto graph_from_code(int n, CanonicalCode code) -> SimpleGraph
    {
        SimpleGraph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if ((code >> pair_index(i, j)) & 1u)
                    g.add_edge(i, j);
        return g;
    }

    auto graphs_of_order(int n) -> vector<SimpleGraph>
    {
        if (n < 0 || n > canonical_order_cap)
            throw std::invalid_argument("graph enumeration order out of range");
        if (n == 0)
            return {SimpleGraph(0)};

        std::set<CanonicalCode> seen;
        for (auto & smaller : graphs_of_order(n - 1)) {
            for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
                SimpleGraph g(n);
                for (auto [u, v] : smaller.edges())
                    g.add_edge(u, v);
                for (int u = 0; u < n - 1; ++u)
                    if ((mask >> u) & 1u)
                        g.add_edge(u, n - 1);
                seen.insert(canonical_code(g));
            }
        }

        vector<SimpleGraph> result;
        result.reserve(seen.size());
        for (auto code : seen)
            result.push_back(graph_from_code(n, code));
        return result;
    }
}
