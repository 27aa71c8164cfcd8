#include <bellgraph/catalog.hh>
#include <bellgraph/matcher.hh>

#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::string;
using std::string_view;
using std::vector;

namespace bellgraph
{
    namespace
    {
        constexpr std::array<string_view, 13> class_names = {
            "K1", "K2", "K3", "K4", "K5", "K6", "K7",
            "coK1", "coK2", "coK3", "coK4", "coK5", "coK6",
        };

        auto base_of(MinimalClassId id) -> MinimalClassId
        {
            int i = static_cast<int>(id);
            return i >= 7 ? static_cast<MinimalClassId>(i - 7) : id;
        }

        auto is_complement_class(MinimalClassId id) -> bool
        {
            return static_cast<int>(id) >= 7;
        }

        auto from_pairs(int n, std::initializer_list<Edge> edges) -> SimpleGraph
        {
            vector<Edge> list(edges);
            return SimpleGraph::from_edges(n, list);
        }

        auto fan3() -> SimpleGraph
        {
            // y1..y5 as 0..4
            return from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
        }

        auto diamond() -> SimpleGraph
        {
            return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
        }

        auto h6() -> SimpleGraph
        {
            return from_pairs(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
        }

        auto parse_count(string_view text, string_view whole) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
                throw invalid_argument("bad parameter in graph name \"" + string(whole) + "\"");
            return value;
        }

        auto single_graph(string_view name, string_view whole) -> SimpleGraph
        {
            string key;
            for (char c : name)
                if (c != '_' && c != '{' && c != '}')
                    key += c;

            static const std::map<string, SimpleGraph (*)()> named = {
                {"claw", [] { return complete_bipartite_graph(1, 3); }},
                {"F3", fan3},
                {"3-fan", fan3},
                {"fan", fan3},
                {"K4^-", diamond},
                {"K4-", diamond},
                {"diamond", diamond},
                {"H6", h6},
            };
            if (auto it = named.find(key); it != named.end())
                return it->second();
            if (key.empty())
                throw invalid_argument("empty graph name in \"" + string(whole) + "\"");

            char kind = key[0];
            string_view rest = string_view(key).substr(1);
            if (kind == 'K' && rest.find(',') != string_view::npos) {
                auto comma = rest.find(',');
                int a = parse_count(rest.substr(0, comma), whole);
                int b = parse_count(rest.substr(comma + 1), whole);
                return complete_bipartite_graph(a, b);
            }
            int n = parse_count(rest, whole);
            switch (kind) {
            case 'P':
                if (n < 1)
                    break;
                return path_graph(n);
            case 'C':
                if (n < 3)
                    break;
                return cycle_graph(n);
            case 'K':
                return complete_graph(n);
            default:
                throw invalid_argument("unknown graph name \"" + string(whole) + "\"");
            }
            throw invalid_argument("invalid parameter in graph name \"" + string(whole) + "\"");
        }

        auto build_specs() -> std::array<ClassSpec, 13>
        {
            auto set = [](std::initializer_list<const char *> names) {
                vector<SimpleGraph> out;
                for (auto n : names)
                    out.push_back(small_graph(n));
                return out;
            };

            std::array<vector<SimpleGraph>, 7> base = {
                set({"P_3"}),
                set({"K_3", "P_4", "C_4"}),
                set({"2K_2", "C_4", "C_5", "K_{1,3}", "F_3"}),
                set({"2K_2", "C_4", "C_5", "K_4^-"}),
                {},
                set({"2K_2", "K_3", "C_5"}),
                set({"2K_2", "P_4", "C_4"}),
            };
            auto co_k5 = set({"K_3", "C_5", "P_4+K_1", "2K_2+K_1", "C_4+K_2", "C_4+2K_1", "H_6"});
            for (auto & g : co_k5)
                base[4].push_back(complement(g));

            std::array<ClassSpec, 13> specs;
            for (int i = 0; i < 13; ++i) {
                auto id = all_minimal_classes[static_cast<std::size_t>(i)];
                specs[static_cast<std::size_t>(i)].id = id;
                auto & source = base[static_cast<std::size_t>(base_of(id))];
                if (is_complement_class(id))
                    for (auto & g : source)
                        specs[static_cast<std::size_t>(i)].forbidden.push_back(complement(g));
                else
                    specs[static_cast<std::size_t>(i)].forbidden = source;
            }
            return specs;
        }

        auto is_clique(const SimpleGraph & g, const VertexSet & s) -> bool
        {
            bool ok = true;
            s.for_each([&](int v) {
                if (ok && ! (s.intersection_count(g.neighbourhood(v)) == s.count() - 1))
                    ok = false;
            });
            return ok;
        }

        auto is_independent(const SimpleGraph & g, const VertexSet & s) -> bool
        {
            bool ok = true;
            s.for_each([&](int v) {
                if (ok && g.neighbourhood(v).intersects(s))
                    ok = false;
            });
            return ok;
        }

        auto max_cross(const SimpleGraph & g, const VertexSet & from, const VertexSet & to) -> int
        {
            int best = 0;
            from.for_each([&](int v) { best = std::max(best, g.neighbourhood(v).intersection_count(to)); });
            return best;
        }

        auto nested(const SimpleGraph & g, const VertexSet & from, const VertexSet & to) -> bool
        {
            vector<VertexSet> hoods;
            from.for_each([&](int v) { hoods.push_back(g.neighbourhood(v) & to); });
            for (auto & a : hoods)
                for (auto & b : hoods)
                    if (! a.is_subset_of(b) && ! b.is_subset_of(a))
                        return false;
            return true;
        }

        template <typename Pred>
        auto some_bipartition(const SimpleGraph & g, Pred pred) -> bool
        {
            int n = g.order();
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
                VertexSet a(n), b(n);
                for (int v = 0; v < n; ++v) {
                    if (mask >> v & 1U)
                        a.insert(v);
                    else
                        b.insert(v);
                }
                if (pred(a, b))
                    return true;
            }
            return false;
        }

        auto structural_base(MinimalClassId id, const SimpleGraph & g) -> bool
        {
            switch (id) {
            case MinimalClassId::K1:
                for (auto & c : connected_components(g))
                    if (! is_clique(g, VertexSet::from_members(g.order(), c)))
                        return false;
                return true;
            case MinimalClassId::K2:
                for (auto & c : connected_components(g)) {
                    auto sub = induced_subgraph(g, c);
                    int k = sub.order();
                    if (sub.edge_count() != k - 1)
                        return false;
                    bool centre = false;
                    for (int v = 0; v < k; ++v)
                        centre = centre || sub.degree(v) == k - 1;
                    if (! centre)
                        return false;
                }
                return true;
            case MinimalClassId::K3:
                return some_bipartition(g, [&](const VertexSet & i, const VertexSet & q) {
                    return is_independent(g, i) && is_clique(g, q) && max_cross(g, q, i) <= 1;
                });
            case MinimalClassId::K4:
                return some_bipartition(g, [&](const VertexSet & i, const VertexSet & q) {
                    return is_independent(g, i) && is_clique(g, q) && max_cross(g, i, q) <= 1;
                });
            case MinimalClassId::K5:
                return some_bipartition(g, [&](const VertexSet & q1, const VertexSet & q2) {
                    return is_clique(g, q1) && is_clique(g, q2) && max_cross(g, q2, q1) <= 1;
                });
            case MinimalClassId::K6:
                return some_bipartition(g, [&](const VertexSet & i1, const VertexSet & i2) {
                    return is_independent(g, i1) && is_independent(g, i2) && nested(g, i1, i2);
                });
            case MinimalClassId::K7:
                return some_bipartition(g, [&](const VertexSet & i, const VertexSet & q) {
                    return is_independent(g, i) && is_clique(g, q) && nested(g, i, q);
                });
            default:
                throw invalid_argument("not a base class");
            }
        }
    }

    auto to_string_view(MinimalClassId id) -> string_view
    {
        return class_names[static_cast<std::size_t>(id)];
    }

    auto parse_class_id(string_view name) -> std::optional<MinimalClassId>
    {
        for (std::size_t i = 0; i < class_names.size(); ++i)
            if (class_names[i] == name)
                return all_minimal_classes[i];
        return std::nullopt;
    }

    auto small_graph(string_view name) -> SimpleGraph
    {
        SimpleGraph result(0);
        bool any = false;
        std::size_t pos = 0;
        while (pos <= name.size()) {
            auto plus = name.find('+', pos);
            auto term = name.substr(pos, plus == string_view::npos ? string_view::npos : plus - pos);

            std::size_t digits = 0;
            while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits])))
                ++digits;
            int copies = 1;
            auto body = term;
            // "3-fan" is a name, not three copies of "-fan"
            if (digits > 0 && digits < term.size() && term[digits] != '-') {
                copies = parse_count(term.substr(0, digits), name);
                body = term.substr(digits);
            }
            if (copies < 1)
                throw invalid_argument("zero multiplicity in graph name \"" + string(name) + "\"");
            auto piece = single_graph(body, name);
            for (int c = 0; c < copies; ++c)
                result = disjoint_union(result, piece);
            any = true;

            if (plus == string_view::npos)
                break;
            pos = plus + 1;
        }
        if (! any)
            throw invalid_argument("empty graph name");
        return result;
    }

    auto class_spec(MinimalClassId id) -> const ClassSpec &
    {
        static const auto specs = build_specs();
        return specs[static_cast<std::size_t>(id)];
    }

    auto member_by_free(MinimalClassId id, const SimpleGraph & g) -> bool
    {
        return is_free(g, class_spec(id).forbidden);
    }

    auto member_structural(MinimalClassId id, const SimpleGraph & g) -> bool
    {
        if (g.order() > structural_order_cap)
            throw invalid_argument("structural membership is limited to " + std::to_string(structural_order_cap) + " vertices");
        if (is_complement_class(id))
            return structural_base(base_of(id), complement(g));
        return structural_base(id, g);
    }
}
