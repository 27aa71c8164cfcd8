#include <bellgraph/density_graph.hh>
#include <bellgraph/graph_io.hh>

#include <charconv>
#include <stdexcept>

using std::invalid_argument;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace bellgraph
{
    DensityGraph::DensityGraph(int ell) :
        _ell(ell)
    {
        if (ell < 0)
            throw invalid_argument("negative alphabet size");
        _adj.assign(static_cast<std::size_t>(ell) * static_cast<std::size_t>(ell), false);
    }

    auto DensityGraph::index(int a, int b) const -> std::size_t
    {
        if (a < 1 || b < 1 || a > _ell || b > _ell)
            throw invalid_argument("letter pair (" + to_string(a) + ", " + to_string(b) + ") outside alphabet 1.." + to_string(_ell));
        return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(_ell) + static_cast<std::size_t>(b - 1);
    }

    auto DensityGraph::from_code(int ell, std::uint64_t code) -> DensityGraph
    {
        if (ell > density_code_cap)
            throw invalid_argument("density codes are limited to " + to_string(density_code_cap) + " letters");
        DensityGraph h(ell);
        int k = 0;
        for (int a = 1; a <= ell; ++a)
            for (int b = a; b <= ell; ++b, ++k)
                if ((code >> k) & 1u)
                    h.add_edge(a, b);
        return h;
    }

    auto DensityGraph::adjacent(int a, int b) const -> bool
    {
        return _adj[index(a, b)];
    }

    void DensityGraph::add_edge(int a, int b)
    {
        set_adjacent(a, b, true);
    }

    void DensityGraph::set_adjacent(int a, int b, bool present)
    {
        _adj[index(a, b)] = present;
        _adj[index(b, a)] = present;
    }

    auto DensityGraph::code() const -> std::uint64_t
    {
        if (_ell > density_code_cap)
            throw invalid_argument("density codes are limited to " + to_string(density_code_cap) + " letters");
        std::uint64_t c = 0;
        int k = 0;
        for (int a = 1; a <= _ell; ++a)
            for (int b = a; b <= _ell; ++b, ++k)
                if (adjacent(a, b))
                    c |= std::uint64_t{1} << k;
        return c;
    }

    auto DensityGraph::relabelled(std::span<const int> map) const -> DensityGraph
    {
        if (static_cast<int>(map.size()) != _ell)
            throw invalid_argument("relabelling has the wrong length");
        DensityGraph result(_ell);
        for (int a = 1; a <= _ell; ++a)
            for (int b = a; b <= _ell; ++b)
                if (adjacent(map[static_cast<std::size_t>(a - 1)], map[static_cast<std::size_t>(b - 1)]))
                    result.add_edge(a, b);
        return result;
    }

    auto DensityGraph::restricted(std::span<const int> letters) const -> DensityGraph
    {
        int k = static_cast<int>(letters.size());
        DensityGraph result(k);
        for (int i = 1; i <= k; ++i)
            for (int j = i; j <= k; ++j)
                if (adjacent(letters[static_cast<std::size_t>(i - 1)], letters[static_cast<std::size_t>(j - 1)]))
                    result.add_edge(i, j);
        return result;
    }

    auto DensityGraph::edges() const -> vector<std::pair<int, int>>
    {
        vector<std::pair<int, int>> result;
        for (int a = 1; a <= _ell; ++a)
            for (int b = a; b <= _ell; ++b)
                if (adjacent(a, b))
                    result.emplace_back(a, b);
        return result;
    }

    namespace
    {
        auto strip_spaces(string_view text) -> string
        {
            string out;
            for (char c : text)
                if (c != ' ' && c != '\t' && c != '\n' && c != '\r')
                    out.push_back(c);
            return out;
        }

        auto parse_int(const string & text, std::size_t begin, std::size_t end) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + end, value);
            if (ec != std::errc{} || ptr != text.data() + end || begin == end)
                throw ParseError("expected an integer in density spec", begin);
            return value;
        }
    }

    auto parse_density_spec(string_view raw) -> DensityGraph
    {
        string text = strip_spaces(raw);
        constexpr string_view ell_key = "ell=";
        if (text.compare(0, ell_key.size(), ell_key) != 0)
            throw ParseError("density spec must start with \"ell=\"", 0);

        auto semi = text.find(';');
        auto ell_end = semi == string::npos ? text.size() : semi;
        int ell = parse_int(text, ell_key.size(), ell_end);
        if (ell < 1)
            throw ParseError("density spec needs ell >= 1", ell_key.size());
        DensityGraph h(ell);
        if (semi == string::npos)
            return h;

        constexpr string_view edges_key = "edges=";
        auto pos = semi + 1;
        if (text.compare(pos, edges_key.size(), edges_key) != 0)
            throw ParseError("expected \"edges=\" after ';'", pos);
        pos += edges_key.size();

        while (pos < text.size()) {
            auto comma = text.find(',', pos);
            auto end = comma == string::npos ? text.size() : comma;
            auto dash = text.find('-', pos);
            if (dash == string::npos || dash >= end)
                throw ParseError("density edge must look like a-b", pos);
            int a = parse_int(text, pos, dash), b = parse_int(text, dash + 1, end);
            if (a < 1 || b < 1 || a > ell || b > ell)
                throw ParseError("density edge letter outside 1.." + to_string(ell), pos);
            h.add_edge(a, b);
            pos = comma == string::npos ? text.size() : comma + 1;
        }
        return h;
    }

    auto to_density_spec(const DensityGraph & h) -> string
    {
        string out = "ell=" + to_string(h.ell()) + ";edges=";
        bool first = true;
        for (auto [a, b] : h.edges()) {
            if (! first)
                out += ",";
            first = false;
            out += to_string(a) + "-" + to_string(b);
        }
        return out;
    }
}
