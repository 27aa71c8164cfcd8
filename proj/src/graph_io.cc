#include <bellgraph/graph_io.hh>

#include <json.hpp>

#include <string>

using std::size_t;
using std::string;
using std::string_view;
using std::to_string;

namespace bellgraph
{
    ParseError::ParseError(const string & message, size_t offset) :
        std::runtime_error(message + " (at byte " + to_string(offset) + ")"),
        _offset(offset)
    {
    }

    namespace
    {
        constexpr string_view graph6_header = ">>graph6<<";

        auto sextet(string_view text, size_t pos) -> unsigned
        {
            if (pos >= text.size())
                throw ParseError("truncated graph6 input", pos);
            auto c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126)
                throw ParseError("byte outside the graph6 range 63..126", pos);
            return c - 63u;
        }

        void append_size(string & out, unsigned long long n)
        {
            if (n <= 62) {
                out.push_back(static_cast<char>(n + 63));
            }
            else if (n <= 258047) {
                out.push_back(126);
                for (int shift = 12; shift >= 0; shift -= 6)
                    out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
            }
            else {
                out.push_back(126);
                out.push_back(126);
                for (int shift = 30; shift >= 0; shift -= 6)
                    out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
            }
        }
    }

    auto parse_graph6(string_view text) -> SimpleGraph
    {
        size_t pos = 0;
        if (text.substr(0, graph6_header.size()) == graph6_header)
            pos = graph6_header.size();
        if (pos >= text.size())
            throw ParseError("empty graph6 input", pos);

        unsigned long long n = 0;
        size_t header_start = pos;
        unsigned first = sextet(text, pos++);
        if (first < 63) {
            n = first;
        }
        else {
            unsigned second = sextet(text, pos);
            int groups = 3;
            if (second == 63) {
                ++pos;
                groups = 6;
            }
            for (int i = 0; i < groups; ++i)
                n = (n << 6) | sextet(text, pos++);
        }
        if (n > static_cast<unsigned long long>(max_vertices))
            throw ParseError("graph6 order " + to_string(n) + " exceeds the cap of " + to_string(max_vertices), header_start);

        int order = static_cast<int>(n);
        SimpleGraph g(order);
        size_t bits = static_cast<size_t>(n) * (static_cast<size_t>(n) - (n > 0 ? 1 : 0)) / 2;
        size_t bytes = (bits + 5) / 6;
        size_t body = pos;

        size_t k = 0;
        for (int v = 1; v < order; ++v)
            for (int u = 0; u < v; ++u, ++k) {
                unsigned byte = sextet(text, body + k / 6);
                if ((byte >> (5 - k % 6)) & 1u)
                    g.add_edge(u, v);
            }
        if (bytes > 0) {
            unsigned last = sextet(text, body + bytes - 1);
            size_t used = bits - (bytes - 1) * 6;
            if (used < 6 && (last & ((1u << (6 - used)) - 1)))
                throw ParseError("nonzero graph6 padding bits", body + bytes - 1);
        }
        if (body + bytes != text.size())
            throw ParseError("trailing bytes after graph6 body", body + bytes);
        return g;
    }

    auto to_graph6(const SimpleGraph & g) -> string
    {
        string out;
        append_size(out, static_cast<unsigned long long>(g.order()));
        unsigned acc = 0;
        int filled = 0;
        for (int v = 1; v < g.order(); ++v)
            for (int u = 0; u < v; ++u) {
                acc = (acc << 1) | (g.adjacent(u, v) ? 1u : 0u);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(acc + 63));
                    acc = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
        return out;
    }

    auto parse_edge_list_json(string_view text) -> SimpleGraph
    {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(string("invalid JSON: ") + e.what(), e.byte);
        }
        if (! doc.is_object() || ! doc.contains("n") || ! doc["n"].is_number_integer())
            throw ParseError("edge-list JSON needs an integer field \"n\"", 0);
        auto n = doc["n"].get<long long>();
        if (n < 0 || n > max_vertices)
            throw ParseError("edge-list order " + to_string(n) + " out of range", 0);

        SimpleGraph g(static_cast<int>(n));
        if (! doc.contains("edges"))
            return g;
        if (! doc["edges"].is_array())
            throw ParseError("\"edges\" must be an array", 0);
        for (auto & e : doc["edges"]) {
            if (! e.is_array() || e.size() != 2 || ! e[0].is_number_integer() || ! e[1].is_number_integer())
                throw ParseError("each edge must be a pair of integers", 0);
            auto u = e[0].get<long long>(), v = e[1].get<long long>();
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw ParseError("edge [" + to_string(u) + ", " + to_string(v) + "] is a loop or out of range", 0);
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
        return g;
    }

    auto to_edge_list_json(const SimpleGraph & g) -> string
    {
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({u, v});
        nlohmann::ordered_json doc;
        doc["n"] = g.order();
        doc["edges"] = edges;
        return doc.dump();
    }

    auto parse_graph(string_view text) -> SimpleGraph
    {
        if (! text.empty() && text.front() == '{')
            return parse_edge_list_json(text);
        return parse_graph6(text);
    }
}
