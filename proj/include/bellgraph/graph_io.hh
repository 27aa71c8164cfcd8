#pragma once

#include <bellgraph/graph.hh>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bellgraph
{
    /// Malformed textual input. offset is the byte position the problem was
    /// detected at.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string & message, std::size_t offset);

        auto offset() const -> std::size_t { return _offset; }

    private:
        std::size_t _offset;
    };

    /// Standard graph6 decoding. Accepts the optional ">>graph6<<" header and
    /// both short and long N(n) forms. Trailing bytes and nonzero padding
    /// bits are rejected.
    auto parse_graph6(std::string_view text) -> SimpleGraph;
    auto to_graph6(const SimpleGraph & g) -> std::string;

    /// {"n": int, "edges": [[u, v], ...]}
    auto parse_edge_list_json(std::string_view text) -> SimpleGraph;
    auto to_edge_list_json(const SimpleGraph & g) -> std::string;

    /// graph6 unless the text starts with '{', in which case edge-list JSON.
    auto parse_graph(std::string_view text) -> SimpleGraph;
}
