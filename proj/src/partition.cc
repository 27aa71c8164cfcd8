#include <bellgraph/graph_io.hh>
#include <bellgraph/partition.hh>

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

using std::invalid_argument;
using std::string;
using std::to_string;
using std::vector;

namespace bellgraph
{
    Partition::Partition(int order, vector<vector<int>> bags) :
        _order(order),
        _bags(std::move(bags)),
        _owner(static_cast<std::size_t>(std::max(order, 0)), -1)
    {
        if (order < 0)
            throw invalid_argument("negative partition order");
        for (std::size_t i = 0; i < _bags.size(); ++i) {
            auto & b = _bags[i];
            if (b.empty())
                throw invalid_argument("partition bag " + to_string(i) + " is empty");
            std::sort(b.begin(), b.end());
            VertexSet set(order);
            for (int v : b) {
                if (v < 0 || v >= order)
                    throw invalid_argument("partition vertex " + to_string(v) + " out of range for order " + to_string(order));
                if (_owner[static_cast<std::size_t>(v)] != -1)
                    throw invalid_argument("partition vertex " + to_string(v) + " appears twice");
                _owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
                set.insert(v);
            }
            _sets.push_back(std::move(set));
        }
        for (int v = 0; v < order; ++v)
            if (_owner[static_cast<std::size_t>(v)] == -1)
                throw invalid_argument("partition does not cover vertex " + to_string(v));
    }

    auto Partition::smallest_bag() const -> int
    {
        int result = std::numeric_limits<int>::max();
        for (auto & b : _bags)
            result = std::min(result, static_cast<int>(b.size()));
        return _bags.empty() ? 0 : result;
    }

    auto Partition::normalised() const -> Partition
    {
        auto bags = _bags;
        std::sort(bags.begin(), bags.end(), [](const vector<int> & a, const vector<int> & b) { return a.front() < b.front(); });
        return Partition(_order, std::move(bags));
    }

    auto parse_partition_json(std::string_view text, int order) -> Partition
    {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(string("invalid JSON: ") + e.what(), e.byte);
        }
        if (! doc.is_object() || ! doc.contains("bags") || ! doc["bags"].is_array())
            throw ParseError("partition JSON needs an array field \"bags\"", 0);
        vector<vector<int>> bags;
        for (auto & bag : doc["bags"]) {
            if (! bag.is_array())
                throw ParseError("each bag must be an array of vertices", 0);
            vector<int> members;
            for (auto & v : bag) {
                if (! v.is_number_integer())
                    throw ParseError("bag members must be integers", 0);
                members.push_back(v.get<int>());
            }
            bags.push_back(std::move(members));
        }
        return Partition(order, std::move(bags));
    }

    auto to_partition_json(const Partition & p) -> string
    {
        nlohmann::ordered_json doc;
        doc["bags"] = p.bags();
        return doc.dump();
    }
}
