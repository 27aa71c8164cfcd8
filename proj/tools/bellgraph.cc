#include <bellgraph/catalog.hh>
#include <bellgraph/constructions.hh>
#include <bellgraph/decider.hh>
#include <bellgraph/graph_io.hh>
#include <bellgraph/partitions.hh>
#include <bellgraph/speed.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace bellgraph;
using std::string;
using std::vector;

namespace
{
    constexpr int exit_usage = 64;
    constexpr int exit_bad_graph = 65;

    /// Input the user supplied that does not describe a graph.
    struct BadInput : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto trim(const string & s) -> string
    {
        auto b = s.find_first_not_of(" \t\r\n");
        if (b == string::npos)
            return "";
        auto e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    }

    auto read_one(const string & token) -> SimpleGraph
    {
        try {
            if (token.starts_with("name:"))
                return small_graph(token.substr(5));
            return parse_graph(token);
        }
        catch (const bellgraph::ParseError & e) {
            throw BadInput("cannot read graph \"" + token + "\": " + e.what());
        }
        catch (const std::invalid_argument & e) {
            throw BadInput("cannot read graph \"" + token + "\": " + e.what());
        }
    }

    auto read_file(const string & path) -> vector<SimpleGraph>
    {
        std::ifstream in(path);
        if (! in)
            throw BadInput("cannot open " + path);
        vector<SimpleGraph> out;
        string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#')
                continue;
            out.push_back(read_one(line));
        }
        return out;
    }

    /// Each argument is a JSON edge list, or a comma-separated list of
    /// graph6 strings, "name:" small graphs and files of one graph per line.
    auto read_graphs(const vector<string> & args) -> vector<SimpleGraph>
    {
        vector<SimpleGraph> out;
        for (auto & arg : args) {
            auto text = trim(arg);
            if (text.starts_with("{")) {
                out.push_back(read_one(text));
                continue;
            }
            vector<string> tokens{""};
            int depth = 0;
            for (char c : text) {
                depth += c == '{' ? 1 : c == '}' ? -1 : 0;
                if (c == ',' && depth == 0)
                    tokens.emplace_back();
                else
                    tokens.back() += c;
            }
            for (auto token : tokens) {
                token = trim(token);
                if (token.empty())
                    continue;
                std::error_code ec;
                if (std::filesystem::is_regular_file(token, ec)) {
                    auto from_file = read_file(token);
                    out.insert(out.end(), from_file.begin(), from_file.end());
                }
                else
                    out.push_back(read_one(token));
            }
        }
        return out;
    }

    /// A graph6 string, "name:" graph, JSON edge list or a file holding one graph.
    auto read_single(const string & text) -> SimpleGraph
    {
        std::error_code ec;
        if (! text.starts_with("{") && std::filesystem::is_regular_file(text, ec)) {
            auto graphs = read_file(text);
            if (graphs.size() != 1)
                throw BadInput(text + " holds " + std::to_string(graphs.size()) + " graphs, expected one");
            return graphs.front();
        }
        return read_one(text);
    }

    auto read_forbidden(const vector<string> & args) -> ForbiddenSet
    {
        try {
            return ForbiddenSet(read_graphs(args));
        }
        catch (const std::invalid_argument & e) {
            throw BadInput(e.what());
        }
    }

    auto describe(const Certificate & c) -> string
    {
        return std::visit([](const auto & x) -> string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, InfiniteDistinguishing>)
                return "InfiniteDistinguishing(" + string(to_string_view(x.id)) + ")";
            else if constexpr (std::is_same_v<T, FactorWitness>)
                return "FactorWitness(word=" + to_word_string(x.word) + " density=\"" + to_density_spec(x.density)
                    + "\" length=" + std::to_string(x.length) + " graph6=" + to_graph6(x.factor) + ")";
            else if constexpr (std::is_same_v<T, StripCertificate>)
                return "StripCertificate(ell=" + std::to_string(x.ell) + " strips=" + std::to_string(x.entries.size()) + ")";
            else
                return "BudgetExceeded(max_ell=" + std::to_string(x.max_ell) + ")";
        }, c);
    }

    void print_rows(const vector<std::pair<string, string>> & rows)
    {
        std::size_t width = 0;
        for (auto & [k, v] : rows)
            width = std::max(width, k.size());
        for (auto & [k, v] : rows)
            std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
    }

    auto version_text() -> string
    {
        std::ostringstream out;
        out << "bellgraph 1.0.0\n"
            << "default max_ell " << default_max_ell << "\n"
            << "max_ell cap " << max_ell_cap << "\n"
            << "max vertices " << max_vertices << "\n"
            << "speed order cap " << count_order_cap << "\n"
            << "bell cap " << bell_cap << "\n"
            << "structural order cap " << structural_order_cap << "\n"
            << "partition enumeration cap " << partition_enumeration_cap;
        return out.str();
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Decide whether Free(F) has speed above or below the Bell number"};
    app.set_version_flag("--version", version_text());
    app.require_subcommand(1);

    vector<string> forbidden;
    int max_ell = default_max_ell;
    bool json = false;
    auto * decide_cmd = app.add_subcommand("decide", "Run the decision procedure on a forbidden set");
    decide_cmd->add_option("--forbidden", forbidden, "graph6 strings, name:<graph>, JSON edge lists or files")->required();
    decide_cmd->add_option("--max-ell", max_ell, "largest ell to try")->check(CLI::Range(1, max_ell_cap));
    decide_cmd->add_flag("--json", json, "emit the verdict as JSON");

    int n_max = 0;
    bool csv = false;
    auto * speed_cmd = app.add_subcommand("speed", "Count labelled F-free graphs next to the Bell numbers");
    speed_cmd->add_option("--forbidden", forbidden, "forbidden graphs")->required();
    speed_cmd->add_option("--n-max", n_max, "largest order")->required()->check(CLI::Range(1, count_order_cap));
    speed_cmd->add_flag("--csv", csv, "emit CSV with columns n,count,bell");

    int ell = 0, m = 0, d = 0;
    string density, word;
    auto * build_cmd = app.add_subcommand("build", "Build strips and factors as graph6");
    build_cmd->require_subcommand(1);
    auto * strip_cmd = build_cmd->add_subcommand("strip", "(ell, m)-strip of a density graph");
    strip_cmd->add_option("--ell", ell, "alphabet size")->required();
    strip_cmd->add_option("--m", m, "number of columns")->required();
    strip_cmd->add_option("--density", density, "density graph \"ell=K;edges=a-b,...\"")->required();
    auto * factor_cmd = build_cmd->add_subcommand("factor", "factor G_{w,H}(1..m)");
    factor_cmd->add_option("--word", word, "base word, e.g. 12 or 1,2,10")->required();
    factor_cmd->add_option("--density", density, "density graph")->required();
    factor_cmd->add_option("--m", m, "number of vertices")->required();

    string class_name, graph_text;
    auto * catalog_cmd = app.add_subcommand("catalog", "The thirteen minimal classes");
    catalog_cmd->require_subcommand(1);
    auto * list_cmd = catalog_cmd->add_subcommand("list", "print each forbidden set as graph6");
    auto * member_cmd = catalog_cmd->add_subcommand("member", "test membership of a graph");
    member_cmd->add_option("--class", class_name, "class id, e.g. K3 or coK5")->required();
    member_cmd->add_option("--graph", graph_text, "graph6, name:<graph> or JSON")->required();

    string partition_text;
    auto * partition_cmd = app.add_subcommand("partition", "(ell, d)-partition tools");
    partition_cmd->require_subcommand(1);
    vector<CLI::App *> partition_subs;
    for (auto [name, help] : {std::pair{"verify", "check an (ell, d)-partition"},
                              std::pair{"prime", "print the prime partition"},
                              std::pair{"sparsify", "print the sparsification as graph6"}}) {
        auto * sub = partition_cmd->add_subcommand(name, help);
        sub->add_option("--graph", graph_text, "graph6, name:<graph> or JSON")->required();
        sub->add_option("--partition", partition_text, "{\"bags\": [[...], ...]}")->required();
        sub->add_option("--d", d, "density level")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--ell", ell, "bag bound (default: number of bags)");
        partition_subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*decide_cmd) {
            auto f = read_forbidden(forbidden);
            auto verdict = decide(f, Budget{max_ell});
            if (json)
                std::cout << to_json(verdict) << '\n';
            else
                print_rows({
                    {"outcome", string(to_string_view(verdict.outcome))},
                    {"certificate", describe(verdict.certificate)},
                    {"ell", std::to_string(verdict.ell)},
                    {"strips tested", std::to_string(verdict.stats.strips_tested)},
                    {"factors tested", std::to_string(verdict.stats.factors_tested)},
                    {"matcher calls", std::to_string(verdict.stats.matcher_calls)},
                });
            switch (verdict.outcome) {
            case Outcome::AboveBell: return 0;
            case Outcome::BelowBell: return 1;
            case Outcome::BudgetExceeded: return 2;
            }
        }
        if (*speed_cmd) {
            auto table = compare_speed(read_forbidden(forbidden), n_max);
            if (csv) {
                std::cout << "n,count,bell\n";
                for (auto & r : table.rows)
                    std::cout << r.n << ',' << r.count << ',' << r.bell << '\n';
            }
            else {
                vector<vector<string>> cells{{"n", "count", "bell"}};
                for (auto & r : table.rows)
                    cells.push_back({std::to_string(r.n), r.count.str(), r.bell.str()});
                vector<std::size_t> width(3, 0);
                for (auto & row : cells)
                    for (std::size_t c = 0; c < 3; ++c)
                        width[c] = std::max(width[c], row[c].size());
                for (auto & row : cells) {
                    for (std::size_t c = 0; c < 3; ++c)
                        std::cout << (c ? "  " : "") << std::right << std::setw(static_cast<int>(width[c])) << row[c];
                    std::cout << '\n';
                }
            }
            return 0;
        }
        if (*strip_cmd) {
            auto h = parse_density_spec(density);
            if (h.ell() != ell)
                throw std::invalid_argument("--ell " + std::to_string(ell) + " does not match the density graph on " + std::to_string(h.ell()) + " letters");
            std::cout << to_graph6(build_strip(h, m)) << '\n';
            return 0;
        }
        if (*factor_cmd) {
            auto h = parse_density_spec(density);
            std::cout << to_graph6(build_factor(parse_word(word, h.ell()), h, m)) << '\n';
            return 0;
        }
        if (*list_cmd) {
            for (auto id : all_minimal_classes) {
                string line;
                for (auto & g : class_spec(id).forbidden)
                    line += (line.empty() ? "" : ",") + to_graph6(g);
                std::cout << std::left << std::setw(6) << to_string_view(id) << line << '\n';
            }
            return 0;
        }
        if (*member_cmd) {
            auto id = parse_class_id(class_name);
            if (! id)
                throw std::invalid_argument("unknown class \"" + class_name + "\"");
            auto g = read_single(trim(graph_text));
            bool by_free = member_by_free(*id, g);
            vector<std::pair<string, string>> rows{{"member", by_free ? "true" : "false"}};
            if (g.order() <= structural_order_cap)
                rows.emplace_back("structural", member_structural(*id, g) ? "true" : "false");
            print_rows(rows);
            return 0;
        }
        for (auto * sub : partition_subs) {
            if (! *sub)
                continue;
            auto g = read_single(trim(graph_text));
            Partition pi;
            try {
                pi = parse_partition_json(partition_text, g.order());
            }
            catch (const std::invalid_argument & e) {
                throw BadInput(string("invalid partition: ") + e.what());
            }
            int bound = sub->count("--ell") ? ell : pi.bag_count();
            if (sub->get_name() == "verify") {
                bool ok = verify_ld_partition(g, pi, bound, d);
                vector<std::pair<string, string>> rows{{"valid", ok ? "true" : "false"}};
                if (ok)
                    rows.emplace_back("strong", is_strong(g, pi, bound, d) ? "true" : "false");
                print_rows(rows);
            }
            else if (sub->get_name() == "prime")
                std::cout << to_partition_json(prime_partition(g, pi, d)) << '\n';
            else
                std::cout << to_graph6(sparsify(g, pi, bound, d)) << '\n';
            return 0;
        }
    }
    catch (const BadInput & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_graph;
    }
    catch (const bellgraph::ParseError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_graph;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
