#include <bellgraph/constructions.hh>
#include <bellgraph/graph_io.hh>

#include <charconv>
#include <map>
#include <stdexcept>

using std::invalid_argument;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace bellgraph
{
    PeriodicWord::PeriodicWord(int ell, vector<int> base) :
        _ell(ell),
        _base(std::move(base))
    {
        if (ell < 1)
            throw invalid_argument("word alphabet must have at least one letter");
        if (_base.empty())
            throw invalid_argument("periodic word needs a nonempty base");
        for (int a : _base)
            if (a < 1 || a > ell)
                throw invalid_argument("letter " + to_string(a) + " outside alphabet 1.." + to_string(ell));
    }

    auto PeriodicWord::identity(int ell) -> PeriodicWord
    {
        vector<int> base;
        for (int a = 1; a <= ell; ++a)
            base.push_back(a);
        return PeriodicWord(ell, std::move(base));
    }

    auto PeriodicWord::letter(long long i) const -> int
    {
        if (i < 1)
            throw invalid_argument("word positions start at 1");
        return _base[static_cast<std::size_t>((i - 1) % period())];
    }

    auto PeriodicWord::is_cyclic() const -> bool
    {
        vector<bool> seen(static_cast<std::size_t>(_ell) + 1, false);
        for (int a : _base) {
            if (seen[static_cast<std::size_t>(a)])
                return false;
            seen[static_cast<std::size_t>(a)] = true;
        }
        return true;
    }

    auto parse_word(string_view text, int ell) -> PeriodicWord
    {
        vector<int> base;
        if (text.find(',') == string_view::npos) {
            for (std::size_t i = 0; i < text.size(); ++i) {
                if (text[i] < '0' || text[i] > '9')
                    throw ParseError("word letters must be digits", i);
                base.push_back(text[i] - '0');
            }
        }
        else {
            std::size_t pos = 0;
            while (pos <= text.size()) {
                auto comma = text.find(',', pos);
                auto end = comma == string_view::npos ? text.size() : comma;
                int value = 0;
                auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
                if (ec != std::errc{} || ptr != text.data() + end || pos == end)
                    throw ParseError("expected a letter", pos);
                base.push_back(value);
                if (comma == string_view::npos)
                    break;
                pos = comma + 1;
            }
        }
        for (std::size_t i = 0; i < base.size(); ++i)
            if (base[i] < 1 || base[i] > ell)
                throw ParseError("letter " + to_string(base[i]) + " outside alphabet 1.." + to_string(ell), i);
        if (base.empty())
            throw ParseError("empty word", 0);
        return PeriodicWord(ell, std::move(base));
    }

    auto to_word_string(const PeriodicWord & w) -> string
    {
        string out;
        bool wide = w.ell() > 9;
        for (std::size_t i = 0; i < w.base().size(); ++i) {
            if (wide && i > 0)
                out += ",";
            out += to_string(w.base()[i]);
        }
        return out;
    }

    IndexSequence::IndexSequence(vector<long long> indices) :
        _indices(std::move(indices))
    {
        for (std::size_t i = 0; i < _indices.size(); ++i) {
            if (_indices[i] < 1)
                throw invalid_argument("index sequences hold positive integers");
            if (i > 0 && _indices[i] <= _indices[i - 1])
                throw invalid_argument("index sequence must be strictly increasing");
        }
    }

    auto IndexSequence::consecutive(long long first, int m) -> IndexSequence
    {
        vector<long long> indices;
        for (int i = 0; i < m; ++i)
            indices.push_back(first + i);
        return IndexSequence(std::move(indices));
    }

    auto build_gwh(const PeriodicWord & w, const DensityGraph & h, const IndexSequence & u) -> SimpleGraph
    {
        if (w.ell() != h.ell())
            throw invalid_argument("word alphabet 1.." + to_string(w.ell()) + " does not match density graph on " + to_string(h.ell()) + " letters");

        int m = u.size();
        vector<int> letters;
        for (int i = 0; i < m; ++i)
            letters.push_back(w.letter(u[i]));

        SimpleGraph g(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                bool dense = h.adjacent(letters[static_cast<std::size_t>(i)], letters[static_cast<std::size_t>(j)]);
                bool consecutive = u[j] - u[i] == 1;
                if (consecutive != dense)
                    g.add_edge(i, j);
            }
        return g;
    }

    auto build_factor(const PeriodicWord & w, const DensityGraph & h, int m) -> SimpleGraph
    {
        if (m < 1)
            throw invalid_argument("a factor needs at least one vertex");
        return build_gwh(w, h, IndexSequence::consecutive(1, m));
    }

    auto build_strip(const DensityGraph & h, int m) -> SimpleGraph
    {
        if (m < 1)
            throw invalid_argument("a strip needs at least one column");
        int ell = h.ell();
        SimpleGraph g(ell * m);
        for (int a = 1; a <= ell; ++a)
            for (int j = 1; j <= m; ++j)
                for (int b = a; b <= ell; ++b)
                    for (int k = 1; k <= m; ++k) {
                        int x = strip_vertex(a, j, m), y = strip_vertex(b, k, m);
                        if (y <= x)
                            continue;
                        bool near = (b - a == 1) && j == k;
                        if (h.adjacent(a, b) != near)
                            g.add_edge(x, y);
                    }
        return g;
    }

    auto letter_partition(const PeriodicWord & w, const IndexSequence & u) -> LetterPartition
    {
        std::map<int, vector<int>> by_letter;
        for (int i = 0; i < u.size(); ++i)
            by_letter[w.letter(u[i])].push_back(i);

        vector<vector<int>> bags;
        vector<int> letters;
        for (auto & [a, members] : by_letter) {
            letters.push_back(a);
            bags.push_back(std::move(members));
        }
        return LetterPartition{Partition(u.size(), std::move(bags)), std::move(letters)};
    }
}
