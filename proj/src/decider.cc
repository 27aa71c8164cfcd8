#include <bellgraph/decider.hh>
#include <bellgraph/graph_io.hh>

#include <json.hpp>

#include <numeric>
#include <stdexcept>

using std::optional;
using std::uint64_t;
using std::vector;

namespace bellgraph
{
    namespace
    {
        auto density_pair_count(int ell) -> int
        {
            return ell * (ell + 1) / 2;
        }

        auto check_ell(int ell) -> void
        {
            if (ell < 1 || ell > max_ell_cap)
                throw std::invalid_argument("ell must lie in 1.." + std::to_string(max_ell_cap));
        }

        // Tries the forbidden graphs smallest first.
        auto first_copy(const SimpleGraph & host, const ForbiddenSet & f, DecideStats * stats) -> optional<std::pair<int, Embedding>>
        {
            for (int i = 0; i < f.size(); ++i) {
                if (stats)
                    ++stats->matcher_calls;
                if (auto e = contains_induced(host, f[i]))
                    return std::pair{i, std::move(*e)};
            }
            return std::nullopt;
        }

        auto reversal(int ell) -> vector<int>
        {
            vector<int> map(static_cast<std::size_t>(ell));
            for (int a = 1; a <= ell; ++a)
                map[static_cast<std::size_t>(a - 1)] = ell + 1 - a;
            return map;
        }
    }

    auto to_string_view(Outcome o) -> std::string_view
    {
        switch (o) {
        case Outcome::AboveBell: return "AboveBell";
        case Outcome::BelowBell: return "BelowBell";
        case Outcome::BudgetExceeded: return "BudgetExceeded";
        }
        return "?";
    }

    auto distinguishing_infinite(const ForbiddenSet & f) -> optional<MinimalClassId>
    {
        for (auto id : all_minimal_classes) {
            bool clear = true;
            for (auto & g : f.graphs())
                if (member_by_free(id, g)) {
                    clear = false;
                    break;
                }
            if (clear)
                return id;
        }
        return std::nullopt;
    }

    auto strip_representative(const DensityGraph & h) -> uint64_t
    {
        auto map = reversal(h.ell());
        return std::min(h.code(), h.relabelled(map).code());
    }

    auto factor_representative(const DensityGraph & h) -> uint64_t
    {
        int ell = h.ell();
        uint64_t best = h.code();
        vector<int> map(static_cast<std::size_t>(ell));
        for (int shift = 0; shift < ell; ++shift)
            for (int flip = 0; flip < 2; ++flip) {
                for (int a = 1; a <= ell; ++a) {
                    int r = (a - 1 + shift) % ell;
                    map[static_cast<std::size_t>(a - 1)] = (flip ? ell - 1 - r : r) + 1;
                }
                best = std::min(best, h.relabelled(map).code());
            }
        return best;
    }

    auto step_strips(const ForbiddenSet & f, int ell, DecideStats * stats) -> optional<StripCertificate>
    {
        check_ell(ell);
        StripCertificate cert{ell, {}};
        uint64_t count = uint64_t{1} << density_pair_count(ell);
        for (uint64_t code = 0; code < count; ++code) {
            auto h = DensityGraph::from_code(ell, code);
            if (strip_representative(h) != code)
                continue;
            if (stats)
                ++stats->strips_tested;
            auto copy = first_copy(build_strip(h, ell), f, stats);
            if (! copy)
                return std::nullopt;
            cert.entries.push_back(StripEntry{std::move(h), copy->first, std::move(copy->second)});
        }
        return cert;
    }

    auto step_factors(const ForbiddenSet & f, int ell, int m, DecideStats * stats) -> optional<FactorWitness>
    {
        check_ell(ell);
        if (m < 1)
            throw std::invalid_argument("m must be positive");
        auto word = PeriodicWord::identity(ell);
        int length = 2 * ell * m;
        uint64_t count = uint64_t{1} << density_pair_count(ell);
        for (uint64_t code = 0; code < count; ++code) {
            auto h = DensityGraph::from_code(ell, code);
            if (factor_representative(h) != code)
                continue;
            if (stats)
                ++stats->factors_tested;
            auto factor = build_factor(word, h, length);
            if (! first_copy(factor, f, stats))
                return FactorWitness{word, std::move(h), m, length, std::move(factor)};
        }
        return std::nullopt;
    }

    auto decide(const ForbiddenSet & f, Budget budget) -> Verdict
    {
        if (budget.max_ell < 1 || budget.max_ell > max_ell_cap)
            throw std::invalid_argument("max_ell must lie in 1.." + std::to_string(max_ell_cap));

        DecideStats stats;
        if (auto id = distinguishing_infinite(f))
            return Verdict{Outcome::AboveBell, InfiniteDistinguishing{*id}, 0, stats};

        int m = f.max_order();
        for (int ell = 1; ell <= budget.max_ell; ++ell) {
            if (auto cert = step_strips(f, ell, &stats))
                return Verdict{Outcome::BelowBell, std::move(*cert), ell, stats};
            if (auto witness = step_factors(f, ell, m, &stats))
                return Verdict{Outcome::AboveBell, std::move(*witness), ell, stats};
        }
        return Verdict{Outcome::BudgetExceeded, BudgetCertificate{budget.max_ell}, budget.max_ell, stats};
    }

    auto verify_infinite_distinguishing(const ForbiddenSet & f, const InfiniteDistinguishing & c) -> bool
    {
        for (auto & g : f.graphs()) {
            if (member_by_free(c.id, g))
                return false;
            if (g.order() <= structural_order_cap && member_structural(c.id, g))
                return false;
        }
        return true;
    }

    auto verify_factor_witness(const ForbiddenSet & f, const FactorWitness & w) -> bool
    {
        if (w.m != f.max_order() || w.length != 2 * w.density.ell() * w.m)
            return false;
        if (w.word.ell() != w.density.ell() || build_factor(w.word, w.density, w.length) != w.factor)
            return false;
        for (auto & g : f.graphs())
            if (contains_induced(w.factor, g))
                return false;
        return true;
    }

    auto verify_strip_certificate(const ForbiddenSet & f, const StripCertificate & c) -> bool
    {
        if (c.ell < 1 || c.ell > max_ell_cap)
            return false;
        vector<uint64_t> codes;
        for (auto & e : c.entries) {
            if (e.density.ell() != c.ell || e.forbidden_index < 0 || e.forbidden_index >= f.size())
                return false;
            if (! is_induced_embedding(build_strip(e.density, c.ell), f[e.forbidden_index], e.embedding))
                return false;
            codes.push_back(e.density.code());
        }
        // every density graph must be covered through its reversal representative
        uint64_t count = uint64_t{1} << density_pair_count(c.ell);
        std::size_t next = 0;
        for (uint64_t code = 0; code < count; ++code) {
            auto h = DensityGraph::from_code(c.ell, code);
            if (strip_representative(h) != code)
                continue;
            if (next >= codes.size() || codes[next] != code)
                return false;
            ++next;
        }
        return next == codes.size();
    }

    auto replay(const ForbiddenSet & f, const Verdict & v) -> bool
    {
        return std::visit([&](const auto & c) -> bool {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, InfiniteDistinguishing>)
                return v.outcome == Outcome::AboveBell && verify_infinite_distinguishing(f, c);
            else if constexpr (std::is_same_v<T, FactorWitness>)
                return v.outcome == Outcome::AboveBell && c.density.ell() == v.ell && verify_factor_witness(f, c);
            else if constexpr (std::is_same_v<T, StripCertificate>)
                return v.outcome == Outcome::BelowBell && c.ell == v.ell && verify_strip_certificate(f, c);
            else
                return v.outcome == Outcome::BudgetExceeded && ! distinguishing_infinite(f);
        }, v.certificate);
    }

    auto to_json(const Verdict & v, int indent) -> std::string
    {
        using nlohmann::ordered_json;
        ordered_json cert = std::visit([](const auto & c) -> ordered_json {
            using T = std::decay_t<decltype(c)>;
            ordered_json j;
            if constexpr (std::is_same_v<T, InfiniteDistinguishing>) {
                j["kind"] = "InfiniteDistinguishing";
                j["class"] = std::string(to_string_view(c.id));
            }
            else if constexpr (std::is_same_v<T, FactorWitness>) {
                j["kind"] = "FactorWitness";
                j["word"] = to_word_string(c.word);
                j["density"] = to_density_spec(c.density);
                j["m"] = c.m;
                j["length"] = c.length;
                j["graph6"] = to_graph6(c.factor);
            }
            else if constexpr (std::is_same_v<T, StripCertificate>) {
                j["kind"] = "StripCertificate";
                j["ell"] = c.ell;
                j["columns"] = c.ell;
                auto entries = ordered_json::array();
                for (auto & e : c.entries) {
                    ordered_json entry;
                    entry["density"] = to_density_spec(e.density);
                    entry["forbidden"] = e.forbidden_index;
                    entry["embedding"] = e.embedding;
                    entries.push_back(std::move(entry));
                }
                j["entries"] = std::move(entries);
            }
            else {
                j["kind"] = "BudgetExceeded";
                j["max_ell"] = c.max_ell;
            }
            return j;
        }, v.certificate);

        ordered_json doc;
        doc["outcome"] = std::string(to_string_view(v.outcome));
        doc["certificate"] = std::move(cert);
        doc["ell"] = v.ell;
        doc["stats"] = {
            {"strips_tested", v.stats.strips_tested},
            {"factors_tested", v.stats.factors_tested},
            {"matcher_calls", v.stats.matcher_calls},
        };
        return doc.dump(indent);
    }
}
