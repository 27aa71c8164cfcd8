#include "oracles.hh"

#include <bellgraph/catalog.hh>
#include <bellgraph/decider.hh>
#include <bellgraph/speed.hh>

#include <doctest.h>
#include <json.hpp>

using namespace bellgraph;

namespace
{
    auto forbid(std::initializer_list<const char *> names) -> ForbiddenSet
    {
        std::vector<SimpleGraph> graphs;
        for (auto n : names)
            graphs.push_back(small_graph(n));
        return ForbiddenSet(graphs);
    }

    auto code_count(int ell) -> std::uint64_t
    {
        return std::uint64_t{1} << (ell * (ell + 1) / 2);
    }

    // every strip over every code, no symmetry reduction
    auto all_strips_hit(const ForbiddenSet & f, int ell) -> bool
    {
        for (std::uint64_t c = 0; c < code_count(ell); ++c) {
            auto strip = build_strip(DensityGraph::from_code(ell, c), ell);
            bool hit = false;
            for (auto & p : f.graphs())
                if (! oracle::free_of(strip, {p})) {
                    hit = true;
                    break;
                }
            if (! hit)
                return false;
        }
        return true;
    }

    auto some_factor_free(const ForbiddenSet & f, int ell, int m) -> bool
    {
        auto w = PeriodicWord::identity(ell);
        for (std::uint64_t c = 0; c < code_count(ell); ++c)
            if (is_free(build_factor(w, DensityGraph::from_code(ell, c), 2 * ell * m), f.graphs()))
                return true;
        return false;
    }

    // small forbidden sets exercised across the suite
    const std::vector<std::vector<const char *>> families{
        {"P_3"}, {"K_2"}, {"P_3", "K_3"}, {"K_3", "K_{1,3}"}, {"2K_2", "C_4", "C_5"},
        {"2K_2", "P_4", "C_4"}, {"K_3", "3K_1"}, {"P_3", "3K_1"}, {"K_2+K_1", "K_3"},
        {"C_4", "2K_2", "K_3"}, {"P_4", "K_3", "3K_1"}, {"K_{1,3}", "K_3", "P_4"},
        {"K_2+K_1", "3K_1"}, {"P_3", "2K_2"},
    };
}

TEST_CASE("distinguishing class")
{
    CHECK(distinguishing_infinite(forbid({"P_3"})) == MinimalClassId::K1);
    CHECK(distinguishing_infinite(forbid({"2K_2", "C_4", "C_5"})) == MinimalClassId::K3);
    CHECK(distinguishing_infinite(forbid({"2K_2", "P_4", "C_4"})) == MinimalClassId::K7);
    CHECK(! distinguishing_infinite(forbid({"K_2"})));
    CHECK(! distinguishing_infinite(forbid({"P_3", "K_3"})));
    CHECK(! distinguishing_infinite(forbid({"K_3", "K_{1,3}"})));
}

TEST_CASE("regression verdicts")
{
    struct Case
    {
        std::vector<const char *> names;
        Outcome outcome;
        int ell;
        int kind;
    };
    std::vector<Case> cases{
        {{"P_3"}, Outcome::AboveBell, 0, 0},
        {{"2K_2", "C_4", "C_5"}, Outcome::AboveBell, 0, 0},
        {{"2K_2", "P_4", "C_4"}, Outcome::AboveBell, 0, 0},
        {{"K_2"}, Outcome::BelowBell, 2, 2},
        {{"P_3", "K_3"}, Outcome::BelowBell, 3, 2},
        {{"K_3", "K_{1,3}"}, Outcome::AboveBell, 1, 1},
    };
    for (auto & c : cases) {
        std::vector<SimpleGraph> graphs;
        for (auto n : c.names)
            graphs.push_back(small_graph(n));
        ForbiddenSet f(graphs);
        auto v = decide(f);
        CAPTURE(c.names.front());
        CHECK(v.outcome == c.outcome);
        CHECK(v.ell == c.ell);
        CHECK(static_cast<int>(v.certificate.index()) == c.kind);
        CHECK(replay(f, v));
    }

    auto v = decide(forbid({"K_3", "K_{1,3}"}));
    auto & w = std::get<FactorWitness>(v.certificate);
    CHECK(w.length == 8);
    CHECK(w.factor == path_graph(8));
    CHECK(w.density.ell() == 1);
    CHECK(! w.density.has_loop(1));
}

TEST_CASE("budget")
{
    auto f = forbid({"P_3", "K_3"});
    auto v = decide(f, Budget{2});
    CHECK(v.outcome == Outcome::BudgetExceeded);
    CHECK(v.ell == 2);
    CHECK(std::get<BudgetCertificate>(v.certificate).max_ell == 2);
    CHECK(replay(f, v));
    CHECK_THROWS_AS(decide(f, Budget{0}), std::invalid_argument);
    CHECK_THROWS_AS(decide(f, Budget{max_ell_cap + 1}), std::invalid_argument);
}

TEST_CASE("tampered certificates are rejected")
{
    auto f = forbid({"P_3", "K_3"});
    auto v = decide(f);
    auto strips = std::get<StripCertificate>(v.certificate);
    CHECK(verify_strip_certificate(f, strips));

    auto dropped = strips;
    dropped.entries.pop_back();
    CHECK(! verify_strip_certificate(f, dropped));

    auto bent = strips;
    std::swap(bent.entries[0].embedding[0], bent.entries[0].embedding[1]);
    bent.entries[0].embedding[0] = static_cast<int>(build_strip(bent.entries[0].density, strips.ell).order()) - 1;
    CHECK(! verify_strip_certificate(f, bent));

    CHECK(! verify_infinite_distinguishing(f, {MinimalClassId::K1}));

    auto wf = forbid({"K_3", "K_{1,3}"});
    auto w = std::get<FactorWitness>(decide(wf).certificate);
    CHECK(verify_factor_witness(wf, w));
    auto bad = w;
    bad.density.add_edge(1, 1);
    CHECK(! verify_factor_witness(wf, bad));
    CHECK(! verify_factor_witness(forbid({"P_3"}), w));
}

TEST_CASE("strip step agrees with the unreduced enumeration")
{
    for (auto & names : families) {
        std::vector<SimpleGraph> graphs;
        for (auto n : names)
            graphs.push_back(small_graph(n));
        ForbiddenSet f(graphs);
        for (int ell = 1; ell <= 3; ++ell) {
            CAPTURE(names.front());
            CAPTURE(ell);
            auto cert = step_strips(f, ell);
            CHECK(cert.has_value() == all_strips_hit(f, ell));
            if (cert)
                CHECK(verify_strip_certificate(f, *cert));
        }
    }
}

TEST_CASE("factor step agrees with the unreduced enumeration")
{
    for (auto & names : families) {
        std::vector<SimpleGraph> graphs;
        for (auto n : names)
            graphs.push_back(small_graph(n));
        ForbiddenSet f(graphs);
        for (int ell = 1; ell <= 3; ++ell) {
            CAPTURE(names.front());
            CAPTURE(ell);
            auto w = step_factors(f, ell, f.max_order());
            CHECK(w.has_value() == some_factor_free(f, ell, f.max_order()));
            if (w)
                CHECK(verify_factor_witness(f, *w));
        }
    }
}

TEST_CASE("representatives")
{
    for (int ell = 1; ell <= 4; ++ell)
        for (std::uint64_t c = 0; c < code_count(ell); ++c) {
            auto h = DensityGraph::from_code(ell, c);
            auto s = strip_representative(h);
            auto r = factor_representative(h);
            CHECK(s <= c);
            CHECK(r <= s);
            CHECK(strip_representative(DensityGraph::from_code(ell, s)) == s);
            CHECK(factor_representative(DensityGraph::from_code(ell, r)) == r);
            std::vector<int> rev;
            for (int a = 1; a <= ell; ++a)
                rev.push_back(ell + 1 - a);
            auto flipped = h.relabelled(rev);
            CHECK(strip_representative(flipped) == s);
            CHECK(are_isomorphic(build_strip(h, 3), build_strip(flipped, 3)));
        }
}

TEST_CASE("a strip certificate persists at the next ell")
{
    for (auto & names : families) {
        std::vector<SimpleGraph> graphs;
        for (auto n : names)
            graphs.push_back(small_graph(n));
        ForbiddenSet f(graphs);
        for (int ell = 1; ell <= 3; ++ell)
            if (step_strips(f, ell))
                CHECK(step_strips(f, ell + 1));
    }
}

TEST_CASE("a contained minimal class shows in the speed")
{
    for (auto & names : families) {
        std::vector<SimpleGraph> graphs;
        for (auto n : names)
            graphs.push_back(small_graph(n));
        ForbiddenSet f(graphs);
        auto v = decide(f, Budget{4});
        CAPTURE(names.front());
        REQUIRE(v.outcome != Outcome::BudgetExceeded);
        CHECK(replay(f, v));
        if (std::holds_alternative<InfiniteDistinguishing>(v.certificate))
            for (int n = 1; n <= 6; ++n)
                CHECK(count_labelled(f, n) >= bell(n));
    }
}

TEST_CASE("json output")
{
    auto f = forbid({"P_3", "K_3"});
    auto a = to_json(decide(f));
    auto b = to_json(decide(f));
    CHECK(a == b);
    auto j = nlohmann::json::parse(a);
    CHECK(j["outcome"] == "BelowBell");
    CHECK(j["ell"] == 3);
    CHECK(j["certificate"]["kind"] == "StripCertificate");
    CHECK(j["stats"]["strips_tested"].get<int>() > 0);

    auto k = nlohmann::json::parse(to_json(decide(forbid({"P_3"}))));
    CHECK(k["certificate"]["kind"] == "InfiniteDistinguishing");
    CHECK(k["certificate"]["class"] == "K1");
    CHECK(k["ell"] == 0);
}

TEST_CASE("a BelowBell class can exceed the Bell number at small orders")
{
    // Double stars and C_5 keep these classes below B_n only eventually.
    auto f = forbid({"C_4", "2K_2", "K_3"});
    auto v = decide(f);
    CHECK(v.outcome == Outcome::BelowBell);
    CHECK(replay(f, v));
    CHECK(count_labelled(f, 5) == oracle::count_free(f.graphs(), 5));
    CHECK(count_labelled(f, 5) == 198);
    CHECK(count_labelled(f, 6) == 994);
    CHECK(count_labelled(f, 6) > bell(6));

    auto g = forbid({"K_3", "P_4", "K_{1,3}"});
    CHECK(decide(g).outcome == Outcome::BelowBell);
    CHECK(count_labelled(g, 6) == 496);
}
