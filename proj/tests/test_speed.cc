#include "oracles.hh"

#include <bellgraph/catalog.hh>
#include <bellgraph/speed.hh>

#include <doctest.h>

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
}

TEST_CASE("Bell numbers")
{
    CHECK(bell(0) == 1);
    CHECK(bell(1) == 1);
    CHECK(bell(5) == 52);
    CHECK(bell(6) == 203);
    for (int n = 0; n <= 10; ++n)
        CHECK(bell(n) == oracle::set_partitions(n));
    CHECK(bell(50).str() == "185724268771078270438257767181908917499221852770");
    CHECK_THROWS_AS(bell(51), std::invalid_argument);
    CHECK_THROWS_AS(bell(-1), std::invalid_argument);
}

TEST_CASE("forbidden set ingestion")
{
    ForbiddenSet f({cycle_graph(5), path_graph(3), small_graph("K_2+K_1"), complement(path_graph(3))});
    CHECK(f.size() == 3);
    CHECK(f[0].order() == 3);
    CHECK(f[0] == path_graph(3));
    CHECK(f[1] == small_graph("K_2+K_1"));
    CHECK(f.max_order() == 5);
    CHECK_THROWS_AS(ForbiddenSet({}), std::invalid_argument);
    CHECK_THROWS_AS(ForbiddenSet({SimpleGraph(0)}), std::invalid_argument);
}

TEST_CASE("labelled counts")
{
    CHECK(count_labelled(forbid({"P_3"}), 5) == 52);
    CHECK(count_labelled(forbid({"K_2"}), 4) == 1);
    CHECK(count_labelled(forbid({"P_3", "K_3"}), 4) == 10);
    CHECK(count_labelled(forbid({"P_3", "K_3"}), 5) == 26);
    CHECK(count_labelled(forbid({"P_3", "K_3"}), 6) == 76);
    CHECK(count_labelled(forbid({"K_1"}), 1) == 0);
    CHECK_THROWS_AS(count_labelled(forbid({"K_2"}), 9), std::invalid_argument);
    CHECK_THROWS_AS(count_labelled(forbid({"K_2"}), 0), std::invalid_argument);
}

TEST_CASE("extension count matches the full scan")
{
    std::vector<std::vector<const char *>> sets{
        {"P_3"}, {"K_2"}, {"K_3"}, {"P_3", "K_3"}, {"2K_2", "P_4", "C_4"}, {"2K_2", "C_4", "C_5"},
        {"K_3", "K_{1,3}"}, {"P_4"}, {"C_4"}, {"K_{1,3}", "F_3"}, {"3K_1"},
    };
    for (auto & names : sets) {
        std::vector<SimpleGraph> graphs;
        for (auto n : names)
            graphs.push_back(small_graph(n));
        ForbiddenSet f(graphs);
        for (int n = 1; n <= 5; ++n) {
            CAPTURE(names.front());
            CAPTURE(n);
            CHECK(count_labelled(f, n) == oracle::count_free(graphs, n));
        }
    }
}

TEST_CASE("cluster graphs have Bell speed")
{
    auto table = compare_speed(forbid({"P_3"}), 6);
    REQUIRE(table.rows.size() == 6);
    std::vector<int> expected{1, 2, 5, 15, 52, 203};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(table.rows[i].n == static_cast<int>(i) + 1);
        CHECK(table.rows[i].count == expected[i]);
        CHECK(table.rows[i].count == table.rows[i].bell);
    }
}

TEST_CASE("speed table examples")
{
    auto edgeless = compare_speed(forbid({"K_2"}), 4);
    for (auto & r : edgeless.rows)
        CHECK(r.count == 1);
    auto threshold = compare_speed(forbid({"2K_2", "P_4", "C_4"}), 4);
    CHECK(threshold.rows[2].count == 8);
    CHECK_THROWS_AS(compare_speed(forbid({"K_2"}), 9), std::invalid_argument);
}

TEST_CASE("more forbidden graphs never increase the count")
{
    auto small = forbid({"P_4"});
    auto large = forbid({"P_4", "C_4"});
    auto larger = forbid({"P_4", "C_4", "2K_2"});
    for (int n = 1; n <= 6; ++n) {
        CHECK(count_labelled(large, n) <= count_labelled(small, n));
        CHECK(count_labelled(larger, n) <= count_labelled(large, n));
    }
}

TEST_CASE("counts stay below the number of labelled graphs")
{
    auto f = forbid({"K_4"});
    for (int n = 1; n <= 6; ++n)
        CHECK(count_labelled(f, n) <= BigInt(1) << (n * (n - 1) / 2));
}
