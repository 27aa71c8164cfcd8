#include "instances.hh"
#include "oracles.hh"

#include <bellgraph/canonical.hh>
#include <bellgraph/catalog.hh>
#include <bellgraph/constructions.hh>
#include <bellgraph/graph_io.hh>
#include <bellgraph/partitions.hh>

#include <doctest.h>

using namespace bellgraph;

namespace
{
    auto range_set(int n, int from, int to) -> VertexSet
    {
        VertexSet s(n);
        for (int v = from; v < to; ++v)
            s.insert(v);
        return s;
    }

    auto halves(int n) -> Partition
    {
        std::vector<int> a, b;
        for (int v = 0; v < n; ++v)
            (v < n / 2 ? a : b).push_back(v);
        return Partition(n, {a, b});
    }

    auto strip_letter_partition(int ell, int m) -> Partition
    {
        std::vector<std::vector<int>> bags(static_cast<std::size_t>(ell));
        for (int a = 1; a <= ell; ++a)
            for (int j = 1; j <= m; ++j)
                bags[static_cast<std::size_t>(a - 1)].push_back(strip_vertex(a, j, m));
        return Partition(ell * m, bags);
    }
}

TEST_CASE("delta and codelta")
{
    auto k33 = complete_bipartite_graph(3, 3);
    auto left = range_set(6, 0, 3), right = range_set(6, 3, 6);
    CHECK(delta(k33, left, right) == 3);
    CHECK(codelta(k33, left, right) == 0);
    CHECK(delta(edgeless_graph(6), left, right) == 0);
    CHECK(codelta(edgeless_graph(6), left, right) == 3);

    auto c6 = cycle_graph(6);
    VertexSet even(6), odd(6);
    for (int v = 0; v < 6; ++v)
        (v % 2 ? odd : even).insert(v);
    CHECK(delta(c6, even, odd) == 2);

    CHECK(delta(complete_graph(4), VertexSet::full(4), VertexSet::full(4)) == 3);
    CHECK(codelta(complete_graph(4), VertexSet::full(4), VertexSet::full(4)) == 0);
    CHECK_THROWS_AS(delta(k33, range_set(6, 0, 4), range_set(6, 2, 6)), std::invalid_argument);
}

TEST_CASE("codelta is delta of the complement on disjoint sets")
{
    for (int n = 2; n <= 6; ++n)
        for (auto & g : graphs_of_order(n))
            for (int cut = 1; cut < n; ++cut) {
                auto u = range_set(n, 0, cut), w = range_set(n, cut, n);
                CHECK(codelta(g, u, w) == delta(complement(g), u, w));
            }
}

TEST_CASE("pair classes")
{
    auto k44 = complete_bipartite_graph(4, 4);
    CHECK(classify_pair(k44, range_set(8, 0, 4), range_set(8, 4, 8), 0) == PairClass::Dense);
    CHECK(classify_pair(edgeless_graph(8), range_set(8, 0, 4), range_set(8, 4, 8), 0) == PairClass::Sparse);
    CHECK(classify_pair(k44, range_set(8, 0, 1), range_set(8, 0, 1), 0) == PairClass::Both);
    CHECK(classify_pair(path_graph(4), range_set(4, 0, 2), range_set(4, 2, 4), 0) == PairClass::Neither);
    CHECK(to_string_view(PairClass::Both) == "Both");
}

TEST_CASE("Both needs a bag of at most 2d + 1 vertices")
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 2000; ++t) {
        int n = 2 + static_cast<int>(rng() % 9);
        auto g = oracle::random_graph(rng, n, 0.5);
        int cut = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        int d = static_cast<int>(rng() % 4);
        auto u = range_set(n, 0, cut), w = range_set(n, cut, n);
        if (classify_pair(g, u, w, d) == PairClass::Both)
            CHECK(std::min(cut, n - cut) <= 2 * d + 1);
        if (classify_pair(g, u, u, d) == PairClass::Both)
            CHECK(cut <= 2 * d + 1);
    }
}

TEST_CASE("(ell, d)-partition verification")
{
    std::vector<std::vector<int>> singletons{{0}, {1}, {2}, {3}, {4}};
    CHECK(verify_ld_partition(cycle_graph(5), Partition(5, singletons), 5, 1));
    CHECK(! verify_ld_partition(cycle_graph(5), Partition(5, singletons), 4, 1));
    CHECK(verify_ld_partition(complete_bipartite_graph(4, 4), halves(8), 2, 0));
    CHECK(! verify_ld_partition(path_graph(4), halves(4), 2, 0));
    CHECK_THROWS_AS(verify_ld_partition(path_graph(3), halves(4), 2, 0), std::invalid_argument);
}

TEST_CASE("strong partitions")
{
    CHECK(strong_threshold(2, 2) == 40);
    CHECK(strong_threshold(3, 0) == 0);
    CHECK(strong_threshold(70, 1) == std::numeric_limits<std::uint64_t>::max());
    CHECK(is_strong(path_graph(4), Partition(4, {{0}, {1}, {2}, {3}}), 4, 0));
    CHECK(is_strong(edgeless_graph(80), halves(80), 2, 2));
    CHECK(! is_strong(edgeless_graph(79), Partition(79, {std::vector<int>(1, 0), [] {
        std::vector<int> rest;
        for (int v = 1; v < 79; ++v)
            rest.push_back(v);
        return rest;
    }()}), 2, 2));
    std::vector<int> a, b;
    for (int v = 0; v < 79; ++v)
        (v < 39 ? a : b).push_back(v);
    CHECK(! is_strong(edgeless_graph(79), Partition(79, {a, b}), 2, 2));
    CHECK_THROWS_AS(is_strong(path_graph(4), halves(4), 2, 0), std::invalid_argument);
}

TEST_CASE("prime partition examples")
{
    auto merged = prime_partition(edgeless_graph(8), halves(8), 0);
    CHECK(merged.bag_count() == 1);
    auto kept = prime_partition(complete_bipartite_graph(4, 4), halves(8), 0);
    CHECK(kept == halves(8));
    CHECK(prime_partition(complete_bipartite_graph(4, 4), kept, 0) == kept);

    auto p3 = path_graph(3);
    auto p = prime_partition(p3, Partition(3, {{1}, {0}, {2}}), 0);
    CHECK(p.bags() == std::vector<std::vector<int>>{{0, 2}, {1}});
}

TEST_CASE("prime partition is idempotent")
{
    std::mt19937_64 rng(43);
    for (int t = 0; t < 60; ++t) {
        int ell = 1 + static_cast<int>(rng() % 3);
        int d = static_cast<int>(rng() % 3);
        std::vector<int> sizes;
        for (int i = 0; i < ell; ++i)
            sizes.push_back(std::max<int>(1, static_cast<int>(strong_threshold(ell, d))) + static_cast<int>(rng() % 5));
        auto inst = instances::random_strong(rng, sizes, d);
        REQUIRE(is_strong(inst.graph, inst.partition, ell, d));
        auto p = prime_partition(inst.graph, inst.partition, d);
        CAPTURE(ell);
        CAPTURE(d);
        CAPTURE(to_graph6(inst.graph));
        CAPTURE(to_partition_json(inst.partition));
        CAPTURE(to_partition_json(p));
        CHECK(prime_partition(inst.graph, p, d) == p);
    }
}

TEST_CASE("density graph examples")
{
    auto h = density_graph(complete_bipartite_graph(4, 4), halves(8), 0);
    CHECK(h == parse_density_spec("ell=2;edges=1-2"));
    CHECK(density_graph(edgeless_graph(6), halves(6), 0) == DensityGraph(2));
    CHECK_THROWS_AS(density_graph(path_graph(4), halves(4), 0), std::invalid_argument);
    // a Both pair is recorded as sparse
    CHECK(density_graph(complete_graph(2), Partition(2, {{0}, {1}}), 1) == DensityGraph(2));

    std::mt19937_64 rng(47);
    for (int t = 0; t < 30; ++t) {
        int ell = 1 + static_cast<int>(rng() % 4);
        auto dh = oracle::random_density(rng, ell);
        int m = 6 + static_cast<int>(rng() % 6);
        CHECK(density_graph(build_strip(dh, m), strip_letter_partition(ell, m), 2) == dh);
    }
}

TEST_CASE("transform")
{
    auto g = path_graph(5);
    Partition pi(5, {{0, 1}, {2, 3, 4}});
    CHECK(transform(g, pi, DensityGraph(2)) == g);
    auto h = parse_density_spec("ell=2;edges=1-2,2-2");
    CHECK(transform(transform(g, pi, h), pi, h) == g);
    auto t = transform(complete_graph(3), Partition(3, {{0, 1, 2}}), parse_density_spec("ell=1;edges=1-1"));
    CHECK(t == edgeless_graph(3));
    CHECK_THROWS_AS(transform(g, pi, DensityGraph(3)), std::invalid_argument);
}

TEST_CASE("sparsify")
{
    CHECK(sparsify(complete_bipartite_graph(4, 4), halves(8), 2, 0) == edgeless_graph(8));
    CHECK(sparsify(edgeless_graph(6), halves(6), 2, 0) == edgeless_graph(6));
    CHECK_THROWS_AS(sparsify(path_graph(4), halves(4), 2, 0), std::invalid_argument);

    for (int ell = 1; ell <= 3; ++ell) {
        int m = static_cast<int>(strong_threshold(ell, 2));
        std::mt19937_64 rng(53 + static_cast<unsigned>(ell));
        auto dh = oracle::random_density(rng, ell);
        auto s = sparsify(build_strip(dh, m), strip_letter_partition(ell, m), ell, 2);
        auto paths = SimpleGraph(ell * m);
        for (int j = 1; j <= m; ++j)
            for (int a = 1; a < ell; ++a)
                paths.add_edge(strip_vertex(a, j, m), strip_vertex(a + 1, j, m));
        CHECK(s == paths);
    }
}

TEST_CASE("sparsification leaves every bag pair sparse")
{
    std::mt19937_64 rng(59);
    for (int t = 0; t < 40; ++t) {
        int ell = 1 + static_cast<int>(rng() % 3);
        int d = 1 + static_cast<int>(rng() % 2);
        std::vector<int> sizes(static_cast<std::size_t>(ell), static_cast<int>(strong_threshold(ell, d)));
        auto inst = instances::random_strong(rng, sizes, d);
        auto s = sparsify(inst.graph, inst.partition, ell, d);
        for (int i = 0; i < ell; ++i)
            for (int j = i; j < ell; ++j) {
                auto c = classify_pair(s, inst.partition.bag_set(i), inst.partition.bag_set(j), d);
                CHECK((c == PairClass::Sparse || c == PairClass::Both));
            }
    }
}

TEST_CASE("same-bag neighbourhood difference")
{
    std::mt19937_64 rng(61);
    for (int t = 0; t < 40; ++t) {
        int ell = 1 + static_cast<int>(rng() % 3);
        int d = 1 + static_cast<int>(rng() % 2);
        std::vector<int> sizes(static_cast<std::size_t>(ell), static_cast<int>(strong_threshold(ell, d)));
        auto inst = instances::random_strong(rng, sizes, d);
        CHECK(instances::max_same_bag_difference(inst.graph, inst.partition, true) <= 2 * ell * d);
        CHECK(instances::max_same_bag_difference(inst.graph, inst.partition, false) <= 2 * ell * d + 2);
    }

    // Adjacent twins inside a dense bag count each other: the bound 2 * ell * d
    // only holds once x and y themselves are left out.
    auto cp = instances::cocktail_party(5);
    REQUIRE(is_strong(cp.graph, cp.partition, 1, 1));
    CHECK(instances::max_same_bag_difference(cp.graph, cp.partition, false) == 4);
    CHECK(instances::max_same_bag_difference(cp.graph, cp.partition, true) == 2);
}

TEST_CASE("cross prime bag neighbourhood difference")
{
    std::mt19937_64 rng(67);
    for (int t = 0; t < 40; ++t) {
        int ell = 2 + static_cast<int>(rng() % 2);
        int d = 1 + static_cast<int>(rng() % 2);
        std::vector<int> sizes(static_cast<std::size_t>(ell), static_cast<int>(strong_threshold(ell, d)));
        auto inst = instances::random_strong(rng, sizes, d);
        auto p = prime_partition(inst.graph, inst.partition, d);
        if (p.bag_count() < 2)
            continue;
        CHECK(instances::min_cross_prime_difference(inst.graph, p) >= static_cast<int>(strong_threshold(ell, d)) - 2 * d - 1);
    }

    // When the separating bag is y's own bag, y is not its own neighbour and
    // the bound drops by one.
    auto gap = instances::prime_gap();
    auto & inst = gap.instance;
    REQUIRE(is_strong(inst.graph, inst.partition, 2, 1));
    auto p = prime_partition(inst.graph, inst.partition, 1);
    REQUIRE(p.bag_count() == 2);
    CHECK(p.bag_of(gap.x) != p.bag_of(gap.y));
    CHECK(neighbourhood_difference(inst.graph, gap.x, gap.y) == 17);
    CHECK(static_cast<int>(strong_threshold(2, 1)) - 2 * 1 == 18);
}

TEST_CASE("partition enumeration")
{
    std::uint64_t count = 0;
    for_each_partition(6, 6, [&](const std::vector<int> &) { ++count; });
    CHECK(count == oracle::set_partitions(6));
    count = 0;
    for_each_partition(5, 2, [&](const std::vector<int> & a) {
        ++count;
        CHECK(partition_from_assignment(a).bag_count() <= 2);
    });
    CHECK(count == 16);
    CHECK_THROWS_AS(for_each_partition(15, 2, [](const std::vector<int> &) {}), std::invalid_argument);
}

TEST_CASE("strong partition search matches filtering every partition")
{
    std::mt19937_64 rng(79);
    for (int t = 0; t < 40; ++t) {
        int n = static_cast<int>(rng() % 9);
        int ell = 1 + static_cast<int>(rng() % 4);
        int d = static_cast<int>(rng() % 2);
        auto g = oracle::random_graph(rng, n, 0.5);
        std::vector<Partition> expected;
        for_each_partition(n, ell, [&](const std::vector<int> & a) {
            auto pi = partition_from_assignment(a);
            if (verify_ld_partition(g, pi, ell, d) && is_strong(g, pi, ell, d))
                expected.push_back(pi);
        });
        CHECK(strong_partitions(g, ell, d) == expected);
    }
    auto planted = instances::random_strong(rng, {3, 3}, 0);
    CHECK(! strong_partitions(planted.graph, 2, 0).empty());
}

TEST_CASE("strong (ell, 0)-partitions share one prime partition and sparsification")
{
    std::mt19937_64 rng(71);
    for (int t = 0; t < 30; ++t) {
        int ell = 1 + static_cast<int>(rng() % 3);
        std::vector<int> sizes;
        for (int i = 0; i < ell; ++i)
            sizes.push_back(1 + static_cast<int>(rng() % 3));
        auto inst = instances::random_strong(rng, sizes, 0);
        auto all = strong_partitions(inst.graph, ell + 1, 0);
        REQUIRE(! all.empty());
        auto p = prime_partition(inst.graph, all.front(), 0);
        auto s = sparsify(inst.graph, all.front(), ell + 1, 0);
        for (auto & pi : all) {
            CHECK(prime_partition(inst.graph, pi, 0) == p);
            CHECK(sparsify(inst.graph, pi, ell + 1, 0) == s);
        }
    }
}

TEST_CASE("partition JSON")
{
    auto pi = parse_partition_json("{\"bags\": [[2, 0], [1]]}", 3);
    CHECK(pi.bags() == std::vector<std::vector<int>>{{0, 2}, {1}});
    CHECK(to_partition_json(pi) == "{\"bags\":[[0,2],[1]]}");
    CHECK_THROWS_AS(parse_partition_json("{\"bags\": [[0], [0, 1]]}", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition_json("{\"bags\": [[0]]}", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition_json("[]", 2), ParseError);
}
