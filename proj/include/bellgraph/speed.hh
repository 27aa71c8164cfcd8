#pragma once

#include <bellgraph/forbidden_set.hh>

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace bellgraph
{
    using BigInt = boost::multiprecision::cpp_int;

    inline constexpr int bell_cap = 50;
    inline constexpr int count_order_cap = 8;

    /// B_n by the Bell triangle, n <= bell_cap.
    auto bell(int n) -> BigInt;

    /// Number of F-free graphs on the labelled vertex set {1..n},
    /// 1 <= n <= count_order_cap. Each F-free graph on n-1 vertices is
    /// extended by one vertex in all 2^(n-1) ways; extensions are tested
    /// only for copies through the new vertex.
    auto count_labelled(const ForbiddenSet & f, int n) -> BigInt;

    struct SpeedRow
    {
        int n;
        BigInt count;
        BigInt bell;
    };

    struct SpeedTable
    {
        std::vector<SpeedRow> rows;
    };

    /// Rows n = 1..n_max.
    auto compare_speed(const ForbiddenSet & f, int n_max) -> SpeedTable;
}
