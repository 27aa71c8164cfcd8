#pragma once

#include <bellgraph/catalog.hh>
#include <bellgraph/constructions.hh>
#include <bellgraph/density_graph.hh>
#include <bellgraph/forbidden_set.hh>
#include <bellgraph/matcher.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bellgraph
{
    enum class Outcome
    {
        AboveBell,
        BelowBell,
        BudgetExceeded
    };

    auto to_string_view(Outcome o) -> std::string_view;

    /// No F_i lies in the class, so Free(F) contains it.
    struct InfiniteDistinguishing
    {
        MinimalClassId id;
    };

    /// G_{w,H}(1..length) with length = 2 * ell * m, free of every F_i.
    struct FactorWitness
    {
        PeriodicWord word;
        DensityGraph density;
        int m;
        int length;
        SimpleGraph factor;
    };

    struct StripEntry
    {
        DensityGraph density;
        int forbidden_index;
        Embedding embedding;
    };

    /// One entry per density graph on ell letters up to reversal of the
    /// alphabet (a -> ell + 1 - a), in increasing code order. Each entry
    /// embeds some F_i into the (ell, ell)-strip of its density graph.
    struct StripCertificate
    {
        int ell;
        std::vector<StripEntry> entries;
    };

    struct BudgetCertificate
    {
        int max_ell;
    };

    using Certificate = std::variant<InfiniteDistinguishing, FactorWitness, StripCertificate, BudgetCertificate>;

    struct DecideStats
    {
        std::uint64_t strips_tested = 0;
        std::uint64_t factors_tested = 0;
        std::uint64_t matcher_calls = 0;
    };

    struct Verdict
    {
        Outcome outcome;
        Certificate certificate;
        /// ell at which the loop stopped; 0 when decided by the catalog.
        int ell;
        DecideStats stats;
    };

    struct Budget
    {
        int max_ell = 6;
    };

    inline constexpr int default_max_ell = 6;
    inline constexpr int max_ell_cap = 8;

    /// First class (in name order) containing none of the F_i.
    auto distinguishing_infinite(const ForbiddenSet & f) -> std::optional<MinimalClassId>;

    /// Code of the reversal-orbit representative (smallest code).
    auto strip_representative(const DensityGraph & h) -> std::uint64_t;

    /// Code of the representative of h under rotations and reflections of
    /// the letters (smallest code).
    auto factor_representative(const DensityGraph & h) -> std::uint64_t;

    /// A certificate iff every (ell, ell)-strip contains some F_i.
    auto step_strips(const ForbiddenSet & f, int ell, DecideStats * stats = nullptr) -> std::optional<StripCertificate>;

    /// First density graph (by code, over rotation/reflection
    /// representatives) whose factor G_{(1..ell),H}(1..2*ell*m) is F-free.
    auto step_factors(const ForbiddenSet & f, int ell, int m, DecideStats * stats = nullptr) -> std::optional<FactorWitness>;

    auto decide(const ForbiddenSet & f, Budget budget = {}) -> Verdict;

    /// Re-checks a certificate against f without reusing the search.
    auto replay(const ForbiddenSet & f, const Verdict & v) -> bool;
    auto verify_strip_certificate(const ForbiddenSet & f, const StripCertificate & c) -> bool;
    auto verify_factor_witness(const ForbiddenSet & f, const FactorWitness & w) -> bool;
    auto verify_infinite_distinguishing(const ForbiddenSet & f, const InfiniteDistinguishing & c) -> bool;

    /// Deterministic JSON: {"outcome", "certificate", "ell", "stats"}.
    auto to_json(const Verdict & v, int indent = -1) -> std::string;
}
