#pragma once

#include <cstddef>
#include <optional>

#include "faqai/count.hpp"
#include "faqai/hypertree.hpp"
#include "faqai/inside_out.hpp"
#include "faqai/multiset.hpp"
#include "faqai/query.hpp"
#include "faqai/semiring.hpp"
#include "faqai/sketch.hpp"
#include "faqai/table.hpp"
#include "faqai/weighted_set.hpp"

namespace faqai {

struct EvalOptions
{
    Mode mode = Mode::approx;
    double epsilon = 0.1;
    std::optional<double> alpha = {};
    /// Carrier values larger than this abort with CapExceeded.
    std::size_t max_entries = 1'000'000;
    /// Table kept until the final fold (count and sumprod only).
    std::optional<std::size_t> root = {};
    EngineStats *stats = nullptr;

    static EvalOptions of(const QuerySpec &spec, EngineStats *stats = nullptr);
};

/// The per-operation sketch parameter the options resolve to on `db`.
ApproxParams approx_params(const Database &db, const EvalOptions &opts);

/// Multiset of constraint values sum_j g_j(x_j) over the join (exact or sketched).
Multiset constraint_distribution(const Database &db, const Decomposition &decomp, const AdditiveInequality &ineq,
                                 const EvalOptions &opts);

/// Number of join rows satisfying the inequality.
Count count_rows(const Database &db, const Decomposition &decomp, const AdditiveInequality &ineq,
                 const EvalOptions &opts);

/// Monoid fold over qualifying rows and over the features that have an F entry.
ExtReal sumsum(const Database &db, const Decomposition &decomp, const Monoid &monoid, const FeatureFunctions &F,
               const AdditiveInequality &ineq, const EvalOptions &opts);

/// Weighted set of (constraint value, product weight) over the join (exact or sketched).
WeightedSet sumprod_distribution(const Database &db, const Decomposition &decomp, const Semiring &semiring,
                                 const FeatureFunctions &F, const AdditiveInequality &ineq, const EvalOptions &opts);

/// Semiring sum over qualifying rows of the product of F. Features without an F entry contribute the unit.
ExtReal sumprod(const Database &db, const Decomposition &decomp, const Semiring &semiring, const FeatureFunctions &F,
                const AdditiveInequality &ineq, const EvalOptions &opts);

/// Validates and dispatches. Throws ValidationError with the rejection reason.
QueryValue run_query(const Database &db, const Decomposition &decomp, const QuerySpec &spec,
                     EngineStats *stats = nullptr);
QueryValue run_query(const Database &db, const QuerySpec &spec, EngineStats *stats = nullptr);

}
