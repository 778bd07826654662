#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "faqai/count.hpp"
#include "faqai/query.hpp"
#include "faqai/table.hpp"

namespace faqai {

inline constexpr std::size_t kDefaultMaterializeCap = 10'000'000;

/// The bag natural join of all tables, over every feature in canonical order.
struct MaterializedJoin
{
    std::vector<std::string> schema;
    std::vector<double> cells;

    std::size_t num_rows() const { return schema.empty() ? 0 : cells.size() / schema.size(); }
    std::span<const double> row(std::size_t r) const { return {cells.data() + r * schema.size(), schema.size()}; }
};

/// Backtracking join over the tables in order. Throws CapExceeded once more than `cap` rows are produced.
MaterializedJoin materialize(const Database &db, std::size_t cap = kDefaultMaterializeCap);

/// Evaluates the query on the materialized join, honouring every inequality. No domain validation is done.
QueryValue oracle_eval(const Database &db, const QuerySpec &spec, std::size_t cap = kDefaultMaterializeCap);

/// A generated database together with the inequalities of the construction.
struct Instance
{
    Database db;
    std::vector<AdditiveInequality> inequalities;
};

/// One single-column table per weight with rows {0, w_i}; inequality sum x <= C.
Instance gen_knapsack(std::span<const double> weights, double capacity);

/// One single-column table per weight with rows {w_i, -w_i}; inequalities sum -x <= 0 and sum x <= 0.
Instance gen_partition(std::span<const double> weights);

/// Number of subsets of `weights` with total at most `capacity`, by dynamic programming over totals.
Count knapsack_count_dp(std::span<const std::uint64_t> weights, std::uint64_t capacity);

}
