#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "faqai/table.hpp"

namespace faqai {

/// Join tree over table indices (0-based). Each feature's tables form a connected subtree.
struct Decomposition
{
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    friend bool operator==(const Decomposition &, const Decomposition &) = default;
};

/// Per table, the set of feature ids it contains. The schema-only view of a database.
using Hypergraph = std::vector<std::vector<std::size_t>>;

Hypergraph hypergraph_of(const Database &db);

/// Repeatedly removes the lowest-index table T_i that has a witness T_j (lowest index first) holding every
/// feature T_i still shares with the remaining tables, and records the edge (i, j). Throws CyclicJoin when
/// no table can be removed.
Decomposition build_decomposition(const Hypergraph &schema);
Decomposition build_decomposition(const Database &db);

struct VerifyResult
{
    bool ok = true;
    std::string diagnostic;

    explicit operator bool() const { return ok; }
};

/// Checks that `decomp` is a tree on the tables and that every feature's tables induce a connected subtree.
VerifyResult verify_decomposition(const Hypergraph &schema, const Decomposition &decomp);
VerifyResult verify_decomposition(const Database &db, const Decomposition &decomp);

}
