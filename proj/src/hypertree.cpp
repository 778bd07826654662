#include "faqai/hypertree.hpp"

#include <algorithm>
#include <numeric>

#include "faqai/errors.hpp"

namespace faqai {

namespace {

std::size_t num_features(const Hypergraph &schema)
{
    std::size_t d = 0;
    for (const auto &edge : schema)
        for (std::size_t f : edge)
            d = std::max(d, f + 1);
    return d;
}

bool contains(const std::vector<std::size_t> &edge, std::size_t f)
{
    return std::find(edge.begin(), edge.end(), f) != edge.end();
}

/// Union-find used to check tree-ness and per-feature connectivity.
struct Components
{
    std::vector<std::size_t> parent;

    explicit Components(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

}

Hypergraph hypergraph_of(const Database &db)
{
    Hypergraph schema(db.size());
    for (std::size_t t = 0; t < db.size(); ++t) {
        auto cols = db.column_features(t);
        schema[t].assign(cols.begin(), cols.end());
    }
    return schema;
}

Decomposition build_decomposition(const Hypergraph &schema)
{
    const std::size_t m = schema.size();
    if (m == 0)
        throw std::invalid_argument("decomposition of an empty schema");

    // occurrences[f] = number of remaining tables containing f
    std::vector<std::size_t> occurrences(num_features(schema), 0);
    for (const auto &edge : schema)
        for (std::size_t f : edge)
            ++occurrences[f];

    std::vector<bool> removed(m, false);
    Decomposition decomp{m, {}};

    for (std::size_t remaining = m; remaining > 1; --remaining) {
        bool found = false;
        for (std::size_t i = 0; i < m && !found; ++i) {
            if (removed[i])
                continue;
            for (std::size_t j = 0; j < m && !found; ++j) {
                if (j == i || removed[j])
                    continue;
                bool eligible = std::all_of(schema[i].begin(), schema[i].end(), [&](std::size_t f) {
                    return occurrences[f] == 1 || contains(schema[j], f);
                });
                if (!eligible)
                    continue;
                decomp.edges.emplace_back(i, j);
                removed[i] = true;
                for (std::size_t f : schema[i])
                    --occurrences[f];
                found = true;
            }
        }
        if (!found)
            throw CyclicJoin();
    }
    return decomp;
}

Decomposition build_decomposition(const Database &db) { return build_decomposition(hypergraph_of(db)); }

VerifyResult verify_decomposition(const Hypergraph &schema, const Decomposition &decomp)
{
    const std::size_t m = schema.size();
    if (decomp.vertices != m)
        return {false, "decomposition has " + std::to_string(decomp.vertices) + " vertices, schema has " +
                           std::to_string(m) + " tables"};
    if (m == 0 || decomp.edges.size() != m - 1)
        return {false, "not a tree: " + std::to_string(decomp.edges.size()) + " edges for " + std::to_string(m) +
                           " vertices"};

    Components tree(m);
    for (auto [a, b] : decomp.edges) {
        if (a >= m || b >= m)
            return {false, "edge references an unknown table"};
        if (!tree.unite(a, b))
            return {false, "not a tree: edge (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                               ") closes a cycle"};
    }

    const std::size_t d = num_features(schema);
    for (std::size_t f = 0; f < d; ++f) {
        Components sub(m);
        std::size_t holders = 0;
        for (std::size_t t = 0; t < m; ++t)
            holders += contains(schema[t], f);
        std::size_t merges = 0;
        for (auto [a, b] : decomp.edges)
            if (contains(schema[a], f) && contains(schema[b], f))
                merges += sub.unite(a, b);
        if (holders > 0 && merges + 1 != holders)
            return {false, "feature " + std::to_string(f) + " is disconnected in the tree"};
    }
    return {};
}

VerifyResult verify_decomposition(const Database &db, const Decomposition &decomp)
{
    auto result = verify_decomposition(hypergraph_of(db), decomp);
    if (!result.ok) {
        // Replace the numeric feature id with its name for readability.
        const std::string marker = "feature ";
        auto pos = result.diagnostic.find(marker);
        if (pos == 0) {
            auto end = result.diagnostic.find(' ', marker.size());
            auto id = std::stoul(result.diagnostic.substr(marker.size(), end - marker.size()));
            result.diagnostic = marker + "'" + db.features()[id] + "'" + result.diagnostic.substr(end);
        }
    }
    return result;
}

}
