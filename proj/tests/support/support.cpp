#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace faqai::testkit {

bool gyo_acyclic(const Hypergraph &schema)
{
    std::vector<std::set<std::size_t>> edges;
    for (const auto &e : schema)
        edges.emplace_back(e.begin(), e.end());
    bool changed = true;
    while (changed && edges.size() > 1) {
        changed = false;
        std::map<std::size_t, int> holders;
        for (const auto &e : edges)
            for (std::size_t v : e)
                ++holders[v];
        for (auto &e : edges)
            for (auto it = e.begin(); it != e.end();)
                if (holders[*it] == 1) {
                    it = e.erase(it);
                    changed = true;
                } else {
                    ++it;
                }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = 0; j < edges.size(); ++j)
                if (i != j && std::includes(edges[j].begin(), edges[j].end(), edges[i].begin(), edges[i].end())) {
                    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                    break;
                }
            if (changed)
                break;
        }
    }
    return edges.size() <= 1;
}

Hypergraph random_schema(Rng &rng, std::size_t max_m, std::size_t max_d)
{
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_m)));
    const auto d = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_d)));
    Hypergraph schema(m);
    for (auto &edge : schema) {
        for (std::size_t f = 0; f < d; ++f)
            if (uniform_int(rng, 0, 2) == 0)
                edge.push_back(f);
        if (edge.empty())
            edge.push_back(static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(d) - 1)));
    }
    return schema;
}

Database random_acyclic_db(Rng &rng, const RandomDbParams &p)
{
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(p.max_m)));
    const auto d = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(p.max_d)));
    std::vector<std::vector<std::size_t>> adjacency(m);
    for (std::size_t t = 1; t < m; ++t) {
        auto parent = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(t) - 1));
        adjacency[t].push_back(parent);
        adjacency[parent].push_back(t);
    }

    std::vector<std::set<std::size_t>> holds(m);
    for (std::size_t f = 0; f < d; ++f) {
        const auto size = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(m)));
        std::set<std::size_t> subtree{static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(m) - 1))};
        while (subtree.size() < size) {
            std::vector<std::size_t> frontier;
            for (std::size_t t : subtree)
                for (std::size_t u : adjacency[t])
                    if (!subtree.count(u))
                        frontier.push_back(u);
            subtree.insert(frontier[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(frontier.size()) - 1))]);
        }
        for (std::size_t t : subtree)
            holds[t].insert(f);
    }
    // Tables left without features borrow one from a neighbour, which keeps every subtree connected.
    for (bool again = true; again;) {
        again = false;
        for (std::size_t t = 0; t < m; ++t) {
            if (!holds[t].empty())
                continue;
            for (std::size_t u : adjacency[t])
                if (!holds[u].empty()) {
                    holds[t].insert(*holds[u].begin());
                    break;
                }
            again = again || holds[t].empty();
        }
    }

    std::vector<std::pair<int, int>> domain(d);
    for (auto &[lo, hi] : domain) {
        lo = uniform_int(rng, p.lo, p.hi);
        hi = std::min(p.hi, lo + uniform_int(rng, 0, 3));
    }
    std::vector<Table> tables;
    for (std::size_t t = 0; t < m; ++t) {
        std::vector<std::string> schema;
        std::vector<std::size_t> cols(holds[t].begin(), holds[t].end());
        std::shuffle(cols.begin(), cols.end(), rng);
        for (std::size_t f : cols)
            schema.push_back("f" + std::to_string(f + 1));
        const int rows = uniform_int(rng, 1, static_cast<int>(p.max_n));
        std::vector<double> cells;
        for (int r = 0; r < rows; ++r)
            for (std::size_t f : cols)
                cells.push_back(uniform_int(rng, domain[f].first, domain[f].second));
        tables.emplace_back("t" + std::to_string(t + 1), std::move(schema), std::move(cells));
    }
    return Database(std::move(tables));
}

AdditiveInequality random_affine_inequality(Rng &rng, const Database &db)
{
    AdditiveInequality ineq;
    for (const auto &f : db.features())
        if (uniform_int(rng, 0, 3) != 0)
            ineq.g.emplace(f, FunctionSpec::affine(uniform_int(rng, -3, 3), uniform_int(rng, -2, 2)));
    ineq.L = uniform_int(rng, -6, 6) * static_cast<int>(db.features().size());
    if (uniform_int(rng, 0, 9) == 0)
        ineq.L = kInf;
    return ineq;
}

FeatureFunctions random_factors(Rng &rng, const Database &db, bool nonnegative)
{
    FeatureFunctions F;
    for (const auto &f : db.features()) {
        if (uniform_int(rng, 0, 3) == 0)
            continue;
        const double y = uniform_int(rng, -3, 3);
        switch (uniform_int(rng, 0, nonnegative ? 4 : 6)) {
        case 0:
            F.emplace(f, FunctionSpec::abs_offset(y));
            break;
        case 1:
            F.emplace(f, FunctionSpec::sq_offset(y));
            break;
        case 2:
            F.emplace(f, FunctionSpec::square());
            break;
        case 3:
            F.emplace(f, FunctionSpec::indicator_nonzero());
            break;
        case 4:
            F.emplace(f, FunctionSpec::constant(uniform_int(rng, 0, 4)));
            break;
        case 5:
            F.emplace(f, FunctionSpec::identity());
            break;
        default:
            F.emplace(f, FunctionSpec::affine(uniform_int(rng, -3, 3), y));
            break;
        }
    }
    return F;
}

Multiset random_multiset(Rng &rng, std::size_t max_size, int key_range, Count max_count)
{
    const auto size = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(max_size)));
    std::uniform_int_distribution<std::uint64_t> count(1, static_cast<std::uint64_t>(max_count));
    std::vector<Multiset::Entry> entries;
    for (std::size_t i = 0; i < size; ++i)
        entries.push_back({static_cast<double>(uniform_int(rng, -key_range, key_range)), count(rng)});
    return Multiset::from_entries(std::move(entries));
}

WeightedSet random_weighted_set(Rng &rng, const Semiring &base, std::size_t max_size, int key_range)
{
    const auto size = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(max_size)));
    std::vector<WeightedSet::Entry> entries;
    for (std::size_t i = 0; i < size; ++i) {
        double w = uniform_int(rng, 0, 10) == 0 ? base.one : uniform_int(rng, 0, 50);
        entries.push_back({static_cast<double>(uniform_int(rng, -key_range, key_range)), w});
    }
    return WeightedSet::from_entries(base, std::move(entries));
}

}
