#include "faqai/oracle.hpp"

#include <cstdio>

#include "faqai/errors.hpp"

namespace faqai {

namespace {

struct Joiner
{
    const Database &db;
    std::size_t cap;
    MaterializedJoin &out;
    std::vector<double> values;
    std::vector<bool> bound;

    void extend(std::size_t t)
    {
        if (t == db.size()) {
            if (out.num_rows() >= cap)
                throw CapExceeded("join has more than " + std::to_string(cap) + " rows");
            out.cells.insert(out.cells.end(), values.begin(), values.end());
            return;
        }
        const Table &table = db.table(t);
        auto cols = db.column_features(t);
        std::vector<std::size_t> fresh;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (!bound[cols[c]])
                fresh.push_back(cols[c]);
        for (std::size_t r = 0; r < table.num_rows(); ++r) {
            bool match = true;
            for (std::size_t c = 0; c < cols.size() && match; ++c)
                if (bound[cols[c]])
                    match = values[cols[c]] == table.at(r, c);
            if (!match)
                continue;
            for (std::size_t c = 0; c < cols.size(); ++c)
                values[cols[c]] = table.at(r, c);
            for (std::size_t f : fresh)
                bound[f] = true;
            extend(t + 1);
            for (std::size_t f : fresh)
                bound[f] = false;
        }
    }
};

bool satisfies(std::span<const double> row, const std::vector<std::vector<FunctionSpec>> &g,
               const std::vector<double> &L)
{
    for (std::size_t k = 0; k < g.size(); ++k) {
        double s = 0;
        for (std::size_t f = 0; f < row.size(); ++f)
            s += g[k][f](row[f]);
        if (!(s <= L[k]))
            return false;
    }
    return true;
}

}

MaterializedJoin materialize(const Database &db, std::size_t cap)
{
    MaterializedJoin out;
    out.schema.assign(db.features().begin(), db.features().end());
    Joiner joiner{db, cap, out, std::vector<double>(out.schema.size()), std::vector<bool>(out.schema.size())};
    joiner.extend(0);
    return out;
}

QueryValue oracle_eval(const Database &db, const QuerySpec &spec, std::size_t cap)
{
    const MaterializedJoin join = materialize(db, cap);
    const std::size_t d = join.schema.size();
    std::vector<std::vector<FunctionSpec>> g;
    std::vector<double> L;
    for (const auto &ineq : spec.inequalities) {
        g.emplace_back();
        for (const auto &f : join.schema)
            g.back().push_back(ineq.term(f));
        L.push_back(ineq.L);
    }
    for (const auto &[feature, fn] : spec.F)
        if (!db.feature_id(feature))
            throw UnknownName("unknown feature '" + feature + "'");
    std::vector<const FunctionSpec *> F(d, nullptr);
    for (std::size_t f = 0; f < d; ++f)
        if (auto it = spec.F.find(join.schema[f]); it != spec.F.end())
            F[f] = &it->second;

    switch (spec.kind) {
    case QueryKind::count: {
        Count n = 0;
        for (std::size_t r = 0; r < join.num_rows(); ++r)
            if (satisfies(join.row(r), g, L))
                n = checked_add(n, 1);
        return {n};
    }
    case QueryKind::sumsum: {
        const Monoid m = monoid_named(spec.algebra);
        ExtReal acc = m.identity;
        for (std::size_t r = 0; r < join.num_rows(); ++r) {
            auto row = join.row(r);
            if (!satisfies(row, g, L))
                continue;
            for (std::size_t f = 0; f < d; ++f)
                if (F[f])
                    acc = m.plus(acc, (*F[f])(row[f]));
        }
        return {acc};
    }
    case QueryKind::sumprod: {
        const Semiring s = semiring_named(spec.algebra);
        ExtReal acc = s.zero;
        for (std::size_t r = 0; r < join.num_rows(); ++r) {
            auto row = join.row(r);
            if (!satisfies(row, g, L))
                continue;
            ExtReal p = s.one;
            for (std::size_t f = 0; f < d; ++f)
                if (F[f])
                    p = s.times(p, (*F[f])(row[f]));
            acc = s.plus(acc, p);
        }
        return {acc};
    }
    }
    throw std::logic_error("unknown query kind");
}

namespace {

std::vector<Table> single_column_tables(std::span<const double> weights, bool negate)
{
    if (weights.empty())
        throw ValidationError("at least one weight is required");
    const int digits = weights.size() < 100 ? 2 : static_cast<int>(std::to_string(weights.size()).size());
    std::vector<Table> tables;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "t%0*zu", digits, i + 1);
        const double w = weights[i];
        tables.emplace_back(name, std::vector<std::string>{"x" + std::to_string(i + 1)},
                            std::vector<double>{negate ? w : 0.0, negate ? -w : w});
    }
    return tables;
}

AdditiveInequality sum_of(const Database &db, double coefficient, double L)
{
    AdditiveInequality ineq;
    for (const auto &f : db.features())
        ineq.g.emplace(f, FunctionSpec::scale(coefficient));
    ineq.L = L;
    return ineq;
}

}

Instance gen_knapsack(std::span<const double> weights, double capacity)
{
    Database db(single_column_tables(weights, false));
    auto ineq = sum_of(db, 1, capacity);
    return {std::move(db), {std::move(ineq)}};
}

Instance gen_partition(std::span<const double> weights)
{
    Database db(single_column_tables(weights, true));
    auto ge = sum_of(db, -1, 0);
    auto le = sum_of(db, 1, 0);
    return {std::move(db), {std::move(ge), std::move(le)}};
}

Count knapsack_count_dp(std::span<const std::uint64_t> weights, std::uint64_t capacity)
{
    std::vector<Count> ways(capacity + 1, 0);
    ways[0] = 1;
    for (std::uint64_t w : weights) {
        if (w > capacity)
            continue;
        if (w == 0) {
            for (Count &c : ways)
                c = checked_add(c, c);
            continue;
        }
        for (std::uint64_t s = capacity; s >= w; --s)
            ways[s] = checked_add(ways[s], ways[s - w]);
    }
    Count total = 0;
    for (Count c : ways)
        total = checked_add(total, c);
    return total;
}

}
