#include "faqai/drivers.hpp"

#include <map>

#include "faqai/errors.hpp"

namespace faqai {

EvalOptions EvalOptions::of(const QuerySpec &spec, EngineStats *stats)
{
    return {spec.mode, spec.epsilon, spec.alpha, spec.max_entries, std::nullopt, stats};
}

ApproxParams approx_params(const Database &db, const EvalOptions &opts)
{
    auto s = db.stats();
    return ApproxParams::make(opts.epsilon, s.m, s.n, opts.alpha);
}

namespace {

template <class T>
T capped(T value, std::size_t cap)
{
    if (value.size() > cap)
        throw CapExceeded("intermediate value has " + std::to_string(value.size()) + " entries, above the cap of " +
                          std::to_string(cap));
    return value;
}

template <class T, class Union, class Convolve>
void set_ops(EngineConfig<T> &config, const Union &u, const Convolve &c, std::size_t cap)
{
    config.plus = [u, cap](const T &a, const T &b) { return capped(u(a, b), cap); };
    config.times = [c, cap](const T &a, const T &b) { return capped(c(a, b), cap); };
    config.size_of = [](const T &v) { return v.size(); };
}

EngineConfig<Multiset> multiset_config(const Database &db, const EvalOptions &opts)
{
    EngineConfig<Multiset> config{.zero = Multiset(), .one = Multiset::unit()};
    if (opts.mode == Mode::exact) {
        set_ops(config, ms_union, ms_convolve, opts.max_entries);
    } else {
        double alpha = approx_params(db, opts).alpha;
        set_ops(
            config, [alpha](const Multiset &a, const Multiset &b) { return approx_union(a, b, alpha); },
            [alpha](const Multiset &a, const Multiset &b) { return approx_convolve(a, b, alpha); },
            opts.max_entries);
    }
    return config;
}

LeafFactors<Multiset> constraint_factors(const Database &db, const AdditiveInequality &ineq)
{
    std::vector<FunctionSpec> g;
    for (const auto &f : db.features())
        g.push_back(ineq.term(f));
    return [g = std::move(g)](std::size_t feature, double value) { return Multiset::singleton(g[feature](value)); };
}

}

Multiset constraint_distribution(const Database &db, const Decomposition &decomp, const AdditiveInequality &ineq,
                                 const EvalOptions &opts)
{
    auto config = multiset_config(db, opts);
    config.root = opts.root;
    return evaluate<Multiset>(db, decomp, constraint_factors(db, ineq), config, opts.stats);
}

Count count_rows(const Database &db, const Decomposition &decomp, const AdditiveInequality &ineq,
                 const EvalOptions &opts)
{
    return ms_triangle(constraint_distribution(db, decomp, ineq, opts), ineq.L);
}

ExtReal sumsum(const Database &db, const Decomposition &decomp, const Monoid &monoid, const FeatureFunctions &F,
               const AdditiveInequality &ineq, const EvalOptions &opts)
{
    if (!monoid.repeatable || !monoid.no_error)
        throw ValidationError("monoid '" + std::string(monoid.name) + "' is not repeatable and error-free");
    const auto assignment = assign_features(db);
    const auto config = multiset_config(db, opts);
    const auto factors = constraint_factors(db, ineq);

    ExtReal result = monoid.identity;
    for (std::size_t t = 0; t < db.size(); ++t) {
        std::vector<std::size_t> wanted;
        for (std::size_t f : assignment[t])
            if (F.find(db.features()[f]) != F.end())
                wanted.push_back(f);
        if (wanted.empty())
            continue;
        EngineTable<Multiset> root = evaluate_to_root<Multiset>(db, decomp, factors, config, t, opts.stats);
        const Table &table = db.table(t);
        auto cols = db.column_features(t);
        for (std::size_t f : wanted) {
            const std::size_t col = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), f) - cols.begin());
            std::map<double, Count> u;
            for (std::size_t i = 0; i < root.rows.size(); ++i) {
                Count c = ms_triangle(root.q[i], ineq.L);
                if (c == 0)
                    continue;
                Count &slot = u[table.at(root.rows[i], col)];
                slot = checked_add(slot, c);
            }
            const FunctionSpec &fn = F.find(db.features()[f])->second;
            for (const auto &[v, count] : u)
                result = monoid.plus(result, repeat(monoid, fn(v), count));
        }
    }
    return result;
}

WeightedSet sumprod_distribution(const Database &db, const Decomposition &decomp, const Semiring &semiring,
                                 const FeatureFunctions &F, const AdditiveInequality &ineq, const EvalOptions &opts)
{
    std::vector<FunctionSpec> g;
    std::vector<std::optional<FunctionSpec>> f;
    for (const auto &name : db.features()) {
        g.push_back(ineq.term(name));
        auto it = F.find(name);
        f.push_back(it == F.end() ? std::nullopt : std::optional(it->second));
    }
    LeafFactors<WeightedSet> factors = [&](std::size_t feature, double value) {
        return lift(g[feature](value), f[feature] ? (*f[feature])(value) : semiring.one, semiring);
    };

    EngineConfig<WeightedSet> config{.zero = WeightedSet(semiring), .one = WeightedSet::unit(semiring)};
    if (opts.mode == Mode::exact) {
        set_ops(config, ws_plus, ws_convolve, opts.max_entries);
    } else {
        if (semiring.plus_monotonicity == Monotonicity::none)
            throw ValidationError("semiring '" + std::string(semiring.name) + "' has no monotone plus");
        double alpha = approx_params(db, opts).alpha;
        set_ops(
            config, [alpha](const WeightedSet &a, const WeightedSet &b) { return approx_union(a, b, alpha); },
            [alpha](const WeightedSet &a, const WeightedSet &b) { return approx_convolve(a, b, alpha); },
            opts.max_entries);
    }
    config.root = opts.root;
    return evaluate<WeightedSet>(db, decomp, factors, config, opts.stats);
}

ExtReal sumprod(const Database &db, const Decomposition &decomp, const Semiring &semiring, const FeatureFunctions &F,
                const AdditiveInequality &ineq, const EvalOptions &opts)
{
    return ws_triangle(sumprod_distribution(db, decomp, semiring, F, ineq, opts), ineq.L);
}

QueryValue run_query(const Database &db, const Decomposition &decomp, const QuerySpec &spec, EngineStats *stats)
{
    if (auto v = validate(spec, db); !v)
        throw ValidationError(v.reason);
    const auto opts = EvalOptions::of(spec, stats);
    const auto ineq = spec.inequality();
    switch (spec.kind) {
    case QueryKind::count:
        return {count_rows(db, decomp, ineq, opts)};
    case QueryKind::sumsum:
        return {sumsum(db, decomp, monoid_named(spec.algebra), spec.F, ineq, opts)};
    case QueryKind::sumprod:
        return {sumprod(db, decomp, semiring_named(spec.algebra), spec.F, ineq, opts)};
    }
    throw std::logic_error("unknown query kind");
}

QueryValue run_query(const Database &db, const QuerySpec &spec, EngineStats *stats)
{
    return run_query(db, build_decomposition(db), spec, stats);
}

}
