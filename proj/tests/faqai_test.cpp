#include <gtest/gtest.h>

#include "faqai/drivers.hpp"
#include "faqai/errors.hpp"
#include "faqai/oracle.hpp"
#include "faqai/presets.hpp"
#include "support/support.hpp"

using namespace faqai;

namespace {

Database db1()
{
    return Database({Table("t1", {"a", "b"}, {1, 1, 1, 2}), Table("t2", {"b", "c"}, {1, 5, 2, 6, 2, 7})});
}

AdditiveInequality sum_le(const Database &db, double L)
{
    AdditiveInequality ineq;
    for (const auto &f : db.features())
        ineq.g.emplace(f, FunctionSpec::identity());
    ineq.L = L;
    return ineq;
}

FeatureFunctions identities(const Database &db)
{
    FeatureFunctions F;
    for (const auto &f : db.features())
        F.emplace(f, FunctionSpec::identity());
    return F;
}

EvalOptions exact() { return {.mode = Mode::exact}; }
EvalOptions approx(double eps) { return {.mode = Mode::approx, .epsilon = eps}; }

QuerySpec spec_of(QueryKind kind, std::string algebra, FeatureFunctions F, AdditiveInequality ineq, Mode mode)
{
    QuerySpec s;
    s.kind = kind;
    s.algebra = std::move(algebra);
    s.F = std::move(F);
    s.inequalities = {std::move(ineq)};
    s.mode = mode;
    return s;
}

}

TEST(CountRows, Knapsack)
{
    const std::vector<double> w{1, 2, 3};
    auto inst = gen_knapsack(w, 3);
    auto decomp = build_decomposition(inst.db);
    EXPECT_EQ(count_rows(inst.db, decomp, inst.inequalities[0], exact()), 5u);
    const double approx_count = static_cast<double>(count_rows(inst.db, decomp, inst.inequalities[0], approx(0.1)));
    EXPECT_GE(approx_count, 5 / 1.1);
    EXPECT_LE(approx_count, 5 * 1.1);
}

TEST(CountRows, InfiniteThresholdCountsTheJoin)
{
    testkit::Rng rng(51);
    for (int i = 0; i < 100; ++i) {
        Database db = testkit::random_acyclic_db(rng);
        auto ineq = testkit::random_affine_inequality(rng, db);
        ineq.L = kInf;
        EXPECT_EQ(count_rows(db, build_decomposition(db), ineq, exact()), materialize(db).num_rows());
    }
}

TEST(CountRows, MonotoneInThreshold)
{
    testkit::Rng rng(52);
    for (int i = 0; i < 100; ++i) {
        Database db = testkit::random_acyclic_db(rng);
        auto decomp = build_decomposition(db);
        auto ineq = testkit::random_affine_inequality(rng, db);
        Count previous = 0;
        for (int L = -40; L <= 40; L += 4) {
            ineq.L = L;
            Count c = count_rows(db, decomp, ineq, exact());
            EXPECT_GE(c, previous);
            previous = c;
        }
    }
}

TEST(CountRows, CapAborts)
{
    const std::vector<double> w{1, 2, 4, 8, 16, 32, 64, 128};
    auto inst = gen_knapsack(w, 1000);
    EvalOptions opts = exact();
    opts.max_entries = 16;
    EXPECT_THROW(count_rows(inst.db, build_decomposition(inst.db), inst.inequalities[0], opts), CapExceeded);
}

TEST(SumSum, Db1Examples)
{
    Database db = db1();
    auto decomp = build_decomposition(db);
    EXPECT_EQ(sumsum(db, decomp, sum_monoid(), identities(db), sum_le(db, 9), exact()), 16);
    EXPECT_EQ(sumsum(db, decomp, sum_monoid(), identities(db), sum_le(db, 0), exact()), 0);
    EXPECT_EQ(sumsum(db, decomp, min_monoid(), identities(db), sum_le(db, 9), exact()), 1);
    EXPECT_EQ(sumsum(db, decomp, max_monoid(), identities(db), sum_le(db, 9), exact()), 6);
}

TEST(SumProd, Db1Examples)
{
    Database db = db1();
    auto decomp = build_decomposition(db);
    EXPECT_EQ(sumprod(db, decomp, min_plus_semiring(), identities(db), sum_le(db, 9), exact()), 7);
    EXPECT_EQ(sumprod(db, decomp, min_plus_semiring(), identities(db), sum_le(db, 8), exact()), 7);
    EXPECT_EQ(sumprod(db, decomp, min_plus_semiring(), identities(db), sum_le(db, 6), exact()), kInf);
    EXPECT_EQ(sumprod(db, decomp, max_plus_semiring(), identities(db), sum_le(db, 9), exact()), 9);
    EXPECT_EQ(sumprod(db, decomp, counting_semiring(), {}, sum_le(db, 9), exact()), 2);
}

TEST(Drivers, ExactModeMatchesOracle)
{
    testkit::Rng rng(53);
    for (int i = 0; i < 200; ++i) {
        Database db = testkit::random_acyclic_db(rng);
        auto decomp = build_decomposition(db);
        auto ineq = testkit::random_affine_inequality(rng, db);
        auto F = testkit::random_factors(rng, db, true);
        auto G = testkit::random_factors(rng, db, false);

        auto count = spec_of(QueryKind::count, "", {}, ineq, Mode::exact);
        EXPECT_EQ(run_query(db, decomp, count), oracle_eval(db, count)) << "instance " << i;
        for (const char *m : {"sum", "min", "max"}) {
            auto s = spec_of(QueryKind::sumsum, m, std::string(m) == "sum" ? F : G, ineq, Mode::exact);
            EXPECT_EQ(run_query(db, decomp, s), oracle_eval(db, s)) << m << " instance " << i;
        }
        for (const char *s : {"min-plus", "max-plus", "counting"}) {
            auto q = spec_of(QueryKind::sumprod, s, F, ineq, Mode::exact);
            EXPECT_EQ(run_query(db, decomp, q), oracle_eval(db, q)) << s << " instance " << i;
        }
    }
}

TEST(Drivers, ApproxModeWithinEpsilon)
{
    testkit::Rng rng(54);
    for (double eps : {0.1, 0.3})
        for (int i = 0; i < 100; ++i) {
            Database db = testkit::random_acyclic_db(rng);
            auto decomp = build_decomposition(db);
            auto ineq = testkit::random_affine_inequality(rng, db);
            auto F = testkit::random_factors(rng, db, true);
            auto count = spec_of(QueryKind::count, "", {}, ineq, Mode::approx);
            count.epsilon = eps;
            const double exact_count = oracle_eval(db, count).as_real();
            const double got = run_query(db, decomp, count).as_real();
            EXPECT_LE(std::abs(got - exact_count), eps * exact_count) << "instance " << i;
            for (const char *s : {"min-plus", "max-plus"}) {
                auto q = spec_of(QueryKind::sumprod, s, F, ineq, Mode::approx);
                q.epsilon = eps;
                const double truth = oracle_eval(db, q).as_real();
                const double value = run_query(db, decomp, q).as_real();
                if (std::isinf(truth) || truth == 0)
                    EXPECT_EQ(value, truth);
                else
                    EXPECT_LE(std::abs(value - truth), eps * truth) << s << " instance " << i;
            }
        }
}

TEST(Validate, Examples)
{
    Database db = db1();
    auto ok = spec_of(QueryKind::count, "", {}, sum_le(db, 9), Mode::approx);
    EXPECT_TRUE(validate(ok, db));

    FeatureFunctions negative{{"a", FunctionSpec::scale(-1)}};
    auto snake = spec_of(QueryKind::sumprod, "min-plus", negative, sum_le(db, 9), Mode::approx);
    auto v = validate(snake, db);
    EXPECT_FALSE(v);
    EXPECT_NE(v.reason.find("negative"), std::string::npos) << v.reason;

    auto two = ok;
    two.inequalities.push_back(sum_le(db, 3));
    v = validate(two, db);
    EXPECT_FALSE(v);
    EXPECT_NE(v.reason.find("FAQ-AI(2) approximation NP-hard"), std::string::npos) << v.reason;
}

TEST(Validate, AlgebraAndFeatureChecks)
{
    Database db = db1();
    auto s = spec_of(QueryKind::sumsum, "min-plus", identities(db), sum_le(db, 9), Mode::exact);
    EXPECT_FALSE(validate(s, db));
    s = spec_of(QueryKind::sumprod, "sum", identities(db), sum_le(db, 9), Mode::exact);
    EXPECT_FALSE(validate(s, db));
    s = spec_of(QueryKind::sumsum, "sum", {{"zz", FunctionSpec::identity()}}, sum_le(db, 9), Mode::exact);
    EXPECT_FALSE(validate(s, db));
    s = spec_of(QueryKind::sumsum, "min", {{"a", FunctionSpec::scale(-1)}}, sum_le(db, 9), Mode::exact);
    EXPECT_TRUE(validate(s, db));
    s = spec_of(QueryKind::sumsum, "sum", {{"a", FunctionSpec::scale(-1)}}, sum_le(db, 9), Mode::exact);
    EXPECT_FALSE(validate(s, db));
    s = spec_of(QueryKind::count, "", {}, sum_le(db, 9), Mode::approx);
    s.epsilon = 0;
    EXPECT_FALSE(validate(s, db));
    EXPECT_THROW(run_query(db, s), ValidationError);
}

TEST(Presets, SphereCount)
{
    Database db({Table("t", {"x"}, {0, 2})});
    auto spec = preset("sphere_count", {.y = {0}, .r = 1}, db.features());
    spec.mode = Mode::exact;
    EXPECT_EQ(run_query(db, spec), QueryValue{Count(1)});
    EXPECT_EQ(spec.inequality().L, 1);
}

TEST(Presets, LabelledHalfspaceCount)
{
    // Points (x1, x2) with a +-1 label; count negatively labelled points with x1 + x2 <= 0.
    Database db({Table("pts", {"x1", "x2", "y"}, {-1, 0, -1, 2, 1, -1, -3, 1, 1, 0, 0, -1, 1, -1, 1})});
    auto spec = preset("halfspace_count", {.beta = {1, 1}, .L = 0, .label = "y"}, db.features());
    EXPECT_EQ(spec.kind, QueryKind::sumprod);
    EXPECT_EQ(spec.algebra, "counting");
    EXPECT_EQ(spec.F.at("y"), FunctionSpec::indicator_eq(-1, 1, 0));
    EXPECT_EQ(spec.inequality().term("y"), FunctionSpec::constant(0));
    EXPECT_EQ(spec.inequality().term("x1"), FunctionSpec::scale(1));
    spec.mode = Mode::exact;
    EXPECT_EQ(run_query(db, spec).as_real(), 2);
    EXPECT_EQ(oracle_eval(db, spec).as_real(), 2);
}

TEST(Presets, MinOneNormSphere)
{
    Database db({Table("t", {"x"}, {3, 1, 12, 7})});
    auto spec = preset("min_1norm_sphere", {.y = {0}, .r = 10}, db.features());
    EXPECT_TRUE(validate(spec, db));
    spec.mode = Mode::exact;
    EXPECT_EQ(run_query(db, spec).as_real(), 1);
}

TEST(Presets, CatalogueAndErrors)
{
    const std::vector<std::string> features{"a", "b"};
    const PresetParams p{.beta = {1, 2}, .y = {0, 1}, .alpha = {1, 2}, .L = 3, .r = 2};
    for (const char *name : {"halfspace_count", "sphere_count", "ellipsoid_count", "sum_abs_halfspace",
                             "sum_squares_ellipsoid", "nnz_halfspace", "min_1norm_sphere", "max_sqdist_halfspace"})
        EXPECT_NO_THROW(preset(name, p, features)) << name;
    EXPECT_EQ(preset("max_sqdist_halfspace", p, features).algebra, "max-plus");
    EXPECT_EQ(preset("ellipsoid_count", p, features).inequality().term("b"), FunctionSpec::scaled_square(2));
    EXPECT_THROW(preset("snake_eyes", p, features), UnknownName);
    EXPECT_THROW(preset("halfspace_count", {.beta = {1}, .L = 0}, features), ValidationError);
}

TEST(QueryFile, ParsesAndRejectsUnknownFields)
{
    const std::vector<std::string> features{"a", "b"};
    auto spec = parse_query(R"({"kind": "sumprod", "algebra": "min-plus",
        "F": {"a": {"kind": "abs_offset", "y": 2}},
        "inequality": {"g": {"a": "identity", "b": {"kind": "affine", "a": 2, "b": -1}}, "L": "inf"},
        "epsilon": 0.2, "mode": "exact"})",
                            features);
    EXPECT_EQ(spec.kind, QueryKind::sumprod);
    EXPECT_EQ(spec.F.at("a"), FunctionSpec::abs_offset(2));
    EXPECT_EQ(spec.inequality().term("b"), FunctionSpec::affine(2, -1));
    EXPECT_EQ(spec.inequality().L, kInf);
    EXPECT_EQ(spec.epsilon, 0.2);
    EXPECT_EQ(spec.mode, Mode::exact);

    EXPECT_THROW(parse_query(R"({"kind": "count", "colour": 1})", features), ParseError);
    EXPECT_THROW(parse_query(R"({"inequality": {"g": {}, "L": 1, "op": "<="}})", features), ParseError);
    EXPECT_THROW(parse_query(R"({"kind": "count", "F": {"a": {"kind": "scale"}}})", features), ParseError);
    EXPECT_THROW(parse_query("{", features), ParseError);
    EXPECT_THROW(parse_query(R"({"preset": {"name": "sphere_count", "y": [0, 0], "r": 1}, "kind": "count"})", features),
                 ParseError);
}

TEST(QueryFile, RoundTripsThroughJson)
{
    const std::vector<std::string> features{"a", "b"};
    auto spec = parse_query(R"({"preset": {"name": "sum_abs_halfspace", "y": [1, 2], "beta": [1, -1], "L": 4}})",
                            features);
    EXPECT_EQ(spec.kind, QueryKind::sumsum);
    auto again = parse_query(to_json(spec).dump(), features);
    EXPECT_EQ(again.F, spec.F);
    EXPECT_EQ(again.inequality().g, spec.inequality().g);
    EXPECT_EQ(again.inequality().L, 4);
}
