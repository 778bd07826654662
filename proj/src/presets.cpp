#include "faqai/presets.hpp"

#include <algorithm>

#include "faqai/errors.hpp"

namespace faqai {

namespace {

std::vector<std::string> aligned_features(std::span<const std::string> features, const PresetParams &p)
{
    std::vector<std::string> out;
    for (const auto &f : features)
        if (!p.label || f != *p.label)
            out.push_back(f);
    if (p.label && out.size() == features.size())
        throw ValidationError("label feature '" + *p.label + "' does not exist");
    return out;
}

void require(const std::vector<double> &v, std::size_t d, std::string_view what)
{
    if (v.size() != d)
        throw ValidationError(std::string(what) + " has " + std::to_string(v.size()) + " entries but there are " +
                              std::to_string(d) + " features");
}

double require(const std::optional<double> &v, std::string_view what)
{
    if (!v)
        throw ValidationError("preset needs '" + std::string(what) + "'");
    return *v;
}

AdditiveInequality halfspace(const std::vector<std::string> &features, const PresetParams &p)
{
    require(p.beta, features.size(), "beta");
    AdditiveInequality ineq;
    for (std::size_t i = 0; i < features.size(); ++i)
        ineq.g.emplace(features[i], FunctionSpec::scale(p.beta[i]));
    ineq.L = require(p.L, "L");
    return ineq;
}

AdditiveInequality sphere(const std::vector<std::string> &features, const PresetParams &p)
{
    require(p.y, features.size(), "y");
    AdditiveInequality ineq;
    for (std::size_t i = 0; i < features.size(); ++i)
        ineq.g.emplace(features[i], FunctionSpec::sq_offset(p.y[i]));
    double r = require(p.r, "r");
    ineq.L = r * r;
    return ineq;
}

AdditiveInequality ellipsoid(const std::vector<std::string> &features, const PresetParams &p)
{
    require(p.alpha, features.size(), "alpha");
    AdditiveInequality ineq;
    for (std::size_t i = 0; i < features.size(); ++i)
        ineq.g.emplace(features[i], FunctionSpec::scaled_square(p.alpha[i]));
    ineq.L = 1;
    return ineq;
}

}

QuerySpec preset(std::string_view name, const PresetParams &p, std::span<const std::string> all)
{
    if (p.label && name != "halfspace_count")
        throw ValidationError("only halfspace_count takes a label");
    const auto features = aligned_features(all, p);
    QuerySpec spec;

    if (name == "halfspace_count") {
        spec.inequalities.push_back(halfspace(features, p));
        if (p.label) {
            spec.kind = QueryKind::sumprod;
            spec.algebra = "counting";
            spec.F.emplace(*p.label, FunctionSpec::indicator_eq(-1, 1, 0));
        }
    } else if (name == "sphere_count") {
        spec.inequalities.push_back(sphere(features, p));
    } else if (name == "ellipsoid_count") {
        spec.inequalities.push_back(ellipsoid(features, p));
    } else if (name == "sum_abs_halfspace") {
        require(p.y, features.size(), "y");
        spec.kind = QueryKind::sumsum;
        spec.algebra = "sum";
        for (std::size_t i = 0; i < features.size(); ++i)
            spec.F.emplace(features[i], FunctionSpec::abs_offset(p.y[i]));
        spec.inequalities.push_back(halfspace(features, p));
    } else if (name == "sum_squares_ellipsoid") {
        spec.kind = QueryKind::sumsum;
        spec.algebra = "sum";
        for (const auto &f : features)
            spec.F.emplace(f, FunctionSpec::square());
        spec.inequalities.push_back(ellipsoid(features, p));
    } else if (name == "nnz_halfspace") {
        spec.kind = QueryKind::sumsum;
        spec.algebra = "sum";
        for (const auto &f : features)
            spec.F.emplace(f, FunctionSpec::indicator_nonzero());
        spec.inequalities.push_back(halfspace(features, p));
    } else if (name == "min_1norm_sphere") {
        spec.kind = QueryKind::sumprod;
        spec.algebra = "min-plus";
        for (const auto &f : features)
            spec.F.emplace(f, FunctionSpec::abs_offset(0));
        spec.inequalities.push_back(sphere(features, p));
    } else if (name == "max_sqdist_halfspace") {
        require(p.y, features.size(), "y");
        spec.kind = QueryKind::sumprod;
        spec.algebra = "max-plus";
        for (std::size_t i = 0; i < features.size(); ++i)
            spec.F.emplace(features[i], FunctionSpec::sq_offset(p.y[i]));
        spec.inequalities.push_back(halfspace(features, p));
    } else {
        throw UnknownName("unknown preset '" + std::string(name) + "'");
    }
    return spec;
}

}
