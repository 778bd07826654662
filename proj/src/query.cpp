#include "faqai/query.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "faqai/errors.hpp"
#include "faqai/presets.hpp"

namespace faqai {

using nlohmann::json;

FunctionSpec AdditiveInequality::term(std::string_view feature) const
{
    auto it = g.find(feature);
    return it == g.end() ? FunctionSpec::constant(0) : it->second;
}

AdditiveInequality QuerySpec::inequality() const
{
    if (inequalities.empty())
        return {};
    return inequalities.front();
}

std::string_view to_string(QueryKind kind)
{
    switch (kind) {
    case QueryKind::count:
        return "count";
    case QueryKind::sumsum:
        return "sumsum";
    case QueryKind::sumprod:
        return "sumprod";
    }
    return "?";
}

std::string_view to_string(Mode mode) { return mode == Mode::exact ? "exact" : "approx"; }

std::string format_real(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void) ec;
    return std::string(buf, ptr);
}

double QueryValue::as_real() const
{
    return is_count() ? static_cast<double>(to_real(count())) : real();
}

std::string QueryValue::to_string() const
{
    return is_count() ? faqai::to_string(count()) : format_real(real());
}

json QueryValue::to_json() const
{
    if (is_count()) {
        Count c = count();
        if (c <= std::numeric_limits<std::uint64_t>::max())
            return static_cast<std::uint64_t>(c);
        return faqai::to_string(c);
    }
    double v = real();
    if (std::isinf(v))
        return format_real(v);
    return v;
}

namespace {

void reject_unknown(const json &obj, std::initializer_list<std::string_view> allowed, std::string_view where)
{
    if (!obj.is_object())
        throw ParseError(std::string(where) + " must be an object");
    for (const auto &[key, value] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError("unknown field '" + key + "' in " + std::string(where));
}

double real_of(const json &v, std::string_view what)
{
    if (v.is_number())
        return v.get<double>();
    if (v.is_string()) {
        auto s = v.get<std::string>();
        if (s == "inf" || s == "+inf" || s == "infinity")
            return kInf;
        if (s == "-inf" || s == "-infinity")
            return -kInf;
    }
    throw ParseError(std::string(what) + " must be a number or \"inf\"/\"-inf\"");
}

double param(const json &obj, const char *key)
{
    if (!obj.contains(key))
        throw ParseError(std::string("function is missing parameter '") + key + "'");
    return real_of(obj.at(key), key);
}

FunctionSpec function_of(const json &v)
{
    using K = FunctionSpec::Kind;
    if (v.is_string()) {
        switch (kind_from_name(v.get<std::string>())) {
        case K::identity:
            return FunctionSpec::identity();
        case K::square:
            return FunctionSpec::square();
        case K::indicator_nonzero:
            return FunctionSpec::indicator_nonzero();
        default:
            throw ParseError("function '" + v.get<std::string>() + "' needs parameters");
        }
    }
    if (v.is_number())
        return FunctionSpec::constant(v.get<double>());
    if (!v.is_object() || !v.contains("kind"))
        throw ParseError("function must be a name, a number or an object with 'kind'");
    const K kind = kind_from_name(v.at("kind").get<std::string>());
    switch (kind) {
    case K::constant:
        reject_unknown(v, {"kind", "c"}, "constant");
        return FunctionSpec::constant(param(v, "c"));
    case K::identity:
        reject_unknown(v, {"kind"}, "identity");
        return FunctionSpec::identity();
    case K::scale:
        reject_unknown(v, {"kind", "beta"}, "scale");
        return FunctionSpec::scale(param(v, "beta"));
    case K::affine:
        reject_unknown(v, {"kind", "a", "b"}, "affine");
        return FunctionSpec::affine(param(v, "a"), param(v, "b"));
    case K::square:
        reject_unknown(v, {"kind"}, "square");
        return FunctionSpec::square();
    case K::abs_offset:
        reject_unknown(v, {"kind", "y"}, "abs_offset");
        return FunctionSpec::abs_offset(param(v, "y"));
    case K::sq_offset:
        reject_unknown(v, {"kind", "y"}, "sq_offset");
        return FunctionSpec::sq_offset(param(v, "y"));
    case K::scaled_square:
        reject_unknown(v, {"kind", "alpha"}, "scaled_square");
        return FunctionSpec::scaled_square(param(v, "alpha"));
    case K::indicator_eq:
        reject_unknown(v, {"kind", "value", "then", "else"}, "indicator_eq");
        return FunctionSpec::indicator_eq(param(v, "value"), param(v, "then"), param(v, "else"));
    case K::indicator_nonzero:
        reject_unknown(v, {"kind"}, "indicator_nonzero");
        return FunctionSpec::indicator_nonzero();
    }
    throw ParseError("unreachable function kind");
}

FeatureFunctions functions_of(const json &obj, std::string_view where)
{
    if (!obj.is_object())
        throw ParseError(std::string(where) + " must map feature names to functions");
    FeatureFunctions out;
    for (const auto &[feature, fn] : obj.items())
        out.emplace(feature, function_of(fn));
    return out;
}

AdditiveInequality inequality_of(const json &obj)
{
    reject_unknown(obj, {"g", "L"}, "inequality");
    AdditiveInequality ineq;
    if (obj.contains("g"))
        ineq.g = functions_of(obj.at("g"), "g");
    if (!obj.contains("L"))
        throw ParseError("inequality is missing 'L'");
    ineq.L = real_of(obj.at("L"), "L");
    return ineq;
}

std::vector<double> vector_of(const json &obj, const char *key)
{
    if (!obj.contains(key))
        return {};
    const auto &v = obj.at(key);
    if (v.is_number())
        return {v.get<double>()};
    std::vector<double> out;
    for (const auto &x : v)
        out.push_back(real_of(x, key));
    return out;
}

QueryKind kind_of(const std::string &s)
{
    if (s == "count")
        return QueryKind::count;
    if (s == "sumsum")
        return QueryKind::sumsum;
    if (s == "sumprod")
        return QueryKind::sumprod;
    throw ParseError("unknown query kind '" + s + "'");
}

}

QuerySpec parse_query_json(const json &doc, std::span<const std::string> features)
{
    reject_unknown(doc,
                   {"kind", "algebra", "F", "inequality", "inequalities", "epsilon", "alpha", "mode", "max_entries",
                    "preset"},
                   "query");
    QuerySpec spec;
    if (doc.contains("preset")) {
        for (const char *key : {"kind", "algebra", "F", "inequality", "inequalities"})
            if (doc.contains(key))
                throw ParseError(std::string("'") + key + "' cannot be combined with 'preset'");
        const auto &p = doc.at("preset");
        reject_unknown(p, {"name", "beta", "y", "alpha", "L", "r", "label"}, "preset");
        if (!p.contains("name"))
            throw ParseError("preset is missing 'name'");
        PresetParams params;
        params.beta = vector_of(p, "beta");
        params.y = vector_of(p, "y");
        params.alpha = vector_of(p, "alpha");
        if (p.contains("L"))
            params.L = real_of(p.at("L"), "L");
        if (p.contains("r"))
            params.r = real_of(p.at("r"), "r");
        if (p.contains("label"))
            params.label = p.at("label").get<std::string>();
        spec = preset(p.at("name").get<std::string>(), params, features);
    } else {
        if (doc.contains("kind"))
            spec.kind = kind_of(doc.at("kind").get<std::string>());
        if (doc.contains("algebra"))
            spec.algebra = doc.at("algebra").get<std::string>();
        if (doc.contains("F"))
            spec.F = functions_of(doc.at("F"), "F");
        if (doc.contains("inequality") && doc.contains("inequalities"))
            throw ParseError("give either 'inequality' or 'inequalities'");
        if (doc.contains("inequality"))
            spec.inequalities.push_back(inequality_of(doc.at("inequality")));
        if (doc.contains("inequalities"))
            for (const auto &i : doc.at("inequalities"))
                spec.inequalities.push_back(inequality_of(i));
    }
    if (doc.contains("epsilon"))
        spec.epsilon = real_of(doc.at("epsilon"), "epsilon");
    if (doc.contains("alpha"))
        spec.alpha = real_of(doc.at("alpha"), "alpha");
    if (doc.contains("mode")) {
        auto m = doc.at("mode").get<std::string>();
        if (m == "exact")
            spec.mode = Mode::exact;
        else if (m == "approx")
            spec.mode = Mode::approx;
        else
            throw ParseError("unknown mode '" + m + "'");
    }
    if (doc.contains("max_entries"))
        spec.max_entries = doc.at("max_entries").get<std::size_t>();
    return spec;
}

QuerySpec parse_query(std::string_view text, std::span<const std::string> features)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("malformed query JSON: ") + e.what());
    }
    try {
        return parse_query_json(doc, features);
    } catch (const json::exception &e) {
        throw ParseError(std::string("invalid query: ") + e.what());
    }
}

namespace {

json real_json(double v)
{
    if (std::isinf(v))
        return format_real(v);
    return v;
}

}

json to_json(const FunctionSpec &f)
{
    using K = FunctionSpec::Kind;
    json j{{"kind", std::string(kind_name(f.kind()))}};
    switch (f.kind()) {
    case K::constant:
        j["c"] = real_json(f.p0());
        break;
    case K::scale:
        j["beta"] = f.p0();
        break;
    case K::affine:
        j["a"] = f.p0();
        j["b"] = f.p1();
        break;
    case K::abs_offset:
    case K::sq_offset:
        j["y"] = f.p0();
        break;
    case K::scaled_square:
        j["alpha"] = f.p0();
        break;
    case K::indicator_eq:
        j["value"] = f.p0();
        j["then"] = real_json(f.p1());
        j["else"] = real_json(f.p2());
        break;
    default:
        break;
    }
    return j;
}

json to_json(const AdditiveInequality &ineq)
{
    json g = json::object();
    for (const auto &[feature, fn] : ineq.g)
        g[feature] = to_json(fn);
    return {{"g", g}, {"L", real_json(ineq.L)}};
}

json to_json(const QuerySpec &spec)
{
    json j;
    j["kind"] = std::string(to_string(spec.kind));
    if (!spec.algebra.empty())
        j["algebra"] = spec.algebra;
    if (!spec.F.empty()) {
        json f = json::object();
        for (const auto &[feature, fn] : spec.F)
            f[feature] = to_json(fn);
        j["F"] = f;
    }
    if (spec.inequalities.size() == 1) {
        j["inequality"] = to_json(spec.inequalities.front());
    } else if (!spec.inequalities.empty()) {
        j["inequalities"] = json::array();
        for (const auto &i : spec.inequalities)
            j["inequalities"].push_back(to_json(i));
    }
    j["epsilon"] = spec.epsilon;
    if (spec.alpha)
        j["alpha"] = *spec.alpha;
    j["mode"] = std::string(to_string(spec.mode));
    return j;
}

Validation validate(const QuerySpec &spec, const Database &db)
{
    auto reject = [](std::string reason) { return Validation{false, std::move(reason)}; };

    if (spec.inequalities.size() > 1)
        return reject(std::to_string(spec.inequalities.size()) +
                      " additive inequalities; FAQ-AI(2) approximation NP-hard: approximating even the row count "
                      "under two additive inequalities within any constant factor is NP-hard (reduction from "
                      "Partition), so only FAQ-AI(1) queries are evaluated");

    for (const auto &[feature, fn] : spec.F)
        if (!db.feature_id(feature))
            return reject("F names unknown feature '" + feature + "'");
    for (const auto &ineq : spec.inequalities)
        for (const auto &[feature, fn] : ineq.g)
            if (!db.feature_id(feature))
                return reject("inequality names unknown feature '" + feature + "'");

    if (spec.mode == Mode::approx) {
        if (!(spec.epsilon > 0))
            return reject("epsilon must be positive");
        if (spec.alpha && !(*spec.alpha > 0))
            return reject("alpha must be positive");
    }

    auto check_values = [&](auto &&admissible, const std::string &what) -> Validation {
        for (const auto &[feature, fn] : spec.F)
            for (double v : active_domain(db, feature)) {
                double fv = fn(v);
                if (!admissible(fv))
                    return reject("F_" + feature + "(" + format_real(v) + ") = " + format_real(fv) + " " + what);
            }
        return {};
    };

    switch (spec.kind) {
    case QueryKind::count:
        if (!spec.algebra.empty() && spec.algebra != "counting")
            return reject("count queries use the counting algebra, not '" + spec.algebra + "'");
        if (!spec.F.empty())
            return reject("count queries take no factor functions; use sumprod over 'counting'");
        return {};
    case QueryKind::sumsum: {
        Monoid m;
        try {
            m = monoid_named(spec.algebra);
        } catch (const UnknownName &e) {
            return reject(std::string("sumsum needs a monoid: ") + e.what());
        }
        if (!m.repeatable || !m.no_error)
            return reject("monoid '" + spec.algebra + "' is not repeatable and error-free");
        if (m.nonnegative_domain)
            return check_values([](double x) { return x >= 0; },
                                "is negative; sums of mixed-sign terms cannot be approximated (subtraction problem)");
        return check_values([](double x) { return !std::isnan(x); }, "is not a number");
    }
    case QueryKind::sumprod: {
        Semiring s;
        try {
            s = semiring_named(spec.algebra);
        } catch (const UnknownName &e) {
            return reject(std::string("sumprod needs a semiring: ") + e.what());
        }
        if (s.plus_monotonicity == Monotonicity::none || s.plus_error != ErrorClass::no_error ||
            s.times_error != ErrorClass::bounded_error)
            return reject("semiring '" + spec.algebra + "' lacks a monotone error-free plus and bounded-error times");
        return check_values(
            [&](double x) { return x == s.zero || x == s.one || (x >= 0 && !std::isinf(x)); },
            "is outside R+ and the identities; negative terms cannot be approximated (subtraction problem)");
    }
    }
    return {};
}

}
