#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "faqai/count.hpp"
#include "faqai/function_spec.hpp"
#include "faqai/semiring.hpp"
#include "faqai/table.hpp"

namespace faqai {

using FeatureFunctions = std::map<std::string, FunctionSpec, std::less<>>;

/// sum_j g_j(x_j) <= L. Features without a g entry contribute 0.
struct AdditiveInequality
{
    FeatureFunctions g;
    double L = kInf;

    FunctionSpec term(std::string_view feature) const;
};

enum class QueryKind { count, sumsum, sumprod };
enum class Mode { exact, approx };

std::string_view to_string(QueryKind kind);
std::string_view to_string(Mode mode);

struct QuerySpec
{
    QueryKind kind = QueryKind::count;
    /// Monoid name for sumsum, semiring name for sumprod, empty for count.
    std::string algebra;
    FeatureFunctions F;
    /// The engine accepts at most one; the oracle evaluates any number.
    std::vector<AdditiveInequality> inequalities;
    double epsilon = 0.1;
    std::optional<double> alpha;
    Mode mode = Mode::approx;
    /// Abort when an intermediate carrier value grows beyond this many entries.
    std::size_t max_entries = 1'000'000;

    /// The single inequality, or the vacuous one when there is none.
    AdditiveInequality inequality() const;
};

/// Parses a query file. Unknown fields are rejected (ParseError). `features` is the database's canonical
/// feature order, which vector-valued preset parameters are aligned with.
QuerySpec parse_query_json(const nlohmann::json &doc, std::span<const std::string> features);
QuerySpec parse_query(std::string_view text, std::span<const std::string> features);

nlohmann::json to_json(const FunctionSpec &f);
nlohmann::json to_json(const AdditiveInequality &ineq);
nlohmann::json to_json(const QuerySpec &spec);

struct Validation
{
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Checks arity (at most one inequality), algebra/kind compatibility, feature names and the value domain the
/// approximation guarantee needs (no negative factor values where they would be subtracted).
Validation validate(const QuerySpec &spec, const Database &db);

/// Result of a query: an exact or approximate row count, or an extended real.
struct QueryValue
{
    std::variant<Count, ExtReal> value;

    bool is_count() const { return std::holds_alternative<Count>(value); }
    Count count() const { return std::get<Count>(value); }
    ExtReal real() const { return std::get<ExtReal>(value); }
    /// The value as a real (counts converted).
    double as_real() const;

    std::string to_string() const;
    nlohmann::json to_json() const;

    friend bool operator==(const QueryValue &, const QueryValue &) = default;
};

std::string format_real(double v);

}
