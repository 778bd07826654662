#include "faqai/semiring.hpp"

#include <algorithm>

#include "faqai/errors.hpp"

namespace faqai {

namespace {

ExtReal add(ExtReal a, ExtReal b) { return a + b; }
ExtReal mul(ExtReal a, ExtReal b) { return a * b; }
ExtReal min_op(ExtReal a, ExtReal b) { return std::min(a, b); }
ExtReal max_op(ExtReal a, ExtReal b) { return std::max(a, b); }

// x + y with +inf absorbing, so that (+inf) + (-inf) never appears in min-plus.
ExtReal add_pos_absorbing(ExtReal a, ExtReal b) { return (a == kInf || b == kInf) ? kInf : a + b; }
ExtReal add_neg_absorbing(ExtReal a, ExtReal b) { return (a == -kInf || b == -kInf) ? -kInf : a + b; }

}

Semiring counting_semiring()
{
    return {"counting", add, mul, 0.0, 1.0, Monotonicity::increasing, ErrorClass::no_error,
            ErrorClass::bounded_error};
}

Semiring min_plus_semiring()
{
    return {"min-plus", min_op, add_pos_absorbing, kInf, 0.0, Monotonicity::decreasing, ErrorClass::no_error,
            ErrorClass::bounded_error};
}

Semiring max_plus_semiring()
{
    return {"max-plus", max_op, add_neg_absorbing, -kInf, 0.0, Monotonicity::increasing, ErrorClass::no_error,
            ErrorClass::bounded_error};
}

Monoid sum_monoid() { return {"sum", add, 0.0, true, true, true}; }
Monoid min_monoid() { return {"min", min_op, kInf, true, true, false}; }
Monoid max_monoid() { return {"max", max_op, -kInf, true, true, false}; }

std::variant<Semiring, Monoid> make_named(std::string_view name)
{
    if (name == "counting")
        return counting_semiring();
    if (name == "min-plus")
        return min_plus_semiring();
    if (name == "max-plus")
        return max_plus_semiring();
    if (name == "sum")
        return sum_monoid();
    if (name == "min")
        return min_monoid();
    if (name == "max")
        return max_monoid();
    throw UnknownName("unknown semiring or monoid '" + std::string(name) + "'");
}

Semiring semiring_named(std::string_view name)
{
    auto v = make_named(name);
    if (auto *s = std::get_if<Semiring>(&v))
        return *s;
    throw UnknownName("'" + std::string(name) + "' is a monoid, not a semiring");
}

Monoid monoid_named(std::string_view name)
{
    auto v = make_named(name);
    if (auto *m = std::get_if<Monoid>(&v))
        return *m;
    throw UnknownName("'" + std::string(name) + "' is a semiring, not a monoid");
}

ExtReal repeat(const Monoid &m, ExtReal x, Count k)
{
    ExtReal result = m.identity;
    ExtReal power = x;
    while (k != 0) {
        if (k & 1)
            result = m.plus(result, power);
        k >>= 1;
        if (k != 0)
            power = m.plus(power, power);
    }
    return result;
}

bool AxiomReport::violates(std::string_view law) const
{
    return std::any_of(violations.begin(), violations.end(), [&](const auto &v) { return v.law == law; });
}

AxiomReport check_axioms(const Semiring &s, std::span<const ExtReal> samples)
{
    AxiomReport report;
    auto check = [&](bool holds, const char *law, ExtReal a, ExtReal b, ExtReal c) {
        if (!holds && !report.violates(law))
            report.violations.push_back({law, {a, b, c}});
    };
    const auto plus = s.plus;
    const auto times = s.times;
    for (ExtReal a : samples) {
        check(plus(a, s.zero) == a, "additive identity", a, s.zero, s.zero);
        check(times(a, s.one) == a, "multiplicative identity", a, s.one, s.one);
        check(times(a, s.zero) == s.zero, "annihilation", a, s.zero, s.zero);
        for (ExtReal b : samples) {
            check(plus(a, b) == plus(b, a), "additive commutativity", a, b, b);
            check(times(a, b) == times(b, a), "multiplicative commutativity", a, b, b);
            for (ExtReal c : samples) {
                check(plus(a, plus(b, c)) == plus(plus(a, b), c), "additive associativity", a, b, c);
                check(times(a, times(b, c)) == times(times(a, b), c), "multiplicative associativity", a, b, c);
                check(times(a, plus(b, c)) == plus(times(a, b), times(a, c)), "distributivity", a, b, c);
            }
        }
    }
    return report;
}

}
