#pragma once

#include <array>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "faqai/count.hpp"

namespace faqai {

/// A real number or one of the infinities. Infinite values only arise inside semiring arithmetic.
using ExtReal = double;

inline constexpr ExtReal kInf = std::numeric_limits<double>::infinity();

enum class Monotonicity { increasing, decreasing, none };

/// Approximation behaviour of an operator under (1 + delta) perturbation of its inputs.
enum class ErrorClass { no_error, bounded_error, unknown };

using BinaryOp = ExtReal (*)(ExtReal, ExtReal);

/// (R, plus, times, zero, one) over extended reals, with the metadata the approximation scheme relies on.
///
/// The name must refer to storage that outlives the descriptor (the named instances use literals).
struct Semiring
{
    std::string_view name;
    BinaryOp plus = nullptr;
    BinaryOp times = nullptr;
    ExtReal zero = 0;
    ExtReal one = 1;
    Monotonicity plus_monotonicity = Monotonicity::none;
    ErrorClass plus_error = ErrorClass::unknown;
    ErrorClass times_error = ErrorClass::unknown;

    bool is_zero(ExtReal x) const { return x == zero; }

    /// Same operations and identities; the name is informational.
    bool operator==(const Semiring &o) const
    {
        return plus == o.plus && times == o.times && zero == o.zero && one == o.one;
    }
};

/// (R, plus, identity). `nonnegative_domain` marks monoids whose values must not mix signs for the
/// approximation guarantee to hold.
struct Monoid
{
    std::string_view name;
    BinaryOp plus = nullptr;
    ExtReal identity = 0;
    bool repeatable = false;
    bool no_error = false;
    bool nonnegative_domain = false;
};

Semiring counting_semiring();
Semiring min_plus_semiring();
Semiring max_plus_semiring();

Monoid sum_monoid();
Monoid min_monoid();
Monoid max_monoid();

/// "counting", "min-plus", "max-plus" yield semirings; "sum", "min", "max" yield monoids.
std::variant<Semiring, Monoid> make_named(std::string_view name);
Semiring semiring_named(std::string_view name);
Monoid monoid_named(std::string_view name);

/// Plus-fold of k copies of x by repeated doubling. k = 0 yields the identity.
ExtReal repeat(const Monoid &m, ExtReal x, Count k);

struct AxiomViolation
{
    std::string law;
    std::array<ExtReal, 3> witness{};
};

struct AxiomReport
{
    /// One entry per violated law, with the first witness found.
    std::vector<AxiomViolation> violations;

    bool ok() const { return violations.empty(); }
    bool violates(std::string_view law) const;
    explicit operator bool() const { return ok(); }
};

/// Checks the eight commutative-semiring laws exactly on every triple drawn from `samples`.
AxiomReport check_axioms(const Semiring &s, std::span<const ExtReal> samples);

}
