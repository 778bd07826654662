#pragma once

#include <string>
#include <string_view>

namespace faqai {

/// A per-feature real function from a fixed catalogue, used both as factor function F_i and as
/// constraint term g_i.
class FunctionSpec
{
  public:
    enum class Kind {
        constant,          // c
        identity,          // x
        scale,             // beta * x
        affine,            // a * x + b
        square,            // x^2
        abs_offset,        // |x - y|
        sq_offset,         // (x - y)^2
        scaled_square,     // x^2 / alpha^2
        indicator_eq,      // x == v ? then : else
        indicator_nonzero, // x != 0 ? 1 : 0
    };

    FunctionSpec() = default;

    static FunctionSpec constant(double c) { return {Kind::constant, c}; }
    static FunctionSpec identity() { return {Kind::identity}; }
    static FunctionSpec scale(double beta) { return {Kind::scale, beta}; }
    static FunctionSpec affine(double a, double b) { return {Kind::affine, a, b}; }
    static FunctionSpec square() { return {Kind::square}; }
    static FunctionSpec abs_offset(double y) { return {Kind::abs_offset, y}; }
    static FunctionSpec sq_offset(double y) { return {Kind::sq_offset, y}; }
    static FunctionSpec scaled_square(double alpha) { return {Kind::scaled_square, alpha}; }
    static FunctionSpec indicator_eq(double v, double then_val, double else_val)
    {
        return {Kind::indicator_eq, v, then_val, else_val};
    }
    static FunctionSpec indicator_nonzero() { return {Kind::indicator_nonzero}; }

    Kind kind() const { return kind_; }
    double p0() const { return p0_; }
    double p1() const { return p1_; }
    double p2() const { return p2_; }

    double operator()(double x) const;

    friend bool operator==(const FunctionSpec &, const FunctionSpec &) = default;

  private:
    FunctionSpec(Kind kind, double p0 = 0, double p1 = 0, double p2 = 0) : kind_(kind), p0_(p0), p1_(p1), p2_(p2) { }

    Kind kind_ = Kind::identity;
    double p0_ = 0;
    double p1_ = 0;
    double p2_ = 0;
};

std::string_view kind_name(FunctionSpec::Kind kind);
FunctionSpec::Kind kind_from_name(std::string_view name);

}
