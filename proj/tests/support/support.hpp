#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "faqai/hypertree.hpp"
#include "faqai/multiset.hpp"
#include "faqai/query.hpp"
#include "faqai/semiring.hpp"
#include "faqai/table.hpp"
#include "faqai/weighted_set.hpp"

namespace faqai::testkit {

using Rng = std::mt19937_64;

inline int uniform_int(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Names of the commutative-semiring laws that fail on the triple (a, b, c), compared with ==.
template <class T, class Plus, class Times>
std::vector<std::string> law_violations(const T &a, const T &b, const T &c, const Plus &plus, const Times &times,
                                        const T &zero, const T &one)
{
    std::vector<std::string> failed;
    auto check = [&](bool ok, const char *law) {
        if (!ok)
            failed.emplace_back(law);
    };
    check(plus(a, zero) == a, "additive identity");
    check(times(a, one) == a, "multiplicative identity");
    check(times(a, zero) == zero, "annihilation");
    check(plus(a, b) == plus(b, a), "additive commutativity");
    check(times(a, b) == times(b, a), "multiplicative commutativity");
    check(plus(plus(a, b), c) == plus(a, plus(b, c)), "additive associativity");
    check(times(times(a, b), c) == times(a, times(b, c)), "multiplicative associativity");
    check(times(a, plus(b, c)) == plus(times(a, b), times(a, c)), "distributivity");
    return failed;
}

/// GYO reduction: drop features held by a single edge, drop edges contained in another edge, repeat.
/// Acyclic iff at most one edge survives.
bool gyo_acyclic(const Hypergraph &schema);

/// Arbitrary schema (possibly cyclic) with 1..max_m tables over 1..max_d features.
Hypergraph random_schema(Rng &rng, std::size_t max_m, std::size_t max_d);

struct RandomDbParams
{
    std::size_t max_m = 4;
    std::size_t max_n = 20;
    std::size_t max_d = 6;
    int lo = -5;
    int hi = 5;
};

/// Acyclic by construction: features occupy connected subtrees of a random tree over the tables.
Database random_acyclic_db(Rng &rng, const RandomDbParams &params = {});

/// sum_j (a_j x_j + b_j) <= L with small integer coefficients.
AdditiveInequality random_affine_inequality(Rng &rng, const Database &db);

/// Random factor functions on a random subset of features. With `nonnegative`, every function is
/// nonnegative on every real.
FeatureFunctions random_factors(Rng &rng, const Database &db, bool nonnegative);

/// Multiset with integer keys in [-key_range, key_range].
Multiset random_multiset(Rng &rng, std::size_t max_size, int key_range, Count max_count);

/// Weighted set over `base` with integer keys and nonnegative integer weights (some keys may carry the
/// base unit).
WeightedSet random_weighted_set(Rng &rng, const Semiring &base, std::size_t max_size, int key_range);

}
