#pragma once

#include <cstddef>
#include <optional>

#include "faqai/multiset.hpp"
#include "faqai/weighted_set.hpp"

namespace faqai {

/// Per-operation sketch parameter for a total relative error budget `epsilon`:
/// epsilon / (m^2 * log2(max(n, 2)) + m).
double alpha_for(double epsilon, std::size_t m, std::size_t n);

struct ApproxParams
{
    double epsilon = 0.1;
    double alpha = 0.0;
    std::size_t m = 1;
    std::size_t n = 1;

    /// Derives alpha from (epsilon, m, n) unless an explicit override is given.
    static ApproxParams make(double epsilon, std::size_t m, std::size_t n,
                             std::optional<double> alpha_override = std::nullopt);
};

/// Rank compression. With r_k = min(floor((1+eps)^k), |A|) for k = 0, 1, ..., the element of rank r_k
/// receives r_k - r_{k-1} copies (r_{-1} = 0). Every element is rounded up to the next retained rank, so
/// for every t:  (1 - eps) * count_le(A, t) <= count_le(S, t) <= count_le(A, t), and |S| = |A|.
Multiset ms_sketch(const Multiset &a, double eps);

/// Run compression along keys in order of increasing cumulative aggregate (ascending keys when plus is
/// monotone increasing, descending when decreasing). The first key is kept alone; each later run absorbs
/// keys while their cumulative aggregate stays within (1+eps) times the aggregate at the previous run's
/// retained key, and collapses onto its last key with the plus-fold of its weights. For every real e,
///     tri(A, e) / (1+eps) <= tri(S, e) <= (1+eps) * tri(A, e).
/// Throws std::invalid_argument when the base's plus is not monotone.
WeightedSet ws_sketch(const WeightedSet &a, double eps);

Multiset approx_union(const Multiset &a, const Multiset &b, double alpha);
Multiset approx_convolve(const Multiset &a, const Multiset &b, double alpha);
WeightedSet approx_union(const WeightedSet &a, const WeightedSet &b, double alpha);
WeightedSet approx_convolve(const WeightedSet &a, const WeightedSet &b, double alpha);

}
