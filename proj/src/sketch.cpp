#include "faqai/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace faqai {

double alpha_for(double epsilon, std::size_t m, std::size_t n)
{
    if (!(epsilon > 0) || m == 0)
        throw std::invalid_argument("alpha_for needs epsilon > 0 and m >= 1");
    const double md = static_cast<double>(m);
    const double logn = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
    return epsilon / (md * md * logn + md);
}

ApproxParams ApproxParams::make(double epsilon, std::size_t m, std::size_t n, std::optional<double> alpha_override)
{
    ApproxParams p;
    p.epsilon = epsilon;
    p.m = m;
    p.n = n;
    p.alpha = alpha_override ? *alpha_override : alpha_for(epsilon, m, n);
    if (!(p.alpha > 0))
        throw std::invalid_argument("alpha must be positive");
    return p;
}

namespace {

/// Retained rank boundaries floor((1+eps)^k), clamped to the total.
class RankBoundaries
{
  public:
    RankBoundaries(double eps, Count total)
        : log_base_(std::log1p(eps))
        , total_(total)
    { }

    struct Bracket
    {
        Count floor;
        /// Smallest retained boundary above `floor`.
        Count next;
    };

    /// Largest retained boundary <= r (0 for r = 0), with its successor.
    Bracket floor_boundary(Count r) const
    {
        if (r >= total_)
            return {total_, total_ + 1};
        if (r == 0)
            return {0, 1};
        const double rr = static_cast<double>(to_real(r));
        long k = std::max(static_cast<long>(std::floor(std::log(rr + 1.0) / log_base_)), 0L);
        Count lo = raw(k);
        while (k > 0 && lo > r)
            lo = raw(--k);
        Count hi = raw(k + 1);
        while (hi <= r) {
            lo = hi;
            hi = raw(++k + 1);
        }
        return {lo, std::min(hi, total_)};
    }

  private:
    /// floor((1+eps)^k), saturating at the largest Count.
    Count raw(long k) const
    {
        const double v = std::floor(std::exp(static_cast<double>(k) * log_base_));
        return v >= kCountLimit ? ~Count(0) : static_cast<Count>(v);
    }

    static constexpr double kCountLimit = 0x1p128;

    double log_base_;
    Count total_;
};

bool within_band(ExtReal value, ExtReal reference, double eps)
{
    return value <= reference * (1.0 + eps) || value == reference;
}

}

Multiset ms_sketch(const Multiset &a, double eps)
{
    if (!(eps > 0))
        throw std::invalid_argument("sketch parameter must be positive");
    if (a.empty())
        return {};
    const RankBoundaries bounds(eps, a.total());
    auto entries = a.entries();
    std::vector<Multiset::Entry> out;
    Count previous = 0, next = 1;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        // Ranks (prev_end, run_end] carry this key; the retained boundaries inside that range land here.
        const Count cumulative = a.cumulative(i);
        if (cumulative < next)
            continue;
        const auto bracket = bounds.floor_boundary(cumulative);
        out.push_back({entries[i].key, bracket.floor - previous});
        previous = bracket.floor;
        next = bracket.next;
    }
    return Multiset::from_entries(std::move(out));
}

WeightedSet ws_sketch(const WeightedSet &a, double eps)
{
    if (!(eps > 0))
        throw std::invalid_argument("sketch parameter must be positive");
    const Semiring &base = a.base();
    if (base.plus_monotonicity == Monotonicity::none)
        throw std::invalid_argument("cannot sketch over non-monotone plus (" + std::string(base.name) + ")");
    const std::size_t n = a.size();
    if (n <= 1)
        return a;

    auto entries = a.entries();
    std::vector<ExtReal> prefix(n);
    prefix[0] = entries[0].weight;
    for (std::size_t i = 1; i < n; ++i)
        prefix[i] = base.plus(prefix[i - 1], entries[i].weight);

    const bool ascending = base.plus_monotonicity == Monotonicity::increasing;
    auto at = [&](std::size_t pos) { return ascending ? pos : n - 1 - pos; };

    std::vector<WeightedSet::Entry> out;
    std::size_t first = at(0);
    out.push_back(entries[first]);
    ExtReal reference = prefix[first];

    for (std::size_t pos = 1; pos < n;) {
        std::size_t last = at(pos);
        ExtReal weight = entries[last].weight;
        for (++pos; pos < n && within_band(prefix[at(pos)], reference, eps); ++pos) {
            last = at(pos);
            weight = base.plus(weight, entries[last].weight);
        }
        out.push_back({entries[last].key, weight});
        reference = prefix[last];
    }
    return WeightedSet::from_entries(base, std::move(out));
}

Multiset approx_union(const Multiset &a, const Multiset &b, double alpha)
{
    return ms_sketch(ms_union(a, b), alpha);
}

Multiset approx_convolve(const Multiset &a, const Multiset &b, double alpha)
{
    return ms_sketch(ms_convolve(a, b), alpha);
}

WeightedSet approx_union(const WeightedSet &a, const WeightedSet &b, double alpha)
{
    return ws_sketch(ws_plus(a, b), alpha);
}

WeightedSet approx_convolve(const WeightedSet &a, const WeightedSet &b, double alpha)
{
    return ws_sketch(ws_convolve(a, b), alpha);
}

}
