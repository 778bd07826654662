#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "faqai/semiring.hpp"

namespace faqai {

/// A finite set of (key, weight) pairs over a base semiring: keys strictly increasing, one pair per key,
/// and no weight equal to the base's zero. The weight acts as a generalized multiplicity of the key.
class WeightedSet
{
  public:
    struct Entry
    {
        double key;
        ExtReal weight;

        friend bool operator==(const Entry &, const Entry &) = default;
    };

    /// The empty set (additive identity) over `base`.
    explicit WeightedSet(const Semiring &base) : base_(base) { }

    /// Sorts by key, plus-merges equal keys and drops entries equal to the base zero.
    static WeightedSet from_entries(const Semiring &base, std::vector<Entry> entries);
    /// {(0, one)}, the multiplicative identity.
    static WeightedSet unit(const Semiring &base);

    const Semiring & base() const { return base_; }
    std::span<const Entry> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Weight of `key`, or the base zero when absent.
    ExtReal weight_of(double key) const;

    friend bool operator==(const WeightedSet &a, const WeightedSet &b)
    {
        return a.base_ == b.base_ && a.entries_ == b.entries_;
    }

  private:
    Semiring base_;
    std::vector<Entry> entries_;
};

/// Pointwise plus on the key union. Throws std::invalid_argument on a base mismatch.
WeightedSet ws_plus(const WeightedSet &a, const WeightedSet &b);
/// Key-sum convolution: weights combine with times and colliding keys with plus.
WeightedSet ws_convolve(const WeightedSet &a, const WeightedSet &b);
/// Plus-fold of the weights of every key <= l; the base zero for an empty range.
ExtReal ws_triangle(const WeightedSet &a, double l);
/// {(g_val, f_val)}, or the empty set when f_val is the base zero.
WeightedSet lift(double g_val, ExtReal f_val, const Semiring &base);

}
