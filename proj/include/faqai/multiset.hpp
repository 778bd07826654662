#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "faqai/count.hpp"

namespace faqai {

/// A finite multiset of reals, run-length encoded: keys strictly increasing, every count >= 1.
///
/// Together with ms_union / ms_convolve, the empty multiset and {0} this is a commutative semiring whose
/// SumProd evaluation yields the multiset of per-row constraint sums.
class Multiset
{
  public:
    struct Entry
    {
        double key;
        Count count;

        friend bool operator==(const Entry &, const Entry &) = default;
    };

    Multiset() = default;

    /// Sorts, merges equal keys and drops zero counts.
    static Multiset from_entries(std::vector<Entry> entries);
    static Multiset singleton(double key, Count count = 1);
    /// The multiplicative identity {0}.
    static Multiset unit() { return singleton(0.0); }

    std::span<const Entry> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    Count total() const { return cumulative_.empty() ? 0 : cumulative_.back(); }

    /// Multiplicity of `key` (0 if absent).
    Count count_of(double key) const;
    /// Number of elements <= t.
    Count count_le(double t) const;
    /// Running count through entry i (inclusive).
    Count cumulative(std::size_t i) const { return cumulative_[i]; }

    friend bool operator==(const Multiset &a, const Multiset &b) { return a.entries_ == b.entries_; }

  private:
    /// Takes already-canonical entries.
    explicit Multiset(std::vector<Entry> canonical);

    std::vector<Entry> entries_;
    std::vector<Count> cumulative_;
};

/// Multiset sum: multiplicities add.
Multiset ms_union(const Multiset &a, const Multiset &b);
/// All pairwise sums; multiplicities multiply. Throws OverflowError when a count exceeds 128 bits.
Multiset ms_convolve(const Multiset &a, const Multiset &b);
/// Number of elements <= t.
inline Count ms_triangle(const Multiset &a, double t) { return a.count_le(t); }

/// "key:count" pairs separated by spaces, e.g. "1:2 3:1".
std::string to_debug_string(const Multiset &a);

}
