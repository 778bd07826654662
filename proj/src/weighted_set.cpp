#include "faqai/weighted_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace faqai {

namespace {

void require_same_base(const WeightedSet &a, const WeightedSet &b)
{
    if (!(a.base() == b.base()))
        throw std::invalid_argument("weighted sets over different base semirings: " + std::string(a.base().name) +
                                    " vs " + std::string(b.base().name));
}

}

WeightedSet WeightedSet::from_entries(const Semiring &base, std::vector<Entry> entries)
{
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry &a, const Entry &b) { return a.key < b.key; });
    WeightedSet out(base);
    out.entries_.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size();) {
        ExtReal w = entries[i].weight;
        std::size_t j = i + 1;
        for (; j < entries.size() && entries[j].key == entries[i].key; ++j)
            w = base.plus(w, entries[j].weight);
        if (!base.is_zero(w))
            out.entries_.push_back({entries[i].key, w});
        i = j;
    }
    return out;
}

WeightedSet WeightedSet::unit(const Semiring &base) { return from_entries(base, {{0.0, base.one}}); }

ExtReal WeightedSet::weight_of(double key) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const Entry &e, double k) { return e.key < k; });
    return (it != entries_.end() && it->key == key) ? it->weight : base_.zero;
}

WeightedSet ws_plus(const WeightedSet &a, const WeightedSet &b)
{
    require_same_base(a, b);
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    const auto &base = a.base();
    auto ea = a.entries();
    auto eb = b.entries();
    std::vector<WeightedSet::Entry> out;
    out.reserve(ea.size() + eb.size());
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].key < eb[j].key))
            out.push_back(ea[i++]);
        else if (i == ea.size() || eb[j].key < ea[i].key)
            out.push_back(eb[j++]);
        else {
            out.push_back({ea[i].key, base.plus(ea[i].weight, eb[j].weight)});
            ++i;
            ++j;
        }
    }
    return WeightedSet::from_entries(base, std::move(out));
}

WeightedSet ws_convolve(const WeightedSet &a, const WeightedSet &b)
{
    require_same_base(a, b);
    const auto &base = a.base();
    if (a.empty() || b.empty())
        return WeightedSet(base);
    std::vector<WeightedSet::Entry> pairs;
    pairs.reserve(a.size() * b.size());
    for (const auto &x : a.entries())
        for (const auto &y : b.entries())
            pairs.push_back({x.key + y.key, base.times(x.weight, y.weight)});
    return WeightedSet::from_entries(base, std::move(pairs));
}

ExtReal ws_triangle(const WeightedSet &a, double l)
{
    const auto &base = a.base();
    ExtReal acc = base.zero;
    for (const auto &e : a.entries()) {
        if (e.key > l)
            break;
        acc = base.plus(acc, e.weight);
    }
    return acc;
}

WeightedSet lift(double g_val, ExtReal f_val, const Semiring &base)
{
    if (base.is_zero(f_val))
        return WeightedSet(base);
    return WeightedSet::from_entries(base, {{g_val, f_val}});
}

}
