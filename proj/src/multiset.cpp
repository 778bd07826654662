#include "faqai/multiset.hpp"

#include <algorithm>
#include <charconv>

namespace faqai {

Multiset::Multiset(std::vector<Entry> canonical)
    : entries_(std::move(canonical))
{
    cumulative_.reserve(entries_.size());
    Count running = 0;
    for (const auto &e : entries_) {
        running = checked_add(running, e.count);
        cumulative_.push_back(running);
    }
}

Multiset Multiset::from_entries(std::vector<Entry> entries)
{
    auto by_key = [](const Entry &a, const Entry &b) { return a.key < b.key; };
    if (!std::is_sorted(entries.begin(), entries.end(), by_key))
        std::sort(entries.begin(), entries.end(), by_key);
    std::vector<Entry> out;
    out.reserve(entries.size());
    for (const auto &e : entries) {
        if (e.count == 0)
            continue;
        if (!out.empty() && out.back().key == e.key)
            out.back().count = checked_add(out.back().count, e.count);
        else
            out.push_back(e);
    }
    return Multiset(std::move(out));
}

Multiset Multiset::singleton(double key, Count count)
{
    if (count == 0)
        return {};
    return Multiset(std::vector<Entry>{{key, count}});
}

Count Multiset::count_of(double key) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const Entry &e, double k) { return e.key < k; });
    return (it != entries_.end() && it->key == key) ? it->count : 0;
}

Count Multiset::count_le(double t) const
{
    auto it = std::upper_bound(entries_.begin(), entries_.end(), t,
                               [](double k, const Entry &e) { return k < e.key; });
    if (it == entries_.begin())
        return 0;
    return cumulative_[static_cast<std::size_t>(it - entries_.begin()) - 1];
}

Multiset ms_union(const Multiset &a, const Multiset &b)
{
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    auto ea = a.entries();
    auto eb = b.entries();
    std::vector<Multiset::Entry> out;
    out.reserve(ea.size() + eb.size());
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].key < eb[j].key)) {
            out.push_back(ea[i++]);
        } else if (i == ea.size() || eb[j].key < ea[i].key) {
            out.push_back(eb[j++]);
        } else {
            out.push_back({ea[i].key, checked_add(ea[i].count, eb[j].count)});
            ++i;
            ++j;
        }
    }
    return Multiset::from_entries(std::move(out));
}

Multiset ms_convolve(const Multiset &a, const Multiset &b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<Multiset::Entry> pairs;
    pairs.reserve(a.size() * b.size());
    for (const auto &x : a.entries())
        for (const auto &y : b.entries())
            pairs.push_back({x.key + y.key, checked_mul(x.count, y.count)});
    return Multiset::from_entries(std::move(pairs));
}

std::string to_debug_string(const Multiset &a)
{
    std::string out;
    char buf[64];
    for (const auto &e : a.entries()) {
        if (!out.empty())
            out.push_back(' ');
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.key);
        (void) ec;
        out.append(buf, ptr);
        out.push_back(':');
        out += to_string(e.count);
    }
    return out;
}

}
