#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "faqai/errors.hpp"
#include "faqai/hypertree.hpp"
#include "faqai/table.hpp"

namespace faqai {

/// Per table, the features whose leaf factors are multiplied into that table's aggregate column.
using FactorAssignment = std::vector<std::vector<std::size_t>>;

/// Assigns every feature to the lowest-index table containing it.
FactorAssignment assign_features(const Database &db);
inline FactorAssignment assign_features(const Database &db, const Decomposition &) { return assign_features(db); }

/// Leaf factor F(feature id, value) in the working carrier.
template <class T>
using LeafFactors = std::function<T(std::size_t feature, double value)>;

/// The working operations of one evaluation. `plus` / `times` may be exact semiring operations or their
/// sketched counterparts.
template <class T>
struct EngineConfig
{
    std::function<T(const T &, const T &)> plus = {};
    std::function<T(const T &, const T &)> times = {};
    T zero;
    T one;
    /// Vertex kept until the end; defaults to whatever survives lowest-index leaf elimination.
    std::optional<std::size_t> root = {};
    /// Applied to every group aggregate, every product with a child aggregate and the final fold.
    std::function<T(T)> transform = {};
    /// Explicit elimination order (must eliminate leaves only); default is lowest-index leaf first.
    std::vector<std::size_t> elimination_order = {};
    /// Entry count of a carrier value, used for instrumentation only.
    std::function<std::size_t(const T &)> size_of = {};
};

struct EliminationRecord
{
    std::size_t leaf = 0;
    std::size_t parent = 0;
    std::size_t groups = 0;
    std::size_t largest_group = 0;
    std::size_t combine_depth = 0;
    std::size_t largest_value = 0;
};

/// Instrumentation of one evaluation.
struct EngineStats
{
    std::vector<EliminationRecord> steps;
    /// Largest number of items combined in one balanced fold, and the depth that fold used.
    std::size_t largest_fold = 0;
    std::size_t largest_fold_depth = 0;
    std::size_t max_combine_depth = 0;
    std::size_t root_rows = 0;
    std::size_t largest_value = 0;
};

/// Aggregate column of one table: the surviving rows (indices into the database table) and their values.
template <class T>
struct EngineTable
{
    std::size_t table = 0;
    std::vector<std::size_t> rows;
    std::vector<T> q;
};

/// Folds `items` with `plus` as a balanced binary tree. Returns `zero` for an empty range; `depth` receives
/// the height of the combination tree (ceil(log2 k)).
template <class T, class Plus>
T balanced_fold(std::vector<T> items, const Plus &plus, const T &zero, std::size_t *depth = nullptr)
{
    std::size_t levels = 0;
    if (items.empty()) {
        if (depth)
            *depth = 0;
        return zero;
    }
    while (items.size() > 1) {
        std::size_t half = 0;
        for (std::size_t i = 0; i + 1 < items.size(); i += 2)
            items[half++] = plus(items[i], items[i + 1]);
        if (items.size() % 2 == 1)
            items[half++] = std::move(items.back());
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(half), items.end());
        ++levels;
    }
    if (depth)
        *depth = levels;
    return std::move(items.front());
}

namespace detail {

/// Column positions of the shared features C_ij in both tables, in feature-id order.
struct SharedColumns
{
    std::vector<std::size_t> in_child;
    std::vector<std::size_t> in_parent;
};

SharedColumns shared_columns(const Database &db, std::size_t child, std::size_t parent);

/// Chooses the leaf to eliminate next: lowest index among leaves other than the root.
std::size_t next_leaf(const std::vector<std::vector<std::size_t>> &adjacency, const std::vector<bool> &alive,
                      std::optional<std::size_t> root);

int compare_projection(std::span<const double> a, std::span<const std::size_t> a_cols, std::span<const double> b,
                       std::span<const std::size_t> b_cols);

template <class T>
class InsideOut
{
  public:
    InsideOut(const Database &db, const Decomposition &decomp, const LeafFactors<T> &factors,
              const EngineConfig<T> &config, EngineStats *stats)
        : db_(db), decomp_(decomp), factors_(factors), config_(config), stats_(stats)
    {
        if (auto check = verify_decomposition(db, decomp); !check)
            throw CyclicJoin("invalid decomposition: " + check.diagnostic);
        if (config.root && *config.root >= db.size())
            throw std::out_of_range("root table index out of range");
    }

    EngineTable<T> run_to_root()
    {
        initialise();
        const std::size_t m = db_.size();
        std::vector<std::vector<std::size_t>> adjacency(m);
        for (auto [a, b] : decomp_.edges) {
            adjacency[a].push_back(b);
            adjacency[b].push_back(a);
        }
        std::vector<bool> alive(m, true);
        for (std::size_t step = 0; step + 1 < m; ++step) {
            std::size_t leaf;
            if (!config_.elimination_order.empty()) {
                if (step >= config_.elimination_order.size())
                    throw std::invalid_argument("elimination order too short");
                leaf = config_.elimination_order[step];
                if (leaf >= m || !alive[leaf] || adjacency[leaf].size() != 1 || (config_.root && *config_.root == leaf))
                    throw std::invalid_argument("elimination order picks a non-leaf or the root");
            } else {
                leaf = next_leaf(adjacency, alive, config_.root);
            }
            std::size_t parent = adjacency[leaf].front();
            eliminate(leaf, parent);
            alive[leaf] = false;
            adjacency[leaf].clear();
            auto &siblings = adjacency[parent];
            siblings.erase(std::find(siblings.begin(), siblings.end(), leaf));
        }
        std::size_t root = 0;
        while (!alive[root])
            ++root;
        if (stats_)
            stats_->root_rows = tables_[root].rows.size();
        return std::move(tables_[root]);
    }

    T fold_root(EngineTable<T> root)
    {
        std::size_t depth = 0;
        T value = balanced_fold(std::move(root.q), config_.plus, config_.zero, &depth);
        note_fold(root.rows.size(), depth);
        return apply(std::move(value));
    }

  private:
    T apply(T value) const { return config_.transform ? config_.transform(std::move(value)) : value; }

    bool is_zero(const T &v) const { return v == config_.zero; }

    void note_fold(std::size_t items, std::size_t depth)
    {
        if (!stats_)
            return;
        stats_->max_combine_depth = std::max(stats_->max_combine_depth, depth);
        if (items >= stats_->largest_fold) {
            stats_->largest_fold = items;
            stats_->largest_fold_depth = depth;
        }
    }

    std::size_t note_value(const T &v)
    {
        if (!stats_ || !config_.size_of)
            return 0;
        std::size_t s = config_.size_of(v);
        stats_->largest_value = std::max(stats_->largest_value, s);
        return s;
    }

    void initialise()
    {
        const auto assignment = assign_features(db_);
        tables_.resize(db_.size());
        for (std::size_t t = 0; t < db_.size(); ++t) {
            const Table &table = db_.table(t);
            auto cols = db_.column_features(t);
            std::vector<std::size_t> assigned_cols;
            for (std::size_t f : assignment[t])
                assigned_cols.push_back(static_cast<std::size_t>(std::find(cols.begin(), cols.end(), f) - cols.begin()));
            auto &et = tables_[t];
            et.table = t;
            for (std::size_t r = 0; r < table.num_rows(); ++r) {
                T q = config_.one;
                bool first = true;
                for (std::size_t k = 0; k < assigned_cols.size(); ++k) {
                    T f = factors_(assignment[t][k], table.at(r, assigned_cols[k]));
                    q = first ? std::move(f) : config_.times(q, f);
                    first = false;
                }
                if (is_zero(q))
                    continue;
                note_value(q);
                et.rows.push_back(r);
                et.q.push_back(std::move(q));
            }
        }
    }

    void eliminate(std::size_t child, std::size_t parent)
    {
        EliminationRecord record{child, parent, 0, 0, 0, 0};
        const SharedColumns shared = shared_columns(db_, child, parent);
        EngineTable<T> &ct = tables_[child];
        EngineTable<T> &pt = tables_[parent];
        const Table &child_table = db_.table(child);
        const Table &parent_table = db_.table(parent);

        if (shared.in_child.empty()) {
            // Cross-product edge: a single aggregate multiplies every parent row.
            std::size_t depth = 0;
            const std::size_t items = ct.q.size();
            T total = apply(balanced_fold(std::move(ct.q), config_.plus, config_.zero, &depth));
            note_fold(items, depth);
            record.groups = 1;
            record.largest_group = items;
            record.combine_depth = depth;
            record.largest_value = note_value(total);
            multiply_parent(pt, [&](std::size_t) -> const T * { return is_zero(total) ? nullptr : &total; }, record);
        } else {
            // Group child rows by their projection onto the shared columns (sort, then scan).
            std::vector<std::size_t> order(ct.rows.size());
            std::iota(order.begin(), order.end(), 0);
            auto child_row = [&](std::size_t i) { return child_table.row(ct.rows[i]); };
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return compare_projection(child_row(a), shared.in_child, child_row(b), shared.in_child) < 0;
            });
            std::vector<std::size_t> representative;
            std::vector<T> group_value;
            for (std::size_t i = 0; i < order.size();) {
                std::size_t j = i + 1;
                while (j < order.size() &&
                       compare_projection(child_row(order[i]), shared.in_child, child_row(order[j]), shared.in_child) == 0)
                    ++j;
                std::vector<T> members;
                members.reserve(j - i);
                for (std::size_t k = i; k < j; ++k)
                    members.push_back(std::move(ct.q[order[k]]));
                std::size_t depth = 0;
                T value = apply(balanced_fold(std::move(members), config_.plus, config_.zero, &depth));
                note_fold(j - i, depth);
                record.largest_group = std::max(record.largest_group, j - i);
                record.combine_depth = std::max(record.combine_depth, depth);
                record.largest_value = std::max(record.largest_value, note_value(value));
                representative.push_back(ct.rows[order[i]]);
                group_value.push_back(std::move(value));
                i = j;
            }
            record.groups = representative.size();
            auto lookup = [&](std::size_t parent_row) -> const T * {
                auto prow = parent_table.row(parent_row);
                auto it = std::lower_bound(representative.begin(), representative.end(), prow,
                                           [&](std::size_t rep, std::span<const double> key) {
                                               return compare_projection(child_table.row(rep), shared.in_child, key,
                                                                         shared.in_parent) < 0;
                                           });
                if (it == representative.end() ||
                    compare_projection(child_table.row(*it), shared.in_child, prow, shared.in_parent) != 0)
                    return nullptr;
                const T &v = group_value[static_cast<std::size_t>(it - representative.begin())];
                return is_zero(v) ? nullptr : &v;
            };
            multiply_parent(pt, lookup, record);
        }
        ct.rows.clear();
        ct.q.clear();
        if (stats_)
            stats_->steps.push_back(record);
    }

    /// Q_parent <- Q_parent (x) Q_child(y); rows without a matching group (or with a zero product) are pruned.
    template <class Lookup>
    void multiply_parent(EngineTable<T> &pt, const Lookup &lookup, EliminationRecord &record)
    {
        std::size_t kept = 0;
        for (std::size_t i = 0; i < pt.rows.size(); ++i) {
            const T *factor = lookup(pt.rows[i]);
            if (!factor)
                continue;
            T q = apply(config_.times(pt.q[i], *factor));
            if (is_zero(q))
                continue;
            record.largest_value = std::max(record.largest_value, note_value(q));
            pt.rows[kept] = pt.rows[i];
            pt.q[kept] = std::move(q);
            ++kept;
        }
        pt.rows.resize(kept);
        pt.q.erase(pt.q.begin() + static_cast<std::ptrdiff_t>(kept), pt.q.end());
    }

    const Database &db_;
    const Decomposition &decomp_;
    const LeafFactors<T> &factors_;
    const EngineConfig<T> &config_;
    EngineStats *stats_;
    std::vector<EngineTable<T>> tables_;
};

}

/// The root table's aggregate column immediately before the final fold, with `root` never eliminated.
template <class T>
EngineTable<T> evaluate_to_root(const Database &db, const Decomposition &decomp, const LeafFactors<T> &factors,
                                EngineConfig<T> config, std::size_t root, EngineStats *stats = nullptr)
{
    config.root = root;
    return detail::InsideOut<T>(db, decomp, factors, config, stats).run_to_root();
}

/// Sum over the join of the product of leaf factors, without materializing the join.
template <class T>
T evaluate(const Database &db, const Decomposition &decomp, const LeafFactors<T> &factors,
           const EngineConfig<T> &config, EngineStats *stats = nullptr)
{
    detail::InsideOut<T> engine(db, decomp, factors, config, stats);
    return engine.fold_root(engine.run_to_root());
}

}
