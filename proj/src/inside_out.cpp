#include "faqai/inside_out.hpp"

namespace faqai {

FactorAssignment assign_features(const Database &db)
{
    FactorAssignment assignment(db.size());
    for (std::size_t f = 0; f < db.features().size(); ++f)
        assignment[db.tables_with(f).front()].push_back(f);
    return assignment;
}

namespace detail {

SharedColumns shared_columns(const Database &db, std::size_t child, std::size_t parent)
{
    SharedColumns shared;
    auto child_cols = db.column_features(child);
    auto parent_cols = db.column_features(parent);
    std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> common;
    for (std::size_t i = 0; i < child_cols.size(); ++i)
        for (std::size_t j = 0; j < parent_cols.size(); ++j)
            if (child_cols[i] == parent_cols[j])
                common.push_back({child_cols[i], {i, j}});
    std::sort(common.begin(), common.end());
    for (const auto &[feature, cols] : common) {
        shared.in_child.push_back(cols.first);
        shared.in_parent.push_back(cols.second);
    }
    return shared;
}

std::size_t next_leaf(const std::vector<std::vector<std::size_t>> &adjacency, const std::vector<bool> &alive,
                      std::optional<std::size_t> root)
{
    for (std::size_t v = 0; v < adjacency.size(); ++v)
        if (alive[v] && adjacency[v].size() == 1 && (!root || *root != v))
            return v;
    throw std::logic_error("no eliminable leaf");
}

int compare_projection(std::span<const double> a, std::span<const std::size_t> a_cols, std::span<const double> b,
                       std::span<const std::size_t> b_cols)
{
    for (std::size_t k = 0; k < a_cols.size(); ++k) {
        double x = a[a_cols[k]];
        double y = b[b_cols[k]];
        if (x < y)
            return -1;
        if (y < x)
            return 1;
    }
    return 0;
}

}

}
