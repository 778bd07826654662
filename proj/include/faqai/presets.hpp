#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "faqai/query.hpp"

namespace faqai {

/// Parameters of the ready-made queries. Vectors are aligned with the database's canonical feature order,
/// skipping the label feature when one is given.
struct PresetParams
{
    std::vector<double> beta = {};
    std::vector<double> y = {};
    std::vector<double> alpha = {};
    std::optional<double> L = {};
    std::optional<double> r = {};
    /// halfspace_count only: a +-1 label column; only rows labelled -1 are counted.
    std::optional<std::string> label = {};
};

/// halfspace_count, sphere_count, ellipsoid_count, sum_abs_halfspace, sum_squares_ellipsoid, nnz_halfspace,
/// min_1norm_sphere, max_sqdist_halfspace. Throws UnknownName or ValidationError (dimension mismatch).
QuerySpec preset(std::string_view name, const PresetParams &params, std::span<const std::string> features);

}
