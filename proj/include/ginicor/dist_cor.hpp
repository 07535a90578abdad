#pragma once

#include <span>
#include <string_view>

#include "ginicor/dataset.hpp"
#include "ginicor/matrix.hpp"
#include "ginicor/types.hpp"

namespace ginicor {

enum class DistanceFlavor { unbiased_u_centered, plugin_v };

std::string_view to_string(DistanceFlavor flavor);

/// Distance covariance between features and a label under the 0/1
/// set-difference metric on labels.
///
/// dcor = dcov_xy / sqrt(dcov_xx * dcov_yy). When either variance term is
/// not positive (possible for small unbiased samples, or a single class)
/// dcor is reported as 0 and dcor_undefined is set.
struct DistanceReport {
    double dcov_xy = 0.0;
    double dcov_xx = 0.0;
    double dcov_yy = 0.0;
    double dcor = 0.0;
    bool dcor_undefined = false;
    Alpha alpha = Alpha::one();
    DistanceFlavor flavor = DistanceFlavor::unbiased_u_centered;
};

/// n x n matrix of I(y_i != y_j). Identical for every alpha.
Matrix label_metric(std::span<const std::size_t> codes);

/// Unbiased estimator from U-centered distance matrices (n >= 4). Runs in
/// O(n^2) time and O(n) memory by recomputing distances in a second pass.
DistanceReport dcov_unbiased(const LabeledDataset& dataset, Alpha alpha);

/// Plug-in (V-statistic) estimator: dcov_xy = sum_k p_k^2 T(X_k, X),
/// dcov_yy = sum p^2 - 2 sum p^3 + (sum p^2)^2, dcov_xx from the doubly
/// centered distance matrix. Needs K >= 2.
DistanceReport dcov_plugin(const LabeledDataset& dataset, Alpha alpha);

}  // namespace ginicor
