#pragma once

#include <cstddef>
#include <vector>

#include "ginicor/dataset.hpp"
#include "ginicor/gmd.hpp"
#include "ginicor/types.hpp"

namespace ginicor {

/// Gini correlation estimate with its decomposition.
///
/// estimate = covariance / total_gmd, covariance = total_gmd - sum_k p_k gmd_k.
/// V-kind estimates lie in [0, 1]; U-kind estimates can dip slightly below 0.
struct CorrelationReport {
    double estimate = 0.0;
    double covariance = 0.0;
    double total_gmd = 0.0;
    std::vector<double> per_group_gmd;
    std::vector<double> proportions;
    Alpha alpha = Alpha::one();
    EstimatorKind kind = EstimatorKind::V;
    bool fast_path = false;
};

/// Between-group Gini variation: total GMD minus the proportion-weighted
/// within-group GMDs. Needs K >= 2, and n_k >= 2 for every class under U.
double gcov(const LabeledDataset& dataset, Alpha alpha, EstimatorKind kind = EstimatorKind::V);

/// Full Gini correlation report. Throws a numeric error when every feature
/// row is identical (total GMD zero).
CorrelationReport gcor(const LabeledDataset& dataset, Alpha alpha,
                       EstimatorKind kind = EstimatorKind::V);

/// Lower-level entry point over a feature view and dense class codes.
CorrelationReport gcor(MatrixView features, std::span<const std::size_t> codes,
                       std::size_t num_classes, Alpha alpha, EstimatorKind kind);

/// Assembles a report from precomputed pair sums (shared with the jackknife
/// and permutation kernels).
CorrelationReport gcor_from_pair_sums(const PairSums& sums, Alpha alpha, EstimatorKind kind);

/// Energy distance 2 E||A - B||^a - E||A - A'||^a - E||B - B'||^a between two
/// samples, with the within-sample terms estimated by the chosen kind.
double energy_distance(MatrixView sample_a, MatrixView sample_b, Alpha alpha,
                       EstimatorKind kind = EstimatorKind::V);

/// Gini covariance as sum_{k<l} p_k p_l T(X_k, X_l) with V-statistic energy
/// distances. Equal to gcov(V) up to rounding.
double gcov_via_energy(const LabeledDataset& dataset, Alpha alpha);

/// Gini covariance as sum_k p_k T(X_k, X) against the pooled sample.
double gcov_via_energy_pooled(const LabeledDataset& dataset, Alpha alpha);

/// Between-group share of variance with divide-by-n moments. Needs d = 1.
double pearson_r2(const LabeledDataset& dataset);

struct ScreenedFeature {
    std::size_t feature = 0;
    double estimate = 0.0;
    bool degenerate = false;  // constant column, ranked last
    double seconds = 0.0;     // wall time of this column's estimate
};

/// Ranks features by marginal V-kind Gini correlation with the label,
/// descending, ties by ascending feature index; returns the first `top`.
std::vector<ScreenedFeature> screen_features(const LabeledDataset& dataset, std::size_t top,
                                             Alpha alpha);

}  // namespace ginicor
