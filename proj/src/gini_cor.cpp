#include "ginicor/gini_cor.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "ginicor/error.hpp"
#include "ginicor/parallel.hpp"

namespace ginicor {

namespace {

// V-kind covariances this far below zero (relative to the total GMD) are
// rounding noise and are clamped to 0.
constexpr double kClampTolerance = 1e-12;

std::size_t present_classes(std::span<const std::size_t> counts) {
    return static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(),
                                                  [](std::size_t c) { return c > 0; }));
}

bool is_constant(MatrixView features) {
    for (std::size_t i = 1; i < features.rows(); ++i) {
        for (std::size_t j = 0; j < features.cols(); ++j) {
            if (features(i, j) != features(0, j)) return false;
        }
    }
    return true;
}

}  // namespace

CorrelationReport gcor_from_pair_sums(const PairSums& sums, Alpha alpha, EstimatorKind kind) {
    if (present_classes(sums.counts) < 2) {
        throw_numeric("Gini correlation needs at least two classes");
    }
    std::size_t n = 0;
    for (std::size_t c : sums.counts) n += c;
    if (kind == EstimatorKind::U) {
        for (std::size_t c : sums.counts) {
            if (c < 2) throw_numeric("U-statistics need at least 2 observations in every class");
        }
    }

    CorrelationReport report;
    report.alpha = alpha;
    report.kind = kind;
    report.total_gmd = scale_pair_sum(sums.total, n, kind);
    if (!(report.total_gmd > 0.0)) {
        throw_numeric("degenerate data: all feature rows are identical");
    }

    const std::size_t k_count = sums.counts.size();
    report.per_group_gmd.assign(k_count, 0.0);
    report.proportions.assign(k_count, 0.0);
    double within = 0.0;
    for (std::size_t k = 0; k < k_count; ++k) {
        if (sums.counts[k] == 0) continue;
        report.proportions[k] = static_cast<double>(sums.counts[k]) / static_cast<double>(n);
        report.per_group_gmd[k] = scale_pair_sum(sums.within[k], sums.counts[k], kind);
        within += report.proportions[k] * report.per_group_gmd[k];
    }

    double covariance = report.total_gmd - within;
    if (kind == EstimatorKind::V && covariance < 0.0) {
        if (covariance < -kClampTolerance * report.total_gmd) {
            throw_numeric("internal consistency: negative V-statistic Gini covariance " +
                          std::to_string(covariance));
        }
        covariance = 0.0;
    }
    report.covariance = covariance;
    report.estimate = covariance / report.total_gmd;
    return report;
}

CorrelationReport gcor(MatrixView features, std::span<const std::size_t> codes,
                       std::size_t num_classes, Alpha alpha, EstimatorKind kind) {
    const PairSums sums = grouped_pair_sums(features, codes, num_classes, alpha);
    CorrelationReport report = gcor_from_pair_sums(sums, alpha, kind);
    report.fast_path = features.cols() == 1 && alpha.is_one();
    return report;
}

CorrelationReport gcor(const LabeledDataset& dataset, Alpha alpha, EstimatorKind kind) {
    return gcor(dataset.features(), dataset.codes(), dataset.num_classes(), alpha, kind);
}

double gcov(const LabeledDataset& dataset, Alpha alpha, EstimatorKind kind) {
    if (dataset.num_classes() < 2) throw_numeric("Gini covariance needs at least two classes");
    const PairSums sums =
        grouped_pair_sums(dataset.features(), dataset.codes(), dataset.num_classes(), alpha);
    if (!(sums.total > 0.0)) {
        // Constant features: every GMD is zero, and so is the covariance.
        if (kind == EstimatorKind::U) {
            for (std::size_t c : sums.counts) {
                if (c < 2) throw_numeric("U-statistics need at least 2 observations in every class");
            }
        }
        return 0.0;
    }
    return gcor_from_pair_sums(sums, alpha, kind).covariance;
}

double energy_distance(MatrixView sample_a, MatrixView sample_b, Alpha alpha, EstimatorKind kind) {
    const double cross = gmd_cross(sample_a, sample_b, alpha).value;
    return 2.0 * cross - gmd(sample_a, alpha, kind).value - gmd(sample_b, alpha, kind).value;
}

double gcov_via_energy(const LabeledDataset& dataset, Alpha alpha) {
    if (dataset.num_classes() < 2) throw_numeric("Gini covariance needs at least two classes");
    const GroupView& groups = dataset.groups();
    std::vector<Matrix> samples;
    samples.reserve(groups.num_groups());
    for (const auto& idx : groups.indices) samples.push_back(Matrix::gather(dataset.features(), idx));

    double total = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        for (std::size_t l = k + 1; l < samples.size(); ++l) {
            total += groups.proportions[k] * groups.proportions[l] *
                     energy_distance(samples[k], samples[l], alpha, EstimatorKind::V);
        }
    }
    return total;
}

double gcov_via_energy_pooled(const LabeledDataset& dataset, Alpha alpha) {
    if (dataset.num_classes() < 2) throw_numeric("Gini covariance needs at least two classes");
    const GroupView& groups = dataset.groups();
    double total = 0.0;
    for (std::size_t k = 0; k < groups.num_groups(); ++k) {
        const Matrix sample = Matrix::gather(dataset.features(), groups.indices[k]);
        total += groups.proportions[k] *
                 energy_distance(sample, dataset.features(), alpha, EstimatorKind::V);
    }
    return total;
}

double pearson_r2(const LabeledDataset& dataset) {
    if (dataset.dims() != 1) throw_usage("Pearson R^2 is defined for a single feature");
    if (dataset.num_classes() < 2) throw_numeric("Pearson R^2 needs at least two classes");
    const GroupView& groups = dataset.groups();
    const MatrixView x = dataset.features();
    const double n = static_cast<double>(dataset.size());

    double mean = 0.0;
    for (std::size_t i = 0; i < dataset.size(); ++i) mean += x(i, 0);
    mean /= n;
    double variance = 0.0;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const double dev = x(i, 0) - mean;
        variance += dev * dev;
    }
    variance /= n;
    if (!(variance > 0.0)) throw_numeric("degenerate data: zero variance");

    double between = 0.0;
    for (std::size_t k = 0; k < groups.num_groups(); ++k) {
        double group_mean = 0.0;
        for (std::size_t i : groups.indices[k]) group_mean += x(i, 0);
        group_mean /= static_cast<double>(groups.counts[k]);
        between += groups.proportions[k] * (group_mean - mean) * (group_mean - mean);
    }
    return between / variance;
}

std::vector<ScreenedFeature> screen_features(const LabeledDataset& dataset, std::size_t top,
                                             Alpha alpha) {
    const std::size_t d = dataset.dims();
    if (top == 0 || top > d) {
        throw_usage("top must lie in [1, " + std::to_string(d) + "], got " + std::to_string(top));
    }
    std::vector<ScreenedFeature> ranked(d);
    parallel_for(d, [&](std::size_t j) {
        const MatrixView column = dataset.column(j);
        const auto start = std::chrono::steady_clock::now();
        ScreenedFeature& out = ranked[j];
        out.feature = j;
        if (is_constant(column)) {
            out.degenerate = true;
        } else {
            out.estimate = gcor(column, dataset.codes(), dataset.num_classes(), alpha,
                                EstimatorKind::V)
                               .estimate;
        }
        out.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    });

    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const ScreenedFeature& a, const ScreenedFeature& b) {
                         if (a.degenerate != b.degenerate) return !a.degenerate;
                         if (a.estimate != b.estimate) return a.estimate > b.estimate;
                         return a.feature < b.feature;
                     });
    ranked.resize(top);
    return ranked;
}

}  // namespace ginicor
