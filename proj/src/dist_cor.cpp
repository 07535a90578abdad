#include "ginicor/dist_cor.hpp"

#include <cmath>
#include <vector>

#include "ginicor/error.hpp"
#include "ginicor/gmd.hpp"
#include "ginicor/parallel.hpp"

namespace ginicor {

namespace {

constexpr std::size_t kParallelMinRows = 128;

void finish_dcor(DistanceReport& report) {
    if (report.dcov_xx > 0.0 && report.dcov_yy > 0.0) {
        report.dcor = report.dcov_xy / std::sqrt(report.dcov_xx * report.dcov_yy);
        report.dcor_undefined = false;
    } else {
        report.dcor = 0.0;
        report.dcor_undefined = true;
    }
}

std::vector<double> full_row_sums(MatrixView x, Alpha alpha) {
    const std::size_t n = x.rows();
    std::vector<double> rows(n, 0.0);
    parallel_for(
        n,
        [&](std::size_t i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) s += distance_alpha(x, i, x, j, alpha);
            }
            rows[i] = s;
        },
        kParallelMinRows);
    return rows;
}

double ordered_sum(const std::vector<double>& values) {
    double total = 0.0;
    for (double v : values) total += v;
    return total;
}

}  // namespace

std::string_view to_string(DistanceFlavor flavor) {
    return flavor == DistanceFlavor::plugin_v ? "plugin-V" : "unbiased-U-centered";
}

Matrix label_metric(std::span<const std::size_t> codes) {
    const std::size_t n = codes.size();
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) b(i, j) = codes[i] != codes[j] ? 1.0 : 0.0;
    }
    return b;
}

DistanceReport dcov_unbiased(const LabeledDataset& dataset, Alpha alpha) {
    const std::size_t n = dataset.size();
    if (n < 4) throw_numeric("the unbiased distance covariance needs n >= 4");
    const MatrixView x = dataset.features();
    const auto codes = dataset.codes();
    const auto& counts = dataset.groups().counts;
    const double nd = static_cast<double>(n);

    // Row sums of a_ij = ||x_i - x_j||^alpha and of b_ij = I(y_i != y_j).
    const std::vector<double> a_row = full_row_sums(x, alpha);
    const double a_all = ordered_sum(a_row);
    std::vector<double> b_row(n);
    for (std::size_t i = 0; i < n; ++i) b_row[i] = nd - static_cast<double>(counts[codes[i]]);
    const double b_all = ordered_sum(b_row);

    const double row_div = nd - 2.0;
    const double a_grand = a_all / ((nd - 1.0) * (nd - 2.0));
    const double b_grand = b_all / ((nd - 1.0) * (nd - 2.0));

    std::vector<double> xy(n, 0.0), xx(n, 0.0), yy(n, 0.0);
    parallel_for(
        n,
        [&](std::size_t i) {
            const double a_i = a_row[i] / row_div;
            const double b_i = b_row[i] / row_div;
            double s_xy = 0.0, s_xx = 0.0, s_yy = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const double a_centered =
                    distance_alpha(x, i, x, j, alpha) - a_i - a_row[j] / row_div + a_grand;
                const double b_centered =
                    (codes[i] != codes[j] ? 1.0 : 0.0) - b_i - b_row[j] / row_div + b_grand;
                s_xy += a_centered * b_centered;
                s_xx += a_centered * a_centered;
                s_yy += b_centered * b_centered;
            }
            xy[i] = s_xy;
            xx[i] = s_xx;
            yy[i] = s_yy;
        },
        kParallelMinRows);

    const double scale = nd * (nd - 3.0);
    DistanceReport report;
    report.alpha = alpha;
    report.flavor = DistanceFlavor::unbiased_u_centered;
    report.dcov_xy = ordered_sum(xy) / scale;
    report.dcov_xx = ordered_sum(xx) / scale;
    report.dcov_yy = ordered_sum(yy) / scale;
    finish_dcor(report);
    return report;
}

DistanceReport dcov_plugin(const LabeledDataset& dataset, Alpha alpha) {
    if (dataset.num_classes() < 2) throw_numeric("distance covariance needs at least two classes");
    const std::size_t n = dataset.size();
    const double nd = static_cast<double>(n);
    const MatrixView x = dataset.features();
    const GroupView& groups = dataset.groups();
    const RowSums rows =
        grouped_row_sums(x, dataset.codes(), dataset.num_classes(), alpha);

    // sum_k p_k^2 T(X_k, X) with V-statistic energy distances.
    const double pooled_gmd = ordered_sum(rows.all) / (nd * nd);
    double dcov_xy = 0.0;
    for (std::size_t k = 0; k < groups.num_groups(); ++k) {
        const double nk = static_cast<double>(groups.counts[k]);
        double cross = 0.0;
        double within = 0.0;
        for (std::size_t i : groups.indices[k]) {
            cross += rows.all[i];
            within += rows.within[i];
        }
        cross /= nk * nd;
        within /= nk * nk;
        const double p = groups.proportions[k];
        dcov_xy += p * p * (2.0 * cross - within - pooled_gmd);
    }

    double sum_p2 = 0.0, sum_p3 = 0.0;
    for (double p : groups.proportions) {
        sum_p2 += p * p;
        sum_p3 += p * p * p;
    }

    // Doubly centered V form for the feature variance term.
    std::vector<double> row_mean(n);
    for (std::size_t i = 0; i < n; ++i) row_mean[i] = rows.all[i] / nd;
    std::vector<double> xx(n, 0.0);
    parallel_for(
        n,
        [&](std::size_t i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double a = j == i ? 0.0 : distance_alpha(x, i, x, j, alpha);
                const double centered = a - row_mean[i] - row_mean[j] + pooled_gmd;
                s += centered * centered;
            }
            xx[i] = s;
        },
        kParallelMinRows);

    DistanceReport report;
    report.alpha = alpha;
    report.flavor = DistanceFlavor::plugin_v;
    report.dcov_xy = dcov_xy;
    report.dcov_xx = ordered_sum(xx) / (nd * nd);
    report.dcov_yy = sum_p2 - 2.0 * sum_p3 + sum_p2 * sum_p2;
    finish_dcor(report);
    return report;
}

}  // namespace ginicor
