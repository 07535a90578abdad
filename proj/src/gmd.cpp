#include "ginicor/gmd.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ginicor/error.hpp"
#include "ginicor/parallel.hpp"

namespace ginicor {

namespace {

// Rows below this size run serially; thread start-up dominates otherwise.
constexpr std::size_t kParallelMinRows = 256;

void require_sample(std::size_t m, EstimatorKind kind) {
    if (m == 0) throw_numeric("GMD of an empty sample");
    if (kind == EstimatorKind::U && m < 2) {
        throw_numeric("U-statistic GMD needs at least 2 observations");
    }
}

std::vector<std::size_t> stable_order(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    return order;
}

}  // namespace

double scale_pair_sum(double pair_sum, std::size_t m, EstimatorKind kind) {
    const double md = static_cast<double>(m);
    if (kind == EstimatorKind::U) return pair_sum / (0.5 * md * (md - 1.0));
    return 2.0 * pair_sum / (md * md);
}

double pairwise_sum(MatrixView sample, Alpha alpha) {
    const std::size_t m = sample.rows();
    std::vector<double> row(m, 0.0);
    parallel_for(
        m,
        [&](std::size_t i) {
            double s = 0.0;
            for (std::size_t j = i + 1; j < m; ++j) s += distance_alpha(sample, i, sample, j, alpha);
            row[i] = s;
        },
        kParallelMinRows);
    double total = 0.0;
    for (double r : row) total += r;
    return total;
}

double sorted_pair_sum(std::span<const double> sorted) {
    if (sorted.empty()) return 0.0;
    // The weights sum to zero, so shifting by the minimum leaves the sum
    // unchanged; it makes all-tied input exactly zero and cuts cancellation.
    const double m = static_cast<double>(sorted.size());
    const double base = sorted.front();
    double total = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        total += (2.0 * static_cast<double>(i + 1) - m - 1.0) * (sorted[i] - base);
    }
    return total;
}

GmdEstimate gmd_pairwise(MatrixView sample, Alpha alpha, EstimatorKind kind) {
    require_sample(sample.rows(), kind);
    const double sum = pairwise_sum(sample, alpha);
    return {scale_pair_sum(sum, sample.rows(), kind), kind, alpha, sample.rows()};
}

GmdEstimate gmd_sorted_fast(std::span<const double> sample, EstimatorKind kind) {
    require_sample(sample.size(), kind);
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double sum = sorted_pair_sum(sorted);
    return {scale_pair_sum(sum, sorted.size(), kind), kind, Alpha::one(), sorted.size()};
}

GmdEstimate gmd(MatrixView sample, Alpha alpha, EstimatorKind kind) {
    if (sample.cols() == 1 && alpha.is_one()) {
        return gmd_sorted_fast(sample.column_values(0), kind);
    }
    return gmd_pairwise(sample, alpha, kind);
}

GmdEstimate gmd_cross(MatrixView sample_a, MatrixView sample_b, Alpha alpha) {
    if (sample_a.rows() == 0 || sample_b.rows() == 0) throw_numeric("cross GMD of an empty sample");
    if (sample_a.cols() != sample_b.cols()) throw_usage("cross GMD of samples with different dimensions");
    std::vector<double> row(sample_a.rows(), 0.0);
    parallel_for(
        sample_a.rows(),
        [&](std::size_t i) {
            double s = 0.0;
            for (std::size_t j = 0; j < sample_b.rows(); ++j) {
                s += distance_alpha(sample_a, i, sample_b, j, alpha);
            }
            row[i] = s;
        },
        kParallelMinRows);
    double total = 0.0;
    for (double r : row) total += r;
    const double pairs = static_cast<double>(sample_a.rows()) * static_cast<double>(sample_b.rows());
    return {total / pairs, EstimatorKind::V, alpha, sample_a.rows() + sample_b.rows()};
}

PairSums grouped_pair_sums(MatrixView sample, std::span<const std::size_t> codes,
                           std::size_t num_classes, Alpha alpha) {
    const std::size_t n = sample.rows();
    if (codes.size() != n) throw_usage("one class code per observation is required");
    PairSums sums;
    sums.within.assign(num_classes, 0.0);
    sums.counts.assign(num_classes, 0);
    for (std::size_t c : codes) ++sums.counts[c];

    if (sample.cols() == 1 && alpha.is_one()) {
        // Walk the pooled order once; each class sees its own members in
        // sorted order, so per-class ranks give the within-class sums.
        // Ties need no stable order: equal values contribute equally.
        std::vector<std::pair<double, std::size_t>> sorted(n);
        for (std::size_t i = 0; i < n; ++i) sorted[i] = {sample(i, 0), codes[i]};
        std::sort(sorted.begin(), sorted.end());
        // Values are shifted by the pooled minimum (resp. the class minimum,
        // which is the first member of the class met in pooled order).
        std::vector<std::size_t> rank(num_classes, 0);
        std::vector<double> class_base(num_classes, 0.0);
        const double nd = static_cast<double>(n);
        const double base = n > 0 ? sorted[0].first : 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            const auto [x, k] = sorted[r];
            sums.total += (2.0 * static_cast<double>(r + 1) - nd - 1.0) * (x - base);
            if (rank[k] == 0) class_base[k] = x;
            const double nk = static_cast<double>(sums.counts[k]);
            sums.within[k] += (2.0 * static_cast<double>(++rank[k]) - nk - 1.0) * (x - class_base[k]);
        }
        return sums;
    }

    std::vector<double> row_total(n, 0.0);
    std::vector<double> row_within(n, 0.0);
    parallel_for(
        n,
        [&](std::size_t i) {
            double all = 0.0;
            double same = 0.0;
            for (std::size_t j = i + 1; j < n; ++j) {
                const double a = distance_alpha(sample, i, sample, j, alpha);
                all += a;
                if (codes[j] == codes[i]) same += a;
            }
            row_total[i] = all;
            row_within[i] = same;
        },
        kParallelMinRows);
    for (std::size_t i = 0; i < n; ++i) {
        sums.total += row_total[i];
        sums.within[codes[i]] += row_within[i];
    }
    return sums;
}

RowSums grouped_row_sums(MatrixView sample, std::span<const std::size_t> codes,
                         std::size_t num_classes, Alpha alpha) {
    const std::size_t n = sample.rows();
    if (codes.size() != n) throw_usage("one class code per observation is required");
    RowSums rows;
    rows.all.assign(n, 0.0);
    rows.within.assign(n, 0.0);

    if (sample.cols() == 1 && alpha.is_one()) {
        // For sorted values y_1 <= ... <= y_m with prefix sums P,
        // sum_j |y_r - y_j| = y_r (2r - m) - P_r + (P_m - P_r) where r is 1-based
        // and P_r includes y_r.
        const std::vector<double> values = sample.column_values(0);
        const std::vector<std::size_t> order = stable_order(values);
        auto accumulate_rows = [&](std::span<const std::size_t> members, std::vector<double>& out) {
            if (members.empty()) return;
            const double m = static_cast<double>(members.size());
            const double base = values[members[0]];
            double total = 0.0;
            for (std::size_t i : members) total += values[i] - base;
            double prefix = 0.0;
            for (std::size_t r = 0; r < members.size(); ++r) {
                const double y = values[members[r]] - base;
                prefix += y;
                const double rank = static_cast<double>(r + 1);
                out[members[r]] = y * (2.0 * rank - m) - prefix + (total - prefix);
            }
        };
        accumulate_rows(order, rows.all);
        std::vector<std::vector<std::size_t>> members(num_classes);
        for (std::size_t i : order) members[codes[i]].push_back(i);
        for (const auto& group : members) accumulate_rows(group, rows.within);
        return rows;
    }

    parallel_for(
        n,
        [&](std::size_t i) {
            double all = 0.0;
            double same = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const double a = distance_alpha(sample, i, sample, j, alpha);
                all += a;
                if (codes[j] == codes[i]) same += a;
            }
            rows.all[i] = all;
            rows.within[i] = same;
        },
        kParallelMinRows);
    return rows;
}

}  // namespace ginicor
