#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "ginicor/matrix.hpp"
#include "ginicor/types.hpp"

namespace ginicor {

/// Gini mean difference E||X - X'||^alpha estimated from a sample.
struct GmdEstimate {
    double value = 0.0;
    EstimatorKind kind = EstimatorKind::V;
    Alpha alpha = Alpha::one();
    std::size_t n = 0;
};

/// ||a_i - b_j||^alpha, computed as (sum of squared differences)^(alpha/2).
inline double distance_alpha(MatrixView a, std::size_t i, MatrixView b, std::size_t j,
                             Alpha alpha) noexcept {
    const std::size_t d = a.cols();
    double sq = 0.0;
    if (d == 1) {
        const double diff = a(i, 0) - b(j, 0);
        if (alpha.is_one()) return std::fabs(diff);
        sq = diff * diff;
    } else {
        for (std::size_t k = 0; k < d; ++k) {
            const double diff = a(i, k) - b(j, k);
            sq += diff * diff;
        }
        if (alpha.is_one()) return std::sqrt(sq);
    }
    if (alpha.value() == 2.0) return sq;
    return std::pow(sq, 0.5 * alpha.value());
}

/// Turns a sum over distinct unordered pairs into the U or V average for a
/// sample of size m. U divides by m(m-1)/2; V by m^2/2 (ordered pairs, zero
/// diagonal included).
double scale_pair_sum(double pair_sum, std::size_t m, EstimatorKind kind);

/// U: mean of ||x_i - x_j||^alpha over i<j. V: mean over all m^2 ordered pairs.
/// Throws a numeric error for m < 2 with kind U or an empty sample.
GmdEstimate gmd_pairwise(MatrixView sample, Alpha alpha, EstimatorKind kind);

/// Exact O(m log m) univariate alpha = 1 estimate from order statistics:
/// sum_{i<j} |x_i - x_j| = sum_i (2i - m - 1) x_(i).
GmdEstimate gmd_sorted_fast(std::span<const double> sample, EstimatorKind kind);

/// Dispatches to gmd_sorted_fast when d = 1 and alpha = 1, else gmd_pairwise.
GmdEstimate gmd(MatrixView sample, Alpha alpha, EstimatorKind kind);

/// Mean of ||a_i - b_j||^alpha over all m_a * m_b cross pairs.
GmdEstimate gmd_cross(MatrixView sample_a, MatrixView sample_b, Alpha alpha);

/// Sum over i<j of ||x_i - x_j||^alpha with a fixed, thread-count independent
/// reduction order (row partial sums combined in row order).
double pairwise_sum(MatrixView sample, Alpha alpha);

/// sum_i (2i - m - 1) x_(i) for already sorted values.
double sorted_pair_sum(std::span<const double> sorted);

/// Pair sums for a labeled sample: total over all i<j and, per class, over
/// i<j within that class.
struct PairSums {
    double total = 0.0;
    std::vector<double> within;
    std::vector<std::size_t> counts;
};

/// Uses one stable sort when d = 1 and alpha = 1; the O(n^2) row loop otherwise.
PairSums grouped_pair_sums(MatrixView sample, std::span<const std::size_t> codes,
                           std::size_t num_classes, Alpha alpha);

/// Per-observation row sums: all[i] = sum_j a_ij, within[i] = sum over j in
/// the class of i. Used for leave-one-out downdates and cross means.
struct RowSums {
    std::vector<double> all;
    std::vector<double> within;
};

RowSums grouped_row_sums(MatrixView sample, std::span<const std::size_t> codes,
                         std::size_t num_classes, Alpha alpha);

}  // namespace ginicor
