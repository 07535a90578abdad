#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ginicor/dataset.hpp"
#include "ginicor/types.hpp"

namespace ginicor {

double normal_cdf(double x);
/// Inverse of normal_cdf for p in (0, 1).
double normal_quantile(double p);

/// Jackknife standard error and normal-theory interval for the Gini
/// correlation.
struct JackknifeInterval {
    double estimate = 0.0;
    double se = 0.0;
    double level = 0.95;
    double lower = 0.0;  // estimate - z * se, truncated to [0, 1]
    double upper = 0.0;  // estimate + z * se, truncated to [0, 1]
    double raw_lower = 0.0;
    double raw_upper = 0.0;
    std::vector<double> leave_one_out;

    bool covers(double value) const noexcept { return raw_lower <= value && value <= raw_upper; }
};

/// Leave-one-out Gini correlations, one per observation, from an O(n)
/// downdate of precomputed pair sums. Every class needs at least 2 members
/// (V) or 3 (U) so that no deletion empties or degenerates a class.
std::vector<double> jackknife_estimates(const LabeledDataset& dataset, Alpha alpha,
                                        EstimatorKind kind);

/// se = sqrt((n-1)/n * sum (rho_(-i) - mean)^2); interval estimate +- z se.
JackknifeInterval jackknife_ci(const LabeledDataset& dataset, Alpha alpha, EstimatorKind kind,
                               double level);

enum class TestStatistic { gcor, dcor_unbiased };

std::string_view to_string(TestStatistic statistic);
TestStatistic parse_test_statistic(std::string_view text);

struct PermutationTestResult {
    double observed = 0.0;
    std::vector<double> replicates;
    double p_value = 1.0;         // (1 + #{replicate >= observed}) / (M + 1)
    double critical_value = 0.0;  // order statistic ceil((1 - gamma) M)
    double gamma = 0.05;
    std::uint64_t seed = 0;
    TestStatistic statistic = TestStatistic::gcor;
    std::optional<double> power;

    bool rejects() const noexcept { return p_value <= gamma; }
};

/// Permutation test of independence between features and label.
///
/// Replicate r relabels the rows with a shuffle drawn from its own stream
/// derive_seed(seed, {r}), so results do not depend on the thread count.
PermutationTestResult permutation_test(const LabeledDataset& dataset, Alpha alpha,
                                       TestStatistic statistic, std::size_t permutations,
                                       double gamma, std::uint64_t seed,
                                       EstimatorKind kind = EstimatorKind::V);

/// p-value and critical value of an observed statistic against replicates.
void summarize_replicates(PermutationTestResult& result);

/// Power at the alternative rho0: 1 - Phi((critical_value - rho0) / se),
/// where se is the standard error of the estimator (e.g. the jackknife SE).
double power_at(double rho0, double critical_value, double se);

}  // namespace ginicor
