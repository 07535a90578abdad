#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ginicor/dataset.hpp"
#include "ginicor/inference.hpp"
#include "ginicor/oracles.hpp"
#include "ginicor/types.hpp"

namespace ginicor {

enum class LabelScheme {
    multinomial,  // each observation draws its class from the weights
    stratified,   // exact counts floor(n w_k), remainder to the first classes, shuffled
};

/// Draws n labeled observations; the component index is the label.
LabeledDataset sample_mixture(const MixtureSpec& spec, std::size_t n, std::uint64_t seed,
                              LabelScheme scheme = LabelScheme::multinomial);

/// One cell of an experiment table.
struct ExperimentCell {
    std::string design;
    std::string method;
    std::size_t n = 0;
    std::size_t d = 1;
    double value = 0.0;   // coverage, rejection rate, or mean seconds
    double spread = 0.0;  // binomial standard error, or sd of seconds
    std::size_t reps = 0;
};

struct ExperimentResult {
    std::string experiment;
    std::uint64_t seed = 0;
    std::size_t reps = 0;
    std::vector<ExperimentCell> cells;
};

/// Share of jackknife intervals (over `reps` samples of size n) that contain
/// the population Gini correlation. Needs an oracle for the design.
ExperimentResult coverage_experiment(const MixtureSpec& spec, std::size_t n, double level,
                                     std::size_t reps, Alpha alpha, EstimatorKind kind,
                                     std::uint64_t seed);

/// A test statistic paired with its distance exponent.
struct StatisticChoice {
    TestStatistic statistic = TestStatistic::gcor;
    Alpha alpha = Alpha::one();
};

/// Rejection rates at level gamma. Each replicate draws one dataset per
/// design and runs every statistic on it with M permutations.
ExperimentResult power_experiment(std::span<const MixtureSpec> designs, std::size_t n,
                                  std::size_t permutations, double gamma,
                                  std::span<const StatisticChoice> statistics, std::size_t reps,
                                  std::uint64_t seed);

/// Mean and sd wall time of gcor (sorted fast path when d = 1) and of the
/// unbiased distance covariance on standard normal data split into two equal
/// classes. One discarded warm-up run per cell; kernels run single-threaded.
ExperimentResult timing_benchmark(std::span<const std::size_t> d_values,
                                  std::span<const std::size_t> n_values, std::size_t reps,
                                  std::uint64_t seed);

/// Least-squares slope of log(time) on log(n).
double loglog_slope(std::span<const double> n_values, std::span<const double> times);

}  // namespace ginicor
