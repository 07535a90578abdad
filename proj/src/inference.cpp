#include "ginicor/inference.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/math/distributions/normal.hpp>

#include "ginicor/dist_cor.hpp"
#include "ginicor/error.hpp"
#include "ginicor/gini_cor.hpp"
#include "ginicor/gmd.hpp"
#include "ginicor/parallel.hpp"
#include "ginicor/random.hpp"

namespace ginicor {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw_usage("normal quantile needs p in (0, 1)");
    return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

// ---------------------------------------------------------------------------
// Jackknife

std::vector<double> jackknife_estimates(const LabeledDataset& dataset, Alpha alpha,
                                        EstimatorKind kind) {
    const GroupView& groups = dataset.groups();
    if (groups.num_groups() < 2) throw_numeric("Gini correlation needs at least two classes");
    const std::size_t min_size = kind == EstimatorKind::U ? 3 : 2;
    for (std::size_t k = 0; k < groups.num_groups(); ++k) {
        if (groups.counts[k] < min_size) {
            throw_numeric("small class: jackknife with " + std::string(to_string(kind)) +
                          "-statistics needs at least " + std::to_string(min_size) +
                          " observations per class, class '" + dataset.levels()[k] + "' has " +
                          std::to_string(groups.counts[k]));
        }
    }

    const auto codes = dataset.codes();
    const RowSums rows = grouped_row_sums(dataset.features(), codes, dataset.num_classes(), alpha);
    PairSums full;
    full.counts = groups.counts;
    full.within.assign(groups.num_groups(), 0.0);
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        full.total += rows.all[i];
        full.within[codes[i]] += rows.within[i];
    }
    full.total *= 0.5;
    for (double& w : full.within) w *= 0.5;

    std::vector<double> estimates(dataset.size());
    parallel_for(dataset.size(), [&](std::size_t i) {
        PairSums reduced = full;
        const std::size_t k = codes[i];
        reduced.total -= rows.all[i];
        reduced.within[k] -= rows.within[i];
        --reduced.counts[k];
        estimates[i] = gcor_from_pair_sums(reduced, alpha, kind).estimate;
    });
    return estimates;
}

JackknifeInterval jackknife_ci(const LabeledDataset& dataset, Alpha alpha, EstimatorKind kind,
                               double level) {
    if (!(level > 0.0 && level < 1.0)) throw_usage("confidence level must lie in (0, 1)");
    JackknifeInterval interval;
    interval.level = level;
    interval.estimate = gcor(dataset, alpha, kind).estimate;
    interval.leave_one_out = jackknife_estimates(dataset, alpha, kind);

    const auto& loo = interval.leave_one_out;
    const double n = static_cast<double>(loo.size());
    const double mean = std::accumulate(loo.begin(), loo.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : loo) ss += (v - mean) * (v - mean);
    interval.se = std::sqrt((n - 1.0) / n * ss);

    const double z = normal_quantile(1.0 - 0.5 * (1.0 - level));
    interval.raw_lower = interval.estimate - z * interval.se;
    interval.raw_upper = interval.estimate + z * interval.se;
    interval.lower = std::clamp(interval.raw_lower, 0.0, 1.0);
    interval.upper = std::clamp(interval.raw_upper, 0.0, 1.0);
    return interval;
}

// ---------------------------------------------------------------------------
// Permutation test

std::string_view to_string(TestStatistic statistic) {
    return statistic == TestStatistic::gcor ? "gcor" : "dcor-unbiased";
}

TestStatistic parse_test_statistic(std::string_view text) {
    if (text == "gcor") return TestStatistic::gcor;
    if (text == "dcor" || text == "dcor-unbiased") return TestStatistic::dcor_unbiased;
    throw_usage("statistic must be gcor or dcor-unbiased, got '" + std::string(text) + "'");
}

namespace {

// Pairwise quantities are cached when the packed upper triangle stays small.
constexpr std::size_t kMaxCachedRows = 3000;

std::size_t packed_offset(std::size_t i, std::size_t n) { return i * n - i * (i + 1) / 2; }

/// Statistic as a function of a relabeling of the rows. Class counts are
/// fixed under permutation, so everything that depends only on the features
/// or the counts is computed once.
class StatisticKernel {
public:
    virtual ~StatisticKernel() = default;
    virtual double evaluate(std::span<const std::size_t> codes) const = 0;
};

class SortedGcorKernel final : public StatisticKernel {
public:
    SortedGcorKernel(const LabeledDataset& dataset, EstimatorKind kind)
        : kind_(kind), counts_(dataset.groups().counts) {
        const auto values = dataset.features().column_values(0);
        order_.resize(values.size());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        sorted_.resize(values.size());
        for (std::size_t r = 0; r < order_.size(); ++r) sorted_[r] = values[order_[r]];
        total_ = sorted_pair_sum(sorted_);
    }

    double evaluate(std::span<const std::size_t> codes) const override {
        PairSums sums;
        sums.total = total_;
        sums.counts = counts_;
        sums.within.assign(counts_.size(), 0.0);
        std::vector<std::size_t> rank(counts_.size(), 0);
        std::vector<double> base(counts_.size(), 0.0);
        for (std::size_t r = 0; r < order_.size(); ++r) {
            const std::size_t k = codes[order_[r]];
            const double x = sorted_[r];
            if (rank[k] == 0) base[k] = x;
            const double nk = static_cast<double>(counts_[k]);
            sums.within[k] += (2.0 * static_cast<double>(++rank[k]) - nk - 1.0) * (x - base[k]);
        }
        return gcor_from_pair_sums(sums, Alpha::one(), kind_).estimate;
    }

private:
    EstimatorKind kind_;
    std::vector<std::size_t> counts_;
    std::vector<std::size_t> order_;
    std::vector<double> sorted_;
    double total_ = 0.0;
};

class PairwiseGcorKernel final : public StatisticKernel {
public:
    PairwiseGcorKernel(const LabeledDataset& dataset, Alpha alpha, EstimatorKind kind)
        : dataset_(dataset), alpha_(alpha), kind_(kind), n_(dataset.size()) {
        if (n_ > kMaxCachedRows) return;
        const MatrixView x = dataset.features();
        distances_.resize(n_ * (n_ - 1) / 2);
        std::vector<double> row_total(n_, 0.0);
        parallel_for(n_, [&](std::size_t i) {
            double* out = distances_.data() + packed_offset(i, n_);
            double s = 0.0;
            for (std::size_t j = i + 1; j < n_; ++j) {
                out[j - i - 1] = distance_alpha(x, i, x, j, alpha);
                s += out[j - i - 1];
            }
            row_total[i] = s;
        });
        for (double s : row_total) total_ += s;
    }

    double evaluate(std::span<const std::size_t> codes) const override {
        if (distances_.empty()) {
            return gcor(dataset_.features(), codes, dataset_.num_classes(), alpha_, kind_).estimate;
        }
        PairSums sums;
        sums.total = total_;
        sums.counts = dataset_.groups().counts;
        sums.within.assign(sums.counts.size(), 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            const double* row = distances_.data() + packed_offset(i, n_);
            double same = 0.0;
            for (std::size_t j = i + 1; j < n_; ++j) {
                if (codes[j] == codes[i]) same += row[j - i - 1];
            }
            sums.within[codes[i]] += same;
        }
        return gcor_from_pair_sums(sums, alpha_, kind_).estimate;
    }

private:
    const LabeledDataset& dataset_;
    Alpha alpha_;
    EstimatorKind kind_;
    std::size_t n_;
    std::vector<double> distances_;
    double total_ = 0.0;
};

/// With U-centered A, every row of A sums to zero off the diagonal, so
/// sum_{i != j} A_ij B_ij = sum_{i != j} A_ij I(y_i != y_j). dCov(X,X) and
/// dCov(Y,Y) are invariant under relabeling.
class DcorKernel final : public StatisticKernel {
public:
    DcorKernel(const LabeledDataset& dataset, Alpha alpha)
        : dataset_(dataset), alpha_(alpha), n_(dataset.size()) {
        const DistanceReport base = dcov_unbiased(dataset, alpha);
        dcov_xx_ = base.dcov_xx;
        dcov_yy_ = base.dcov_yy;
        if (n_ > kMaxCachedRows) return;

        const MatrixView x = dataset.features();
        const double nd = static_cast<double>(n_);
        std::vector<double> a_row(n_, 0.0);
        parallel_for(n_, [&](std::size_t i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n_; ++j) {
                if (j != i) s += distance_alpha(x, i, x, j, alpha);
            }
            a_row[i] = s;
        });
        double a_all = 0.0;
        for (double s : a_row) a_all += s;
        const double grand = a_all / ((nd - 1.0) * (nd - 2.0));
        centered_.resize(n_ * (n_ - 1) / 2);
        parallel_for(n_, [&](std::size_t i) {
            double* out = centered_.data() + packed_offset(i, n_);
            for (std::size_t j = i + 1; j < n_; ++j) {
                out[j - i - 1] = distance_alpha(x, i, x, j, alpha) - a_row[i] / (nd - 2.0) -
                                 a_row[j] / (nd - 2.0) + grand;
            }
        });
    }

    double evaluate(std::span<const std::size_t> codes) const override {
        if (centered_.empty()) {
            const auto relabeled = LabeledDataset::build(dataset_.feature_matrix(), codes);
            return dcov_unbiased(relabeled, alpha_).dcor;
        }
        if (!(dcov_xx_ > 0.0 && dcov_yy_ > 0.0)) return 0.0;
        double total = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            const double* row = centered_.data() + packed_offset(i, n_);
            double s = 0.0;
            for (std::size_t j = i + 1; j < n_; ++j) {
                if (codes[j] != codes[i]) s += row[j - i - 1];
            }
            total += s;
        }
        const double nd = static_cast<double>(n_);
        const double dcov_xy = 2.0 * total / (nd * (nd - 3.0));
        return dcov_xy / std::sqrt(dcov_xx_ * dcov_yy_);
    }

private:
    const LabeledDataset& dataset_;
    Alpha alpha_;
    std::size_t n_;
    double dcov_xx_ = 0.0;
    double dcov_yy_ = 0.0;
    std::vector<double> centered_;
};

bool constant_features(const LabeledDataset& dataset) {
    const MatrixView x = dataset.features();
    for (std::size_t i = 1; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (x(i, j) != x(0, j)) return false;
        }
    }
    return true;
}

std::unique_ptr<StatisticKernel> make_kernel(const LabeledDataset& dataset, Alpha alpha,
                                             TestStatistic statistic, EstimatorKind kind) {
    if (statistic == TestStatistic::dcor_unbiased) {
        return std::make_unique<DcorKernel>(dataset, alpha);
    }
    if (dataset.dims() == 1 && alpha.is_one()) {
        return std::make_unique<SortedGcorKernel>(dataset, kind);
    }
    return std::make_unique<PairwiseGcorKernel>(dataset, alpha, kind);
}

}  // namespace

void summarize_replicates(PermutationTestResult& result) {
    const std::size_t m = result.replicates.size();
    if (m == 0) throw_usage("a permutation test needs at least one replicate");
    const auto exceed = std::count_if(result.replicates.begin(), result.replicates.end(),
                                      [&](double v) { return v >= result.observed; });
    result.p_value = static_cast<double>(1 + exceed) / static_cast<double>(m + 1);

    std::vector<double> sorted = result.replicates;
    std::sort(sorted.begin(), sorted.end());
    auto rank = static_cast<std::size_t>(std::ceil((1.0 - result.gamma) * static_cast<double>(m)));
    rank = std::clamp<std::size_t>(rank, 1, m);
    result.critical_value = sorted[rank - 1];
}

PermutationTestResult permutation_test(const LabeledDataset& dataset, Alpha alpha,
                                       TestStatistic statistic, std::size_t permutations,
                                       double gamma, std::uint64_t seed, EstimatorKind kind) {
    if (permutations == 0) throw_usage("the number of permutations must be positive");
    if (!(gamma > 0.0 && gamma < 1.0)) throw_usage("gamma must lie in (0, 1)");
    if (dataset.num_classes() < 2) throw_numeric("a dependence test needs at least two classes");
    if (constant_features(dataset)) {
        throw_numeric("degenerate data: all feature rows are identical");
    }

    const auto kernel = make_kernel(dataset, alpha, statistic, kind);
    const auto codes = dataset.codes();

    PermutationTestResult result;
    result.statistic = statistic;
    result.gamma = gamma;
    result.seed = seed;
    result.observed = kernel->evaluate(codes);
    result.replicates.assign(permutations, 0.0);
    parallel_for(permutations, [&](std::size_t r) {
        Rng rng(derive_seed(seed, {r}));
        std::vector<std::size_t> order(codes.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        rng.shuffle(std::span<std::size_t>(order));
        std::vector<std::size_t> permuted(codes.size());
        for (std::size_t i = 0; i < codes.size(); ++i) permuted[i] = codes[order[i]];
        result.replicates[r] = kernel->evaluate(permuted);
    });
    summarize_replicates(result);
    return result;
}

double power_at(double rho0, double critical_value, double se) {
    if (!(rho0 > 0.0)) throw_usage("the alternative rho0 must be positive");
    if (!(se > 0.0)) throw_numeric("power needs a positive standard error");
    return 1.0 - normal_cdf((critical_value - rho0) / se);
}

}  // namespace ginicor
