#include "ginicor/simulate.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "ginicor/dist_cor.hpp"
#include "ginicor/error.hpp"
#include "ginicor/gini_cor.hpp"
#include "ginicor/parallel.hpp"
#include "ginicor/random.hpp"

namespace ginicor {

namespace {

// Redraws allowed when a sample misses a class or leaves one too small.
constexpr std::size_t kMaxAttempts = 1000;

double draw(const Component& c, Rng& rng) {
    switch (c.family) {
        case Family::exponential:
            return rng.exponential(c.first);
        case Family::normal:
            return rng.normal(c.first, c.second);
        case Family::cauchy:
            return rng.cauchy(c.first, c.second);
        case Family::standard_mv_normal:
            return rng.normal();
    }
    return 0.0;
}

std::vector<std::size_t> stratified_labels(std::span<const double> weights, std::size_t n,
                                           Rng& rng) {
    std::vector<std::size_t> counts(weights.size());
    std::size_t assigned = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        counts[k] = static_cast<std::size_t>(std::floor(static_cast<double>(n) * weights[k]));
        assigned += counts[k];
    }
    for (std::size_t k = 0; assigned < n; k = (k + 1) % counts.size(), ++assigned) ++counts[k];
    std::vector<std::size_t> labels;
    labels.reserve(n);
    for (std::size_t k = 0; k < counts.size(); ++k) labels.insert(labels.end(), counts[k], k);
    rng.shuffle(std::span<std::size_t>(labels));
    return labels;
}

bool usable(const LabeledDataset& data, std::size_t classes, std::size_t min_size) {
    if (data.num_classes() != classes) return false;
    for (std::size_t c : data.groups().counts) {
        if (c < min_size) return false;
    }
    return true;
}

/// Sample of a design that contains every class with at least min_size
/// members; attempt a of replicate `path` uses stream (path..., a).
LabeledDataset usable_sample(const MixtureSpec& spec, std::size_t n, std::uint64_t seed,
                             std::size_t design, std::size_t replicate, std::size_t min_size) {
    for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        LabeledDataset data =
            sample_mixture(spec, n, derive_seed(seed, {design, replicate, attempt}));
        if (usable(data, spec.components.size(), min_size)) return data;
    }
    throw_numeric("could not draw a sample with every class of size >= " +
                  std::to_string(min_size) + " for " + spec.describe());
}

double binomial_se(double rate, std::size_t reps) {
    return std::sqrt(rate * (1.0 - rate) / static_cast<double>(reps));
}

template <class F>
double seconds_of(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::pair<double, double> mean_sd(const std::vector<double>& values) {
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0};
}

std::string format_alpha(Alpha alpha) {
    std::string text = std::to_string(alpha.value());
    text.erase(text.find_last_not_of('0') + 1);
    if (!text.empty() && text.back() == '.') text.pop_back();
    return text;
}

}  // namespace

LabeledDataset sample_mixture(const MixtureSpec& spec, std::size_t n, std::uint64_t seed,
                              LabelScheme scheme) {
    spec.validate();
    if (n == 0) throw_usage("sample size must be positive");
    Rng rng(seed);
    std::vector<std::size_t> labels;
    if (scheme == LabelScheme::stratified) {
        labels = stratified_labels(spec.weights, n, rng);
    } else {
        labels.resize(n);
        for (std::size_t& label : labels) label = rng.categorical(spec.weights);
    }
    const std::size_t d = spec.dims();
    Matrix x(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        const Component& c = spec.components[labels[i]];
        for (std::size_t j = 0; j < d; ++j) x(i, j) = draw(c, rng);
    }
    return LabeledDataset::build(std::move(x), std::span<const std::size_t>(labels));
}

ExperimentResult coverage_experiment(const MixtureSpec& spec, std::size_t n, double level,
                                     std::size_t reps, Alpha alpha, EstimatorKind kind,
                                     std::uint64_t seed) {
    const std::optional<double> truth = oracle_gcor(spec);
    if (!truth) throw_usage("no population oracle for " + spec.describe());
    if (reps == 0) throw_usage("replicate count must be positive");
    if (!(level > 0.0 && level < 1.0)) throw_usage("confidence level must lie in (0, 1)");

    const std::size_t min_size = kind == EstimatorKind::U ? 3 : 2;
    std::vector<unsigned char> covered(reps, 0);
    parallel_for(reps, [&](std::size_t r) {
        const LabeledDataset data = usable_sample(spec, n, seed, 0, r, min_size);
        covered[r] = jackknife_ci(data, alpha, kind, level).covers(*truth) ? 1 : 0;
    });

    const double rate = static_cast<double>(std::accumulate(covered.begin(), covered.end(),
                                                            std::size_t{0})) /
                        static_cast<double>(reps);
    ExperimentResult result;
    result.experiment = "coverage";
    result.seed = seed;
    result.reps = reps;
    result.cells.push_back({spec.describe(), "gcor-jackknife-" + std::string(to_string(kind)),
                            n, spec.dims(), rate, binomial_se(rate, reps), reps});
    return result;
}

ExperimentResult power_experiment(std::span<const MixtureSpec> designs, std::size_t n,
                                  std::size_t permutations, double gamma,
                                  std::span<const StatisticChoice> statistics, std::size_t reps,
                                  std::uint64_t seed) {
    if (designs.empty()) throw_usage("at least one design is required");
    if (statistics.empty()) throw_usage("at least one statistic is required");
    if (reps == 0) throw_usage("replicate count must be positive");
    for (const MixtureSpec& spec : designs) spec.validate();

    const std::size_t cells = designs.size() * statistics.size();
    std::vector<unsigned char> rejected(cells * reps, 0);
    parallel_for(designs.size() * reps, [&](std::size_t task) {
        const std::size_t design = task / reps;
        const std::size_t r = task % reps;
        const LabeledDataset data = usable_sample(designs[design], n, seed, design, r, 2);
        for (std::size_t s = 0; s < statistics.size(); ++s) {
            const auto test = permutation_test(data, statistics[s].alpha, statistics[s].statistic,
                                               permutations, gamma,
                                               derive_seed(seed, {design, r, kMaxAttempts + s}));
            rejected[(design * statistics.size() + s) * reps + r] = test.rejects() ? 1 : 0;
        }
    });

    ExperimentResult result;
    result.experiment = "power";
    result.seed = seed;
    result.reps = reps;
    for (std::size_t design = 0; design < designs.size(); ++design) {
        for (std::size_t s = 0; s < statistics.size(); ++s) {
            const auto begin = rejected.begin() +
                               static_cast<std::ptrdiff_t>((design * statistics.size() + s) * reps);
            const double rate =
                static_cast<double>(std::accumulate(begin, begin + static_cast<std::ptrdiff_t>(reps),
                                                    std::size_t{0})) /
                static_cast<double>(reps);
            result.cells.push_back({designs[design].describe(),
                                    std::string(to_string(statistics[s].statistic)) +
                                        "(alpha=" + format_alpha(statistics[s].alpha) + ")",
                                    n, designs[design].dims(), rate, binomial_se(rate, reps), reps});
        }
    }
    return result;
}

ExperimentResult timing_benchmark(std::span<const std::size_t> d_values,
                                  std::span<const std::size_t> n_values, std::size_t reps,
                                  std::uint64_t seed) {
    ExperimentResult result;
    result.experiment = "timing";
    result.seed = seed;
    result.reps = reps;
    if (reps == 0) return result;

    const ScopedThreadLimit single_thread(1);
    for (std::size_t di = 0; di < d_values.size(); ++di) {
        for (std::size_t ni = 0; ni < n_values.size(); ++ni) {
            const std::size_t d = d_values[di];
            const std::size_t n = n_values[ni];
            if (d == 0 || n < 4) throw_usage("timing cells need d >= 1 and n >= 4");
            const MixtureSpec spec{{Component::standard_mv_normal(d), Component::standard_mv_normal(d)},
                                   {0.5, 0.5}};
            // Each repetition times one call on a fresh sample: repeating a
            // call on fixed input lets the branch predictor learn the sort.
            auto draw = [&](std::size_t r) {
                return sample_mixture(spec, n, derive_seed(seed, {di, ni, r}), LabelScheme::stratified);
            };
            {
                const LabeledDataset warm = draw(reps);
                (void)gcor(warm, Alpha::one(), EstimatorKind::V);
                (void)dcov_unbiased(warm, Alpha::one());
            }
            std::vector<double> gcor_times, dcor_times;
            for (std::size_t r = 0; r < reps; ++r) {
                const LabeledDataset data = draw(r);
                gcor_times.push_back(seconds_of([&] { (void)gcor(data, Alpha::one(), EstimatorKind::V); }));
                dcor_times.push_back(seconds_of([&] { (void)dcov_unbiased(data, Alpha::one()); }));
            }
            const auto [gm, gs] = mean_sd(gcor_times);
            const auto [dm, ds] = mean_sd(dcor_times);
            const std::string design = "MVN" + std::to_string(d) + " two balanced classes";
            result.cells.push_back({design, d == 1 ? "gcor-sorted" : "gcor-pairwise", n, d, gm, gs, reps});
            result.cells.push_back({design, "dcor-unbiased", n, d, dm, ds, reps});
        }
    }
    return result;
}

double loglog_slope(std::span<const double> n_values, std::span<const double> times) {
    if (n_values.size() != times.size() || n_values.size() < 2) {
        throw_usage("log-log slope needs two or more paired points");
    }
    const double m = static_cast<double>(n_values.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (!(n_values[i] > 0.0 && times[i] > 0.0)) throw_usage("log-log slope needs positive values");
        sx += std::log(n_values[i]);
        sy += std::log(times[i]);
    }
    const double mx = sx / m, my = sy / m;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const double dx = std::log(n_values[i]) - mx;
        sxy += dx * (std::log(times[i]) - my);
        sxx += dx * dx;
    }
    if (!(sxx > 0.0)) throw_usage("log-log slope needs distinct sample sizes");
    return sxy / sxx;
}

}  // namespace ginicor
