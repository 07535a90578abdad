#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "brute.hpp"
#include "ginicor/error.hpp"
#include "ginicor/gmd.hpp"

using namespace ginicor;

namespace {

Matrix column(std::vector<double> values) { return Matrix::column_vector(values); }

}  // namespace

TEST_CASE("single pair") {
    const Matrix x = column({0, 2});
    CHECK(gmd_pairwise(x, Alpha::one(), EstimatorKind::U).value == 2.0);
    CHECK(gmd_pairwise(x, Alpha::one(), EstimatorKind::V).value == 1.0);
}

TEST_CASE("three points by enumeration and by order statistics") {
    const Matrix x = column({1, 2, 4});
    CHECK(gmd_pairwise(x, Alpha::one(), EstimatorKind::U).value == doctest::Approx(2.0));
    const std::vector<double> v = {4, 1, 2};
    CHECK(gmd_sorted_fast(v, EstimatorKind::U).value == doctest::Approx(2.0));
    const std::vector<double> sorted = {1, 2, 4};
    CHECK(sorted_pair_sum(sorted) == doctest::Approx(6.0));
}

TEST_CASE("ties give exactly zero") {
    const std::vector<double> v = {5, 5, 5, 5};
    CHECK(gmd_sorted_fast(v, EstimatorKind::U).value == 0.0);
    CHECK(gmd_sorted_fast(v, EstimatorKind::V).value == 0.0);
    const std::vector<double> odd = {0.1, 0.1, 0.1};
    CHECK(gmd_sorted_fast(odd, EstimatorKind::V).value == 0.0);
    const Matrix x = Matrix::from_rows({{0.3, 7}, {0.3, 7}, {0.3, 7}});
    CHECK(gmd_pairwise(x, Alpha(0.7), EstimatorKind::U).value == 0.0);
}

TEST_CASE("cross GMD") {
    CHECK(gmd_cross(column({0}), column({3}), Alpha::one()).value == 3.0);
    CHECK(gmd_cross(column({0, 1}), column({0, 1}), Alpha::one()).value == 0.5);
    CHECK(gmd_cross(column({2}), column({2}), Alpha::one()).value == 0.0);
    CHECK_THROWS_AS(gmd_cross(Matrix(0, 1), column({1}), Alpha::one()), Error);
}

TEST_CASE("U needs two observations") {
    CHECK_THROWS_AS(gmd_pairwise(column({1}), Alpha::one(), EstimatorKind::U), Error);
    const std::vector<double> one = {1};
    CHECK_THROWS_AS(gmd_sorted_fast(one, EstimatorKind::U), Error);
    CHECK(gmd_pairwise(column({1}), Alpha::one(), EstimatorKind::V).value == 0.0);
}

TEST_CASE("dispatcher uses order statistics only for d = 1 and alpha = 1") {
    const Matrix x = column({3, -1, 4, 1, 5});
    CHECK(gmd(x, Alpha::one(), EstimatorKind::U).value ==
          doctest::Approx(gmd_pairwise(x, Alpha::one(), EstimatorKind::U).value).epsilon(1e-12));
    CHECK(gmd(x, Alpha(1.5), EstimatorKind::V).value ==
          gmd_pairwise(x, Alpha(1.5), EstimatorKind::V).value);
}

TEST_CASE("property: order-statistics path equals pairwise enumeration") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<int> length(2, 64);
    std::normal_distribution<double> normal;
    std::uniform_int_distribution<int> small(0, 4);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<double> v(static_cast<std::size_t>(length(gen)));
        // Every third vector is heavily tied.
        for (double& x : v) x = rep % 3 == 0 ? small(gen) : 10.0 * normal(gen);
        const Matrix m = Matrix::column_vector(v);
        for (auto kind : {EstimatorKind::U, EstimatorKind::V}) {
            const double fast = gmd_sorted_fast(v, kind).value;
            const double naive = gmd_pairwise(m, Alpha::one(), kind).value;
            CHECK(std::abs(fast - naive) <= 1e-10 * std::max(1.0, std::abs(naive)));
        }
    }
}

TEST_CASE("property: V equals U times (m - 1) / m") {
    std::mt19937_64 gen(3);
    std::normal_distribution<double> normal;
    for (std::size_t m : {2u, 3u, 10u, 41u}) {
        for (std::size_t d : {1u, 3u}) {
            Matrix x(m, d);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < d; ++j) x(i, j) = normal(gen);
            for (double a : {0.5, 1.0, 2.0}) {
                const double u = gmd(x, Alpha(a), EstimatorKind::U).value;
                const double v = gmd(x, Alpha(a), EstimatorKind::V).value;
                CHECK(brute::rel_diff(v, u * static_cast<double>(m - 1) / static_cast<double>(m)) <
                      1e-12);
            }
        }
    }
}

TEST_CASE("property: pairwise estimate matches direct enumeration") {
    std::mt19937_64 gen(5);
    for (int rep = 0; rep < 30; ++rep) {
        const auto data = brute::random_dataset(gen, 5 + static_cast<std::size_t>(rep), 1 + rep % 3, 2);
        const auto rows = brute::rows_of(data);
        for (double a : {0.3, 1.0, 1.7}) {
            CHECK(brute::rel_diff(gmd(data.features(), Alpha(a), EstimatorKind::U).value,
                                  brute::gmd(rows, a, true)) < 1e-12);
            CHECK(brute::rel_diff(gmd(data.features(), Alpha(a), EstimatorKind::V).value,
                                  brute::gmd(rows, a, false)) < 1e-12);
        }
    }
}

TEST_CASE("property: V decomposition into within and cross terms") {
    std::mt19937_64 gen(17);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t k = 2 + rep % 3;
        const auto data = brute::random_dataset(gen, 6 + static_cast<std::size_t>(rep), 1 + rep % 2, k);
        const Alpha alpha(rep % 2 == 0 ? 1.0 : 0.6);
        const auto& g = data.groups();
        std::vector<Matrix> parts;
        for (const auto& idx : g.indices) parts.push_back(Matrix::gather(data.features(), idx));
        double rhs = 0.0;
        for (std::size_t a = 0; a < k; ++a) {
            rhs += g.proportions[a] * g.proportions[a] * gmd(parts[a], alpha, EstimatorKind::V).value;
            for (std::size_t b = a + 1; b < k; ++b) {
                rhs += 2.0 * g.proportions[a] * g.proportions[b] *
                       gmd_cross(parts[a], parts[b], alpha).value;
            }
        }
        CHECK(brute::rel_diff(gmd(data.features(), alpha, EstimatorKind::V).value, rhs) < 1e-12);
    }
}

TEST_CASE("property: scale equivariance and rigid-motion invariance") {
    std::mt19937_64 gen(23);
    std::normal_distribution<double> normal;
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t m = 12;
        Matrix x(m, 2), scaled(m, 2), moved(m, 2);
        const double c = rep % 2 == 0 ? -2.5 : 0.3;
        const double t = normal(gen) * 3.14159;
        for (std::size_t i = 0; i < m; ++i) {
            x(i, 0) = normal(gen);
            x(i, 1) = normal(gen);
            scaled(i, 0) = c * x(i, 0);
            scaled(i, 1) = c * x(i, 1);
            moved(i, 0) = std::cos(t) * x(i, 0) - std::sin(t) * x(i, 1) + 4.0;
            moved(i, 1) = std::sin(t) * x(i, 0) + std::cos(t) * x(i, 1) - 1.0;
        }
        for (double a : {0.5, 1.0, 1.5}) {
            const double base = gmd(x, Alpha(a), EstimatorKind::V).value;
            CHECK(brute::rel_diff(gmd(scaled, Alpha(a), EstimatorKind::V).value,
                                  std::pow(std::abs(c), a) * base) < 1e-12);
            CHECK(brute::rel_diff(gmd(moved, Alpha(a), EstimatorKind::V).value, base) < 1e-12);
        }
    }
}

TEST_CASE("grouped sums agree between the sorted walk and the pairwise loop") {
    std::mt19937_64 gen(29);
    for (int rep = 0; rep < 50; ++rep) {
        const auto data = brute::random_dataset(gen, 3 + static_cast<std::size_t>(rep), 1, 2 + rep % 3);
        const auto fast = grouped_pair_sums(data.features(), data.codes(), data.num_classes(), Alpha::one());
        // Alpha a hair away from 1 forces the pairwise loop; compare to enumeration instead.
        const auto rows = brute::rows_of(data);
        double total = 0.0;
        std::vector<double> within(data.num_classes(), 0.0);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = i + 1; j < rows.size(); ++j) {
                const double dij = std::abs(rows[i][0] - rows[j][0]);
                total += dij;
                if (data.codes()[i] == data.codes()[j]) within[data.codes()[i]] += dij;
            }
        }
        CHECK(brute::rel_diff(fast.total, total) < 1e-12);
        for (std::size_t k = 0; k < within.size(); ++k) {
            CHECK(std::abs(fast.within[k] - within[k]) <= 1e-12 * std::max(1.0, within[k]));
        }
        const auto rows_fast = grouped_row_sums(data.features(), data.codes(), data.num_classes(), Alpha::one());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            double all = 0.0, same = 0.0;
            for (std::size_t j = 0; j < rows.size(); ++j) {
                const double dij = std::abs(rows[i][0] - rows[j][0]);
                all += dij;
                if (data.codes()[i] == data.codes()[j]) same += dij;
            }
            CHECK(std::abs(rows_fast.all[i] - all) <= 1e-11 * std::max(1.0, all));
            CHECK(std::abs(rows_fast.within[i] - same) <= 1e-11 * std::max(1.0, same));
        }
    }
}
