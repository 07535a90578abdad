#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "ginicor/dataset.hpp"
#include "ginicor/error.hpp"
#include "ginicor/gini_cor.hpp"
#include "ginicor/types.hpp"

using namespace ginicor;

namespace {

LabeledDataset make(Matrix x, std::vector<std::string> labels) {
    return LabeledDataset::build(std::move(x), labels);
}

}  // namespace

TEST_CASE("two balanced classes are counted and weighted") {
    const auto data = make(Matrix::from_rows({{0}, {0}, {1}, {1}}), {"a", "a", "b", "b"});
    CHECK(data.num_classes() == 2);
    CHECK(data.groups().counts == std::vector<std::size_t>{2, 2});
    CHECK(data.groups().proportions[0] == doctest::Approx(0.5));
    CHECK(data.groups().proportions[1] == doctest::Approx(0.5));
}

TEST_CASE("groups partition the rows") {
    const auto data = make(Matrix::from_rows({{1, 2}, {3, 4}, {5, 6}}), {"a", "b", "a"});
    CHECK(data.num_classes() == 2);
    CHECK(data.groups().indices[0] == std::vector<std::size_t>{0, 2});
    CHECK(data.groups().indices[1] == std::vector<std::size_t>{1});
    CHECK(data.groups().total() == 3);
}

TEST_CASE("levels follow first appearance") {
    const auto data = make(Matrix::from_rows({{1}, {2}, {3}, {4}}), {"c", "b", "a", "b"});
    CHECK(data.levels() == std::vector<std::string>{"c", "b", "a"});
    CHECK(data.groups().counts == std::vector<std::size_t>{1, 2, 1});
    CHECK(group_view(data).proportions[1] == doctest::Approx(0.5));
}

TEST_CASE("a single level gives one group") {
    const auto data = make(Matrix::from_rows({{1}, {2}}), {"z", "z"});
    CHECK(data.num_classes() == 1);
    CHECK(data.groups().proportions[0] == 1.0);
}

TEST_CASE("invalid inputs are data errors") {
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(make(Matrix::from_rows({{0}, {inf}}), {"a", "b"}), Error);
    CHECK_THROWS_AS(make(Matrix::from_rows({{0}, {nan}}), {"a", "b"}), Error);
    CHECK_THROWS_AS(make(Matrix::from_rows({{0}, {1}}), {"a"}), Error);
    CHECK_THROWS_AS(make(Matrix(0, 1), {}), Error);
    CHECK_THROWS_AS(make(Matrix::from_rows({{0}}), {"a"}), Error);
    try {
        make(Matrix::from_rows({{0}, {nan}}), {"a", "b"});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::data);
    }
}

TEST_CASE("alpha outside (0, 2] is rejected") {
    CHECK_THROWS_AS(Alpha(0.0), Error);
    CHECK_THROWS_AS(Alpha(-1.0), Error);
    CHECK_THROWS_AS(Alpha(2.5), Error);
    CHECK(Alpha(2.0).value() == 2.0);
    CHECK_FALSE(Alpha(2.0).characterizing());
    CHECK(Alpha(1.5).characterizing());
    CHECK(Alpha::one().is_one());
}

TEST_CASE("estimator kind parsing") {
    CHECK(parse_estimator_kind("U") == EstimatorKind::U);
    CHECK(parse_estimator_kind("v") == EstimatorKind::V);
    CHECK_THROWS_AS(parse_estimator_kind("W"), Error);
}

TEST_CASE("column views do not copy and match the matrix") {
    const auto data = make(Matrix::from_rows({{1, 10}, {2, 20}, {3, 30}}), {"a", "b", "a"});
    const MatrixView col = data.column(1);
    CHECK(col.rows() == 3);
    CHECK(col.cols() == 1);
    CHECK(col(2, 0) == 30);
    CHECK(col.row_ptr(0) == data.feature_matrix().data().data() + 1);
    CHECK_THROWS_AS(data.column(2), Error);
}

TEST_CASE("property: group index lists reassemble to all rows") {
    std::vector<std::string> labels;
    const char* names[] = {"x", "y", "z", "w"};
    Matrix x(37, 1);
    for (std::size_t i = 0; i < 37; ++i) {
        labels.emplace_back(names[(i * 7 + 3) % 4]);
        x(i, 0) = static_cast<double>(i);
    }
    const auto data = make(std::move(x), labels);
    std::vector<std::size_t> all;
    for (const auto& idx : data.groups().indices) all.insert(all.end(), idx.begin(), idx.end());
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expected(37);
    std::iota(expected.begin(), expected.end(), std::size_t{0});
    CHECK(all == expected);
    double sum = 0.0;
    for (double p : data.groups().proportions) sum += p;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("property: renaming levels leaves estimates unchanged") {
    Matrix x = Matrix::from_rows({{0.3}, {1.7}, {2.2}, {-0.4}, {5.0}, {3.3}, {0.9}, {2.8}});
    const std::vector<std::string> a = {"p", "q", "r", "p", "q", "r", "p", "q"};
    const std::vector<std::string> b = {"r", "p", "zz", "r", "p", "zz", "r", "p"};
    const auto first = make(x, a);
    const auto second = make(x, b);
    CHECK(gcor(first, Alpha::one()).estimate == gcor(second, Alpha::one()).estimate);
    CHECK(gcor(first, Alpha(0.5), EstimatorKind::U).estimate ==
          gcor(second, Alpha(0.5), EstimatorKind::U).estimate);
}

TEST_CASE("subset, relabel and feature selection") {
    const auto data = make(Matrix::from_rows({{1, 2}, {3, 4}, {5, 6}, {7, 8}}), {"a", "b", "a", "b"});
    const std::vector<std::size_t> rows = {0, 2};
    const auto sub = data.subset(rows);
    CHECK(sub.size() == 2);
    CHECK(sub.num_classes() == 1);
    const std::vector<std::size_t> order = {1, 0, 3, 2};
    const auto swapped = data.relabeled(order);
    CHECK(swapped.codes()[0] == 1);
    CHECK(swapped.codes()[1] == 0);
    const std::vector<std::size_t> cols = {1};
    const auto one = data.select_features(cols);
    CHECK(one.dims() == 1);
    CHECK(one.feature_matrix()(3, 0) == 8);
}
