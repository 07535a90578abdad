#include "ginicor/dataset.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "ginicor/error.hpp"

namespace ginicor {

std::size_t GroupView::total() const noexcept {
    std::size_t n = 0;
    for (std::size_t c : counts) n += c;
    return n;
}

GroupView make_group_view(std::span<const std::size_t> codes, std::size_t num_classes) {
    GroupView view;
    view.indices.resize(num_classes);
    view.counts.assign(num_classes, 0);
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (codes[i] >= num_classes) throw_data("class code out of range");
        view.indices[codes[i]].push_back(i);
        ++view.counts[codes[i]];
    }
    const double n = static_cast<double>(codes.size());
    view.proportions.resize(num_classes);
    for (std::size_t k = 0; k < num_classes; ++k) {
        view.proportions[k] = static_cast<double>(view.counts[k]) / n;
    }
    return view;
}

namespace {

void validate_features(const Matrix& features, std::size_t label_count) {
    if (features.rows() == 0 || features.cols() == 0) throw_data("empty feature matrix");
    if (features.rows() != label_count) {
        throw_data("feature matrix has " + std::to_string(features.rows()) + " rows but " +
                   std::to_string(label_count) + " labels were given");
    }
    if (features.rows() < 2) throw_data("at least two observations are required");
    for (std::size_t i = 0; i < features.rows(); ++i) {
        for (std::size_t j = 0; j < features.cols(); ++j) {
            if (!std::isfinite(features(i, j))) {
                throw_data("non-finite feature value at row " + std::to_string(i + 1) +
                           ", column " + std::to_string(j + 1));
            }
        }
    }
}

template <class Label>
std::pair<std::vector<std::size_t>, std::vector<Label>> encode(std::span<const Label> labels) {
    std::vector<std::size_t> codes(labels.size());
    std::vector<Label> levels;
    std::unordered_map<Label, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = index.try_emplace(labels[i], levels.size());
        if (inserted) levels.push_back(labels[i]);
        codes[i] = it->second;
    }
    return {std::move(codes), std::move(levels)};
}

}  // namespace

LabeledDataset::LabeledDataset(Matrix features, std::vector<std::size_t> codes,
                               std::vector<std::string> levels)
    : features_(std::move(features)), codes_(std::move(codes)), levels_(std::move(levels)),
      groups_(make_group_view(codes_, levels_.size())) {}

LabeledDataset LabeledDataset::build(Matrix features, std::span<const std::string> labels) {
    validate_features(features, labels.size());
    auto [codes, levels] = encode(labels);
    return LabeledDataset(std::move(features), std::move(codes), std::move(levels));
}

LabeledDataset LabeledDataset::build(Matrix features, std::span<const std::size_t> labels) {
    validate_features(features, labels.size());
    auto [codes, raw_levels] = encode(labels);
    std::vector<std::string> levels;
    levels.reserve(raw_levels.size());
    for (std::size_t level : raw_levels) levels.push_back(std::to_string(level));
    return LabeledDataset(std::move(features), std::move(codes), std::move(levels));
}

MatrixView LabeledDataset::column(std::size_t j) const {
    if (j >= dims()) throw_usage("feature index " + std::to_string(j) + " out of range");
    return features_.view().column(j);
}

LabeledDataset LabeledDataset::subset(std::span<const std::size_t> rows) const {
    std::vector<std::string> labels;
    labels.reserve(rows.size());
    for (std::size_t r : rows) {
        if (r >= size()) throw_usage("row index out of range");
        labels.push_back(levels_[codes_[r]]);
    }
    return build(Matrix::gather(features_.view(), rows), labels);
}

LabeledDataset LabeledDataset::relabeled(std::span<const std::size_t> order) const {
    if (order.size() != size()) throw_usage("relabeling order must have one entry per row");
    std::vector<std::size_t> codes(size());
    for (std::size_t i = 0; i < size(); ++i) codes[i] = codes_[order[i]];
    return LabeledDataset(features_, std::move(codes), levels_);
}

LabeledDataset LabeledDataset::select_features(std::span<const std::size_t> columns) const {
    if (columns.empty()) throw_usage("at least one feature column is required");
    Matrix out(size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c] >= dims()) throw_usage("feature index out of range");
        for (std::size_t i = 0; i < size(); ++i) out(i, c) = features_(i, columns[c]);
    }
    return LabeledDataset(std::move(out), codes_, levels_);
}

}  // namespace ginicor
