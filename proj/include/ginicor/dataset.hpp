#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ginicor/matrix.hpp"

namespace ginicor {

/// Partition of observation indices by class.
struct GroupView {
    std::vector<std::vector<std::size_t>> indices;  // ascending within each class
    std::vector<std::size_t> counts;
    std::vector<double> proportions;

    std::size_t num_groups() const noexcept { return counts.size(); }
    std::size_t total() const noexcept;
};

/// Builds the partition for dense class codes in [0, num_classes).
GroupView make_group_view(std::span<const std::size_t> codes, std::size_t num_classes);

/// n observations of d numeric features with a K-level categorical label.
///
/// Label levels are mapped to dense codes 0..K-1 in order of first
/// appearance; the original level names are kept for reporting. Immutable
/// after construction.
class LabeledDataset {
public:
    /// Validates and builds a dataset. Throws a data error on a size
    /// mismatch, an empty input, fewer than two observations, or a
    /// non-finite feature value.
    static LabeledDataset build(Matrix features, std::span<const std::string> labels);

    /// Same, from integer class identifiers (used by samplers).
    static LabeledDataset build(Matrix features, std::span<const std::size_t> labels);

    std::size_t size() const noexcept { return features_.rows(); }
    std::size_t dims() const noexcept { return features_.cols(); }
    std::size_t num_classes() const noexcept { return levels_.size(); }

    MatrixView features() const noexcept { return features_.view(); }
    MatrixView column(std::size_t j) const;
    const Matrix& feature_matrix() const noexcept { return features_; }

    std::span<const std::size_t> codes() const noexcept { return codes_; }
    const std::vector<std::string>& levels() const noexcept { return levels_; }
    const GroupView& groups() const noexcept { return groups_; }

    /// Dataset restricted to the listed rows; levels are re-derived from the
    /// kept rows so a class that disappears is dropped.
    LabeledDataset subset(std::span<const std::size_t> rows) const;

    /// Same features, with row i taking the label of row order[i].
    LabeledDataset relabeled(std::span<const std::size_t> order) const;

    /// Features restricted to the listed columns, in the given order.
    LabeledDataset select_features(std::span<const std::size_t> columns) const;

private:
    LabeledDataset(Matrix features, std::vector<std::size_t> codes,
                   std::vector<std::string> levels);

    Matrix features_;
    std::vector<std::size_t> codes_;
    std::vector<std::string> levels_;
    GroupView groups_;
};

/// Grouping of an existing dataset.
inline const GroupView& group_view(const LabeledDataset& dataset) { return dataset.groups(); }

}  // namespace ginicor
