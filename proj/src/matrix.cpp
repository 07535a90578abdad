#include "ginicor/matrix.hpp"

#include "ginicor/error.hpp"

namespace ginicor {

std::vector<double> MatrixView::column_values(std::size_t j) const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw_data("matrix data has " + std::to_string(data_.size()) + " values, expected " +
                   std::to_string(rows * cols));
    }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t n = rows.size();
    const std::size_t d = n == 0 ? 0 : rows.begin()->size();
    std::vector<double> data;
    data.reserve(n * d);
    for (const auto& r : rows) {
        if (r.size() != d) throw_data("ragged rows in matrix literal");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(n, d, std::move(data));
}

Matrix Matrix::column_vector(std::span<const double> values) {
    return Matrix(values.size(), 1, std::vector<double>(values.begin(), values.end()));
}

Matrix Matrix::gather(MatrixView source, std::span<const std::size_t> rows) {
    Matrix out(rows.size(), source.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < source.cols(); ++j) out(i, j) = source(rows[i], j);
    }
    return out;
}

}  // namespace ginicor
