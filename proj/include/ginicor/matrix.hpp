#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ginicor {

/// Non-owning strided view of an n x d block of doubles.
///
/// Rows are observations. A column of a row-major matrix is itself a view
/// (row stride = d, column stride = 1), so per-feature work never copies the
/// whole matrix.
class MatrixView {
public:
    MatrixView() = default;
    MatrixView(const double* data, std::size_t rows, std::size_t cols,
               std::size_t row_stride, std::size_t col_stride = 1)
        : data_(data), rows_(rows), cols_(cols), row_stride_(row_stride),
          col_stride_(col_stride) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    double operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * row_stride_ + j * col_stride_];
    }

    const double* row_ptr(std::size_t i) const noexcept { return data_ + i * row_stride_; }
    std::size_t col_stride() const noexcept { return col_stride_; }

    MatrixView column(std::size_t j) const noexcept {
        return MatrixView(data_ + j * col_stride_, rows_, 1, row_stride_, col_stride_);
    }

    /// Copies one column into contiguous storage.
    std::vector<double> column_values(std::size_t j) const;

private:
    const double* data_ = nullptr;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t row_stride_ = 0;
    std::size_t col_stride_ = 1;
};

/// Owning row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    /// Builds a matrix from nested rows; every row must have the same length.
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    /// n x 1 matrix.
    static Matrix column_vector(std::span<const double> values);
    /// Gathers the listed rows of a view into a new matrix.
    static Matrix gather(MatrixView source, std::span<const std::size_t> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<const double> data() const noexcept { return data_; }

    MatrixView view() const noexcept { return MatrixView(data_.data(), rows_, cols_, cols_, 1); }
    operator MatrixView() const noexcept { return view(); }  // NOLINT(google-explicit-constructor)

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace ginicor
