#ifndef FXNET_MATRIX_HPP
#define FXNET_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace fxnet {

/// Dense row-major matrix of doubles. Plain value type, no view semantics.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return cells_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {cells_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {cells_.data() + r * cols_, cols_}; }

    const std::vector<double>& cells() const noexcept { return cells_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> cells_;
};

} // namespace fxnet

#endif
