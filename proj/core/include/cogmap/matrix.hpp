#pragma once

#include <cstddef>
#include <vector>

#include "cogmap/errors.hpp"

namespace cogmap {

// Dense row-major matrix of doubles. Small sizes only (indicator counts),
// so no blocking or expression tricks.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, 0.0);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool operator==(const Matrix& other) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Row-vector action v' = v * A (the propagation convention used throughout).
inline std::vector<double> left_multiply(const std::vector<double>& v, const Matrix& a) {
    if (v.size() != a.rows())
        throw DimensionError("vector length " + std::to_string(v.size()) +
                             " does not match matrix rows " + std::to_string(a.rows()));
    std::vector<double> out(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double vi = v[i];
        if (vi == 0.0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] += vi * a(i, j);
    }
    return out;
}

inline std::vector<double> right_multiply(const Matrix& a, const std::vector<double>& v) {
    if (v.size() != a.cols())
        throw DimensionError("vector length " + std::to_string(v.size()) +
                             " does not match matrix cols " + std::to_string(a.cols()));
    std::vector<double> out(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

} // namespace cogmap
