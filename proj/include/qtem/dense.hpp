#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qtem/errors.hpp"

namespace qtem {

// Row-major dense matrix, just large enough for the eigenproblems the
// library solves itself.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) {
        return a_[i * cols_ + j];
    }
    double operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    const std::vector<double>& data() const { return a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

inline double frobenius_norm(const DenseMatrix& m) {
    double s = 0.0;
    for (double x : m.data()) s += x * x;
    return std::sqrt(s);
}

inline std::vector<double> matvec(const DenseMatrix& m,
                                  const std::vector<double>& x) {
    if (x.size() != m.cols())
        throw InvalidDimensions("matvec: size mismatch");
    std::vector<double> y(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

} // namespace qtem
