#pragma once

#include <cstddef>
#include <vector>

#include "copulaforge/errors.hpp"

namespace copulaforge {

enum class MarginTag { Uniform01, Transformed };

// n x d matrix of realizations, row-major, with margin metadata.
struct SampleMatrix {
    std::size_t n = 0;
    std::size_t d = 0;
    MarginTag margin = MarginTag::Uniform01;
    std::vector<double> data;

    SampleMatrix() = default;
    SampleMatrix(std::size_t n_, std::size_t d_, MarginTag tag = MarginTag::Uniform01)
        : n(n_), d(d_), margin(tag), data(n_ * d_, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return data[i * d + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * d + j]; }

    std::vector<double> column(std::size_t j) const {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = at(i, j);
        return out;
    }
};

// Dense square matrix, row-major. Used for correlation and variogram inputs.
struct SquareMatrix {
    std::size_t d = 0;
    std::vector<double> a;

    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t d_) : d(d_), a(d_ * d_, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return a[i * d + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * d + j]; }

    bool empty() const { return d == 0; }

    static SquareMatrix identity(std::size_t d_) {
        SquareMatrix m(d_);
        for (std::size_t i = 0; i < d_; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

// Lower-triangular Cholesky factor; L * L^T reproduces the source matrix.
struct CholeskyFactor {
    SquareMatrix L;
};

} // namespace copulaforge
