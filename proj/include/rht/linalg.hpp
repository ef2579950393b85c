#pragma once

#include <cstddef>
#include <vector>

#include "rht/rational.hpp"

namespace rht {

// Dense matrix over the rationals; just enough exact linear algebra for
// bounded-degree cohomology, kernels and intersection forms.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, std::vector<Rational>(cols, Rational(0))) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r][c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r][c]; }

    std::size_t rank() const;

    // Basis of the right kernel {v : A v = 0}.
    std::vector<std::vector<Rational>> kernel_basis() const;

    // Some solution x of A x = b, or empty if none exists.
    std::vector<std::vector<Rational>> data() const { return data_; }
    bool solve(const std::vector<Rational>& b, std::vector<Rational>& x) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Rational>> data_;
};

struct FormSignature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    bool degenerate() const { return zero > 0; }
    bool definite(std::size_t dim) const { return positive == dim || negative == dim; }
    long value() const { return static_cast<long>(positive) - static_cast<long>(negative); }
};

// Sylvester-style signature of a symmetric rational matrix, computed by an
// exact congruence diagonalisation.
FormSignature symmetric_signature(QMatrix m);

} // namespace rht
