#include "rht/linalg.hpp"

#include <algorithm>

#include "rht/errors.hpp"

namespace rht {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelonize(std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t QMatrix::rank() const {
    auto copy = data_;
    return echelonize(copy).size();
}

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
    std::vector<std::vector<Rational>> out;
    if (cols_ == 0) return out;
    auto copy = data_;
    if (copy.empty()) copy.emplace_back(cols_, Rational(0));
    auto pivots = echelonize(copy);

    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free_col] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -copy[pr][free_col];
        out.push_back(std::move(v));
    }
    return out;
}

bool QMatrix::solve(const std::vector<Rational>& b, std::vector<Rational>& x) const {
    if (b.size() != rows_) throw structural_error("solve: size mismatch");
    auto aug = data_;
    for (std::size_t i = 0; i < rows_; ++i) aug[i].push_back(b[i]);
    auto pivots = echelonize(aug);

    x.assign(cols_, Rational(0));
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
        if (pivots[pr] == cols_) return false; // pivot in the augmented column
        x[pivots[pr]] = aug[pr][cols_];
    }
    return true;
}

FormSignature symmetric_signature(QMatrix m) {
    std::size_t n = m.rows();
    if (m.cols() != n) throw structural_error("signature of a non-square matrix");
    FormSignature sig;

    // Congruence diagonalisation: simultaneous row and column operations.
    std::vector<std::vector<Rational>> a = m.data();
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_with = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][i] != 0) { swap_with = i; break; }
            if (swap_with != k) {
                std::swap(a[k], a[swap_with]);
                for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][swap_with]);
            }
        }
        if (a[k][k] == 0) {
            // All remaining diagonal entries vanish; find an off-diagonal
            // entry and fold it onto the diagonal (characteristic 0).
            std::size_t j = k;
            for (std::size_t i = k + 1; i < n && j == k; ++i)
                if (a[k][i] != 0) j = i;
            if (j == k) { sig.zero += 1; continue; }
            for (std::size_t i = 0; i < n; ++i) a[k][i] += a[j][i];
            for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][j];
        }
        Rational d = a[k][k];
        if (d == 0) { sig.zero += 1; continue; }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational factor = a[i][k] / d;
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= factor * a[k][j];
            for (std::size_t j = 0; j < n; ++j) a[j][i] -= factor * a[j][k];
        }
        if (d > 0) sig.positive += 1;
        else sig.negative += 1;
    }
    return sig;
}

} // namespace rht
