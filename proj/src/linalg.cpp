// SPDX-License-Identifier: Apache-2.0
#include "sumrank/linalg.hpp"

#include <string>
#include <utility>

namespace sumrank {

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Elem> data, Over over)
    : rows_(rows), cols_(cols), over_(over), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw ParameterError("matrix data has " + std::to_string(data_.size()) +
                             " entries, expected " + std::to_string(rows * cols));
    }
}

Mat Mat::identity(std::size_t n, Over over) {
    Mat m(n, n, over);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Field::one();
    return m;
}

bool Mat::is_zero() const {
    for (auto x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_, over_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

void Mat::append_rows(const Mat& other) {
    if (rows_ == 0 && cols_ == 0) {
        *this = other;
        return;
    }
    if (other.cols_ != cols_) throw ParameterError("append_rows: column count mismatch");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

namespace linalg {

Echelon rref(const Field& f, Mat m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        }
        const Elem s = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Elem factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!m(r, j).is_zero()) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<Elem> kept(m.data().begin(), m.data().begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
    return {Mat(r, m.cols(), std::move(kept), m.over()), std::move(pivots)};
}

std::size_t rank(const Field& f, const Mat& m) { return rref(f, m).pivots.size(); }

Mat kernel(const Field& f, const Mat& m) {
    const auto [red, pivots] = rref(f, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    Mat basis(0, m.cols(), m.over());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Mat v(1, m.cols(), m.over());
        v(0, free) = Field::one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v(0, pivots[i]) = f.neg(red(i, free));
        basis.append_rows(v);
    }
    if (basis.rows() == 0) return basis;
    return rref(f, basis).reduced;
}

std::optional<std::vector<Elem>> solve(const Field& f, const Mat& m, std::span<const Elem> b) {
    if (b.size() != m.rows()) {
        throw ParameterError("solve: right-hand side has " + std::to_string(b.size()) +
                             " entries for a matrix with " + std::to_string(m.rows()) + " rows");
    }
    Mat aug(m.rows(), m.cols() + 1, m.over());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto [red, pivots] = rref(f, std::move(aug));
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Elem> x(m.cols(), Field::zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
    return x;
}

Mat left_inverse(const Field& f, const Mat& m) {
    const std::size_t r = m.rows(), c = m.cols();
    Mat aug(r, c + r, m.over());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
        aug(i, c + i) = Field::one();
    }
    const auto [red, pivots] = rref(f, std::move(aug));
    if (pivots.size() < c || (c > 0 && pivots[c - 1] != c - 1)) {
        throw ParameterError("left_inverse: matrix does not have full column rank");
    }
    Mat l(c, r, m.over());
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < r; ++j) l(i, j) = red(i, c + j);
    }
    return l;
}

Mat multiply(const Field& f, const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw ParameterError("multiply: inner dimensions differ");
    Mat out(a.rows(), b.cols(), a.over() == Over::base && b.over() == Over::base ? Over::base : Over::ext);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
        }
    }
    return out;
}

std::vector<Elem> apply(const Field& f, const Mat& m, std::span<const Elem> x) {
    if (x.size() != m.cols()) throw ParameterError("apply: dimension mismatch");
    std::vector<Elem> out(m.rows(), Field::zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] = f.add(out[i], f.mul(m(i, j), x[j]));
    }
    return out;
}

std::vector<Elem> row_times(const Field& f, std::span<const Elem> x, const Mat& m) {
    if (x.size() != m.rows()) throw ParameterError("row_times: dimension mismatch");
    std::vector<Elem> out(m.cols(), Field::zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(x[i], m(i, j)));
    }
    return out;
}

Mat expand_columns(const Field& f, std::span<const Elem> x) {
    Mat out(f.m(), x.size(), Over::base);
    for (std::size_t j = 0; j < x.size(); ++j) {
        const auto col = f.expand(x[j]);
        for (std::size_t i = 0; i < f.m(); ++i) out(i, j) = col[i];
    }
    return out;
}

}  // namespace linalg
}  // namespace sumrank
