// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sumrank/field.hpp"

namespace sumrank {

/// Which field a matrix lives over. Base-field matrices hold elements of the
/// subfield F_q (still stored as F_{q^m} elements), so one elimination kernel
/// serves both; ranks over F_q and F_{q^m} agree for such matrices.
enum class Over { base, ext };

/// Dense row-major matrix of field elements.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, Over over = Over::ext)
        : rows_(rows), cols_(cols), over_(over), data_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Elem> data, Over over = Over::ext);

    static Mat identity(std::size_t n, Over over = Over::ext);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] Over over() const { return over_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Elem> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    [[nodiscard]] const std::vector<Elem>& data() const { return data_; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] Mat transpose() const;
    /// Appends the rows of `other`; column counts must agree.
    void append_rows(const Mat& other);

    bool operator==(const Mat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    Over over_ = Over::ext;
    std::vector<Elem> data_;
};

namespace linalg {

struct Echelon {
    Mat reduced;                      ///< reduced row echelon form (zero rows dropped)
    std::vector<std::size_t> pivots;  ///< pivot column per row
};

Echelon rref(const Field& f, Mat m);
std::size_t rank(const Field& f, const Mat& m);

/// Basis of the right null space {v : M v = 0}, as rows in reduced echelon
/// form.
Mat kernel(const Field& f, const Mat& m);

/// Some x with M x = b; nullopt iff b is not in the column space.
std::optional<std::vector<Elem>> solve(const Field& f, const Mat& m, std::span<const Elem> b);

/// L with L M = I. Throws ParameterError if M lacks full column rank.
Mat left_inverse(const Field& f, const Mat& m);

Mat multiply(const Field& f, const Mat& a, const Mat& b);
std::vector<Elem> apply(const Field& f, const Mat& m, std::span<const Elem> x);
/// Row vector times matrix: x M.
std::vector<Elem> row_times(const Field& f, std::span<const Elem> x, const Mat& m);

/// The m x n F_q-matrix whose column j is expand(x_j).
Mat expand_columns(const Field& f, std::span<const Elem> x);

}  // namespace linalg
}  // namespace sumrank
