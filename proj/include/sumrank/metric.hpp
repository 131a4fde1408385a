// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sumrank/field.hpp"
#include "sumrank/linalg.hpp"

namespace sumrank {

class Rng;

using Word = std::vector<Elem>;

/// Split of a length-n vector into blocks of sizes n_1, ..., n_l.
class LengthPartition {
public:
    LengthPartition() = default;
    explicit LengthPartition(std::vector<std::size_t> sizes);

    [[nodiscard]] std::size_t blocks() const { return sizes_.size(); }
    [[nodiscard]] std::size_t size(std::size_t i) const { return sizes_[i]; }
    [[nodiscard]] std::size_t offset(std::size_t i) const { return offsets_[i]; }
    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] const std::vector<std::size_t>& sizes() const { return sizes_; }

    [[nodiscard]] std::span<const Elem> block(std::span<const Elem> x, std::size_t i) const {
        return x.subspan(offsets_[i], sizes_[i]);
    }
    /// Splits a flat word into per-block vectors.
    [[nodiscard]] std::vector<std::vector<Elem>> split(std::span<const Elem> x) const;

    bool operator==(const LengthPartition&) const = default;

private:
    std::vector<std::size_t> sizes_, offsets_;
    std::size_t n_ = 0;
};

/// Sum of the F_q-ranks of the m x n_i expansions of each block.
std::size_t weight(const Field& f, std::span<const Elem> x, const LengthPartition& part);
std::size_t distance(const Field& f, std::span<const Elem> x, std::span<const Elem> y,
                     const LengthPartition& part);
/// F_q-rank of a list of elements (dimension of their F_q-span).
std::size_t fq_rank(const Field& f, std::span<const Elem> x);

/// Per-block counts of full errors, row erasures and column erasures.
struct BlockProfile {
    std::size_t full = 0;
    std::size_t row = 0;
    std::size_t col = 0;

    [[nodiscard]] std::size_t total() const { return full + row + col; }
    bool operator==(const BlockProfile&) const = default;
};

using ErrorProfile = std::vector<BlockProfile>;

struct ProfileTotals {
    std::size_t full = 0, row = 0, col = 0;
};
ProfileTotals totals(const ErrorProfile& profile);

/// One error type inside one block: values a (F_{q^m}) and locations B
/// (F_q, values.size() x n_i). The block error is sum_r a_r * B[r, :].
struct ErrorComponent {
    std::vector<Elem> values;
    Mat locations;
};

struct BlockError {
    ErrorComponent full, row, col;
};

/// e = a_F B_F + a_R B_R + a_C B_C, stored blockwise.
struct ErrorPattern {
    LengthPartition part;
    std::vector<BlockError> blocks;

    [[nodiscard]] ErrorProfile profile() const;
    [[nodiscard]] Word realize(const Field& f) const;
};

/// What the channel reveals: row-erasure values a_R and column-erasure
/// locations B_C, per block.
struct SideInfo {
    std::vector<std::vector<Elem>> row_values;
    std::vector<Mat> col_locations;

    /// Empty side info for a partition.
    static SideInfo none(const Field& f, const LengthPartition& part);
    [[nodiscard]] std::size_t row_count() const;
    [[nodiscard]] std::size_t col_count() const;
};

/// Samples an error with the given per-block rank profile. Each block's
/// combined values and stacked locations are full rank, so the error has
/// sum-rank weight exactly the profile total.
std::pair<ErrorPattern, SideInfo> sample_error(const Field& f, const LengthPartition& part,
                                               const ErrorProfile& profile, Rng& rng);

/// Uniformly random full-rank rows x cols F_q matrix (rows <= cols).
Mat random_full_rank_fq(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
/// `count` F_q-independent random elements of F_{q^m}.
std::vector<Elem> random_independent(const Field& f, std::size_t count, Rng& rng);

}  // namespace sumrank
