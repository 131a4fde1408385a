// SPDX-License-Identifier: Apache-2.0
#include "sumrank/metric.hpp"

#include <algorithm>
#include <string>

#include "sumrank/rng.hpp"

namespace sumrank {

LengthPartition::LengthPartition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw ParameterError("length partition needs at least one block");
    for (auto s : sizes_) {
        if (s == 0) throw ParameterError("length partition blocks must be positive");
        offsets_.push_back(n_);
        n_ += s;
    }
}

std::vector<std::vector<Elem>> LengthPartition::split(std::span<const Elem> x) const {
    if (x.size() != n_) {
        throw ParameterError("word has length " + std::to_string(x.size()) + ", expected " +
                             std::to_string(n_));
    }
    std::vector<std::vector<Elem>> out;
    for (std::size_t i = 0; i < blocks(); ++i) {
        auto b = block(x, i);
        out.emplace_back(b.begin(), b.end());
    }
    return out;
}

std::size_t fq_rank(const Field& f, std::span<const Elem> x) {
    if (x.empty()) return 0;
    return linalg::rank(f, linalg::expand_columns(f, x));
}

std::size_t weight(const Field& f, std::span<const Elem> x, const LengthPartition& part) {
    if (x.size() != part.n()) {
        throw ParameterError("word has length " + std::to_string(x.size()) + ", expected " +
                             std::to_string(part.n()));
    }
    std::size_t w = 0;
    for (std::size_t i = 0; i < part.blocks(); ++i) w += fq_rank(f, part.block(x, i));
    return w;
}

std::size_t distance(const Field& f, std::span<const Elem> x, std::span<const Elem> y,
                     const LengthPartition& part) {
    if (x.size() != y.size()) throw ParameterError("distance: length mismatch");
    Word diff(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) diff[j] = f.sub(x[j], y[j]);
    return weight(f, diff, part);
}

ProfileTotals totals(const ErrorProfile& profile) {
    ProfileTotals t;
    for (const auto& b : profile) {
        t.full += b.full;
        t.row += b.row;
        t.col += b.col;
    }
    return t;
}

ErrorProfile ErrorPattern::profile() const {
    ErrorProfile out;
    for (const auto& b : blocks) {
        out.push_back({b.full.values.size(), b.row.values.size(), b.col.values.size()});
    }
    return out;
}

Word ErrorPattern::realize(const Field& f) const {
    Word e(part.n(), Field::zero());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto off = part.offset(i);
        for (const ErrorComponent* comp : {&blocks[i].full, &blocks[i].row, &blocks[i].col}) {
            for (std::size_t r = 0; r < comp->values.size(); ++r) {
                for (std::size_t k = 0; k < part.size(i); ++k) {
                    const Elem b = comp->locations(r, k);
                    if (!b.is_zero()) e[off + k] = f.add(e[off + k], f.mul(comp->values[r], b));
                }
            }
        }
    }
    return e;
}

SideInfo SideInfo::none(const Field& /*f*/, const LengthPartition& part) {
    SideInfo s;
    s.row_values.resize(part.blocks());
    for (std::size_t i = 0; i < part.blocks(); ++i) s.col_locations.emplace_back(0, part.size(i), Over::base);
    return s;
}

std::size_t SideInfo::row_count() const {
    std::size_t c = 0;
    for (const auto& v : row_values) c += v.size();
    return c;
}

std::size_t SideInfo::col_count() const {
    std::size_t c = 0;
    for (const auto& b : col_locations) c += b.rows();
    return c;
}

Mat random_full_rank_fq(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
    if (rows > cols) throw ParameterError("cannot sample a full-rank matrix with more rows than columns");
    for (;;) {
        Mat m(rows, cols, Over::base);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.random_fq(rng);
        }
        if (linalg::rank(f, m) == rows) return m;
    }
}

std::vector<Elem> random_independent(const Field& f, std::size_t count, Rng& rng) {
    if (count > f.m()) throw ParameterError("cannot sample more than m F_q-independent elements");
    for (;;) {
        std::vector<Elem> v(count);
        for (auto& x : v) x = f.random(rng);
        if (fq_rank(f, v) == count) return v;
    }
}

std::pair<ErrorPattern, SideInfo> sample_error(const Field& f, const LengthPartition& part,
                                               const ErrorProfile& profile, Rng& rng) {
    if (profile.size() != part.blocks()) {
        throw ParameterError("error profile has " + std::to_string(profile.size()) + " blocks, partition has " +
                             std::to_string(part.blocks()));
    }
    ErrorPattern pattern{part, {}};
    SideInfo side;
    for (std::size_t i = 0; i < part.blocks(); ++i) {
        const auto& bp = profile[i];
        const std::size_t ni = part.size(i);
        if (bp.total() > std::min<std::size_t>(f.m(), ni)) {
            throw ParameterError("block " + std::to_string(i) + ": t_F + t_R + t_C = " +
                                 std::to_string(bp.total()) + " exceeds min(m, n_i) = " +
                                 std::to_string(std::min<std::size_t>(f.m(), ni)));
        }
        // Joint sampling of values and locations; both stacks full rank means
        // the block error has rank exactly t.
        const std::vector<Elem> values = random_independent(f, bp.total(), rng);
        const Mat locations = random_full_rank_fq(f, bp.total(), ni, rng);

        BlockError be;
        std::size_t cursor = 0;
        for (auto [comp, count] : {std::pair{&be.full, bp.full}, std::pair{&be.row, bp.row},
                                   std::pair{&be.col, bp.col}}) {
            comp->values.assign(values.begin() + static_cast<std::ptrdiff_t>(cursor),
                                values.begin() + static_cast<std::ptrdiff_t>(cursor + count));
            comp->locations = Mat(count, ni, Over::base);
            for (std::size_t r = 0; r < count; ++r) {
                for (std::size_t k = 0; k < ni; ++k) comp->locations(r, k) = locations(cursor + r, k);
            }
            cursor += count;
        }
        side.row_values.push_back(be.row.values);
        side.col_locations.push_back(be.col.locations);
        pattern.blocks.push_back(std::move(be));
    }
    return {std::move(pattern), std::move(side)};
}

}  // namespace sumrank
