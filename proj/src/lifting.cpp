// SPDX-License-Identifier: Apache-2.0
#include "sumrank/lifting.hpp"

#include <algorithm>
#include <string>

#include "sumrank/rng.hpp"

namespace sumrank {
namespace {

Mat random_fq_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
    Mat m(rows, cols, Over::base);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.random_fq(rng);
    }
    return m;
}

}  // namespace

LiftedWord lift(const Code& code, std::span<const Elem> c) {
    const Field& f = code.field();
    const auto& part = code.partition();
    if (c.size() != code.n()) throw ParameterError("lift: word length mismatch");
    LiftedWord out;
    for (std::size_t i = 0; i < part.blocks(); ++i) {
        const std::size_t ni = part.size(i);
        Mat shot(ni, ni + f.m(), Over::base);
        for (std::size_t r = 0; r < ni; ++r) {
            shot(r, r) = Field::one();
            const auto coords = f.expand(c[part.offset(i) + r]);
            for (std::size_t j = 0; j < f.m(); ++j) shot(r, ni + j) = coords[j];
        }
        out.shots.push_back(std::move(shot));
    }
    return out;
}

LiftedWord canonical(const Field& f, const LiftedWord& w) {
    LiftedWord out;
    for (const Mat& s : w.shots) out.shots.push_back(linalg::rref(f, s).reduced);
    return out;
}

LiftedWord operator_channel(const Field& f, const LiftedWord& sent, std::span<const ShotRequest> requests,
                            Rng& rng) {
    if (requests.size() != sent.shots.size()) {
        throw ParameterError("operator channel: one request per shot required");
    }
    LiftedWord out;
    for (std::size_t i = 0; i < sent.shots.size(); ++i) {
        const Mat basis = linalg::rref(f, sent.shots[i]).reduced;
        const std::size_t dim = basis.rows(), ambient = sent.shots[i].cols();
        const auto [ins, del] = requests[i];
        if (del > dim) {
            throw ParameterError("shot " + std::to_string(i) + ": " + std::to_string(del) +
                                 " deletions exceed dimension " + std::to_string(dim));
        }
        if (ins > ambient - (dim - del)) {
            throw ParameterError("shot " + std::to_string(i) + ": " + std::to_string(ins) +
                                 " insertions exceed the ambient codimension");
        }
        Mat kept = linalg::multiply(f, random_full_rank_fq(f, dim - del, dim, rng), basis);
        kept = Mat(kept.rows(), ambient, kept.data(), Over::base);
        for (std::size_t t = 0; t < ins; ++t) {
            const std::size_t before = linalg::rank(f, kept);
            for (;;) {
                Mat trial = kept;
                trial.append_rows(random_fq_matrix(f, 1, ambient, rng));
                if (linalg::rank(f, trial) > before) {
                    kept = std::move(trial);
                    break;
                }
            }
        }
        const std::size_t rows = kept.rows();
        Mat shot = rows > 0 ? linalg::multiply(f, random_full_rank_fq(f, rows, rows, rng), kept)
                            : Mat(0, ambient, Over::base);
        out.shots.push_back(Mat(shot.rows(), ambient, shot.data(), Over::base));
    }
    return out;
}

Reduction reduce(const Code& code, const LiftedWord& received) {
    const Field& f = code.field();
    const auto& part = code.partition();
    const std::size_t m = f.m();
    if (received.shots.size() != part.blocks()) throw ParameterError("reduce: shot count mismatch");

    Reduction out;
    out.received.assign(code.n(), Field::zero());
    for (std::size_t i = 0; i < part.blocks(); ++i) {
        const std::size_t ni = part.size(i), off = part.offset(i);
        const Mat& shot = received.shots[i];
        if (shot.cols() != ni + m) {
            throw ParameterError("shot " + std::to_string(i) + " has " + std::to_string(shot.cols()) +
                                 " columns, expected " + std::to_string(ni + m));
        }
        const auto ech = linalg::rref(f, shot);
        const Mat& red = ech.reduced;

        // Pivoted rows give the n_i x (n_i + m) matrix [X | Y] with zero rows
        // at missing pivots; rows pivoting past n_i are known error values.
        Mat x_part(ni, ni, Over::base), y_part(ni, m, Over::base);
        std::vector<bool> pivoted(ni, false);
        std::vector<Elem> values;
        for (std::size_t r = 0; r < red.rows(); ++r) {
            const std::size_t p = ech.pivots[r];
            if (p < ni) {
                pivoted[p] = true;
                for (std::size_t c = 0; c < ni; ++c) x_part(p, c) = red(r, c);
                for (std::size_t c = 0; c < m; ++c) y_part(p, c) = red(r, ni + c);
            } else {
                std::vector<Elem> coords(red.row(r).begin() + static_cast<std::ptrdiff_t>(ni), red.row(r).end());
                values.push_back(f.compress(coords));
            }
        }
        std::vector<std::size_t> missing;
        for (std::size_t c = 0; c < ni; ++c) {
            if (!pivoted[c]) missing.push_back(c);
        }
        // X - I is supported on the missing columns; its restriction there
        // spans the known row space of the error.
        Mat locations(missing.size(), ni, Over::base);
        for (std::size_t j = 0; j < missing.size(); ++j) {
            for (std::size_t r = 0; r < ni; ++r) {
                Elem v = x_part(r, missing[j]);
                if (r == missing[j]) v = f.sub(v, Field::one());
                locations(j, r) = v;
            }
        }
        for (std::size_t r = 0; r < ni; ++r) out.received[off + r] = f.compress(y_part.row(r));
        out.row_erasures.push_back(values.size());
        out.col_erasures.push_back(missing.size());
        out.side.row_values.push_back(std::move(values));
        out.side.col_locations.push_back(std::move(locations));
    }
    return out;
}

DecodeResult decode_subspace(const Decoder& decoder, const LiftedWord& received, Variant variant) {
    const Reduction red = reduce(decoder.code(), received);
    return decoder.decode(red.received, red.side, variant);
}

}  // namespace sumrank
