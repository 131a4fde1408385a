// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sumrank/decoder.hpp"
#include "sumrank/linalg.hpp"
#include "sumrank/lrs.hpp"

namespace sumrank {

class Rng;

/// One subspace of F_q^(n_i + m) per shot, each given by a basis whose rows
/// span it (entries in F_q).
struct LiftedWord {
    std::vector<Mat> shots;
};

/// Insertions and deletions requested for one shot.
struct ShotRequest {
    std::size_t insertions = 0;
    std::size_t deletions = 0;
};

/// Result of reducing a received lifted word to an error-erasure instance.
struct Reduction {
    Word received;
    SideInfo side;
    /// Per shot: row erasures (inserted directions with zero identity part)
    /// and column erasures (missing pivots).
    std::vector<std::size_t> row_erasures, col_erasures;
};

/// Shot i = row space of (I_{n_i} | expand(c^{(i)})^T).
LiftedWord lift(const Code& code, std::span<const Elem> c);

/// Row-reduced bases; equal iff the lifted words span the same subspaces.
LiftedWord canonical(const Field& f, const LiftedWord& w);

/// Per shot: keeps a random (dim - deletions)-dimensional subspace, then adds
/// `insertions` random directions outside the current span. The resulting
/// basis is scrambled by a random invertible matrix.
LiftedWord operator_channel(const Field& f, const LiftedWord& sent, std::span<const ShotRequest> requests,
                            Rng& rng);

Reduction reduce(const Code& code, const LiftedWord& received);

DecodeResult decode_subspace(const Decoder& decoder, const LiftedWord& received, Variant variant);

}  // namespace sumrank
