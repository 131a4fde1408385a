// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sumrank/field.hpp"
#include "sumrank/linalg.hpp"
#include "sumrank/metric.hpp"
#include "sumrank/skewpoly.hpp"

namespace sumrank {

/**
 * Linearized Reed-Solomon code: the evaluations
 *   c = ( f(beta^(1))_{xi_1} | ... | f(beta^(l))_{xi_l} ),  f in F_{q^m}[x; sigma]_{<k}.
 *
 * Construction derives the generator Moore matrix G = M_k(beta, xi), the
 * dual vector alpha and the parity-check matrix H = M_{n-k}(alpha,
 * sigma^{-1}(xi)) over the sigma^{-1}-twisted operator, and checks
 * G H^T = 0 and wt(alpha) = n before returning.
 */
class Code {
public:
    /// Defaults: xi = class representatives, beta block i = first n_i
    /// elements of the field's F_q-basis.
    static Code make(FieldPtr field, LengthPartition part, std::size_t k,
                     std::optional<std::vector<Elem>> xi = std::nullopt,
                     std::optional<std::vector<std::vector<Elem>>> beta = std::nullopt);

    [[nodiscard]] const Field& field() const { return *field_; }
    [[nodiscard]] const FieldPtr& field_ptr() const { return field_; }
    [[nodiscard]] const LengthPartition& partition() const { return part_; }
    [[nodiscard]] std::size_t n() const { return part_.n(); }
    [[nodiscard]] std::size_t k() const { return k_; }
    [[nodiscard]] std::size_t redundancy() const { return part_.n() - k_; }
    [[nodiscard]] std::size_t min_distance() const { return part_.n() - k_ + 1; }
    [[nodiscard]] std::size_t blocks() const { return part_.blocks(); }

    [[nodiscard]] const std::vector<Elem>& xi() const { return xi_; }
    [[nodiscard]] const std::vector<std::vector<Elem>>& beta() const { return beta_; }
    [[nodiscard]] const Mat& generator() const { return g_; }
    [[nodiscard]] const Mat& parity_check() const { return h_; }
    [[nodiscard]] const Word& alpha() const { return alpha_; }
    [[nodiscard]] std::vector<std::vector<Elem>> alpha_blocks() const { return part_.split(alpha_); }

    /// Encodes a message polynomial (twist +1, degree < k).
    [[nodiscard]] Word encode(const SkewPoly& message) const;
    /// Encodes a coefficient vector of length k (constant term first).
    [[nodiscard]] Word encode(std::span<const Elem> coefficients) const;

    /// Message coefficients (length k) of a codeword; nullopt if c is not in
    /// the code.
    [[nodiscard]] std::optional<std::vector<Elem>> unencode(std::span<const Elem> c) const;
    [[nodiscard]] std::vector<Elem> syndrome(std::span<const Elem> y) const;
    [[nodiscard]] bool contains(std::span<const Elem> y) const;

private:
    Code() = default;

    FieldPtr field_;
    LengthPartition part_;
    std::size_t k_ = 0;
    std::vector<Elem> xi_;
    std::vector<std::vector<Elem>> beta_;
    Mat g_, h_;
    Word alpha_;
};

/// Nonzero kernel vector of the (n-1) x n Moore system D_{xi_i}^l(beta),
/// normalized so its first nonzero entry is 1.
Word dual_alpha(const Field& f, const LengthPartition& part, std::span<const Elem> xi,
                std::span<const std::vector<Elem>> beta);

/// H = M_{n-k}(alpha, sigma^{-1}(xi)) in the sigma^{-1}-twisted ring.
Mat parity_check_matrix(const Field& f, const LengthPartition& part, std::size_t k, std::span<const Elem> xi,
                        std::span<const Elem> alpha);

}  // namespace sumrank
