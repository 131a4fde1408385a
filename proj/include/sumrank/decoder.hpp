// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sumrank/lrs.hpp"
#include "sumrank/metric.hpp"
#include "sumrank/skewpoly.hpp"

namespace sumrank {

/// Which key equation drives the decoder: the error span polynomial (ESP)
/// or the error locator polynomial (ELP).
enum class Variant { esp, elp };

const char* to_string(Variant v);

using Blocks = std::vector<std::vector<Elem>>;

struct Syndromes {
    std::vector<Elem> s;      ///< s = y H^T, length n - k
    SkewPoly poly;            ///< sum s_l x^{l-1}, sigma^{-1}-twisted
    std::vector<Elem> tilde;  ///< (s_1, sigma(s_2), ..., sigma^{n-k-1}(s_{n-k}))
    SkewPoly reversed;        ///< sigma^{-1}-reverse of poly w.r.t. n-k-1

    [[nodiscard]] bool is_zero() const;
};

struct Decoded {
    Word codeword;
    SkewPoly message;
    Word error;
    /// Rank of the error part not explained by the side information, per
    /// block.
    std::vector<std::size_t> full_rank;
    /// Degree of the accepted key-equation solution.
    std::size_t key_degree = 0;
};

struct Failure {
    std::string reason;
};

class DecodeResult {
public:
    DecodeResult(Decoded d) : v_(std::move(d)) {}  // NOLINT(google-explicit-constructor)
    DecodeResult(Failure f) : v_(std::move(f)) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool ok() const { return std::holds_alternative<Decoded>(v_); }
    [[nodiscard]] const Decoded& decoded() const { return std::get<Decoded>(v_); }
    [[nodiscard]] const Failure& failure() const { return std::get<Failure>(v_); }

private:
    std::variant<Decoded, Failure> v_;
};

/// F_q-basis of {b : f(b)_param = 0}.
std::vector<Elem> root_space(const Field& f, const SkewPoly& poly, Elem param);

/**
 * Syndrome-based error-erasure decoder for an LRS code.
 *
 * Corrects t_F full errors, t_R row erasures (known column space a_R) and
 * t_C column erasures (known row space B_C) whenever
 * 2 t_F + t_R + t_C <= n - k. Both key-equation variants are available and
 * the individual steps are exposed for testing. Stateless after
 * construction; decode() may be called concurrently.
 */
class Decoder {
public:
    explicit Decoder(Code code);

    [[nodiscard]] const Code& code() const { return code_; }

    [[nodiscard]] DecodeResult decode(std::span<const Elem> y, const SideInfo& side, Variant variant) const;

    // Individual steps, in order of use.

    [[nodiscard]] Syndromes syndromes(std::span<const Elem> y) const;
    /// x_{C,j}^{(i)} = sum_k B_C^{(i)}[j, k] alpha_k^{(i)}.
    [[nodiscard]] Blocks erasure_locators(std::span<const Mat> col_locations) const;
    /// (lambda_C, sigma_R): minimal polynomials of the column-erasure
    /// locators under sigma^{-1}(xi_i) and of the row-erasure values under
    /// sigma^{-1}(xi_i^{-1}).
    [[nodiscard]] std::pair<SkewPoly, SkewPoly> erasure_minpolys(const SideInfo& side) const;

    /// sigma_R * s * reverse(lambda_C, t_C).
    [[nodiscard]] SkewPoly esp_aux_syndrome(const SkewPoly& sigma_r, const SkewPoly& s_poly,
                                            const SkewPoly& lambda_c) const;
    /// lambda_C * s_rev * sigma^{n-k-1}(reverse(sigma_R, t_R)).
    [[nodiscard]] SkewPoly elp_aux_syndrome(const SkewPoly& lambda_c, const SkewPoly& s_rev,
                                            const SkewPoly& sigma_r) const;

    /// Monic polynomial of degree `full` whose product with `aux` has zero
    /// coefficients at degrees full + known, ..., n-k-1; nullopt if the
    /// linear system has no solution.
    [[nodiscard]] std::optional<SkewPoly> key_equation_candidate(const SkewPoly& aux, std::size_t full,
                                                                 std::size_t known) const;
    /// Tries candidate degrees 0, 1, ..., floor((n-k-known)/2) and returns the
    /// first solution accepted by `verify`, together with its degree.
    [[nodiscard]] std::optional<std::pair<SkewPoly, std::size_t>> solve_key_equation(
        const SkewPoly& aux, std::size_t known, const std::function<bool(const SkewPoly&, std::size_t)>& verify) const;

    /// Evaluations (sigma_F sigma_R)(a_{C,j}^{(i)}) from the known column
    /// erasure locators. `product` = sigma_F * sigma_R.
    [[nodiscard]] std::optional<Blocks> solve_esp_subproblem(const SkewPoly& product, const Syndromes& syn,
                                                             const Blocks& col_locators) const;
    /// Evaluations (lambda_F lambda_C)(x_{R,j}^{(i)}) from the known row
    /// erasure values. `product` = lambda_F * lambda_C.
    [[nodiscard]] std::optional<Blocks> solve_elp_subproblem(const SkewPoly& product, const Syndromes& syn,
                                                             const Blocks& row_values) const;

    /// sigma_C * sigma_F * sigma_R with sigma_C the minimal polynomial of the
    /// subproblem values.
    [[nodiscard]] SkewPoly assemble_esp(const SkewPoly& sigma_f, const SkewPoly& sigma_r,
                                        const Blocks& col_values) const;
    /// lambda_R * lambda_F * lambda_C.
    [[nodiscard]] SkewPoly assemble_elp(const SkewPoly& lambda_f, const SkewPoly& lambda_c,
                                        const Blocks& row_values) const;

    /// Root spaces of an ESP (under sigma^{-1}(xi_i^{-1})) or ELP (under
    /// sigma^{-1}(xi_i)), one basis per block.
    [[nodiscard]] Blocks esp_roots(const SkewPoly& esp) const;
    [[nodiscard]] Blocks elp_roots(const SkewPoly& elp) const;

    /// Solves M_{n-k}(a, xi) x^T = s_tilde^T for the locators.
    [[nodiscard]] std::optional<Blocks> recover_locators_from_values(const Blocks& values,
                                                                     const Syndromes& syn) const;
    /// Solves M_{n-k}(x, sigma^{-1}(xi)) a^T = s^T for the values.
    [[nodiscard]] std::optional<Blocks> recover_values_from_locators(const Blocks& locators,
                                                                     const Syndromes& syn) const;
    /// Rows b_j with sum_k b_{j,k} alpha_k^{(i)} = x_j; nullopt if some
    /// locator is outside the F_q-span of alpha^{(i)}.
    [[nodiscard]] std::optional<Mat> recover_B(std::size_t block, std::span<const Elem> locators) const;

    /// Rank of the block error once the known column space a_R and known row
    /// space B_C are factored out.
    [[nodiscard]] std::size_t residual_rank(std::span<const Elem> block_error, std::span<const Elem> row_values,
                                            const Mat& col_locations) const;

    [[nodiscard]] const std::vector<Elem>& esp_params() const { return esp_params_; }
    [[nodiscard]] const std::vector<Elem>& elp_params() const { return elp_params_; }
    [[nodiscard]] int twist() const { return twist_; }

private:
    [[nodiscard]] std::optional<Decoded> finish(std::span<const Elem> y, const SideInfo& side,
                                                const Blocks& values, const Blocks& locators,
                                                std::size_t key_degree) const;

    Code code_;
    int twist_;                       // sigma^{-1}, normalized
    std::vector<Elem> esp_params_;    // sigma^{-1}(xi_i^{-1})
    std::vector<Elem> elp_params_;    // sigma^{-1}(xi_i)
    std::vector<Mat> alpha_inverse_;  // left inverses of expand(alpha^{(i)})
    Blocks alpha_blocks_;
};

/// Convenience wrapper around Decoder.
DecodeResult decode(const Code& code, std::span<const Elem> y, const SideInfo& side, Variant variant);

}  // namespace sumrank
