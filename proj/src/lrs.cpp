// SPDX-License-Identifier: Apache-2.0
#include "sumrank/lrs.hpp"

#include <string>

namespace sumrank {

Word dual_alpha(const Field& f, const LengthPartition& part, std::span<const Elem> xi,
                std::span<const std::vector<Elem>> beta) {
    const std::size_t n = part.n();
    const Mat system = skew::moore_matrix(f, 1, n - 1, beta, xi);
    const Mat ker = linalg::kernel(f, system);
    if (ker.rows() != 1) {
        throw InternalError("dual vector kernel has dimension " + std::to_string(ker.rows()) + ", expected 1");
    }
    // Reduced echelon already puts a 1 in the first nonzero position.
    const auto row = ker.row(0);
    return Word(row.begin(), row.end());
}

Mat parity_check_matrix(const Field& f, const LengthPartition& part, std::size_t k, std::span<const Elem> xi,
                        std::span<const Elem> alpha) {
    std::vector<Elem> params;
    for (auto x : xi) params.push_back(f.frobenius(x, -1));
    const auto blocks = part.split(alpha);
    return skew::moore_matrix(f, -1, part.n() - k, blocks, params);
}

Code Code::make(FieldPtr field, LengthPartition part, std::size_t k, std::optional<std::vector<Elem>> xi,
                std::optional<std::vector<std::vector<Elem>>> beta) {
    const Field& f = *field;
    const std::size_t n = part.n(), l = part.blocks();
    if (k < 1 || k >= n) {
        throw ParameterError("dimension k = " + std::to_string(k) + " must satisfy 1 <= k < n = " +
                             std::to_string(n));
    }
    for (std::size_t i = 0; i < l; ++i) {
        if (part.size(i) > f.m()) {
            throw ParameterError("block " + std::to_string(i) + " has n_i = " + std::to_string(part.size(i)) +
                                 " > m = " + std::to_string(f.m()));
        }
    }

    Code c;
    c.field_ = std::move(field);
    c.part_ = std::move(part);
    c.k_ = k;

    if (xi) {
        if (xi->size() != l) {
            throw ParameterError("xi has " + std::to_string(xi->size()) + " entries for " + std::to_string(l) +
                                 " blocks");
        }
        for (std::size_t i = 0; i < l; ++i) {
            if ((*xi)[i].is_zero()) throw ParameterError("xi entries must be nonzero");
            for (std::size_t j = 0; j < i; ++j) {
                if (f.is_conjugate((*xi)[i], (*xi)[j])) {
                    throw ParameterError("xi[" + std::to_string(j) + "] and xi[" + std::to_string(i) +
                                         "] are sigma-conjugate");
                }
            }
        }
        c.xi_ = std::move(*xi);
    } else {
        c.xi_ = f.class_representatives(l);
    }

    if (beta) {
        if (beta->size() != l) throw ParameterError("beta must have one block per partition block");
        for (std::size_t i = 0; i < l; ++i) {
            if ((*beta)[i].size() != c.part_.size(i)) {
                throw ParameterError("beta block " + std::to_string(i) + " has wrong length");
            }
            if (fq_rank(f, (*beta)[i]) != c.part_.size(i)) {
                throw ParameterError("beta block " + std::to_string(i) + " is not F_q-linearly independent");
            }
        }
        c.beta_ = std::move(*beta);
    } else {
        for (std::size_t i = 0; i < l; ++i) {
            c.beta_.emplace_back(f.fq_basis().begin(),
                                 f.fq_basis().begin() + static_cast<std::ptrdiff_t>(c.part_.size(i)));
        }
    }

    c.g_ = skew::moore_matrix(f, 1, k, c.beta_, c.xi_);
    c.alpha_ = dual_alpha(f, c.part_, c.xi_, c.beta_);
    if (weight(f, c.alpha_, c.part_) != n) throw InternalError("dual vector alpha does not have full weight");
    c.h_ = parity_check_matrix(f, c.part_, k, c.xi_, c.alpha_);
    if (!linalg::multiply(f, c.g_, c.h_.transpose()).is_zero()) {
        throw InternalError("generator and parity-check matrices are not orthogonal");
    }
    return c;
}

Word Code::encode(const SkewPoly& message) const {
    const Field& f = *field_;
    if (skew::normalize_twist(f, message.twist) != skew::normalize_twist(f, 1)) {
        throw ParameterError("message polynomial must live in the sigma-twisted ring");
    }
    if (message.degree() >= static_cast<int>(k_)) {
        throw ParameterError("message degree " + std::to_string(message.degree()) + " is not below k = " +
                             std::to_string(k_));
    }
    Word c;
    c.reserve(n());
    for (std::size_t i = 0; i < blocks(); ++i) {
        for (const Elem b : beta_[i]) c.push_back(skew::gen_op_eval(f, message, b, xi_[i]));
    }
    return c;
}

Word Code::encode(std::span<const Elem> coefficients) const {
    if (coefficients.size() != k_) {
        throw ParameterError("message has " + std::to_string(coefficients.size()) + " coefficients, expected k = " +
                             std::to_string(k_));
    }
    return encode(SkewPoly(1, {coefficients.begin(), coefficients.end()}));
}

std::optional<std::vector<Elem>> Code::unencode(std::span<const Elem> c) const {
    if (c.size() != n()) throw ParameterError("codeword length mismatch");
    return linalg::solve(*field_, g_.transpose(), c);
}

std::vector<Elem> Code::syndrome(std::span<const Elem> y) const {
    if (y.size() != n()) {
        throw ParameterError("received word has length " + std::to_string(y.size()) + ", expected " +
                             std::to_string(n()));
    }
    return linalg::apply(*field_, h_, y);
}

bool Code::contains(std::span<const Elem> y) const {
    for (auto s : syndrome(y)) {
        if (!s.is_zero()) return false;
    }
    return true;
}

}  // namespace sumrank
