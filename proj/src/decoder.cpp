// SPDX-License-Identifier: Apache-2.0
#include "sumrank/decoder.hpp"

#include <algorithm>
#include <string>

namespace sumrank {
namespace {

std::size_t total_size(const Blocks& b) {
    std::size_t n = 0;
    for (const auto& v : b) n += v.size();
    return n;
}

Blocks split_like(std::span<const Elem> flat, const Blocks& shape) {
    Blocks out;
    std::size_t pos = 0;
    for (const auto& v : shape) {
        out.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                         flat.begin() + static_cast<std::ptrdiff_t>(pos + v.size()));
        pos += v.size();
    }
    return out;
}

Blocks without_zeros(const Blocks& b) {
    Blocks out;
    for (const auto& v : b) {
        std::vector<Elem> kept;
        std::copy_if(v.begin(), v.end(), std::back_inserter(kept), [](Elem x) { return !x.is_zero(); });
        out.push_back(std::move(kept));
    }
    return out;
}

}  // namespace

const char* to_string(Variant v) { return v == Variant::esp ? "esp" : "elp"; }

bool Syndromes::is_zero() const {
    return std::all_of(s.begin(), s.end(), [](Elem x) { return x.is_zero(); });
}

std::vector<Elem> root_space(const Field& f, const SkewPoly& poly, Elem param) {
    const std::size_t m = f.m();
    Mat map(m, m, Over::base);
    for (std::size_t j = 0; j < m; ++j) {
        const auto col = f.expand(skew::gen_op_eval(f, poly, f.fq_basis()[j], param));
        for (std::size_t i = 0; i < m; ++i) map(i, j) = col[i];
    }
    const Mat ker = linalg::kernel(f, map);
    std::vector<Elem> roots;
    for (std::size_t r = 0; r < ker.rows(); ++r) roots.push_back(f.compress(ker.row(r)));
    return roots;
}

Decoder::Decoder(Code code) : code_(std::move(code)) {
    const Field& f = code_.field();
    twist_ = skew::normalize_twist(f, -1);
    for (const Elem xi : code_.xi()) {
        esp_params_.push_back(f.frobenius(f.inv(xi), -1));
        elp_params_.push_back(f.frobenius(xi, -1));
    }
    alpha_blocks_ = code_.alpha_blocks();
    for (const auto& blk : alpha_blocks_) {
        alpha_inverse_.push_back(linalg::left_inverse(f, linalg::expand_columns(f, blk)));
    }
}

Syndromes Decoder::syndromes(std::span<const Elem> y) const {
    const Field& f = code_.field();
    Syndromes syn;
    syn.s = code_.syndrome(y);
    syn.poly = SkewPoly(twist_, syn.s);
    for (std::size_t l = 0; l < syn.s.size(); ++l) syn.tilde.push_back(f.frobenius(syn.s[l], static_cast<long>(l)));
    syn.reversed = skew::sigma_reverse(f, syn.poly, static_cast<int>(code_.redundancy()) - 1);
    return syn;
}

Blocks Decoder::erasure_locators(std::span<const Mat> col_locations) const {
    const Field& f = code_.field();
    Blocks out;
    for (std::size_t i = 0; i < col_locations.size(); ++i) {
        const Mat& b = col_locations[i];
        std::vector<Elem> x(b.rows(), Field::zero());
        for (std::size_t j = 0; j < b.rows(); ++j) {
            for (std::size_t k = 0; k < b.cols(); ++k) x[j] = f.add(x[j], f.mul(b(j, k), alpha_blocks_[i][k]));
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::pair<SkewPoly, SkewPoly> Decoder::erasure_minpolys(const SideInfo& side) const {
    const Field& f = code_.field();
    const Blocks locators = erasure_locators(side.col_locations);
    SkewPoly lambda_c = skew::min_poly(f, twist_, elp_params_, locators);
    SkewPoly sigma_r = skew::min_poly(f, twist_, esp_params_, side.row_values);
    return {std::move(lambda_c), std::move(sigma_r)};
}

SkewPoly Decoder::esp_aux_syndrome(const SkewPoly& sigma_r, const SkewPoly& s_poly,
                                   const SkewPoly& lambda_c) const {
    const Field& f = code_.field();
    const SkewPoly lambda_rev = skew::sigma_reverse(f, lambda_c, lambda_c.degree());
    return skew::mul(f, skew::mul(f, sigma_r, s_poly), lambda_rev);
}

SkewPoly Decoder::elp_aux_syndrome(const SkewPoly& lambda_c, const SkewPoly& s_rev,
                                   const SkewPoly& sigma_r) const {
    const Field& f = code_.field();
    const SkewPoly sigma_rev = skew::sigma_reverse(f, sigma_r, sigma_r.degree());
    const SkewPoly mapped = skew::coeff_map(f, sigma_rev, static_cast<long>(code_.redundancy()) - 1);
    return skew::mul(f, skew::mul(f, lambda_c, s_rev), mapped);
}

std::optional<SkewPoly> Decoder::key_equation_candidate(const SkewPoly& aux, std::size_t full,
                                                        std::size_t known) const {
    const Field& f = code_.field();
    const std::size_t redundancy = code_.redundancy();
    const std::size_t t = full + known;
    if (t > redundancy) return std::nullopt;
    // Unknowns p_0..p_{full-1}; p_full = 1. Degree-d coefficient of p * aux is
    // sum_j p_j theta^j(aux_{d-j}).
    auto term = [&](std::size_t d, std::size_t j) {
        return d >= j ? f.frobenius(aux.coeff(d - j), -static_cast<long>(j)) : Field::zero();
    };
    Mat system(redundancy - t, full);
    std::vector<Elem> rhs(redundancy - t);
    for (std::size_t d = t; d < redundancy; ++d) {
        for (std::size_t j = 0; j < full; ++j) system(d - t, j) = term(d, j);
        rhs[d - t] = f.neg(term(d, full));
    }
    const auto sol = linalg::solve(f, system, rhs);
    if (!sol) return std::nullopt;
    std::vector<Elem> coeffs = *sol;
    coeffs.push_back(Field::one());
    return SkewPoly(twist_, std::move(coeffs));
}

std::optional<std::pair<SkewPoly, std::size_t>> Decoder::solve_key_equation(
    const SkewPoly& aux, std::size_t known,
    const std::function<bool(const SkewPoly&, std::size_t)>& verify) const {
    const std::size_t redundancy = code_.redundancy();
    if (known > redundancy) return std::nullopt;
    for (std::size_t full = 0; 2 * full + known <= redundancy; ++full) {
        auto candidate = key_equation_candidate(aux, full, known);
        if (candidate && verify(*candidate, full)) return std::pair{std::move(*candidate), full};
    }
    return std::nullopt;
}

std::optional<Blocks> Decoder::solve_esp_subproblem(const SkewPoly& product, const Syndromes& syn,
                                                    const Blocks& col_locators) const {
    const Field& f = code_.field();
    const std::size_t redundancy = code_.redundancy();
    const SkewPoly ps = skew::mul(f, product, syn.poly);
    const auto start = static_cast<std::size_t>(std::max(product.degree(), 0));
    if (start > redundancy) return std::nullopt;
    // (P s)_d = sum_{i,j} P(a_{C,j}^{(i)}) D_{sigma^{-1}(xi_i)}^d(x_{C,j}^{(i)})
    // for d = deg P .. n-k-1.
    Mat system(redundancy - start, total_size(col_locators));
    std::vector<Elem> rhs(redundancy - start);
    for (std::size_t d = start; d < redundancy; ++d) {
        std::size_t col = 0;
        for (std::size_t i = 0; i < col_locators.size(); ++i) {
            for (const Elem x : col_locators[i]) {
                system(d - start, col++) = skew::op_power(f, twist_, elp_params_[i], x, d);
            }
        }
        rhs[d - start] = ps.coeff(d);
    }
    const auto sol = linalg::solve(f, system, rhs);
    if (!sol) return std::nullopt;
    return split_like(*sol, col_locators);
}

std::optional<Blocks> Decoder::solve_elp_subproblem(const SkewPoly& product, const Syndromes& syn,
                                                    const Blocks& row_values) const {
    const Field& f = code_.field();
    const std::size_t redundancy = code_.redundancy();
    const SkewPoly ps = skew::mul(f, product, syn.reversed);
    const auto start = static_cast<std::size_t>(std::max(product.degree(), 0));
    if (start > redundancy) return std::nullopt;
    // (P s_rev)_d = sum_{i,j} P(x_{R,j}^{(i)}) D_{xi_i}^{n-k-1-d}(a_{R,j}^{(i)})
    // for d = deg P .. n-k-1, operator in the sigma-twisted ring.
    Mat system(redundancy - start, total_size(row_values));
    std::vector<Elem> rhs(redundancy - start);
    for (std::size_t d = start; d < redundancy; ++d) {
        std::size_t col = 0;
        for (std::size_t i = 0; i < row_values.size(); ++i) {
            for (const Elem a : row_values[i]) {
                system(d - start, col++) = skew::op_power(f, 1, code_.xi()[i], a, redundancy - 1 - d);
            }
        }
        rhs[d - start] = ps.coeff(d);
    }
    const auto sol = linalg::solve(f, system, rhs);
    if (!sol) return std::nullopt;
    return split_like(*sol, row_values);
}

SkewPoly Decoder::assemble_esp(const SkewPoly& sigma_f, const SkewPoly& sigma_r, const Blocks& col_values) const {
    const Field& f = code_.field();
    const SkewPoly sigma_c = skew::min_poly(f, twist_, esp_params_, without_zeros(col_values));
    return skew::mul(f, skew::mul(f, sigma_c, sigma_f), sigma_r);
}

SkewPoly Decoder::assemble_elp(const SkewPoly& lambda_f, const SkewPoly& lambda_c, const Blocks& row_values) const {
    const Field& f = code_.field();
    const SkewPoly lambda_r = skew::min_poly(f, twist_, elp_params_, without_zeros(row_values));
    return skew::mul(f, skew::mul(f, lambda_r, lambda_f), lambda_c);
}

Blocks Decoder::esp_roots(const SkewPoly& esp) const {
    Blocks out;
    for (const Elem param : esp_params_) out.push_back(root_space(code_.field(), esp, param));
    return out;
}

Blocks Decoder::elp_roots(const SkewPoly& elp) const {
    Blocks out;
    for (const Elem param : elp_params_) out.push_back(root_space(code_.field(), elp, param));
    return out;
}

std::optional<Blocks> Decoder::recover_locators_from_values(const Blocks& values, const Syndromes& syn) const {
    const Field& f = code_.field();
    const Mat a = skew::moore_matrix(f, 1, code_.redundancy(), values, code_.xi());
    if (linalg::rank(f, a) != a.cols()) return std::nullopt;
    const auto sol = linalg::solve(f, a, syn.tilde);
    if (!sol) return std::nullopt;
    return split_like(*sol, values);
}

std::optional<Blocks> Decoder::recover_values_from_locators(const Blocks& locators, const Syndromes& syn) const {
    const Field& f = code_.field();
    const Mat x = skew::moore_matrix(f, twist_, code_.redundancy(), locators, elp_params_);
    if (linalg::rank(f, x) != x.cols()) return std::nullopt;
    const auto sol = linalg::solve(f, x, syn.s);
    if (!sol) return std::nullopt;
    return split_like(*sol, locators);
}

std::optional<Mat> Decoder::recover_B(std::size_t block, std::span<const Elem> locators) const {
    const Field& f = code_.field();
    const auto& alpha = alpha_blocks_[block];
    Mat b(locators.size(), alpha.size(), Over::base);
    for (std::size_t j = 0; j < locators.size(); ++j) {
        const auto coords = f.expand(locators[j]);
        const auto row = linalg::apply(f, alpha_inverse_[block], coords);
        Elem check = Field::zero();
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            b(j, k) = row[k];
            check = f.add(check, f.mul(row[k], alpha[k]));
        }
        if (check != locators[j]) return std::nullopt;
    }
    return b;
}

std::size_t Decoder::residual_rank(std::span<const Elem> block_error, std::span<const Elem> row_values,
                                   const Mat& col_locations) const {
    const Field& f = code_.field();
    const Mat e = linalg::expand_columns(f, block_error);  // m x n_i
    Mat left = Mat::identity(f.m(), Over::base);
    if (!row_values.empty()) left = linalg::kernel(f, linalg::expand_columns(f, row_values).transpose());
    Mat right = Mat::identity(block_error.size(), Over::base);
    if (col_locations.rows() > 0) right = linalg::kernel(f, col_locations).transpose();
    if (left.rows() == 0 || right.cols() == 0) return 0;
    return linalg::rank(f, linalg::multiply(f, linalg::multiply(f, left, e), right));
}

std::optional<Decoded> Decoder::finish(std::span<const Elem> y, const SideInfo& side, const Blocks& values,
                                       const Blocks& locators, std::size_t key_degree) const {
    const Field& f = code_.field();
    const auto& part = code_.partition();
    Word error(code_.n(), Field::zero());
    for (std::size_t i = 0; i < part.blocks(); ++i) {
        const auto b = recover_B(i, locators[i]);
        if (!b) return std::nullopt;
        const auto off = part.offset(i);
        for (std::size_t r = 0; r < values[i].size(); ++r) {
            for (std::size_t k = 0; k < part.size(i); ++k) {
                error[off + k] = f.add(error[off + k], f.mul(values[i][r], (*b)(r, k)));
            }
        }
    }
    Word codeword(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) codeword[j] = f.sub(y[j], error[j]);
    if (!code_.contains(codeword)) return std::nullopt;

    std::vector<std::size_t> full_rank;
    std::size_t full_total = 0;
    for (std::size_t i = 0; i < part.blocks(); ++i) {
        full_rank.push_back(residual_rank(part.block(error, i), side.row_values[i], side.col_locations[i]));
        full_total += full_rank.back();
    }
    if (2 * full_total + side.row_count() + side.col_count() > code_.redundancy()) return std::nullopt;

    const auto coeffs = code_.unencode(codeword);
    if (!coeffs) throw InternalError("zero-syndrome word is not in the code's row space");
    return Decoded{std::move(codeword), SkewPoly(1, *coeffs), std::move(error), std::move(full_rank), key_degree};
}

DecodeResult Decoder::decode(std::span<const Elem> y, const SideInfo& side, Variant variant) const {
    const Field& f = code_.field();
    const auto& part = code_.partition();
    if (y.size() != code_.n()) {
        throw ParameterError("received word has length " + std::to_string(y.size()) + ", expected " +
                             std::to_string(code_.n()));
    }
    if (side.row_values.size() != part.blocks() || side.col_locations.size() != part.blocks()) {
        throw ParameterError("side information must have one entry per block");
    }
    for (std::size_t i = 0; i < part.blocks(); ++i) {
        const Mat& bc = side.col_locations[i];
        if (bc.rows() > 0 && bc.cols() != part.size(i)) {
            throw ParameterError("column-erasure locations of block " + std::to_string(i) + " have " +
                                 std::to_string(bc.cols()) + " columns, expected " + std::to_string(part.size(i)));
        }
        for (const Elem x : bc.data()) {
            if (!f.in_base(x)) throw ParameterError("column-erasure locations must have entries in F_q");
        }
    }

    const Syndromes syn = syndromes(y);
    if (syn.is_zero()) {
        const auto coeffs = code_.unencode(y);
        return Decoded{Word(y.begin(), y.end()), SkewPoly(1, *coeffs), Word(y.size(), Field::zero()),
                       std::vector<std::size_t>(part.blocks(), 0), 0};
    }

    const std::size_t t_row = side.row_count(), t_col = side.col_count();
    if (t_row + t_col > code_.redundancy()) return Failure{"erasures exceed the redundancy n - k"};
    for (std::size_t i = 0; i < part.blocks(); ++i) {
        const auto& ar = side.row_values[i];
        if (std::any_of(ar.begin(), ar.end(), [](Elem x) { return x.is_zero(); }) || fq_rank(f, ar) != ar.size()) {
            return Failure{"row-erasure values of block " + std::to_string(i) + " are not F_q-independent"};
        }
        const Mat& bc = side.col_locations[i];
        if (bc.rows() > 0 && linalg::rank(f, bc) != bc.rows()) {
            return Failure{"column-erasure locations of block " + std::to_string(i) + " are not full rank"};
        }
    }

    const Blocks col_locators = erasure_locators(side.col_locations);
    const auto [lambda_c, sigma_r] = erasure_minpolys(side);
    if (lambda_c.degree() != static_cast<int>(t_col) || sigma_r.degree() != static_cast<int>(t_row)) {
        throw InternalError("erasure minimal polynomials have unexpected degree");
    }

    std::optional<Decoded> result;
    std::function<bool(const SkewPoly&, std::size_t)> verify;
    SkewPoly aux;
    if (variant == Variant::esp) {
        aux = esp_aux_syndrome(sigma_r, syn.poly, lambda_c);
        verify = [&](const SkewPoly& sigma_f, std::size_t degree) {
            const SkewPoly product = skew::mul(f, sigma_f, sigma_r);
            const auto col_values = solve_esp_subproblem(product, syn, col_locators);
            if (!col_values) return false;
            const SkewPoly esp = assemble_esp(sigma_f, sigma_r, *col_values);
            const Blocks values = esp_roots(esp);
            if (static_cast<int>(total_size(values)) != esp.degree()) return false;
            const auto locators = recover_locators_from_values(values, syn);
            if (!locators) return false;
            result = finish(y, side, values, *locators, degree);
            return result.has_value();
        };
    } else {
        aux = elp_aux_syndrome(lambda_c, syn.reversed, sigma_r);
        verify = [&](const SkewPoly& lambda_f, std::size_t degree) {
            const SkewPoly product = skew::mul(f, lambda_f, lambda_c);
            const auto row_values = solve_elp_subproblem(product, syn, side.row_values);
            if (!row_values) return false;
            const SkewPoly elp = assemble_elp(lambda_f, lambda_c, *row_values);
            const Blocks locators = elp_roots(elp);
            if (static_cast<int>(total_size(locators)) != elp.degree()) return false;
            const auto values = recover_values_from_locators(locators, syn);
            if (!values) return false;
            result = finish(y, side, *values, locators, degree);
            return result.has_value();
        };
    }

    if (!solve_key_equation(aux, t_row + t_col, verify)) {
        return Failure{"radius exceeded or inconsistent erasures"};
    }
    return std::move(*result);
}

DecodeResult decode(const Code& code, std::span<const Elem> y, const SideInfo& side, Variant variant) {
    return Decoder(code).decode(y, side, variant);
}

}  // namespace sumrank
