// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <climits>
#include <span>
#include <utility>
#include <vector>

#include "sumrank/field.hpp"
#include "sumrank/linalg.hpp"

namespace sumrank {

/**
 * Element of the skew polynomial ring F_{q^m}[x; theta] with zero
 * derivation, theta = sigma^twist. Multiplication follows x a = theta(a) x.
 *
 * coeffs[i] is the coefficient of x^i; the sequence never has trailing
 * zeros, so the zero polynomial has empty coeffs. The twist is stored
 * modulo m by the operations that produce polynomials.
 */
struct SkewPoly {
    static constexpr int kMinusInfinity = INT_MIN;

    int twist = 1;
    std::vector<Elem> coeffs;

    SkewPoly() = default;
    SkewPoly(int twist_, std::vector<Elem> c) : twist(twist_), coeffs(std::move(c)) { normalize(); }

    static SkewPoly constant(int twist, Elem c) { return SkewPoly(twist, {c}); }
    static SkewPoly one(int twist) { return constant(twist, Field::one()); }
    /// x^d
    static SkewPoly monomial(int twist, std::size_t d, Elem c = Field::one());

    [[nodiscard]] bool is_zero() const { return coeffs.empty(); }
    /// kMinusInfinity for the zero polynomial.
    [[nodiscard]] int degree() const {
        return coeffs.empty() ? kMinusInfinity : static_cast<int>(coeffs.size()) - 1;
    }
    [[nodiscard]] Elem coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Field::zero(); }
    [[nodiscard]] Elem lead() const { return coeffs.empty() ? Field::zero() : coeffs.back(); }
    [[nodiscard]] bool is_monic() const { return !coeffs.empty() && coeffs.back() == Field::one(); }

    void normalize() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }

    bool operator==(const SkewPoly&) const = default;
};

namespace skew {

/// Canonical twist in [0, m).
int normalize_twist(const Field& f, int twist);

SkewPoly add(const Field& f, const SkewPoly& a, const SkewPoly& b);
SkewPoly sub(const Field& f, const SkewPoly& a, const SkewPoly& b);
/// c * a (scalar on the left).
SkewPoly scale(const Field& f, Elem c, const SkewPoly& a);
SkewPoly mul(const Field& f, const SkewPoly& a, const SkewPoly& b);
SkewPoly make_monic(const Field& f, const SkewPoly& a);

/// a = q b + r with deg r < deg b.
std::pair<SkewPoly, SkewPoly> divmod_left(const Field& f, const SkewPoly& a, const SkewPoly& b);
/// a = b q + r with deg r < deg b.
std::pair<SkewPoly, SkewPoly> divmod_right(const Field& f, const SkewPoly& a, const SkewPoly& b);

/// Generalized power N_i(a) = theta^{i-1}(a) N_{i-1}(a), N_0(a) = 1.
Elem gen_power(const Field& f, int twist, Elem a, std::size_t i);
/// D_a^i(b) = theta^i(b) N_i(a).
Elem op_power(const Field& f, int twist, Elem a, Elem b, std::size_t i);
/// f(b)_a = sum_i f_i D_a^i(b).
Elem gen_op_eval(const Field& f, const SkewPoly& p, Elem b, Elem a);

/// Monic minimal polynomial vanishing at every roots[i][j] with evaluation
/// parameter params[i]. Roots must be nonzero.
SkewPoly min_poly(const Field& f, int twist, std::span<const Elem> params,
                  std::span<const std::vector<Elem>> roots);
/// Least common left multiple, monic.
SkewPoly lclm(const Field& f, const SkewPoly& a, const SkewPoly& b);

/// Partial theta-reverse w.r.t. t >= deg p: rev_j = theta^{j-t}(p_{t-j}).
SkewPoly sigma_reverse(const Field& f, const SkewPoly& p, int t);
/// Applies sigma^t to every coefficient.
SkewPoly coeff_map(const Field& f, const SkewPoly& p, long t);

/// d x n generalized Moore matrix; column (i, k) holds D_{params[i]}^r(x_k^{(i)})
/// in row r.
Mat moore_matrix(const Field& f, int twist, std::size_t d, std::span<const std::vector<Elem>> blocks,
                 std::span<const Elem> params);

}  // namespace skew
}  // namespace sumrank
