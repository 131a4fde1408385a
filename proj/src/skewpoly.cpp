// SPDX-License-Identifier: Apache-2.0
#include "sumrank/skewpoly.hpp"

#include <algorithm>
#include <string>

namespace sumrank {

SkewPoly SkewPoly::monomial(int twist, std::size_t d, Elem c) {
    std::vector<Elem> coeffs(d + 1, Field::zero());
    coeffs[d] = c;
    return SkewPoly(twist, std::move(coeffs));
}

namespace skew {
namespace {

int checked_twist(const Field& f, const SkewPoly& a, const SkewPoly& b) {
    const int ta = normalize_twist(f, a.twist), tb = normalize_twist(f, b.twist);
    if (ta != tb) {
        throw ParameterError("skew polynomial twist mismatch: " + std::to_string(a.twist) + " vs " +
                             std::to_string(b.twist));
    }
    return ta;
}

Elem theta(const Field& f, int twist, Elem a, long power) {
    return f.frobenius(a, static_cast<long>(twist) * power);
}

}  // namespace

int normalize_twist(const Field& f, int twist) {
    const int m = static_cast<int>(f.m());
    return ((twist % m) + m) % m;
}

SkewPoly add(const Field& f, const SkewPoly& a, const SkewPoly& b) {
    const int t = checked_twist(f, a, b);
    std::vector<Elem> c(std::max(a.coeffs.size(), b.coeffs.size()), Field::zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return SkewPoly(t, std::move(c));
}

SkewPoly sub(const Field& f, const SkewPoly& a, const SkewPoly& b) {
    const int t = checked_twist(f, a, b);
    std::vector<Elem> c(std::max(a.coeffs.size(), b.coeffs.size()), Field::zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
    return SkewPoly(t, std::move(c));
}

SkewPoly scale(const Field& f, Elem c, const SkewPoly& a) {
    std::vector<Elem> out(a.coeffs.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(c, a.coeffs[i]);
    return SkewPoly(normalize_twist(f, a.twist), std::move(out));
}

SkewPoly mul(const Field& f, const SkewPoly& a, const SkewPoly& b) {
    const int t = checked_twist(f, a, b);
    if (a.is_zero() || b.is_zero()) return SkewPoly(t, {});
    std::vector<Elem> out(a.coeffs.size() + b.coeffs.size() - 1, Field::zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j].is_zero()) continue;
            out[i + j] = f.add(out[i + j], f.mul(a.coeffs[i], theta(f, t, b.coeffs[j], static_cast<long>(i))));
        }
    }
    return SkewPoly(t, std::move(out));
}

SkewPoly make_monic(const Field& f, const SkewPoly& a) {
    if (a.is_zero()) return a;
    return scale(f, f.inv(a.lead()), a);
}

std::pair<SkewPoly, SkewPoly> divmod_left(const Field& f, const SkewPoly& a, const SkewPoly& b) {
    const int t = checked_twist(f, a, b);
    if (b.is_zero()) throw ParameterError("skew division by the zero polynomial");
    const int db = b.degree();
    SkewPoly r(t, a.coeffs);
    std::vector<Elem> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0,
                           Field::zero());
    while (!r.is_zero() && r.degree() >= db) {
        const auto shift = static_cast<std::size_t>(r.degree() - db);
        // (c x^shift) b has leading coefficient c theta^shift(lead b).
        const Elem c = f.div(r.lead(), theta(f, t, b.lead(), static_cast<long>(shift)));
        quot[shift] = c;
        r = sub(f, r, mul(f, SkewPoly::monomial(t, shift, c), b));
    }
    return {SkewPoly(t, std::move(quot)), r};
}

std::pair<SkewPoly, SkewPoly> divmod_right(const Field& f, const SkewPoly& a, const SkewPoly& b) {
    const int t = checked_twist(f, a, b);
    if (b.is_zero()) throw ParameterError("skew division by the zero polynomial");
    const int db = b.degree();
    SkewPoly r(t, a.coeffs);
    std::vector<Elem> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0,
                           Field::zero());
    while (!r.is_zero() && r.degree() >= db) {
        const auto shift = static_cast<std::size_t>(r.degree() - db);
        // b (c x^shift) has leading coefficient lead(b) theta^db(c).
        const Elem c = theta(f, t, f.div(r.lead(), b.lead()), -static_cast<long>(db));
        quot[shift] = c;
        r = sub(f, r, mul(f, b, SkewPoly::monomial(t, shift, c)));
    }
    return {SkewPoly(t, std::move(quot)), r};
}

Elem gen_power(const Field& f, int twist, Elem a, std::size_t i) {
    Elem n = Field::one();
    for (std::size_t k = 1; k <= i; ++k) n = f.mul(theta(f, twist, a, static_cast<long>(k) - 1), n);
    return n;
}

Elem op_power(const Field& f, int twist, Elem a, Elem b, std::size_t i) {
    return f.mul(theta(f, twist, b, static_cast<long>(i)), gen_power(f, twist, a, i));
}

Elem gen_op_eval(const Field& f, const SkewPoly& p, Elem b, Elem a) {
    const int t = normalize_twist(f, p.twist);
    Elem acc = Field::zero();
    Elem d = b;  // D_a^i(b), updated by D_a(y) = theta(y) a
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i > 0) d = f.mul(theta(f, t, d, 1), a);
        acc = f.add(acc, f.mul(p.coeffs[i], d));
    }
    return acc;
}

SkewPoly min_poly(const Field& f, int twist, std::span<const Elem> params,
                  std::span<const std::vector<Elem>> roots) {
    if (params.size() != roots.size()) {
        throw ParameterError("min_poly: " + std::to_string(params.size()) + " parameters for " +
                             std::to_string(roots.size()) + " root blocks");
    }
    const int t = normalize_twist(f, twist);
    SkewPoly result = SkewPoly::one(t);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (const Elem b : roots[i]) {
            if (b.is_zero()) throw ParameterError("min_poly: roots must be nonzero");
            const Elem v = gen_op_eval(f, result, b, params[i]);
            if (v.is_zero()) continue;
            // (x - theta(v) a / v) annihilates v, hence the product annihilates b.
            const Elem c = f.div(f.mul(theta(f, t, v, 1), params[i]), v);
            result = mul(f, SkewPoly(t, {f.neg(c), Field::one()}), result);
        }
    }
    return result;
}

SkewPoly lclm(const Field& f, const SkewPoly& a, const SkewPoly& b) {
    const int t = checked_twist(f, a, b);
    if (a.is_zero() || b.is_zero()) throw ParameterError("lclm of the zero polynomial");
    // Right-division Euclid with left Bezout cofactors: r_i = u_i a + v_i b.
    SkewPoly r0 = a, r1 = b;
    SkewPoly u0 = SkewPoly::one(t), u1(t, {});
    while (!r1.is_zero()) {
        auto [quot, rem] = divmod_left(f, r0, r1);
        SkewPoly u2 = sub(f, u0, mul(f, quot, u1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // Now u1 a + v1 b = 0 and u1 a is the least common left multiple.
    return make_monic(f, mul(f, u1, a));
}

SkewPoly sigma_reverse(const Field& f, const SkewPoly& p, int t) {
    const int tw = normalize_twist(f, p.twist);
    if (p.is_zero()) return SkewPoly(tw, {});
    if (t < p.degree()) {
        throw ParameterError("sigma_reverse: t = " + std::to_string(t) + " below degree " +
                             std::to_string(p.degree()));
    }
    std::vector<Elem> out(static_cast<std::size_t>(t) + 1);
    for (int j = 0; j <= t; ++j) {
        out[static_cast<std::size_t>(j)] =
            theta(f, tw, p.coeff(static_cast<std::size_t>(t - j)), static_cast<long>(j - t));
    }
    return SkewPoly(tw, std::move(out));
}

SkewPoly coeff_map(const Field& f, const SkewPoly& p, long t) {
    std::vector<Elem> out(p.coeffs.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.frobenius(p.coeffs[i], t);
    return SkewPoly(normalize_twist(f, p.twist), std::move(out));
}

Mat moore_matrix(const Field& f, int twist, std::size_t d, std::span<const std::vector<Elem>> blocks,
                 std::span<const Elem> params) {
    if (blocks.size() != params.size()) {
        throw ParameterError("moore_matrix: block and parameter counts differ");
    }
    const int t = normalize_twist(f, twist);
    std::size_t n = 0;
    for (const auto& blk : blocks) n += blk.size();
    Mat out(d, n);
    std::size_t col = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (const Elem x : blocks[i]) {
            Elem v = x;
            for (std::size_t r = 0; r < d; ++r) {
                if (r > 0) v = f.mul(theta(f, t, v, 1), params[i]);
                out(r, col) = v;
            }
            ++col;
        }
    }
    return out;
}

}  // namespace skew
}  // namespace sumrank
