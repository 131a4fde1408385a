// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

SkewPoly linear(const Field& f, int twist, Elem root) {
    return SkewPoly(twist, {f.neg(root), Field::one()});
}

// Enumerates every monic polynomial of exact degree d with the given twist.
template <class Fn>
void for_each_monic(const Field& f, int twist, std::size_t d, Fn fn) {
    std::vector<std::uint64_t> idx(d, 0);
    for (;;) {
        std::vector<Elem> c;
        for (auto v : idx) c.push_back(Elem(static_cast<std::uint32_t>(v)));
        c.push_back(Field::one());
        fn(SkewPoly(twist, c));
        std::size_t i = 0;
        while (i < d && ++idx[i] == f.order()) idx[i++] = 0;
        if (i == d) return;
    }
}

}  // namespace

TEST_CASE("multiplication follows x a = theta(a) x") {
    auto F = f4();
    const Elem g = F->gamma();
    const SkewPoly x = SkewPoly::monomial(1, 1);
    const SkewPoly prod = skew::mul(*F, x, SkewPoly::constant(1, g));
    CHECK(prod == SkewPoly(1, {Field::zero(), F->add(g, Field::one())}));

    const SkewPoly a = linear(*F, 1, g), b = linear(*F, 1, Field::one());
    CHECK(skew::mul(*F, a, SkewPoly::one(1)) == a);
    CHECK(skew::mul(*F, SkewPoly::one(1), a) == a);
    CHECK(skew::mul(*F, a, b) != skew::mul(*F, b, a));
    auto F81 = f81();
    CHECK_THROWS((void)skew::mul(*F81, SkewPoly(1, {g}), SkewPoly(skew::normalize_twist(*F81, -1), {g})));
}

TEST_CASE("ring axioms hold on random instances") {
    Rng rng(1);
    for (auto F : {f4(), f9(), f81()}) {
        for (int twist : {1, -1}) {
            const int tw = skew::normalize_twist(*F, twist);
            for (int t = 0; t < 500; ++t) {
                const SkewPoly a = random_poly(*F, tw, 4, rng), b = random_poly(*F, tw, 4, rng),
                               c = random_poly(*F, tw, 4, rng);
                REQUIRE(skew::mul(*F, skew::mul(*F, a, b), c) == skew::mul(*F, a, skew::mul(*F, b, c)));
                REQUIRE(skew::mul(*F, a, skew::add(*F, b, c)) ==
                        skew::add(*F, skew::mul(*F, a, b), skew::mul(*F, a, c)));
                REQUIRE(skew::mul(*F, skew::add(*F, a, b), c) ==
                        skew::add(*F, skew::mul(*F, a, c), skew::mul(*F, b, c)));
                REQUIRE(skew::sub(*F, skew::add(*F, a, b), b) == a);
                if (!a.is_zero() && !b.is_zero()) REQUIRE(skew::mul(*F, a, b).degree() == a.degree() + b.degree());
            }
        }
    }
}

TEST_CASE("Euclidean division contracts") {
    Rng rng(2);
    for (auto F : {f4(), f9(), f81()}) {
        for (int t = 0; t < 500; ++t) {
            const int tw = skew::normalize_twist(*F, t % 2 ? 1 : -1);
            const SkewPoly a = random_poly(*F, tw, 6, rng);
            SkewPoly b = random_poly(*F, tw, 3, rng);
            if (b.is_zero()) b = SkewPoly::one(tw);
            const auto [ql, rl] = skew::divmod_left(*F, a, b);
            REQUIRE(skew::add(*F, skew::mul(*F, ql, b), rl) == a);
            REQUIRE(rl.degree() < b.degree());
            const auto [qr, rr] = skew::divmod_right(*F, a, b);
            REQUIRE(skew::add(*F, skew::mul(*F, b, qr), rr) == a);
            REQUIRE(rr.degree() < b.degree());
        }
    }
    auto F = f9();
    const SkewPoly a = random_poly(*F, 1, 3, rng);
    if (!a.is_zero()) {
        const auto [q, r] = skew::divmod_left(*F, a, a);
        CHECK(q == SkewPoly::one(1));
        CHECK(r.is_zero());
    }
    const SkewPoly small(1, {Elem(2)}), big(1, {Elem(1), Elem(1), Elem(1)});
    const auto [q2, r2] = skew::divmod_right(*F, small, big);
    CHECK(q2.is_zero());
    CHECK(r2 == small);
    CHECK_THROWS((void)skew::divmod_left(*F, big, SkewPoly(1, {})));
}

TEST_CASE("generalized powers and operator powers") {
    auto F = f4();
    const Elem g = F->gamma();
    CHECK(skew::gen_power(*F, 1, g, 0) == Field::one());
    CHECK(skew::gen_power(*F, 1, g, 2) == Field::one());
    CHECK(skew::gen_power(*F, 1, Field::one(), 5) == Field::one());
    CHECK(skew::op_power(*F, 1, g, Field::one(), 0) == Field::one());
    CHECK(skew::op_power(*F, 1, g, Field::one(), 1) == g);
    CHECK(skew::op_power(*F, 1, g, Field::one(), 2) == Field::one());

    Rng rng(4);
    for (auto Fp : {f9(), f81()}) {
        for (int t = 0; t < 500; ++t) {
            const int tw = skew::normalize_twist(*Fp, t % 2 ? 1 : -1);
            const Elem a = Fp->random(rng), b = Fp->random(rng);
            Elem iter = b;
            for (std::size_t i = 0; i < 6; ++i) {
                REQUIRE(skew::op_power(*Fp, tw, a, b, i) == iter);
                iter = Fp->mul(Fp->frobenius(iter, tw), a);
            }
        }
    }
}

TEST_CASE("operator evaluation: examples, linearity and product rule") {
    auto F4 = f4();
    const Elem g = F4->gamma();
    CHECK(skew::gen_op_eval(*F4, SkewPoly::monomial(1, 1), g, g) == Field::one());
    CHECK(skew::gen_op_eval(*F4, SkewPoly::constant(1, g), g, Field::one()) == F4->mul(g, g));

    Rng rng(6);
    for (auto F : {f4(), f9(), f81()}) {
        for (int t = 0; t < 500; ++t) {
            const int tw = skew::normalize_twist(*F, t % 2 ? 1 : -1);
            const SkewPoly f = random_poly(*F, tw, 4, rng), g2 = random_poly(*F, tw, 4, rng);
            const Elem a = F->random(rng), b = F->random(rng), c = F->random(rng), lam = F->random_fq(rng);
            REQUIRE(skew::gen_op_eval(*F, skew::mul(*F, f, g2), b, a) ==
                    skew::gen_op_eval(*F, f, skew::gen_op_eval(*F, g2, b, a), a));
            REQUIRE(skew::gen_op_eval(*F, f, F->add(F->mul(lam, b), c), a) ==
                    F->add(F->mul(lam, skew::gen_op_eval(*F, f, b, a)), skew::gen_op_eval(*F, f, c, a)));
            REQUIRE(skew::gen_op_eval(*F, f, Field::zero(), a) == Field::zero());
        }
    }
}

TEST_CASE("minimal polynomials: examples and degree law") {
    auto F4 = f4();
    const Elem g = F4->gamma();
    const std::vector<std::vector<Elem>> one_root{{g}};
    const std::vector<Elem> one_param{Field::one()};
    CHECK(skew::min_poly(*F4, 1, one_param, one_root) == linear(*F4, 1, g));
    CHECK(skew::min_poly(*F4, 1, one_param, std::vector<std::vector<Elem>>{{}}) == SkewPoly::one(1));

    Rng rng(7);
    for (auto F : {f4(), f9(), f81()}) {
        const std::size_t l = std::min<std::size_t>(2, F->class_count());
        const auto params = F->class_representatives(l);
        for (int t = 0; t < 500; ++t) {
            const int tw = skew::normalize_twist(*F, t % 2 ? 1 : -1);
            std::vector<std::vector<Elem>> roots(l);
            std::size_t expected = 0;
            for (std::size_t i = 0; i < l; ++i) {
                const std::size_t cnt = rng.below(F->m() + 1);
                for (std::size_t j = 0; j < cnt; ++j) roots[i].push_back(F->random_nonzero(rng));
                expected += fq_rank(*F, roots[i]);
            }
            const SkewPoly mp = skew::min_poly(*F, tw, params, roots);
            REQUIRE(mp.is_monic());
            REQUIRE(mp.degree() == static_cast<int>(expected));
            for (std::size_t i = 0; i < l; ++i) {
                for (auto r : roots[i]) REQUIRE(skew::gen_op_eval(*F, mp, r, params[i]).is_zero());
            }
        }
    }
}

TEST_CASE("lclm is the monic common left multiple of least degree") {
    auto F = f4();
    Rng rng(9);
    for (int t = 0; t < 60; ++t) {
        SkewPoly a = random_poly(*F, 1, 2, rng), b = random_poly(*F, 1, 2, rng);
        if (a.is_zero() || b.is_zero()) continue;
        const SkewPoly l = skew::lclm(*F, a, b);
        REQUIRE(l.is_monic());
        REQUIRE(skew::divmod_left(*F, l, a).second.is_zero());
        REQUIRE(skew::divmod_left(*F, l, b).second.is_zero());
        for (int d = 0; d < l.degree(); ++d) {
            for_each_monic(*F, 1, static_cast<std::size_t>(d), [&](const SkewPoly& cand) {
                const bool both = skew::divmod_left(*F, cand, a).second.is_zero() &&
                                  skew::divmod_left(*F, cand, b).second.is_zero();
                REQUIRE_FALSE(both);
            });
        }
    }
    const SkewPoly f(1, {F->gamma(), F->gamma()});
    CHECK(skew::lclm(*F, f, f) == skew::make_monic(*F, f));
    CHECK(skew::lclm(*F, f, SkewPoly::one(1)) == skew::make_monic(*F, f));

    auto F9 = f9();
    const SkewPoly u = linear(*F9, 1, F9->gamma()), v = linear(*F9, 1, Field::one());
    const SkewPoly l = skew::lclm(*F9, u, v);
    CHECK(l.degree() == 2);
    CHECK(skew::divmod_left(*F9, l, u).second.is_zero());
    CHECK(skew::divmod_left(*F9, l, v).second.is_zero());
}

TEST_CASE("reverse and coefficient maps") {
    auto F = f81();
    Rng rng(10);
    CHECK(skew::sigma_reverse(*F, SkewPoly::constant(1, Elem(5)), 0) == SkewPoly::constant(1, Elem(5)));
    CHECK(skew::sigma_reverse(*F, SkewPoly(1, {}), 3).is_zero());
    for (int t = 0; t < 500; ++t) {
        const int tw = skew::normalize_twist(*F, t % 2 ? 1 : -1);
        const SkewPoly f = random_poly(*F, tw, 5, rng);
        const int deg = std::max(f.degree(), 0) + static_cast<int>(rng.below(3));
        const SkewPoly rev = skew::sigma_reverse(*F, f, deg);
        REQUIRE(rev.degree() <= deg);
        for (int j = 0; j <= deg; ++j) {
            REQUIRE(rev.coeff(static_cast<std::size_t>(j)) ==
                    F->frobenius(f.coeff(static_cast<std::size_t>(deg - j)), static_cast<long>(tw) * (j - deg)));
        }
        // Reversing twice applies theta^{-deg} to every coefficient.
        REQUIRE(skew::sigma_reverse(*F, rev, deg) == skew::coeff_map(*F, f, -static_cast<long>(tw) * deg));
        REQUIRE(skew::coeff_map(*F, skew::coeff_map(*F, f, 1), -1) == f);
        REQUIRE(skew::coeff_map(*F, f, 0) == f);
        REQUIRE(skew::coeff_map(*F, f, F->m()) == f);
    }
}

TEST_CASE("Moore matrices: example and rank law") {
    auto F4 = f4();
    const Elem g = F4->gamma();
    const std::vector<std::vector<Elem>> blocks{{Field::one(), g}};
    const std::vector<Elem> params{g};
    const Mat mm = skew::moore_matrix(*F4, 1, 2, blocks, params);
    CHECK(mm(0, 0) == Field::one());
    CHECK(mm(0, 1) == g);
    CHECK(mm(1, 0) == g);
    CHECK(mm(1, 1) == Field::one());
    CHECK(linalg::rank(*F4, mm) == 2);
    CHECK(skew::moore_matrix(*F4, 1, 1, blocks, params).rows() == 1);

    Rng rng(12);
    for (auto F : {f4(), f9(), f81()}) {
        const std::size_t l = std::min<std::size_t>(2, F->class_count());
        const auto reps = F->class_representatives(l);
        for (int t = 0; t < 500; ++t) {
            const int tw = skew::normalize_twist(*F, t % 2 ? 1 : -1);
            std::vector<std::vector<Elem>> xs;
            std::size_t n = 0;
            for (std::size_t i = 0; i < l; ++i) {
                xs.push_back(random_independent(*F, 1 + rng.below(F->m()), rng));
                n += xs.back().size();
            }
            std::vector<Elem> ps;
            for (auto r : reps) ps.push_back(F->frobenius(r, tw == 1 ? 0 : -1));
            const std::size_t d = 1 + rng.below(n + 2);
            REQUIRE(linalg::rank(*F, skew::moore_matrix(*F, tw, d, xs, ps)) == std::min(d, n));
        }
    }
}
