// SPDX-License-Identifier: Apache-2.0
#include <numeric>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// Reference multiplication: schoolbook product of F_p digit vectors reduced
// by the monic modulus.
std::uint64_t ref_mul(const Field& f, std::uint64_t a, std::uint64_t b) {
    const unsigned p = f.p();
    const auto& mod = f.modulus();
    const unsigned deg = static_cast<unsigned>(mod.size()) - 1;
    const auto da = digits(a, p, deg), db = digits(b, p, deg);
    std::vector<unsigned> prod(2 * deg, 0);
    for (unsigned i = 0; i < deg; ++i) {
        for (unsigned j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (unsigned k = 2 * deg - 1; k >= deg; --k) {
        const unsigned c = prod[k];
        if (c == 0) continue;
        for (unsigned t = 0; t <= deg; ++t) prod[k - deg + t] = (prod[k - deg + t] + p * p - c * mod[t]) % p;
    }
    std::uint64_t idx = 0;
    for (unsigned i = deg; i-- > 0;) idx = idx * p + prod[i];
    return idx;
}

std::uint64_t ref_add(const Field& f, std::uint64_t a, std::uint64_t b) {
    const unsigned p = f.p();
    std::uint64_t out = 0, scale = 1;
    while (a || b) {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

std::uint64_t ref_pow(const Field& f, std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = ref_mul(f, r, a);
    return r;
}

}  // namespace

TEST_CASE("small towers match their defining data") {
    auto F4 = f4();
    CHECK(F4->order() == 4);
    CHECK(F4->modulus() == std::vector<unsigned>{1, 1, 1});
    const Elem g = F4->gamma();
    CHECK(F4->pow(g, 3) == Field::one());
    CHECK(F4->pow(g, 1) != Field::one());
    CHECK(F4->frobenius(g, 1) == F4->add(g, Field::one()));

    auto F9 = f9();
    const Elem g9 = F9->gamma();
    std::set<std::uint32_t> powers;
    for (int i = 0; i < 8; ++i) powers.insert(F9->pow(g9, static_cast<std::uint64_t>(i)).value);
    CHECK(powers.size() == 8);

    CHECK_THROWS_AS(Field::make(2, 1, 2, 2), ParameterError);
    CHECK_THROWS_AS(Field::make(4, 1, 2, 1), ParameterError);
    CHECK_THROWS_AS(Field::make(3, 1, 0, 1), ParameterError);
}

TEST_CASE("arithmetic agrees with the reference polynomial model") {
    for (auto [p, e, m] : {std::tuple{2u, 1u, 2u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {3u, 1u, 4u}}) {
        auto F = Field::make(p, e, m, 1);
        const std::uint64_t n = F->order();
        const std::uint64_t step = n > 100 ? 7 : 1;
        for (std::uint64_t a = 0; a < n; a += step) {
            for (std::uint64_t b = 0; b < n; b += step) {
                REQUIRE(F->mul(Elem(a), Elem(b)).value == ref_mul(*F, a, b));
                REQUIRE(F->add(Elem(a), Elem(b)).value == ref_add(*F, a, b));
                REQUIRE(F->add(F->sub(Elem(a), Elem(b)), Elem(b)).value == a);
            }
            if (a) CHECK(F->mul(Elem(a), F->inv(Elem(a))) == Field::one());
        }
        CHECK(F->gamma_pow(5).value == ref_pow(*F, F->gamma().value, 5));
    }
}

TEST_CASE("sigma is an automorphism fixing exactly F_q") {
    for (auto [p, e, m, s] : {std::tuple{2u, 1u, 2u, 1L}, {3u, 1u, 2u, 1L}, {3u, 1u, 4u, 3L}, {2u, 2u, 3u, 2L}}) {
        auto F = Field::make(p, e, m, s);
        std::size_t fixed = 0;
        for (std::uint64_t a = 0; a < F->order(); ++a) {
            const Elem x(static_cast<std::uint32_t>(a));
            const Elem sx = F->frobenius(x, 1);
            // sigma(a) = a^(q^s)
            std::uint64_t exponent = 1;
            for (unsigned i = 0; i < e * s; ++i) exponent *= p;
            REQUIRE(sx.value == ref_pow(*F, a, exponent));
            REQUIRE(F->frobenius(sx, -1) == x);
            REQUIRE(F->frobenius(x, static_cast<long>(m)) == x);
            REQUIRE(F->frobenius(x, 0) == x);
            if (sx == x) {
                ++fixed;
                CHECK(F->in_base(x));
            } else {
                CHECK_FALSE(F->in_base(x));
            }
        }
        CHECK(fixed == F->q());
        CHECK(F->fq_elements().size() == F->q());
    }
    Rng rng(5);
    auto F = f81();
    for (int t = 0; t < 500; ++t) {
        const Elem a = F->random(rng), b = F->random(rng);
        CHECK(F->frobenius(F->add(a, b), 1) == F->add(F->frobenius(a, 1), F->frobenius(b, 1)));
        CHECK(F->frobenius(F->mul(a, b), 1) == F->mul(F->frobenius(a, 1), F->frobenius(b, 1)));
    }
}

TEST_CASE("conjugacy classes match exhaustive orbits") {
    for (auto [p, e, m, s] : {std::tuple{2u, 1u, 2u, 1L}, {3u, 1u, 2u, 1L}, {3u, 1u, 4u, 1L}, {2u, 2u, 2u, 1L},
                              {5u, 1u, 3u, 2L}}) {
        auto F = Field::make(p, e, m, s);
        const std::uint64_t n = F->order();
        // Orbit of a: { sigma(c) a / c : c != 0 }.
        std::vector<int> cls(n, -1);
        int classes = 0;
        for (std::uint64_t a = 1; a < n; ++a) {
            if (cls[a] >= 0) continue;
            for (std::uint64_t c = 1; c < n; ++c) {
                const Elem cc(static_cast<std::uint32_t>(c));
                const Elem b = F->div(F->mul(F->frobenius(cc, 1), Elem(static_cast<std::uint32_t>(a))), cc);
                cls[b.value] = classes;
            }
            ++classes;
        }
        CHECK(F->class_count() == static_cast<std::uint64_t>(classes));
        CHECK(static_cast<std::uint64_t>(classes) == F->q() - 1);
        for (std::uint64_t a = 1; a < n; a += 3) {
            for (std::uint64_t b = 1; b < n; b += 5) {
                REQUIRE(F->is_conjugate(Elem(a), Elem(b)) == (cls[a] == cls[b]));
            }
        }
        CHECK(F->is_conjugate(Field::zero(), Field::zero()));
        CHECK_FALSE(F->is_conjugate(Field::zero(), Field::one()));
        const auto reps = F->class_representatives(static_cast<std::size_t>(classes));
        std::set<int> seen;
        for (auto r : reps) seen.insert(cls[r.value]);
        CHECK(seen.size() == reps.size());
        CHECK_THROWS_AS((void)F->class_representatives(static_cast<std::size_t>(classes) + 1), ParameterError);
    }
}

TEST_CASE("conjugacy and representatives in F_4 and F_9") {
    auto F9 = f9();
    const Elem g = F9->gamma();
    CHECK(F9->is_conjugate(Field::one(), Elem(2)));
    CHECK(F9->pow(g, 4) == Elem(2));
    CHECK_FALSE(F9->is_conjugate(Field::one(), g));
    CHECK(F9->class_representatives(2) == std::vector<Elem>{Field::one(), g});
    auto F4 = f4();
    CHECK(F4->class_representatives(1) == std::vector<Elem>{Field::one()});
    CHECK_THROWS_AS((void)F4->class_representatives(2), ParameterError);
}

TEST_CASE("expand and compress are inverse F_q-linear maps") {
    auto F4 = f4();
    CHECK(F4->fq_basis() == std::vector<Elem>{Field::one(), F4->gamma()});
    CHECK(F4->expand(F4->add(F4->gamma(), Field::one())) == std::vector<Elem>{Field::one(), Field::one()});
    CHECK(F4->expand(Field::zero()) == std::vector<Elem>(2, Field::zero()));

    Rng rng(11);
    for (auto [p, e, m] : {std::tuple{3u, 1u, 2u}, {2u, 2u, 3u}, {3u, 1u, 4u}}) {
        auto F = Field::make(p, e, m, 1);
        for (std::uint64_t a = 0; a < F->order(); ++a) {
            const auto coords = F->expand(Elem(a));
            REQUIRE(coords.size() == m);
            for (auto c : coords) REQUIRE(F->in_base(c));
            REQUIRE(F->compress(coords) == Elem(a));
            // Coordinates reproduce the element in the chosen basis.
            Elem back = Field::zero();
            for (unsigned j = 0; j < m; ++j) back = F->add(back, F->mul(coords[j], F->fq_basis()[j]));
            REQUIRE(back == Elem(a));
        }
        for (int t = 0; t < 200; ++t) {
            const Elem a = F->random(rng), b = F->random(rng), lam = F->random_fq(rng);
            const auto ea = F->expand(a), eb = F->expand(b), ec = F->expand(F->add(F->mul(lam, a), b));
            for (unsigned j = 0; j < m; ++j) CHECK(ec[j] == F->add(F->mul(lam, ea[j]), eb[j]));
        }
        CHECK_THROWS_AS((void)F->compress(std::vector<Elem>(m + 1)), ParameterError);
    }
}

TEST_CASE("F_q labels enumerate the subfield in index order") {
    auto F = Field::make(2, 2, 2, 1);
    const auto& elems = F->fq_elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        CHECK(F->fq_label(elems[i]) == i);
        CHECK(F->fq_from_label(i) == elems[i]);
        if (i) CHECK(elems[i - 1] < elems[i]);
    }
    CHECK_THROWS_AS((void)F->fq_from_label(4), ParameterError);
}

TEST_CASE("construction is deterministic") {
    auto a = Field::make(3, 1, 4, 1), b = Field::make(3, 1, 4, 1);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->gamma() == b->gamma());
    CHECK(a->fq_basis() == b->fq_basis());
    CHECK(a->describe() == b->describe());
}
