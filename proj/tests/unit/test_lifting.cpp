// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "sumrank/cli.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::size_t dimension(const Field& f, const Mat& m) { return m.rows() ? linalg::rank(f, m) : 0; }

}  // namespace

TEST_CASE("lifting a codeword gives identity-prefixed shots") {
    const Code code = radius_code();
    const Field& f = code.field();
    const LiftedWord zero = lift(code, Word(8));
    for (const Mat& s : zero.shots) {
        REQUIRE(s.rows() == 4);
        REQUIRE(s.cols() == 8);
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 8; ++c) CHECK(s(r, c) == (c == r ? Field::one() : Field::zero()));
        }
    }
    Rng rng(61);
    for (int t = 0; t < 50; ++t) {
        const Word c = code.encode(random_word(f, 3, rng));
        const LiftedWord w = lift(code, c);
        for (std::size_t i = 0; i < 2; ++i) REQUIRE(dimension(f, w.shots[i]) == 4);
        const Reduction red = reduce(code, w);
        REQUIRE(red.received == c);
        REQUIRE(red.side.row_count() == 0);
        REQUIRE(red.side.col_count() == 0);
    }
}

TEST_CASE("operator channel dimension bookkeeping") {
    const Code code = radius_code();
    const Field& f = code.field();
    Rng rng(62);
    const Word c = code.encode(random_word(f, 3, rng));
    const LiftedWord sent = lift(code, c);
    const std::vector<ShotRequest> none(2);
    CHECK(canonical(f, operator_channel(f, sent, none, rng)).shots == canonical(f, sent).shots);
    const std::vector<ShotRequest> one_del{{0, 1}, {0, 0}};
    CHECK(dimension(f, operator_channel(f, sent, one_del, rng).shots[0]) == 3);
    for (int t = 0; t < 200; ++t) {
        std::vector<ShotRequest> req(2);
        for (auto& r : req) {
            r.deletions = rng.below(5);
            r.insertions = rng.below(5 + r.deletions);
        }
        const LiftedWord got = operator_channel(f, sent, req, rng);
        for (std::size_t i = 0; i < 2; ++i) {
            REQUIRE(dimension(f, got.shots[i]) == 4 - req[i].deletions + req[i].insertions);
            REQUIRE(got.shots[i].rows() == 4 - req[i].deletions + req[i].insertions);
        }
    }
    const std::vector<ShotRequest> too_many_del{{0, 5}, {0, 0}};
    CHECK_THROWS_AS(operator_channel(f, sent, too_many_del, rng), ParameterError);
    const std::vector<ShotRequest> too_many_ins{{5, 0}, {0, 0}};
    CHECK_THROWS_AS(operator_channel(f, sent, too_many_ins, rng), ParameterError);
}

TEST_CASE("pure insertions and deletions map to single erasures") {
    const Code code = radius_code();
    const Field& f = code.field();
    Rng rng(63);
    for (int t = 0; t < 100; ++t) {
        const Word c = code.encode(random_word(f, 3, rng));
        const LiftedWord sent = lift(code, c);

        // A deletion always loses one pivot: one column erasure, no row erasure.
        const std::vector<ShotRequest> del{{0, 1}, {0, 0}};
        const Reduction rd = reduce(code, operator_channel(f, sent, del, rng));
        REQUIRE(rd.col_erasures == std::vector<std::size_t>{1, 0});
        REQUIRE(rd.row_erasures == std::vector<std::size_t>{0, 0});
        REQUIRE(linalg::rank(f, rd.side.col_locations[0]) == 1);

        // Inserting v = (0 | w) gives one row erasure whose value spans w.
        Mat shot = sent.shots[1];
        Mat v(1, 8, Over::base);
        for (std::size_t j = 4; j < 8; ++j) v(0, j) = f.random_fq(rng);
        if (v.is_zero()) continue;
        shot.append_rows(v);
        LiftedWord recv = sent;
        recv.shots[1] = shot;
        const Reduction ri = reduce(code, recv);
        REQUIRE(ri.row_erasures == std::vector<std::size_t>{0, 1});
        REQUIRE(ri.col_erasures == std::vector<std::size_t>{0, 0});
        std::vector<Elem> coords(v.row(0).begin() + 4, v.row(0).end());
        REQUIRE(fq_rank(f, std::vector<Elem>{ri.side.row_values[1][0], f.compress(coords)}) == 1);
        const auto r = Decoder(code).decode(ri.received, ri.side, Variant::esp);
        REQUIRE(r.ok());
        REQUIRE(r.decoded().codeword == c);
    }
}

TEST_CASE("an empty shot becomes n_i column erasures") {
    const Code code = radius_code();
    const Field& f = code.field();
    Rng rng(64);
    const Word c = code.encode(random_word(f, 3, rng));
    LiftedWord recv = lift(code, c);
    recv.shots[0] = Mat(0, 8, Over::base);
    const Reduction red = reduce(code, recv);
    CHECK(red.col_erasures[0] == 4);
    CHECK(linalg::rank(f, red.side.col_locations[0]) == 4);
    const Decoder dec(code);
    const auto r = dec.decode(red.received, red.side, Variant::esp);
    REQUIRE(r.ok());
    CHECK(r.decoded().codeword == c);
}

TEST_CASE("reduction identities and residual rank on random channels") {
    const Code code = radius_code();
    const Field& f = code.field();
    const Decoder dec(code);
    Rng rng(65);
    for (const auto& req : sumrank::cli::radius_requests(code)) {
        for (int t = 0; t < 10; ++t) {
            const Word c = code.encode(random_word(f, 3, rng));
            const LiftedWord sent = lift(code, c);
            const LiftedWord got = operator_channel(f, sent, req, rng);
            const Reduction red = reduce(code, got);
            std::size_t full_total = 0;
            for (std::size_t i = 0; i < 2; ++i) {
                REQUIRE(red.row_erasures[i] <= req[i].insertions);
                const std::size_t full = req[i].insertions - red.row_erasures[i];
                REQUIRE(req[i].deletions == full + red.col_erasures[i]);
                Word e(4);
                for (std::size_t j = 0; j < 4; ++j) e[j] = f.sub(red.received[4 * i + j], c[4 * i + j]);
                REQUIRE(dec.residual_rank(e, red.side.row_values[i], red.side.col_locations[i]) <= full);
                full_total += full;
            }
            REQUIRE(2 * full_total + red.side.row_count() + red.side.col_count() ==
                    req[0].insertions + req[0].deletions + req[1].insertions + req[1].deletions);
            for (auto v : {Variant::esp, Variant::elp}) {
                const auto r = decode_subspace(dec, got, v);
                REQUIRE(r.ok());
                REQUIRE(r.decoded().codeword == c);
                REQUIRE(canonical(f, lift(code, r.decoded().codeword)).shots == canonical(f, sent).shots);
            }
        }
    }
}

TEST_CASE("the F_9 code decodes every in-radius channel request") {
    const Code code = small_code();
    const Field& f = code.field();
    const Decoder dec(code);
    Rng rng(66);
    for (const auto& req : sumrank::cli::radius_requests(code)) {
        for (int t = 0; t < 50; ++t) {
            const Word c = code.encode(random_word(f, 2, rng));
            const auto r = decode_subspace(dec, operator_channel(f, lift(code, c), req, rng), Variant::elp);
            REQUIRE(r.ok());
            REQUIRE(r.decoded().codeword == c);
        }
    }
}
