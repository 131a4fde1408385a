// SPDX-License-Identifier: Apache-2.0
// Shared helpers and independent reference implementations for the tests.
#pragma once

#include <cstdint>
#include <vector>

#include "sumrank/decoder.hpp"
#include "sumrank/lifting.hpp"
#include "sumrank/rng.hpp"

namespace testing {

using namespace sumrank;

inline FieldPtr f4() { return Field::make(2, 1, 2, 1); }
inline FieldPtr f9() { return Field::make(3, 1, 2, 1); }
inline FieldPtr f81() { return Field::make(3, 1, 4, 1); }

/// The two-block code over F_{3^4} used by the decoding-radius checks.
inline Code radius_code() { return Code::make(f81(), LengthPartition({4, 4}), 3); }
inline Code small_code() { return Code::make(f9(), LengthPartition({2, 2}), 2); }

inline SkewPoly random_poly(const Field& f, int twist, std::size_t max_degree, Rng& rng) {
    std::vector<Elem> c(rng.below(max_degree + 1) + 1);
    for (auto& x : c) x = f.random(rng);
    return SkewPoly(skew::normalize_twist(f, twist), c);
}

inline Word random_word(const Field& f, std::size_t n, Rng& rng) {
    Word w(n);
    for (auto& x : w) x = f.random(rng);
    return w;
}

inline Word add(const Field& f, const Word& a, const Word& b) {
    Word out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = f.add(a[j], b[j]);
    return out;
}

/// Dimension of the F_p-span of F_p-vectors by exhaustive enumeration of
/// all combinations (tiny sizes only). Independent of the library's
/// elimination.
inline std::size_t brute_rank_fp(const std::vector<std::vector<unsigned>>& rows, unsigned p) {
    if (rows.empty()) return 0;
    const std::size_t len = rows[0].size();
    std::vector<std::vector<unsigned>> seen;
    std::vector<unsigned> coef(rows.size(), 0);
    std::size_t count = 0;
    for (;;) {
        std::vector<unsigned> v(len, 0);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < len; ++c) v[c] = (v[c] + coef[r] * rows[r][c]) % p;
        }
        bool dup = false;
        for (const auto& s : seen) dup = dup || s == v;
        if (!dup) {
            seen.push_back(v);
            ++count;
        }
        std::size_t i = 0;
        while (i < coef.size() && ++coef[i] == p) coef[i++] = 0;
        if (i == coef.size()) break;
    }
    std::size_t r = 0;
    for (std::size_t size = 1; size < count; size *= p) ++r;
    return r;
}

/// F_p digits of an element index, least significant first.
inline std::vector<unsigned> digits(std::uint64_t index, unsigned p, unsigned len) {
    std::vector<unsigned> d(len);
    for (auto& x : d) {
        x = static_cast<unsigned>(index % p);
        index /= p;
    }
    return d;
}

}  // namespace testing
