// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sumrank {

class Rng;

/// One element of F_{q^m}. The value is the integer index of the element:
/// its F_p-coordinates in the polynomial basis read as a base-p number,
/// least significant digit = constant coefficient.
struct Elem {
    std::uint32_t value = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t v) : value(v) {}

    [[nodiscard]] constexpr bool is_zero() const { return value == 0; }
    constexpr auto operator<=>(const Elem&) const = default;
};

/// Raised for invalid parameters anywhere in the library (bad field, bad
/// partition, infeasible profile, malformed input). Carries exit code 2 in
/// the CLI.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant fails (CLI exit code 3).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * The tower F_p ⊆ F_q ⊆ F_{q^m}, q = p^e, with the automorphism
 * sigma(a) = a^(q^s).
 *
 * F_{q^m} is built as a single degree-(e*m) extension of F_p. The modulus is
 * the first monic irreducible polynomial when its lower coefficients are
 * enumerated as ascending base-p integers, and gamma is the primitive element
 * of smallest index. F_q is the fixed field of a -> a^q. Both choices are
 * deterministic.
 *
 * Instances are immutable after construction and are shared through
 * std::shared_ptr<const Field>.
 */
class Field {
public:
    static std::shared_ptr<const Field> make(unsigned p, unsigned e, unsigned m, long s);

    [[nodiscard]] unsigned p() const { return p_; }
    [[nodiscard]] unsigned e() const { return e_; }
    [[nodiscard]] unsigned m() const { return m_; }
    /// Automorphism exponent, normalized to [0, m).
    [[nodiscard]] unsigned s() const { return s_; }
    [[nodiscard]] std::uint64_t q() const { return q_; }
    /// q^m, the number of elements of the big field.
    [[nodiscard]] std::uint64_t order() const { return order_; }
    /// F_p coefficients of the modulus, constant term first, length e*m + 1.
    [[nodiscard]] const std::vector<unsigned>& modulus() const { return modulus_; }
    [[nodiscard]] Elem gamma() const { return gamma_; }
    [[nodiscard]] const std::vector<Elem>& fq_basis() const { return fq_basis_; }

    [[nodiscard]] static constexpr Elem zero() { return Elem{0}; }
    [[nodiscard]] static constexpr Elem one() { return Elem{1}; }

    /// Validated conversion from an integer index.
    [[nodiscard]] Elem from_index(std::uint64_t index) const;

    [[nodiscard]] Elem add(Elem a, Elem b) const;
    [[nodiscard]] Elem sub(Elem a, Elem b) const;
    [[nodiscard]] Elem neg(Elem a) const;
    [[nodiscard]] Elem mul(Elem a, Elem b) const;
    /// Throws ParameterError on zero.
    [[nodiscard]] Elem inv(Elem a) const;
    [[nodiscard]] Elem div(Elem a, Elem b) const;
    [[nodiscard]] Elem pow(Elem a, std::uint64_t exponent) const;
    /// gamma^k for any integer k.
    [[nodiscard]] Elem gamma_pow(std::int64_t k) const;

    /// sigma^t(a); t may be negative.
    [[nodiscard]] Elem frobenius(Elem a, long t) const;

    /// True iff a lies in the subfield F_q.
    [[nodiscard]] bool in_base(Elem a) const;

    /// True iff b = sigma(c) a c^{-1} for some nonzero c.
    [[nodiscard]] bool is_conjugate(Elem a, Elem b) const;
    /// Number of nontrivial sigma-conjugacy classes, gcd(q^s - 1, q^m - 1).
    [[nodiscard]] std::uint64_t class_count() const { return class_count_; }
    /// l pairwise non-conjugate nonzero elements, taken from ascending powers
    /// of gamma.
    [[nodiscard]] std::vector<Elem> class_representatives(std::size_t l) const;

    /// Coordinates of a over F_q w.r.t. fq_basis(); entries are elements of
    /// the subfield F_q.
    [[nodiscard]] std::vector<Elem> expand(Elem a) const;
    [[nodiscard]] Elem compress(std::span<const Elem> coords) const;

    /// F_q elements are labeled 0..q-1 by ascending index. For e = 1 the
    /// label of c equals its index.
    [[nodiscard]] std::uint32_t fq_label(Elem a) const;
    [[nodiscard]] Elem fq_from_label(std::uint64_t label) const;
    [[nodiscard]] const std::vector<Elem>& fq_elements() const { return fq_elems_; }

    [[nodiscard]] Elem random(Rng& rng) const;
    [[nodiscard]] Elem random_nonzero(Rng& rng) const;
    [[nodiscard]] Elem random_fq(Rng& rng) const;

    [[nodiscard]] std::string describe() const;

private:
    Field(unsigned p, unsigned e, unsigned m, unsigned s);

    using Digits = std::vector<std::uint32_t>;

    [[nodiscard]] Digits digits(Elem a) const;
    [[nodiscard]] Elem from_digits(const Digits& d) const;
    [[nodiscard]] Elem poly_mul(Elem a, Elem b) const;
    [[nodiscard]] Elem slow_pow(Elem a, std::uint64_t exponent) const;

    void find_modulus();
    void find_gamma();
    void build_tables();
    void build_subfield();
    void build_basis();

    unsigned p_, e_, m_, s_;
    unsigned degree_;  // e*m
    std::uint64_t q_, order_;
    std::uint64_t class_count_ = 0;
    std::vector<unsigned> modulus_;
    Elem gamma_;
    std::vector<std::uint64_t> order_factors_;

    bool tables_ = false;
    std::vector<std::uint32_t> exp_;  // exp_[k] = gamma^k index, k < order-1
    std::vector<std::uint32_t> log_;  // log_[index], undefined for 0
    std::vector<std::uint64_t> frob_mult_;  // q^j mod (order - 1), j < m

    std::vector<Elem> fq_elems_;
    std::unordered_map<std::uint32_t, std::uint32_t> fq_label_;
    std::vector<Elem> fq_basis_;
    // Products u_a * b_j for the F_p-basis u_a = zeta^a of F_q, and the
    // inverse of their F_p-coordinate matrix.
    std::vector<Elem> fq_powers_;
    std::vector<std::vector<std::uint32_t>> expand_inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace sumrank
