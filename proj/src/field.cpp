// SPDX-License-Identifier: Apache-2.0
#include "sumrank/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sumrank/rng.hpp"

namespace sumrank {
namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;
constexpr std::uint64_t kTableOrder = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p, constant term first, no trailing zeros.
using PPoly = std::vector<std::uint32_t>;

void trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

PPoly pmod(PPoly a, const PPoly& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - c * b[j] % p) % p);
        }
        trim(a);
    }
    return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    return pmod(std::move(r), f, p);
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& f, std::uint32_t p) {
    PPoly result{1};
    base = pmod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) result = pmulmod(result, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

PPoly pgcd(PPoly a, PPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: f of degree d is irreducible iff gcd(f, x^(p^i) - x) = 1 for
// i = 1..d/2.
bool is_irreducible(const PPoly& f, std::uint32_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 1) return true;
    if (f[0] == 0) return false;
    PPoly h{0, 1};
    for (std::size_t i = 1; i <= d / 2; ++i) {
        h = ppowmod(h, p, f, p);
        PPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (pgcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

// Inverse of a square matrix over F_p; empty result if singular.
std::vector<std::vector<std::uint32_t>> invert_mod_p(std::vector<std::vector<std::uint32_t>> a,
                                                     std::uint32_t p) {
    const std::size_t n = a.size();
    std::vector<std::vector<std::uint32_t>> inv(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return {};
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const std::uint64_t s = inv_mod(a[col][col], p);
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = static_cast<std::uint32_t>(a[col][j] * s % p);
            inv[col][j] = static_cast<std::uint32_t>(inv[col][j] * s % p);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const std::uint64_t c = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = static_cast<std::uint32_t>((a[r][j] + p - c * a[col][j] % p) % p);
                inv[r][j] = static_cast<std::uint32_t>((inv[r][j] + p - c * inv[col][j] % p) % p);
            }
        }
    }
    return inv;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> a, std::uint32_t p) {
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        const std::uint64_t s = inv_mod(a[rank][col], p);
        for (auto& x : a[rank]) x = static_cast<std::uint32_t>(x * s % p);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const std::uint64_t c = a[r][col];
            for (std::size_t j = 0; j < cols; ++j) {
                a[r][j] = static_cast<std::uint32_t>((a[r][j] + p - c * a[rank][j] % p) % p);
            }
        }
        ++rank;
    }
    return rank;
}

long mod_floor(long a, long m) {
    const long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::shared_ptr<const Field> Field::make(unsigned p, unsigned e, unsigned m, long s) {
    if (!is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
    if (e == 0 || m == 0) throw ParameterError("extension degrees e and m must be positive");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < e * m; ++i) {
        order *= p;
        if (order > kMaxOrder) throw ParameterError("field order q^m exceeds 2^32");
    }
    if (order == kMaxOrder) throw ParameterError("field order q^m exceeds 2^32 - 1");
    const auto sn = static_cast<unsigned>(mod_floor(s, static_cast<long>(m)));
    if (std::gcd(sn, m) != 1) {
        throw ParameterError("gcd(s, m) = " + std::to_string(std::gcd(sn, m)) +
                             " != 1; sigma does not generate Gal(F_q^m / F_q)");
    }
    return std::shared_ptr<const Field>(new Field(p, e, m, sn));
}

Field::Field(unsigned p, unsigned e, unsigned m, unsigned s)
    : p_(p), e_(e), m_(m), s_(s), degree_(e * m) {
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) q_ *= p;
    order_ = 1;
    for (unsigned i = 0; i < m; ++i) order_ *= q_;

    std::uint64_t qs = 1;
    for (unsigned i = 0; i < s; ++i) qs *= q_;
    class_count_ = std::gcd(qs - 1, order_ - 1);

    find_modulus();
    find_gamma();
    build_tables();
    build_subfield();
    build_basis();
}

void Field::find_modulus() {
    std::uint64_t bound = 1;
    for (unsigned i = 0; i < degree_; ++i) bound *= p_;
    for (std::uint64_t idx = 0; idx < bound; ++idx) {
        PPoly f(degree_ + 1, 0);
        std::uint64_t v = idx;
        for (unsigned i = 0; i < degree_; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p_);
            v /= p_;
        }
        f[degree_] = 1;
        if (is_irreducible(f, p_)) {
            modulus_.assign(f.begin(), f.end());
            return;
        }
    }
    throw InternalError("no irreducible polynomial found");
}

Field::Digits Field::digits(Elem a) const {
    Digits d(degree_, 0);
    std::uint32_t v = a.value;
    for (unsigned i = 0; i < degree_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

Elem Field::from_digits(const Digits& d) const {
    std::uint64_t v = 0;
    for (unsigned i = degree_; i-- > 0;) v = v * p_ + d[i];
    return Elem{static_cast<std::uint32_t>(v)};
}

Elem Field::poly_mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    const Digits da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < degree_; ++j) {
            prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
        }
    }
    for (std::size_t k = prod.size(); k-- > degree_;) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (unsigned j = 0; j <= degree_; ++j) {
            auto& slot = prod[k - degree_ + j];
            slot = (slot + p_ - c * modulus_[j] % p_) % p_;
        }
    }
    Digits out(degree_);
    for (unsigned i = 0; i < degree_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return from_digits(out);
}

Elem Field::slow_pow(Elem a, std::uint64_t exponent) const {
    Elem result = one();
    while (exponent > 0) {
        if (exponent & 1) result = poly_mul(result, a);
        a = poly_mul(a, a);
        exponent >>= 1;
    }
    return result;
}

void Field::find_gamma() {
    order_factors_ = prime_factors(order_ - 1);
    for (std::uint64_t idx = 1; idx < order_; ++idx) {
        const Elem c{static_cast<std::uint32_t>(idx)};
        bool primitive = true;
        for (auto r : order_factors_) {
            if (slow_pow(c, (order_ - 1) / r) == one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gamma_ = c;
            return;
        }
    }
    throw InternalError("no primitive element found");
}

void Field::build_tables() {
    const std::uint64_t n = order_ - 1;
    frob_mult_.resize(m_);
    std::uint64_t qj = 1 % std::max<std::uint64_t>(n, 1);
    for (unsigned j = 0; j < m_; ++j) {
        frob_mult_[j] = qj;
        qj = n == 0 ? 0 : (qj * q_) % n;
    }
    if (order_ > kTableOrder) return;
    exp_.resize(n);
    log_.assign(order_, 0);
    Elem x = one();
    for (std::uint64_t k = 0; k < n; ++k) {
        exp_[k] = x.value;
        log_[x.value] = static_cast<std::uint32_t>(k);
        x = poly_mul(x, gamma_);
    }
    tables_ = true;
}

void Field::build_subfield() {
    const Elem zeta = slow_pow(gamma_, (order_ - 1) / (q_ - 1));
    fq_elems_.push_back(zero());
    Elem x = one();
    for (std::uint64_t k = 0; k + 1 < q_; ++k) {
        fq_elems_.push_back(x);
        x = poly_mul(x, zeta);
    }
    std::sort(fq_elems_.begin(), fq_elems_.end());
    for (std::uint32_t i = 0; i < fq_elems_.size(); ++i) fq_label_[fq_elems_[i].value] = i;

    Elem u = one();
    for (unsigned a = 0; a < e_; ++a) {
        fq_powers_.push_back(u);
        u = poly_mul(u, zeta);
    }
}

void Field::build_basis() {
    auto columns_of = [&](Elem b) {
        std::vector<Digits> cols;
        for (auto u : fq_powers_) cols.push_back(digits(poly_mul(u, b)));
        return cols;
    };
    auto as_matrix = [&](const std::vector<Digits>& cols) {
        std::vector<std::vector<std::uint32_t>> mat(degree_, std::vector<std::uint32_t>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (unsigned r = 0; r < degree_; ++r) mat[r][c] = cols[c][r];
        }
        return mat;
    };

    std::vector<Digits> cols;
    Elem x = one();
    for (unsigned j = 0; j < m_; ++j) {
        fq_basis_.push_back(x);
        for (auto& c : columns_of(x)) cols.push_back(std::move(c));
        x = poly_mul(x, gamma_);
    }
    if (rank_mod_p(as_matrix(cols), p_) != degree_) {
        // Greedy fallback over ascending indices.
        fq_basis_.clear();
        cols.clear();
        std::size_t rank = 0;
        for (std::uint64_t idx = 1; idx < order_ && fq_basis_.size() < m_; ++idx) {
            const Elem b{static_cast<std::uint32_t>(idx)};
            auto trial = cols;
            for (auto& c : columns_of(b)) trial.push_back(std::move(c));
            const std::size_t r = rank_mod_p(as_matrix(trial), p_);
            if (r == rank + e_) {
                rank = r;
                cols = std::move(trial);
                fq_basis_.push_back(b);
            }
        }
    }
    expand_inv_ = invert_mod_p(as_matrix(cols), p_);
    if (expand_inv_.empty()) throw InternalError("F_q-basis of F_q^m is singular");
}

Elem Field::from_index(std::uint64_t index) const {
    if (index >= order_) {
        throw ParameterError("element index " + std::to_string(index) + " out of range [0, " +
                             std::to_string(order_) + ")");
    }
    return Elem{static_cast<std::uint32_t>(index)};
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return Elem{a.value ^ b.value};
    std::uint64_t x = a.value, y = b.value, out = 0, place = 1;
    while (x != 0 || y != 0) {
        out += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return Elem{static_cast<std::uint32_t>(out)};
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    std::uint64_t x = a.value, out = 0, place = 1;
    while (x != 0) {
        out += ((p_ - x % p_) % p_) * place;
        x /= p_;
        place *= p_;
    }
    return Elem{static_cast<std::uint32_t>(out)};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    if (!tables_) return poly_mul(a, b);
    std::uint64_t k = std::uint64_t{log_[a.value]} + log_[b.value];
    const std::uint64_t n = order_ - 1;
    if (k >= n) k -= n;
    return Elem{exp_[k]};
}

Elem Field::inv(Elem a) const {
    if (a.is_zero()) throw ParameterError("inverse of zero");
    if (!tables_) return slow_pow(a, order_ - 2);
    const std::uint64_t n = order_ - 1;
    return Elem{exp_[(n - log_[a.value]) % n]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t exponent) const {
    if (exponent == 0) return one();
    if (a.is_zero()) return zero();
    if (!tables_) return slow_pow(a, exponent);
    const std::uint64_t n = order_ - 1;
    return Elem{exp_[(std::uint64_t{log_[a.value]} * (exponent % n)) % n]};
}

Elem Field::gamma_pow(std::int64_t k) const {
    const auto n = static_cast<std::int64_t>(order_ - 1);
    const auto r = static_cast<std::uint64_t>(((k % n) + n) % n);
    if (tables_) return Elem{exp_[r]};
    return slow_pow(gamma_, r);
}

Elem Field::frobenius(Elem a, long t) const {
    const auto j = static_cast<unsigned>(mod_floor(static_cast<long>(s_) * t, static_cast<long>(m_)));
    if (j == 0 || a.is_zero()) return a;
    if (tables_) {
        const std::uint64_t n = order_ - 1;
        return Elem{exp_[(std::uint64_t{log_[a.value]} * frob_mult_[j]) % n]};
    }
    std::uint64_t qj = 1;
    for (unsigned i = 0; i < j; ++i) qj *= q_;
    return slow_pow(a, qj);
}

bool Field::in_base(Elem a) const { return pow(a, q_) == a; }

bool Field::is_conjugate(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const Elem ratio = div(b, a);
    return pow(ratio, (order_ - 1) / class_count_) == one();
}

std::vector<Elem> Field::class_representatives(std::size_t l) const {
    if (l > class_count_) {
        throw ParameterError("requested " + std::to_string(l) + " conjugacy classes but only " +
                             std::to_string(class_count_) + " nontrivial classes exist");
    }
    std::vector<Elem> reps;
    for (std::int64_t k = 0; reps.size() < l; ++k) {
        const Elem c = gamma_pow(k);
        const bool fresh = std::none_of(reps.begin(), reps.end(),
                                        [&](Elem r) { return is_conjugate(r, c); });
        if (fresh) reps.push_back(c);
    }
    return reps;
}

std::vector<Elem> Field::expand(Elem a) const {
    const Digits d = digits(a);
    std::vector<Elem> coords(m_, zero());
    for (unsigned j = 0; j < m_; ++j) {
        Elem acc = zero();
        for (unsigned u = 0; u < e_; ++u) {
            const auto& row = expand_inv_[j * e_ + u];
            std::uint64_t c = 0;
            for (unsigned r = 0; r < degree_; ++r) c = (c + std::uint64_t{row[r]} * d[r]) % p_;
            if (c != 0) acc = add(acc, mul(Elem{static_cast<std::uint32_t>(c)}, fq_powers_[u]));
        }
        coords[j] = acc;
    }
    return coords;
}

Elem Field::compress(std::span<const Elem> coords) const {
    if (coords.size() != m_) {
        throw ParameterError("compress expects " + std::to_string(m_) + " coordinates, got " +
                             std::to_string(coords.size()));
    }
    Elem acc = zero();
    for (unsigned j = 0; j < m_; ++j) acc = add(acc, mul(coords[j], fq_basis_[j]));
    return acc;
}

std::uint32_t Field::fq_label(Elem a) const {
    const auto it = fq_label_.find(a.value);
    if (it == fq_label_.end()) {
        throw ParameterError("element " + std::to_string(a.value) + " is not in F_q");
    }
    return it->second;
}

Elem Field::fq_from_label(std::uint64_t label) const {
    if (label >= q_) {
        throw ParameterError("F_q label " + std::to_string(label) + " out of range [0, " +
                             std::to_string(q_) + ")");
    }
    return fq_elems_[label];
}

Elem Field::random(Rng& rng) const { return Elem{static_cast<std::uint32_t>(rng.below(order_))}; }

Elem Field::random_nonzero(Rng& rng) const {
    return Elem{static_cast<std::uint32_t>(1 + rng.below(order_ - 1))};
}

Elem Field::random_fq(Rng& rng) const { return fq_elems_[rng.below(q_)]; }

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << "^" << m_ << ") with q = " << p_ << "^" << e_ << ", sigma: a -> a^(q^" << s_
       << "), modulus [";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    os << "], gamma = " << gamma_.value;
    return os.str();
}

}  // namespace sumrank
