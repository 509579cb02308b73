// Arithmetic for the tower F_p < F_q = F_p[Y]/(g) < F_{q^n} = F_q[X]/(h),
// absolute trace, quadratic character and additive characters.
#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "qfgl/caps.hpp"
#include "qfgl/errors.hpp"

namespace qfgl {

// An element of F_{q^n}, identified by its canonical index in [0, q^n).
// The index is the mixed-radix encoding of the coordinate vector over F_q
// (digit k = coefficient of X^k), where each F_q coordinate is itself the
// base-p encoding of its coefficients over F_p.
struct Elem {
    std::uint32_t index = 0;
    friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

namespace detail {

// Dense polynomial over a small field, coefficients as indices, trailing
// zeros trimmed (zero polynomial = empty vector).
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

template <class Ops>
Poly poly_add(const Ops& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    poly_trim(r);
    return r;
}

template <class Ops>
Poly poly_sub(const Ops& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, F.neg(y));
    }
    poly_trim(r);
    return r;
}

template <class Ops>
Poly poly_mul(const Ops& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        }
    }
    poly_trim(r);
    return r;
}

// Remainder modulo a monic polynomial f.
template <class Ops>
Poly poly_mod(const Ops& F, Poly a, const Poly& f) {
    const int df = poly_deg(f);
    while (poly_deg(a) >= df) {
        std::uint32_t lead = a.back();
        int shift = poly_deg(a) - df;
        if (lead != 0) {
            for (int i = 0; i <= df; ++i)
                a[i + shift] = F.add(a[i + shift], F.neg(F.mul(lead, f[i])));
        }
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

template <class Ops>
Poly poly_mul_mod(const Ops& F, const Poly& a, const Poly& b, const Poly& f) {
    return poly_mod(F, poly_mul(F, a, b), f);
}

template <class Ops>
Poly poly_pow_mod(const Ops& F, Poly base, std::uint64_t e, const Poly& f) {
    Poly r = {1};
    base = poly_mod(F, std::move(base), f);
    while (e > 0) {
        if (e & 1) r = poly_mul_mod(F, r, base, f);
        base = poly_mul_mod(F, base, base, f);
        e >>= 1;
    }
    return r;
}

template <class Ops>
Poly poly_gcd(const Ops& F, Poly a, Poly b) {
    while (!b.empty()) {
        // make b monic so poly_mod applies
        std::uint32_t lead_inv = F.inv(b.back());
        for (auto& c : b) c = F.mul(c, lead_inv);
        a = poly_mod(F, std::move(a), b);
        std::swap(a, b);
    }
    return a;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

// Rabin's test: f monic of degree d over a field of size s is irreducible
// iff X^{s^d} = X (mod f) and gcd(X^{s^{d/t}} - X, f) = 1 for prime t | d.
template <class Ops>
bool is_irreducible(const Ops& F, const Poly& f, std::uint64_t s) {
    const int d = poly_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    std::vector<Poly> frob(d + 1);  // frob[i] = X^{s^i} mod f, filled as needed
    frob[0] = {0, 1};
    for (int i = 1; i <= d; ++i) frob[i] = poly_pow_mod(F, frob[i - 1], s, f);
    if (frob[d] != frob[0]) return false;
    for (std::uint64_t t : prime_factors(static_cast<std::uint64_t>(d))) {
        Poly diff = poly_sub(F, frob[d / t], frob[0]);
        Poly g = poly_gcd(F, f, diff);
        if (poly_deg(g) > 0) return false;
    }
    return true;
}

// Arithmetic over F_p by residues.
struct PrimeOps {
    std::uint32_t p;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    }
    std::uint32_t inv(std::uint32_t a) const {
        // Fermat; p is prime and a != 0.
        std::uint32_t r = 1, base = a;
        std::uint32_t e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

// Arithmetic over F_q backed by the tables owned by FieldCtx.
struct FqOps {
    std::uint32_t q;
    const std::uint16_t* add_t;  // q*q
    const std::uint16_t* neg_t;  // q
    const std::uint32_t* log_t;  // q (log of 0 unused)
    const std::uint32_t* exp_t;  // 2*(q-1)
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_t[a * q + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_t[a]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_t[log_t[a] + log_t[b]];
    }
    std::uint32_t inv(std::uint32_t a) const { return exp_t[(q - 1) - log_t[a]]; }
};

inline bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Lowest-index monic irreducible of degree d over a size-s field, or a
// seeded random one.
template <class Ops>
Poly find_irreducible(const Ops& F, int d, std::uint64_t s,
                      std::optional<std::uint64_t> seed) {
    auto candidate = [&](std::uint64_t idx) {
        Poly f(d + 1, 0);
        for (int k = 0; k < d; ++k) {
            f[k] = static_cast<std::uint32_t>(idx % s);
            idx /= s;
        }
        f[d] = 1;
        return f;
    };
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= s;
    if (seed) {
        std::mt19937_64 rng(*seed);
        for (;;) {
            Poly f = candidate(rng() % total);
            if (is_irreducible(F, f, s)) return f;
        }
    }
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Poly f = candidate(idx);
        if (is_irreducible(F, f, s)) return f;
    }
    fail(errc::invalid_argument, "no irreducible polynomial found");  // unreachable
}

}  // namespace detail

// Immutable description of the tower F_p < F_q < F_{q^n} with arithmetic
// tables. Safe to share read-only across threads.
class FieldCtx {
public:
    static FieldCtx make(int p, int m, int n, std::optional<std::uint64_t> seed = std::nullopt,
                         const Caps& caps = {}) {
        require(p >= 2 && detail::is_prime_u64(static_cast<std::uint64_t>(p)), errc::non_prime,
                "p = " + std::to_string(p) + " is not prime");
        require(m >= 1, errc::invalid_argument, "m must be >= 1");
        require(n >= 2, errc::invalid_argument, "n must be >= 2");
        std::uint64_t count = 1;
        for (int i = 0; i < m * n; ++i) {
            count *= static_cast<std::uint64_t>(p);
            require(count <= caps.field, errc::size_cap_exceeded,
                    "p^(m*n) exceeds field cap " + std::to_string(caps.field));
        }
        FieldCtx ctx;
        ctx.p_ = static_cast<std::uint32_t>(p);
        ctx.m_ = m;
        ctx.n_ = n;
        ctx.seed_ = seed;
        ctx.build(caps);
        return ctx;
    }

    FieldCtx(FieldCtx&&) = default;
    FieldCtx& operator=(FieldCtx&&) = default;
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    std::uint32_t p() const { return p_; }
    int m() const { return m_; }
    int n() const { return n_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t size() const { return N_; }
    bool has_tables() const { return has_tables_; }
    std::optional<std::uint64_t> seed() const { return seed_; }
    Elem generator() const { return gen_; }
    const std::vector<std::uint16_t>& g_coeffs() const { return g16_; }
    const std::vector<std::uint16_t>& h_coeffs() const { return h16_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }

    Elem from_index(std::uint64_t i) const {
        require(i < N_, errc::invalid_argument, "element index out of range");
        return Elem{static_cast<std::uint32_t>(i)};
    }

    // Embeds an F_q element (given by its index) as a constant.
    Elem embed_fq(std::uint32_t c) const {
        require(c < q_, errc::invalid_argument, "F_q index out of range");
        return Elem{c};
    }

    // Embeds a residue mod p; the prime subfield occupies indices [0, p).
    Elem embed_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return Elem{static_cast<std::uint32_t>(r)};
    }

    // Coordinate k (coefficient of X^k) as an F_q index.
    std::uint16_t digit(Elem x, int k) const {
        if (has_tables_) return digits_[static_cast<std::size_t>(x.index) * n_ + k];
        return static_cast<std::uint16_t>((x.index / pow_q_[k]) % q_);
    }

    std::vector<std::uint16_t> coords(Elem x) const {
        std::vector<std::uint16_t> c(n_);
        for (int k = 0; k < n_; ++k) c[k] = digit(x, k);
        return c;
    }

    Elem from_coords(const std::vector<std::uint16_t>& c) const {
        require(static_cast<int>(c.size()) == n_, errc::invalid_argument,
                "coordinate vector must have length n");
        std::uint64_t idx = 0;
        for (int k = 0; k < n_; ++k) {
            require(c[k] < q_, errc::invalid_argument, "coordinate out of range");
            idx += static_cast<std::uint64_t>(c[k]) * pow_q_[k];
        }
        return Elem{static_cast<std::uint32_t>(idx)};
    }

    // F_q scalar arithmetic (used by the subspace module).
    std::uint16_t fq_add(std::uint16_t a, std::uint16_t b) const { return fq_add_[a * q_ + b]; }
    std::uint16_t fq_neg(std::uint16_t a) const { return fq_neg_[a]; }
    std::uint16_t fq_mul(std::uint16_t a, std::uint16_t b) const {
        if (a == 0 || b == 0) return 0;
        return static_cast<std::uint16_t>(fq_exp_[fq_log_[a] + fq_log_[b]]);
    }
    std::uint16_t fq_inv(std::uint16_t a) const {
        require(a != 0, errc::division_by_zero, "inverse of zero in F_q");
        return static_cast<std::uint16_t>(fq_exp_[(q_ - 1) - fq_log_[a]]);
    }

    Elem add(Elem x, Elem y) const {
        std::uint32_t idx = 0;
        if (has_tables_) {
            const std::uint16_t* dx = &digits_[static_cast<std::size_t>(x.index) * n_];
            const std::uint16_t* dy = &digits_[static_cast<std::size_t>(y.index) * n_];
            for (int k = 0; k < n_; ++k)
                idx += fq_add_[dx[k] * q_ + dy[k]] * static_cast<std::uint32_t>(pow_q_[k]);
        } else {
            for (int k = 0; k < n_; ++k)
                idx += fq_add(digit(x, k), digit(y, k)) * static_cast<std::uint32_t>(pow_q_[k]);
        }
        return Elem{idx};
    }

    Elem neg(Elem x) const {
        std::uint32_t idx = 0;
        for (int k = 0; k < n_; ++k)
            idx += fq_neg(digit(x, k)) * static_cast<std::uint32_t>(pow_q_[k]);
        return Elem{idx};
    }

    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

    Elem mul(Elem x, Elem y) const {
        if (x.index == 0 || y.index == 0) return Elem{0};
        if (has_tables_) return Elem{exp_[log_[x.index] + log_[y.index]]};
        return mul_generic(x, y);
    }

    Elem sq(Elem x) const {
        if (has_tables_) return Elem{sq_[x.index]};
        return mul(x, x);
    }

    Elem inv(Elem x) const {
        require(x.index != 0, errc::division_by_zero, "inverse of zero");
        if (has_tables_) return Elem{exp_[(N_ - 1) - log_[x.index]]};
        return pow(x, static_cast<std::int64_t>(N_) - 2);
    }

    Elem pow(Elem x, std::int64_t e) const {
        if (x.index == 0) {
            if (e > 0) return Elem{0};
            if (e == 0) return one();
            fail(errc::division_by_zero, "0 raised to a negative power");
        }
        const std::int64_t ord = static_cast<std::int64_t>(N_) - 1;
        std::int64_t r = e % ord;
        if (r < 0) r += ord;
        if (has_tables_) {
            std::uint64_t le = (static_cast<std::uint64_t>(log_[x.index]) * r) % ord;
            return Elem{exp_[le]};
        }
        Elem acc = one(), base = x;
        std::uint64_t ue = static_cast<std::uint64_t>(r);
        while (ue) {
            if (ue & 1) acc = mul_generic(acc, base);
            base = mul_generic(base, base);
            ue >>= 1;
        }
        return acc;
    }

    // Absolute trace Tr(x) = sum of x^{p^i}, i < m*n, landing in F_p.
    std::uint32_t trace_abs(Elem x) const {
        if (has_tables_) return trace_[x.index];
        return trace_generic(x);
    }

    // Quadratic character of F_{q^n}: 0 at 0, +1 on nonzero squares, -1 otherwise.
    int eta(Elem x) const {
        require(p_ != 2, errc::even_characteristic, "eta requires odd characteristic");
        if (x.index == 0) return 0;
        if (has_tables_) return (log_[x.index] % 2 == 0) ? 1 : -1;
        Elem r = pow(x, static_cast<std::int64_t>((N_ - 1) / 2));
        return r == one() ? 1 : -1;
    }

    bool is_square(Elem x) const { return x.index == 0 || eta(x) == 1; }

    // psi_a(x) = exp(2*pi*i*Tr(ax)/p); psi_0 is the trivial character.
    std::complex<double> additive_char(Elem a, Elem x) const {
        return root_[trace_abs(mul(a, x))];
    }

    std::complex<double> root_of_unity(std::uint32_t k) const { return root_[k % p_]; }

private:
    FieldCtx() = default;

    void build(const Caps& caps) {
        q_ = 1;
        for (int i = 0; i < m_; ++i) q_ *= p_;
        require(q_ <= (1u << 13), errc::size_cap_exceeded, "q too large for scalar tables");
        N_ = 1;
        for (int i = 0; i < n_; ++i) N_ *= q_;

        detail::PrimeOps fp{p_};
        std::optional<std::uint64_t> seed_g, seed_h;
        if (seed_) {
            std::mt19937_64 rng(*seed_);
            seed_g = rng();
            seed_h = rng();
        }
        detail::Poly g = detail::find_irreducible(fp, m_, p_, seed_g);
        g16_.assign(g.begin(), g.end());

        build_fq_tables(fp, g);

        detail::FqOps fq = fq_ops();
        detail::Poly h = detail::find_irreducible(fq, n_, q_, seed_h);
        h16_.assign(h.begin(), h.end());
        h_ = h;

        pow_q_.resize(n_ + 1);
        pow_q_[0] = 1;
        for (int k = 1; k <= n_; ++k) pow_q_[k] = pow_q_[k - 1] * q_;

        find_generator(fq);

        has_tables_ = (N_ <= caps.table);
        if (has_tables_) build_big_tables(fq);

        root_.resize(p_);
        for (std::uint32_t k = 0; k < p_; ++k)
            root_[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p_);

        build_trace();
    }

    void build_fq_tables(const detail::PrimeOps& fp, const detail::Poly& g) {
        fq_add_.resize(static_cast<std::size_t>(q_) * q_);
        fq_neg_.resize(q_);
        auto decode = [&](std::uint32_t idx) {
            detail::Poly v;
            for (int i = 0; i < m_; ++i) {
                v.push_back(idx % p_);
                idx /= p_;
            }
            detail::poly_trim(v);
            return v;
        };
        auto encode = [&](const detail::Poly& v) {
            std::uint32_t idx = 0, place = 1;
            for (int i = 0; i < m_; ++i) {
                if (i < static_cast<int>(v.size())) idx += v[i] * place;
                place *= p_;
            }
            return idx;
        };
        for (std::uint32_t a = 0; a < q_; ++a) {
            detail::Poly va = decode(a);
            fq_neg_[a] = static_cast<std::uint16_t>(encode(detail::poly_sub(fp, {}, va)));
            for (std::uint32_t b = 0; b < q_; ++b)
                fq_add_[a * q_ + b] =
                    static_cast<std::uint16_t>(encode(detail::poly_add(fp, va, decode(b))));
        }

        // Multiplicative structure of F_q via a generator.
        fq_exp_.resize(2 * (q_ - 1) + 1);
        fq_log_.assign(q_, 0);
        std::uint32_t fq_gen = 1;
        if (q_ > 2) {
            auto factors = detail::prime_factors(q_ - 1);
            for (std::uint32_t c = 2; c < q_; ++c) {
                bool ok = true;
                for (auto r : factors) {
                    detail::Poly pw = detail::poly_pow_mod(fp, decode(c), (q_ - 1) / r, g);
                    if (pw == detail::Poly{1}) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    fq_gen = c;
                    break;
                }
            }
        }
        detail::Poly acc = {1};
        detail::Poly genp = decode(fq_gen);
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            std::uint32_t v = encode(acc);
            fq_exp_[i] = v;
            fq_exp_[i + (q_ - 1)] = v;
            fq_log_[v] = i;
            acc = detail::poly_mul_mod(fp, acc, genp, g);
        }
        fq_exp_[2 * (q_ - 1)] = fq_exp_[q_ - 1];
    }

    detail::FqOps fq_ops() const {
        return detail::FqOps{q_, fq_add_.data(), fq_neg_.data(), fq_log_.data(), fq_exp_.data()};
    }

    detail::Poly decode_big(std::uint32_t idx) const {
        detail::Poly v;
        for (int k = 0; k < n_; ++k) {
            v.push_back(static_cast<std::uint32_t>((idx / pow_q_[k]) % q_));
        }
        detail::poly_trim(v);
        return v;
    }

    std::uint32_t encode_big(const detail::Poly& v) const {
        std::uint64_t idx = 0;
        for (std::size_t k = 0; k < v.size(); ++k) idx += v[k] * pow_q_[k];
        return static_cast<std::uint32_t>(idx);
    }

    Elem mul_generic(Elem x, Elem y) const {
        if (x.index == 0 || y.index == 0) return Elem{0};
        detail::FqOps fq = fq_ops();
        return Elem{encode_big(
            detail::poly_mul_mod(fq, decode_big(x.index), decode_big(y.index), h_))};
    }

    void find_generator(const detail::FqOps& fq) {
        auto factors = detail::prime_factors(N_ - 1);
        for (std::uint32_t c = 1; c < N_; ++c) {
            if (c == 1 && N_ > 2) continue;
            bool ok = true;
            for (auto r : factors) {
                detail::Poly pw =
                    detail::poly_pow_mod(fq, decode_big(c), (N_ - 1) / r, h_);
                if (pw == detail::Poly{1}) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen_ = Elem{c};
                return;
            }
        }
        fail(errc::invalid_argument, "no multiplicative generator found");  // unreachable
    }

    void build_big_tables(const detail::FqOps& fq) {
        digits_.resize(static_cast<std::size_t>(N_) * n_);
        for (std::uint32_t i = 0; i < N_; ++i) {
            std::uint32_t rest = i;
            for (int k = 0; k < n_; ++k) {
                digits_[static_cast<std::size_t>(i) * n_ + k] =
                    static_cast<std::uint16_t>(rest % q_);
                rest /= q_;
            }
        }
        exp_.resize(2 * (N_ - 1) + 1);
        log_.assign(N_, 0);
        detail::Poly acc = {1};
        detail::Poly genp = decode_big(gen_.index);
        for (std::uint32_t i = 0; i < N_ - 1; ++i) {
            std::uint32_t v = encode_big(acc);
            exp_[i] = v;
            exp_[i + (N_ - 1)] = v;
            log_[v] = i;
            acc = detail::poly_mul_mod(fq, acc, genp, h_);
        }
        require(acc == detail::Poly{1}, errc::invalid_argument,
                "generator order mismatch");  // sanity: gen^(N-1) == 1
        exp_[2 * (N_ - 1)] = exp_[N_ - 1];
        sq_.resize(N_);
        sq_[0] = 0;
        for (std::uint32_t i = 1; i < N_; ++i) {
            std::uint64_t l = 2ull * log_[i] % (N_ - 1);
            sq_[i] = exp_[l];
        }
    }

    std::uint32_t trace_generic(Elem x) const {
        Elem acc = x, t = x;
        for (int i = 1; i < m_ * n_; ++i) {
            t = pow(t, static_cast<std::int64_t>(p_));
            acc = add(acc, t);
        }
        require(acc.index < p_, errc::invalid_argument, "trace not in prime subfield");
        return acc.index;
    }

    void build_trace() {
        if (!has_tables_) return;
        // trace is F_p-linear: tabulate it on the monomials c*X^k first
        std::vector<std::vector<std::uint16_t>> partial(n_,
                                                        std::vector<std::uint16_t>(q_, 0));
        for (int k = 0; k < n_; ++k) {
            for (std::uint32_t c = 0; c < q_; ++c) {
                Elem e{static_cast<std::uint32_t>(c * pow_q_[k])};
                partial[k][c] = static_cast<std::uint16_t>(trace_generic(e));
            }
        }
        trace_.resize(N_);
        for (std::uint32_t i = 0; i < N_; ++i) {
            std::uint32_t s = 0;
            for (int k = 0; k < n_; ++k)
                s += partial[k][digits_[static_cast<std::size_t>(i) * n_ + k]];
            trace_[i] = static_cast<std::uint16_t>(s % p_);
        }
    }

    std::uint32_t p_ = 0;
    int m_ = 0, n_ = 0;
    std::uint32_t q_ = 0, N_ = 0;
    std::optional<std::uint64_t> seed_;
    std::vector<std::uint16_t> g16_, h16_;
    detail::Poly h_;
    Elem gen_{};

    std::vector<std::uint16_t> fq_add_, fq_neg_;
    std::vector<std::uint32_t> fq_exp_, fq_log_;
    std::vector<std::uint64_t> pow_q_;

    bool has_tables_ = false;
    std::vector<std::uint16_t> digits_;
    std::vector<std::uint32_t> exp_, log_, sq_;
    std::vector<std::uint16_t> trace_;
    std::vector<std::complex<double>> root_;
};

inline FieldCtx make_tower(int p, int m, int n,
                           std::optional<std::uint64_t> seed = std::nullopt,
                           const Caps& caps = {}) {
    return FieldCtx::make(p, m, n, seed, caps);
}

}  // namespace qfgl
