// F_q-subspaces of F_{q^n}: span, membership, enumeration, trace-dual,
// cosets and subfields. The RREF basis is the canonical form, so equal
// subspaces compare equal structurally.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qfgl/bits.hpp"
#include "qfgl/caps.hpp"
#include "qfgl/errors.hpp"
#include "qfgl/gf.hpp"

namespace qfgl {

namespace detail {

// In-place reduced row echelon form over F_q; returns pivot columns.
inline std::vector<int> rref(const FieldCtx& ctx,
                             std::vector<std::vector<std::uint16_t>>& rows) {
    const int n = ctx.n();
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int col = 0; col < n && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        std::uint16_t lead_inv = ctx.fq_inv(rows[r][col]);
        for (int j = 0; j < n; ++j) rows[r][j] = ctx.fq_mul(rows[r][j], lead_inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            std::uint16_t f = rows[i][col];
            for (int j = 0; j < n; ++j)
                rows[i][j] = ctx.fq_add(rows[i][j], ctx.fq_neg(ctx.fq_mul(f, rows[r][j])));
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Kernel basis of an r x c matrix over F_p (entries reduced mod p).
inline std::vector<std::vector<std::uint16_t>> kernel_mod_p(
    std::uint32_t p, std::vector<std::vector<std::uint16_t>> mat, int ncols) {
    PrimeOps fp{p};
    std::vector<int> pivot_of_col(ncols, -1);
    std::size_t r = 0;
    for (int col = 0; col < ncols && r < mat.size(); ++col) {
        std::size_t sel = r;
        while (sel < mat.size() && mat[sel][col] == 0) ++sel;
        if (sel == mat.size()) continue;
        std::swap(mat[r], mat[sel]);
        std::uint32_t lead_inv = fp.inv(mat[r][col]);
        for (int j = 0; j < ncols; ++j)
            mat[r][j] = static_cast<std::uint16_t>(fp.mul(mat[r][j], lead_inv));
        for (std::size_t i = 0; i < mat.size(); ++i) {
            if (i == r || mat[i][col] == 0) continue;
            std::uint32_t f = mat[i][col];
            for (int j = 0; j < ncols; ++j)
                mat[i][j] = static_cast<std::uint16_t>(
                    fp.add(mat[i][j], fp.neg(fp.mul(f, mat[r][j]))));
        }
        pivot_of_col[col] = static_cast<int>(r);
        ++r;
    }
    std::vector<std::vector<std::uint16_t>> kernel;
    for (int col = 0; col < ncols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<std::uint16_t> v(ncols, 0);
        v[col] = 1;
        for (int c2 = 0; c2 < ncols; ++c2) {
            int pr = pivot_of_col[c2];
            if (pr >= 0) v[c2] = static_cast<std::uint16_t>(fp.neg(mat[pr][col]));
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace detail

class Subspace {
public:
    Subspace(const FieldCtx& ctx, std::vector<std::vector<std::uint16_t>> rows)
        : ctx_(&ctx) {
        for (const auto& r : rows) {
            require(static_cast<int>(r.size()) == ctx.n(), errc::invalid_argument,
                    "basis row must have length n");
            for (auto v : r)
                require(v < ctx.q(), errc::invalid_argument, "basis entry out of F_q range");
        }
        pivots_ = detail::rref(ctx, rows);
        rows_ = std::move(rows);
    }

    const FieldCtx& ctx() const { return *ctx_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool is_proper() const { return dim() < ctx_->n(); }
    bool is_zero() const { return dim() == 0; }

    std::uint64_t count() const {
        std::uint64_t c = 1;
        for (int i = 0; i < dim(); ++i) c *= ctx_->q();
        return c;
    }

    const std::vector<std::vector<std::uint16_t>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    Elem basis_elem(int i) const { return ctx_->from_coords(rows_[i]); }

    bool contains(Elem x) const {
        auto c = ctx_->coords(x);
        for (int i = 0; i < dim(); ++i) {
            std::uint16_t f = c[pivots_[i]];
            if (f == 0) continue;
            for (int j = 0; j < ctx_->n(); ++j)
                c[j] = ctx_->fq_add(c[j], ctx_->fq_neg(ctx_->fq_mul(f, rows_[i][j])));
        }
        return std::all_of(c.begin(), c.end(), [](std::uint16_t v) { return v == 0; });
    }

    // All q^dim elements, ordered lexicographically by the coefficient
    // vector over the RREF basis (first row most significant).
    std::vector<Elem> elements(std::uint64_t cap = Caps{}.enumeration) const {
        require(count() <= cap, errc::iteration_cap_exceeded,
                "subspace has " + std::to_string(count()) + " elements, cap " +
                    std::to_string(cap));
        const int j = dim(), n = ctx_->n();
        const std::uint32_t q = ctx_->q();
        std::vector<Elem> out;
        out.reserve(count());
        std::vector<std::uint16_t> coord(n, 0);
        std::vector<std::uint32_t> coef(j, 0);
        for (std::uint64_t t = 0;; ++t) {
            out.push_back(ctx_->from_coords(coord));
            if (t + 1 == count()) break;
            // increment the coefficient counter, last row fastest
            int i = j - 1;
            while (true) {
                coef[i] = (coef[i] + 1) % q;
                // update coord by +row_i (adding 1*row_i) or, on wrap, fold below
                if (coef[i] != 0) break;
                --i;
            }
            std::fill(coord.begin(), coord.end(), 0);
            for (int k = 0; k < j; ++k) {
                if (coef[k] == 0) continue;
                for (int col = 0; col < n; ++col)
                    coord[col] = ctx_->fq_add(
                        coord[col], ctx_->fq_mul(static_cast<std::uint16_t>(coef[k]),
                                                 rows_[k][col]));
            }
        }
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ctx_ == b.ctx_ && a.rows_ == b.rows_;
    }

private:
    const FieldCtx* ctx_;
    std::vector<std::vector<std::uint16_t>> rows_;  // dim x n, RREF
    std::vector<int> pivots_;
};

inline Subspace span(const FieldCtx& ctx, const std::vector<Elem>& gens) {
    std::vector<std::vector<std::uint16_t>> rows;
    rows.reserve(gens.size());
    for (Elem g : gens) rows.push_back(ctx.coords(g));
    return Subspace(ctx, std::move(rows));
}

inline Subspace zero_subspace(const FieldCtx& ctx) { return Subspace(ctx, {}); }

inline Subspace whole_field(const FieldCtx& ctx) {
    std::vector<std::vector<std::uint16_t>> rows(ctx.n(),
                                                 std::vector<std::uint16_t>(ctx.n(), 0));
    for (int i = 0; i < ctx.n(); ++i) rows[i][i] = 1;
    return Subspace(ctx, std::move(rows));
}

// lambda * V (a subspace again; {0} when lambda = 0).
inline Subspace scale(const Subspace& V, Elem lambda) {
    std::vector<Elem> gens;
    for (int i = 0; i < V.dim(); ++i) gens.push_back(V.ctx().mul(lambda, V.basis_elem(i)));
    return span(V.ctx(), gens);
}

// Membership bitmap over all q^n indices.
inline DynBitset membership_bitmap(const Subspace& V,
                                   std::uint64_t cap = Caps{}.enumeration) {
    DynBitset bs(V.ctx().size());
    for (Elem e : V.elements(cap)) bs.set(e.index);
    return bs;
}

// Trace-dual V_* = {u : Tr(uv) = 0 for all v in V}. The annihilator of an
// F_q-subspace under the absolute trace pairing is itself F_q-closed, and
// dim(V_*) = n - dim(V).
inline Subspace dual(const Subspace& V) {
    const FieldCtx& ctx = V.ctx();
    const int m = ctx.m(), n = ctx.n();
    const int unknowns = m * n;
    // F_p coordinates of an element are the base-p digits of its index.
    std::vector<Elem> fp_basis(unknowns);
    {
        std::uint64_t place = 1;
        for (int t = 0; t < unknowns; ++t) {
            fp_basis[t] = ctx.from_index(place);
            place *= ctx.p();
        }
    }
    std::vector<std::vector<std::uint16_t>> constraints;
    for (int i = 0; i < V.dim(); ++i) {
        Elem v = V.basis_elem(i);
        std::uint32_t scalar_index = 1;  // runs over the F_p-basis Y^l of F_q
        for (int l = 0; l < m; ++l) {
            Elem w = ctx.mul(ctx.embed_fq(scalar_index), v);
            std::vector<std::uint16_t> row(unknowns);
            for (int t = 0; t < unknowns; ++t)
                row[t] = static_cast<std::uint16_t>(ctx.trace_abs(ctx.mul(fp_basis[t], w)));
            constraints.push_back(std::move(row));
            scalar_index *= ctx.p();
        }
    }
    auto kernel = detail::kernel_mod_p(ctx.p(), std::move(constraints), unknowns);
    std::vector<Elem> gens;
    for (const auto& vec : kernel) {
        std::uint64_t idx = 0, place = 1;
        for (int t = 0; t < unknowns; ++t) {
            idx += static_cast<std::uint64_t>(vec[t]) * place;
            place *= ctx.p();
        }
        gens.push_back(ctx.from_index(idx));
    }
    Subspace result = span(ctx, gens);
    require(result.dim() == n - V.dim(), errc::invalid_argument,
            "dual dimension mismatch");  // would indicate a pairing bug
    return result;
}

// Number of j-dimensional subspaces (Gaussian binomial); values above cap
// saturate at cap + 1.
inline std::uint64_t subspace_count(std::uint32_t q, int n, int j, std::uint64_t cap) {
    if (j < 0 || j > n) return 0;
    std::vector<std::vector<std::uint64_t>> gb(n + 1, std::vector<std::uint64_t>(j + 1, 0));
    const std::uint64_t sat = cap + 1;
    for (int i = 0; i <= n; ++i) {
        for (int k = 0; k <= std::min(i, j); ++k) {
            if (k == 0 || k == i) {
                gb[i][k] = 1;
                continue;
            }
            std::uint64_t qk = 1;
            for (int t = 0; t < k; ++t) {
                qk = (qk > sat / q) ? sat : qk * q;
            }
            std::uint64_t a = gb[i - 1][k - 1];
            std::uint64_t b = gb[i - 1][k];
            std::uint64_t prod = (b != 0 && qk > sat / b) ? sat : qk * b;
            gb[i][k] = std::min(sat, a + std::min(sat, prod));
        }
    }
    return gb[n][j];
}

// Every j-dimensional subspace exactly once, by RREF shape: pivot column
// sets in lexicographic order, then free entries in lexicographic order.
template <class Fn>
void for_each_subspace(const FieldCtx& ctx, int j, Fn&& fn,
                       std::uint64_t cap = Caps{}.enumeration) {
    const int n = ctx.n();
    require(j >= 0 && j <= n, errc::invalid_argument, "subspace dimension out of range");
    require(subspace_count(ctx.q(), n, j, cap) <= cap, errc::enumeration_cap_exceeded,
            "subspace enumeration exceeds cap " + std::to_string(cap));
    const std::uint32_t q = ctx.q();
    std::vector<int> pivots(j);
    for (int i = 0; i < j; ++i) pivots[i] = i;
    for (;;) {
        std::vector<std::pair<int, int>> free_pos;  // (row, col), row-major
        {
            std::vector<bool> is_pivot(n, false);
            for (int i = 0; i < j; ++i) is_pivot[pivots[i]] = true;
            for (int i = 0; i < j; ++i)
                for (int c = pivots[i] + 1; c < n; ++c)
                    if (!is_pivot[c]) free_pos.emplace_back(i, c);
        }
        std::vector<std::uint32_t> assign(free_pos.size(), 0);
        for (;;) {
            std::vector<std::vector<std::uint16_t>> rows(j,
                                                         std::vector<std::uint16_t>(n, 0));
            for (int i = 0; i < j; ++i) rows[i][pivots[i]] = 1;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                rows[free_pos[t].first][free_pos[t].second] =
                    static_cast<std::uint16_t>(assign[t]);
            fn(Subspace(ctx, std::move(rows)));
            // odometer over free entries, last position fastest
            bool wrapped = true;
            for (std::size_t t = free_pos.size(); t-- > 0;) {
                assign[t] = (assign[t] + 1) % q;
                if (assign[t] != 0) {
                    wrapped = false;
                    break;
                }
            }
            if (wrapped) break;
        }
        // next pivot combination in lexicographic order
        int i = j - 1;
        while (i >= 0 && pivots[i] == n - j + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int k = i + 1; k < j; ++k) pivots[k] = pivots[k - 1] + 1;
    }
}

inline std::vector<Subspace> enumerate_subspaces(const FieldCtx& ctx, int j,
                                                 std::uint64_t cap = Caps{}.enumeration) {
    std::vector<Subspace> out;
    for_each_subspace(ctx, j, [&](Subspace s) { out.push_back(std::move(s)); }, cap);
    return out;
}

// All subspaces of every dimension in [lo, hi].
inline std::vector<Subspace> all_subspaces(const FieldCtx& ctx, int lo, int hi,
                                           std::uint64_t cap = Caps{}.enumeration) {
    std::vector<Subspace> out;
    for (int j = lo; j <= hi; ++j)
        for_each_subspace(ctx, j, [&](Subspace s) { out.push_back(std::move(s)); }, cap);
    return out;
}

struct CosetList {
    std::vector<Elem> reps;  // minimal index per coset, ascending
};

inline CosetList coset_reps(const Subspace& V, std::uint64_t cap = Caps{}.enumeration) {
    const FieldCtx& ctx = V.ctx();
    std::uint64_t ncosets = 1;
    for (int i = 0; i < ctx.n() - V.dim(); ++i) ncosets *= ctx.q();
    require(ncosets <= cap, errc::enumeration_cap_exceeded,
            "coset enumeration exceeds cap");
    auto elems = V.elements(std::max<std::uint64_t>(cap, V.count()));
    DynBitset seen(ctx.size());
    CosetList out;
    out.reps.reserve(ncosets);
    for (std::uint32_t i = 0; i < ctx.size(); ++i) {
        if (seen.test(i)) continue;
        Elem rep = ctx.from_index(i);
        out.reps.push_back(rep);
        for (Elem v : elems) seen.set(ctx.add(rep, v).index);
    }
    return out;
}

// coset ordinal (index into reps) for every element of the field.
inline std::vector<std::uint32_t> coset_id_table(const Subspace& V, const CosetList& cl) {
    const FieldCtx& ctx = V.ctx();
    std::vector<std::uint32_t> id(ctx.size(), 0);
    auto elems = V.elements(ctx.size());
    for (std::uint32_t k = 0; k < cl.reps.size(); ++k)
        for (Elem v : elems) id[ctx.add(cl.reps[k], v).index] = k;
    return id;
}

// The subfield F_{q^d} = {x : x^{q^d} = x}, as a d-dimensional F_q-subspace.
inline Subspace frobenius_fixed(const FieldCtx& ctx, int d) {
    require(d >= 1 && ctx.n() % d == 0, errc::not_a_divisor,
            "d = " + std::to_string(d) + " does not divide n = " + std::to_string(ctx.n()));
    const int unknowns = ctx.m() * ctx.n();
    std::uint64_t qd = 1;
    for (int i = 0; i < d; ++i) qd *= ctx.q();
    // columns = F_p coordinates of e^{q^d} - e on the monomial basis
    std::vector<std::vector<std::uint16_t>> mat(unknowns,
                                                std::vector<std::uint16_t>(unknowns, 0));
    std::uint64_t place = 1;
    for (int t = 0; t < unknowns; ++t) {
        Elem e = ctx.from_index(place);
        Elem diff = ctx.sub(ctx.pow(e, static_cast<std::int64_t>(qd)), e);
        std::uint64_t rest = diff.index;
        for (int r = 0; r < unknowns; ++r) {
            mat[r][t] = static_cast<std::uint16_t>(rest % ctx.p());
            rest /= ctx.p();
        }
        place *= ctx.p();
    }
    auto kernel = detail::kernel_mod_p(ctx.p(), std::move(mat), unknowns);
    std::vector<Elem> gens;
    for (const auto& vec : kernel) {
        std::uint64_t idx = 0, pl = 1;
        for (int t = 0; t < unknowns; ++t) {
            idx += static_cast<std::uint64_t>(vec[t]) * pl;
            pl *= ctx.p();
        }
        gens.push_back(ctx.from_index(idx));
    }
    Subspace result = span(ctx, gens);
    require(result.dim() == d, errc::invalid_argument, "fixed-field dimension mismatch");
    return result;
}

}  // namespace qfgl
