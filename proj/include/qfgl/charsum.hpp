// Character-sum evaluation and bound checks: the dual-subspace indicator
// identity, quadratic-character sums over affine subspaces, the
// Gyarmati-Sarkozy double sum and the Weil bound. Sums accumulate integer
// counts per trace residue, so rounding enters only at the final mix with
// the p-th roots of unity.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qfgl/errors.hpp"
#include "qfgl/formgraph.hpp"
#include "qfgl/gf.hpp"
#include "qfgl/subspace.hpp"

namespace qfgl {

inline constexpr double kSumSlack = 1e-6;

struct SumCheck {
    std::complex<double> value;
    double bound = 0.0;
    bool ok = false;  // |value| <= bound + slack
    std::string context;
};

inline SumCheck make_sum_check(std::complex<double> value, double bound, std::string context) {
    SumCheck s;
    s.value = value;
    s.bound = bound;
    s.ok = std::abs(value) <= bound + kSumSlack;
    s.context = std::move(context);
    return s;
}

namespace detail {

// sum of zeta_p^{k} over accumulated counts.
inline std::complex<double> mix_roots(const FieldCtx& ctx,
                                      const std::vector<std::int64_t>& counts) {
    std::complex<double> total{0.0, 0.0};
    for (std::uint32_t k = 0; k < ctx.p(); ++k)
        total += static_cast<double>(counts[k]) * ctx.root_of_unity(k);
    return total;
}

}  // namespace detail

// sum over u in V_* of psi_u(x); equals q^{n-j} on V and 0 off V when V_*
// is the trace-dual of a subspace V of size q^j. The sum is exactly real.
inline double indicator_sum(const Subspace& V_star, Elem x) {
    const FieldCtx& ctx = V_star.ctx();
    std::vector<std::int64_t> counts(ctx.p(), 0);
    for (Elem u : V_star.elements(ctx.size()))
        counts[ctx.trace_abs(ctx.mul(u, x))] += 1;
    return detail::mix_roots(ctx, counts).real();
}

struct AffineEtaSum {
    SumCheck check;
    std::int64_t sum = 0;  // the integer value of sum_{v in V} eta(y+v)
    bool contains_nonzero_square = false;
    bool pigeonhole_applies = false;  // #V > q^{n/2}, forcing a nonzero square
};

// sum over v in V of eta(y+v), bounded by q^{n/2}; also reports whether the
// affine translate y+V contains a nonzero square.
inline AffineEtaSum affine_eta_sum(const Subspace& V, Elem y) {
    const FieldCtx& ctx = V.ctx();
    require(ctx.p() != 2, errc::even_characteristic,
            "quadratic character sums need odd characteristic");
    AffineEtaSum out;
    for (Elem v : V.elements(ctx.size())) {
        Elem t = ctx.add(y, v);
        int e = ctx.eta(t);
        out.sum += e;
        if (e == 1) out.contains_nonzero_square = true;
    }
    double bound = std::sqrt(static_cast<double>(ctx.size()));
    out.check = make_sum_check(std::complex<double>(static_cast<double>(out.sum), 0.0),
                               bound, "affine_eta_sum");
    out.pigeonhole_applies = V.count() * V.count() > ctx.size();
    return out;
}

// sum over (a,b') in A x B of psi_w(Q(a,b')) for Q = X^2 + bXY + Y^2 with
// b != 0, bounded by sqrt(q^n * #A * #B).
inline SumCheck gs_double_sum(const FieldCtx& ctx, const std::vector<Elem>& A,
                              const std::vector<Elem>& B, const QuadForm& Q, Elem w) {
    require(ctx.p() != 2, errc::even_characteristic,
            "double character sum needs odd characteristic");
    require(Q.a == ctx.one() && Q.c == ctx.one() && Q.b.index != 0, errc::wrong_form_class,
            "Q must be the normalized X^2+bXY+Y^2 with b != 0");
    require(w.index != 0, errc::trivial_character, "psi_0 makes the bound trivial");
    require(!A.empty() && !B.empty(), errc::invalid_argument, "A and B must be nonempty");
    std::vector<std::int64_t> counts(ctx.p(), 0);
    for (Elem a : A) {
        Elem asq = ctx.sq(a);
        Elem ba = ctx.mul(Q.b, a);
        for (Elem b2 : B) {
            Elem val = ctx.add(ctx.add(asq, ctx.mul(ba, b2)), ctx.sq(b2));
            counts[ctx.trace_abs(ctx.mul(w, val))] += 1;
        }
    }
    double bound = std::sqrt(static_cast<double>(ctx.size()) * static_cast<double>(A.size()) *
                             static_cast<double>(B.size()));
    return make_sum_check(detail::mix_roots(ctx, counts), bound, "gs_double_sum");
}

// Weil: |sum over x of psi_a(f(x))| <= (d-1) * sqrt(q^n) for f of degree d
// coprime to the characteristic and psi_a nontrivial.
inline SumCheck weil_sum(const FieldCtx& ctx, std::vector<Elem> coeffs, Elem a) {
    while (!coeffs.empty() && coeffs.back().index == 0) coeffs.pop_back();
    require(coeffs.size() >= 2, errc::constant_polynomial,
            "polynomial must have degree >= 1");
    const int d = static_cast<int>(coeffs.size()) - 1;
    require(std::gcd(static_cast<std::uint32_t>(d), ctx.p()) == 1, errc::degree_divides_char,
            "degree " + std::to_string(d) + " shares a factor with p");
    require(a.index != 0, errc::trivial_character, "psi_0 makes the bound trivial");
    std::vector<std::int64_t> counts(ctx.p(), 0);
    for (std::uint32_t xi = 0; xi < ctx.size(); ++xi) {
        Elem x = ctx.from_index(xi);
        Elem acc = coeffs.back();
        for (int k = d - 1; k >= 0; --k) acc = ctx.add(ctx.mul(acc, x), coeffs[k]);
        counts[ctx.trace_abs(ctx.mul(a, acc))] += 1;
    }
    double bound = (d - 1) * std::sqrt(static_cast<double>(ctx.size()));
    return make_sum_check(detail::mix_roots(ctx, counts), bound,
                          "weil_sum deg=" + std::to_string(d));
}

}  // namespace qfgl
