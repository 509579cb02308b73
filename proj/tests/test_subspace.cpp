#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "qfgl/charsum.hpp"
#include "qfgl/subspace.hpp"

using namespace qfgl;

TEST_CASE("span and membership", "[subspace]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    CHECK(span(ctx, {}).dim() == 0);

    Elem v = ctx.from_index(4);
    Subspace line = span(ctx, {v, ctx.mul(ctx.embed_fq(2), v)});
    CHECK(line.dim() == 1);
    CHECK(line.contains(v));
    CHECK(line.contains(ctx.zero()));
    CHECK_FALSE(zero_subspace(ctx).contains(v));

    std::vector<Elem> basis;
    for (int k = 0; k < ctx.n(); ++k) {
        std::vector<std::uint16_t> c(ctx.n(), 0);
        c[k] = 1;
        basis.push_back(ctx.from_coords(c));
    }
    CHECK(span(ctx, basis).dim() == ctx.n());
}

TEST_CASE("element enumeration", "[subspace]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    CHECK(zero_subspace(ctx).elements() == std::vector<Elem>{ctx.zero()});

    Subspace whole = whole_field(ctx);
    auto all = whole.elements();
    REQUIRE(all.size() == 9);
    std::set<std::uint32_t> seen;
    for (Elem e : all) seen.insert(e.index);
    CHECK(seen.size() == 9);

    for (int j = 0; j <= 2; ++j)
        for (const auto& V : enumerate_subspaces(ctx, j))
            CHECK(V.elements().size() == V.count());
}

TEST_CASE("RREF canonicity: re-spanning reproduces the basis", "[subspace]") {
    for (auto [p, m, n] : {std::array{3, 1, 2}, std::array{3, 1, 3}}) {
        FieldCtx ctx = make_tower(p, m, n);
        for (int j = 0; j <= ctx.n(); ++j)
            for (const auto& V : enumerate_subspaces(ctx, j)) {
                Subspace respan = span(ctx, V.elements());
                CHECK(respan.rows() == V.rows());
            }
    }
}

TEST_CASE("subspace counts match Gaussian binomials", "[subspace]") {
    // [n j]_q via the recurrence, checked against enumeration
    for (std::uint32_t q : {3u, 5u}) {
        for (int n = 2; n <= 4; ++n) {
            FieldCtx ctx = make_tower(q, 1, n);
            for (int j = 0; j <= n; ++j) {
                std::uint64_t expected = subspace_count(q, n, j, 1u << 20);
                std::size_t seen = 0;
                for_each_subspace(ctx, j, [&](const Subspace&) { ++seen; });
                CHECK(seen == expected);
            }
        }
    }
    CHECK(subspace_count(3, 2, 1, 1000) == 4);
    CHECK(subspace_count(3, 4, 3, 1000) == 40);
    CHECK(subspace_count(3, 4, 2, 1000) == 130);
    CHECK(subspace_count(5, 4, 2, 10000) == 806);
}

TEST_CASE("enumeration order is deterministic", "[subspace]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    auto lines = enumerate_subspaces(ctx, 1);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0].rows() == std::vector<std::vector<std::uint16_t>>{{1, 0}});
    CHECK(lines[1].rows() == std::vector<std::vector<std::uint16_t>>{{1, 1}});
    CHECK(lines[2].rows() == std::vector<std::vector<std::uint16_t>>{{1, 2}});
    CHECK(lines[3].rows() == std::vector<std::vector<std::uint16_t>>{{0, 1}});
}

TEST_CASE("trace-dual dimensions and closure", "[subspace]") {
    for (auto [p, m, n] : {std::array{3, 1, 2}, std::array{3, 1, 3}, std::array{3, 1, 4},
                           std::array{3, 2, 2}}) {
        FieldCtx ctx = make_tower(p, m, n);
        for (int j = 0; j <= ctx.n(); ++j)
            for (const auto& V : enumerate_subspaces(ctx, j)) {
                Subspace vs = dual(V);
                REQUIRE(vs.dim() == ctx.n() - j);
                // annihilator property and F_q-closure
                for (Elem u : vs.elements())
                    for (int i = 0; i < V.dim(); ++i)
                        CHECK(ctx.trace_abs(ctx.mul(u, V.basis_elem(i))) == 0);
                for (Elem u : vs.elements())
                    for (std::uint16_t lam = 0; lam < ctx.q(); ++lam)
                        CHECK(vs.contains(ctx.mul(ctx.embed_fq(lam), u)));
            }
    }
}

TEST_CASE("dual is an involution on the lines of F_9", "[subspace]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    CHECK(dual(zero_subspace(ctx)) == whole_field(ctx));
    CHECK(dual(whole_field(ctx)) == zero_subspace(ctx));
    for (const auto& V : enumerate_subspaces(ctx, 1)) {
        Subspace dd = dual(dual(V));
        CHECK(dd == V);
        // oracle: the indicator identity picks out exactly V's members
        Subspace vs = dual(V);
        for (std::uint32_t i = 0; i < ctx.size(); ++i) {
            double s = indicator_sum(vs, ctx.from_index(i));
            double expected = V.contains(ctx.from_index(i)) ? 3.0 : 0.0;
            CHECK(std::abs(s - expected) < 1e-6);
        }
    }
}

TEST_CASE("coset representatives", "[subspace]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    CHECK(coset_reps(whole_field(ctx)).reps == std::vector<Elem>{ctx.zero()});
    CHECK(coset_reps(zero_subspace(ctx)).reps.size() == 9);

    for (int j = 0; j <= 2; ++j)
        for (const auto& V : enumerate_subspaces(ctx, j)) {
            CosetList cl = coset_reps(V);
            CHECK(cl.reps.size() * V.count() == ctx.size());
            // each element belongs to exactly one coset
            std::vector<int> hits(ctx.size(), 0);
            for (Elem r : cl.reps)
                for (Elem v : V.elements()) hits[ctx.add(r, v).index]++;
            for (int h : hits) CHECK(h == 1);
        }
}

TEST_CASE("Frobenius-fixed subfields", "[subspace]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    CHECK(frobenius_fixed(ctx, 2) == whole_field(ctx));
    Subspace f3 = frobenius_fixed(ctx, 1);
    CHECK(f3.dim() == 1);
    auto elems = f3.elements();
    REQUIRE(elems.size() == 3);
    for (Elem e : elems) CHECK(e.index < 3);  // the embedded prime field

    FieldCtx big = make_tower(3, 1, 4);
    for (int d : {1, 2, 4}) {
        Subspace sub = frobenius_fixed(big, d);
        CHECK(sub.count() == static_cast<std::uint64_t>(std::pow(3, d)));
        for (Elem x : sub.elements()) {
            std::int64_t qd = 1;
            for (int i = 0; i < d; ++i) qd *= big.q();
            CHECK(big.pow(x, qd) == x);
            for (Elem y : sub.elements()) CHECK(sub.contains(big.mul(x, y)));
        }
    }
    CHECK_THROWS_MATCHES(frobenius_fixed(big, 3), Error, Catch::Matchers::Predicate<Error>(
        [](const Error& e) { return e.code() == errc::not_a_divisor; }));
}

TEST_CASE("dim(V) + dim(dual V) = n exhaustively at q=3, n <= 4", "[subspace]") {
    for (int n = 2; n <= 4; ++n) {
        FieldCtx ctx = make_tower(3, 1, n);
        for (int j = 0; j <= n; ++j)
            for (const auto& V : enumerate_subspaces(ctx, j))
                CHECK(V.dim() + dual(V).dim() == n);
    }
}

TEST_CASE("scaling a subspace", "[subspace]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    Subspace line = span(ctx, {ctx.from_index(4)});
    CHECK(scale(line, ctx.zero()).dim() == 0);
    Elem lam = ctx.from_index(5);
    Subspace scaled = scale(line, lam);
    CHECK(scaled.dim() == 1);
    for (Elem e : line.elements()) CHECK(scaled.contains(ctx.mul(lam, e)));
}

TEST_CASE("enumeration cap", "[subspace]") {
    FieldCtx ctx = make_tower(3, 1, 4);
    CHECK_THROWS_MATCHES(enumerate_subspaces(ctx, 2, 100), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == errc::enumeration_cap_exceeded;
                         }));
}
