#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <numbers>

#include "qfgl/gf.hpp"

using namespace qfgl;

TEST_CASE("make_tower basic parameters", "[gf]") {
    FieldCtx f9 = make_tower(3, 1, 2);
    CHECK(f9.q() == 3);
    CHECK(f9.size() == 9);

    FieldCtx f81 = make_tower(3, 2, 2);
    CHECK(f81.q() == 9);
    CHECK(f81.size() == 81);

    CHECK_THROWS_MATCHES(make_tower(4, 1, 2), Error, Catch::Matchers::Predicate<Error>(
        [](const Error& e) { return e.code() == errc::non_prime; }));
    CHECK_THROWS_MATCHES(make_tower(3, 1, 30), Error, Catch::Matchers::Predicate<Error>(
        [](const Error& e) { return e.code() == errc::size_cap_exceeded; }));
}

TEST_CASE("deterministic modulus selection", "[gf]") {
    FieldCtx a = make_tower(3, 1, 2);
    FieldCtx b = make_tower(3, 1, 2);
    CHECK(a.g_coeffs() == b.g_coeffs());
    CHECK(a.h_coeffs() == b.h_coeffs());
    CHECK(a.generator() == b.generator());

    // lowest lexicographic irreducible over F_3 of degree 2 is t^2 + 1
    CHECK(a.h_coeffs() == std::vector<std::uint16_t>{1, 0, 1});

    FieldCtx s1 = make_tower(3, 2, 2, 7);
    FieldCtx s2 = make_tower(3, 2, 2, 7);
    CHECK(s1.g_coeffs() == s2.g_coeffs());
    CHECK(s1.h_coeffs() == s2.h_coeffs());
}

TEST_CASE("arithmetic in F_9 = F_3[t]/(t^2+1)", "[gf]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    Elem t = ctx.from_index(3);  // coordinates (0,1)
    CHECK(ctx.mul(t, t) == ctx.from_index(2));  // t^2 = -1 = 2
    CHECK(ctx.inv(ctx.from_index(2)) == ctx.from_index(2));
    CHECK_THROWS_MATCHES(ctx.inv(ctx.zero()), Error, Catch::Matchers::Predicate<Error>(
        [](const Error& e) { return e.code() == errc::division_by_zero; }));

    for (std::uint32_t i = 0; i < 9; ++i) {
        Elem x = ctx.from_index(i);
        CHECK(ctx.add(x, ctx.sub(ctx.zero(), x)) == ctx.zero());
    }
}

TEST_CASE("field axioms hold exhaustively on small fields", "[gf]") {
    for (auto [p, m, n] : {std::array{3, 1, 2}, std::array{3, 2, 2}, std::array{2, 1, 3}}) {
        FieldCtx ctx = make_tower(p, m, n);
        const std::uint32_t N = ctx.size();
        for (std::uint32_t a = 0; a < N; ++a) {
            Elem x = ctx.from_index(a);
            if (a != 0) REQUIRE(ctx.mul(x, ctx.inv(x)) == ctx.one());
            for (std::uint32_t b = 0; b < N; ++b) {
                Elem y = ctx.from_index(b);
                REQUIRE(ctx.add(x, y) == ctx.add(y, x));
                REQUIRE(ctx.mul(x, y) == ctx.mul(y, x));
                for (std::uint32_t c = 0; c < N; ++c) {
                    Elem z = ctx.from_index(c);
                    REQUIRE(ctx.add(ctx.add(x, y), z) == ctx.add(x, ctx.add(y, z)));
                    REQUIRE(ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z)));
                    REQUIRE(ctx.mul(x, ctx.add(y, z)) ==
                            ctx.add(ctx.mul(x, y), ctx.mul(x, z)));
                }
            }
        }
    }
}

TEST_CASE("Frobenius x -> x^q fixes exactly the embedded F_q", "[gf]") {
    FieldCtx ctx = make_tower(3, 2, 2);
    const std::uint32_t q = ctx.q();
    std::size_t fixed = 0;
    for (std::uint32_t i = 0; i < ctx.size(); ++i) {
        Elem x = ctx.from_index(i);
        Elem fx = ctx.pow(x, q);
        if (fx == x) {
            ++fixed;
            CHECK(i < q);  // constants occupy the low indices
        }
        // F_q-linearity on a scalar sample
        Elem lam = ctx.embed_fq(static_cast<std::uint16_t>(i % q));
        CHECK(ctx.pow(ctx.mul(lam, x), q) == ctx.mul(lam, fx));
    }
    CHECK(fixed == q);
}

TEST_CASE("absolute trace", "[gf]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    CHECK(ctx.trace_abs(ctx.zero()) == 0);
    CHECK(ctx.trace_abs(ctx.one()) == 2);  // 1 + 1^3
    for (std::uint32_t i = 0; i < ctx.size(); ++i) {
        Elem x = ctx.from_index(i);
        CHECK(ctx.trace_abs(ctx.pow(x, 3)) == ctx.trace_abs(x));
        for (std::uint32_t j = 0; j < ctx.size(); ++j) {
            Elem y = ctx.from_index(j);
            CHECK(ctx.trace_abs(ctx.add(x, y)) ==
                  (ctx.trace_abs(x) + ctx.trace_abs(y)) % 3);
        }
    }
}

TEST_CASE("quadratic character", "[gf]") {
    FieldCtx f9 = make_tower(3, 1, 2);
    CHECK(f9.eta(f9.one()) == 1);
    CHECK(f9.eta(f9.zero()) == 0);
    CHECK(f9.eta(f9.neg(f9.one())) == 1);  // (-1)^4 = 1 in F_9

    for (auto [p, m, n] : {std::array{3, 1, 2}, std::array{3, 1, 3}}) {
        FieldCtx ctx = make_tower(p, m, n);
        int plus = 0, minus = 0;
        for (std::uint32_t i = 1; i < ctx.size(); ++i) {
            int e = ctx.eta(ctx.from_index(i));
            (e == 1 ? plus : minus)++;
            for (std::uint32_t j = 1; j < ctx.size(); ++j)
                CHECK(ctx.eta(ctx.mul(ctx.from_index(i), ctx.from_index(j))) ==
                      e * ctx.eta(ctx.from_index(j)));
        }
        CHECK(plus == static_cast<int>((ctx.size() - 1) / 2));
        CHECK(minus == plus);
    }

    FieldCtx f4 = make_tower(2, 1, 2);
    CHECK_THROWS_MATCHES(f4.eta(f4.one()), Error, Catch::Matchers::Predicate<Error>(
        [](const Error& e) { return e.code() == errc::even_characteristic; }));
}

TEST_CASE("additive characters", "[gf]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    const std::uint32_t N = ctx.size();
    for (std::uint32_t i = 0; i < N; ++i) {
        Elem x = ctx.from_index(i);
        CHECK(std::abs(ctx.additive_char(ctx.zero(), x) - std::complex<double>{1.0, 0.0}) <
              1e-12);
        // the canonical character matches its defining formula
        auto expected = std::polar(1.0, 2.0 * std::numbers::pi * ctx.trace_abs(x) / 3.0);
        CHECK(std::abs(ctx.additive_char(ctx.one(), x) - expected) < 1e-12);
    }
    for (std::uint32_t a = 0; a < N; ++a)
        for (std::uint32_t i = 0; i < N; ++i)
            for (std::uint32_t j = 0; j < N; ++j) {
                Elem ea{a}, x{i}, y{j};
                auto lhs = ctx.additive_char(ea, x) * ctx.additive_char(ea, y);
                auto rhs = ctx.additive_char(ea, ctx.add(x, y));
                CHECK(std::abs(lhs - rhs) < 1e-9);
            }
    for (auto [p, m, n] : {std::array{3, 1, 2}, std::array{3, 2, 2}}) {
        FieldCtx big = make_tower(p, m, n);
        for (std::uint32_t a = 1; a < big.size(); ++a) {
            std::complex<double> total{0.0, 0.0};
            for (std::uint32_t i = 0; i < big.size(); ++i)
                total += big.additive_char(big.from_index(a), big.from_index(i));
            CHECK(std::abs(total) < 1e-6);
        }
    }
}

TEST_CASE("generator has full multiplicative order", "[gf]") {
    FieldCtx ctx = make_tower(3, 2, 2);
    Elem g = ctx.generator();
    CHECK(ctx.pow(g, 80) == ctx.one());
    CHECK(ctx.pow(g, 40) != ctx.one());
    CHECK(ctx.pow(g, 16) != ctx.one());
}

TEST_CASE("pow edge cases", "[gf]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    CHECK(ctx.pow(ctx.zero(), 0) == ctx.one());
    CHECK(ctx.pow(ctx.zero(), 5) == ctx.zero());
    CHECK_THROWS_AS(ctx.pow(ctx.zero(), -1), Error);
    for (std::uint32_t i = 1; i < ctx.size(); ++i)
        CHECK(ctx.pow(ctx.from_index(i), -1) == ctx.inv(ctx.from_index(i)));
}

TEST_CASE("table-free arithmetic agrees with the table path", "[gf]") {
    Caps small;
    small.table = 1;  // force the generic code path
    FieldCtx slow = make_tower(3, 1, 2, std::nullopt, small);
    FieldCtx fast = make_tower(3, 1, 2);
    REQUIRE(slow.h_coeffs() == fast.h_coeffs());
    CHECK_FALSE(slow.has_tables());
    REQUIRE(fast.has_tables());
    for (std::uint32_t i = 0; i < 9; ++i) {
        Elem x{i};
        CHECK(slow.trace_abs(x) == fast.trace_abs(x));
        if (i != 0) {
            CHECK(slow.inv(x) == fast.inv(x));
            CHECK(slow.eta(x) == fast.eta(x));
        }
        for (std::uint32_t j = 0; j < 9; ++j) {
            Elem y{j};
            CHECK(slow.add(x, y) == fast.add(x, y));
            CHECK(slow.mul(x, y) == fast.mul(x, y));
        }
        CHECK(slow.pow(x, 7) == fast.pow(x, 7));
    }
}
