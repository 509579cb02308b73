#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <sstream>

#include "qfgl/formgraph.hpp"

using namespace qfgl;

namespace {

// brute-force edge oracle straight from the definition
bool oracle_edge(const FieldCtx& ctx, const QuadForm& Q, const Subspace& V,
                 std::uint32_t x, std::uint32_t y) {
    if (x == y) return false;
    Elem ex = ctx.from_index(x), ey = ctx.from_index(y);
    Elem val = ctx.add(ctx.add(ctx.mul(Q.a, ctx.mul(ex, ex)),
                               ctx.mul(Q.b, ctx.mul(ex, ey))),
                       ctx.mul(Q.c, ctx.mul(ey, ey)));
    return V.contains(val);
}

}  // namespace

TEST_CASE("form classification", "[formgraph]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    CHECK(classify_form(ctx, ctx.one(), ctx.zero(), ctx.one()).tag == FormTag::plus);
    CHECK(classify_form(ctx, ctx.one(), ctx.one(), ctx.zero()).tag ==
          FormTag::not_always_undirected);

    FormClass star5 = classify_form(ctx, ctx.zero(), ctx.from_index(5), ctx.zero());
    CHECK(star5.tag == FormTag::star);
    CHECK(star5.lambda == ctx.from_index(5));
    CHECK(star5.is_scalar_multiple());

    FormClass minus = classify_form(ctx, ctx.from_index(2), ctx.zero(), ctx.one());
    CHECK(minus.tag == FormTag::minus);  // 2(X^2 - Y^2) since -1 = 2
    CHECK(minus.lambda == ctx.from_index(2));

    FormClass qb = classify_form(ctx, ctx.from_index(2), ctx.one(), ctx.from_index(2));
    CHECK(qb.tag == FormTag::qb);
    CHECK(qb.qb_coeff == ctx.mul(ctx.one(), ctx.inv(ctx.from_index(2))));

    CHECK_THROWS_MATCHES(classify_form(ctx, ctx.zero(), ctx.zero(), ctx.zero()), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::zero_form; }));
}

TEST_CASE("graph over the whole field is complete", "[formgraph]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    DiGraph G = build_graph(q_plus(ctx), whole_field(ctx));
    CHECK(G.nverts == 9);
    CHECK(G.edge_count() == 9 * 8);
    CHECK(is_undirected(G));
}

TEST_CASE("Gamma(Q_+, {0}) over F_27 is empty", "[formgraph]") {
    FieldCtx ctx = make_tower(3, 1, 3);
    Subspace V = zero_subspace(ctx);
    QuadForm Q = q_plus(ctx);
    // oracle: enumerate all 27^2 ordered pairs directly
    std::uint64_t oracle_edges = 0;
    for (std::uint32_t x = 0; x < 27; ++x)
        for (std::uint32_t y = 0; y < 27; ++y)
            if (oracle_edge(ctx, Q, V, x, y)) ++oracle_edges;
    CHECK(oracle_edges == 0);
    CHECK(build_graph(Q, V).edge_count() == 0);
}

TEST_CASE("Q_star from vertex 0 reaches everything", "[formgraph]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    DiGraph G = build_graph(q_star(ctx), zero_subspace(ctx));
    CHECK(G.out_degree(0) == ctx.size() - 1);  // Q_*(0, y) = 0 for every y
}

TEST_CASE("graph construction matches the pair oracle", "[formgraph]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 12; ++t) {
        Elem a = ctx.from_index(rng() % 9), b = ctx.from_index(rng() % 9),
             c = ctx.from_index(rng() % 9);
        if (a.index == 0 && b.index == 0 && c.index == 0) continue;
        QuadForm Q{a, b, c, {}};
        for (int j = 0; j <= 2; ++j)
            for (const auto& V : enumerate_subspaces(ctx, j)) {
                DiGraph G = build_graph(Q, V);
                for (std::uint32_t x = 0; x < 9; ++x)
                    for (std::uint32_t y = 0; y < 9; ++y)
                        REQUIRE(G.edge(x, y) == oracle_edge(ctx, Q, V, x, y));
            }
    }
}

TEST_CASE("parallel row construction equals serial", "[formgraph]") {
    FieldCtx ctx = make_tower(3, 1, 3);
    Subspace V = span(ctx, {ctx.from_index(5)});
    QuadForm Q = q_b(ctx, ctx.from_index(7));
    DiGraph serial = build_graph(Q, V, Caps{}.graph, 1);
    DiGraph parallel = build_graph(Q, V, Caps{}.graph, 4);
    CHECK(serial.bits == parallel.bits);
}

TEST_CASE("scaling identity: Gamma(lambda Q, lambda V) = Gamma(Q, V)", "[formgraph]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 8; ++t) {
        Elem a = ctx.from_index(rng() % 9), b = ctx.from_index(rng() % 9),
             c = ctx.from_index(rng() % 9);
        if (a.index == 0 && b.index == 0 && c.index == 0) continue;
        QuadForm Q{a, b, c, {}};
        for (int j = 0; j <= 2; ++j)
            for (const auto& V : enumerate_subspaces(ctx, j))
                for (std::uint32_t li = 1; li < 9; ++li) {
                    Elem lam = ctx.from_index(li);
                    QuadForm lq{ctx.mul(lam, a), ctx.mul(lam, b), ctx.mul(lam, c), {}};
                    DiGraph G1 = build_graph(Q, V);
                    DiGraph G2 = build_graph(lq, scale(V, lam));
                    REQUIRE(G1.bits == G2.bits);
                }
    }
}

TEST_CASE("degree bound 2#V for the undirected families", "[formgraph]") {
    for (auto [p, n] : {std::array{3, 2}, std::array{3, 3}}) {
        FieldCtx ctx = make_tower(p, 1, n);
        std::vector<QuadForm> forms{q_plus(ctx), q_minus(ctx), q_b(ctx, ctx.from_index(4))};
        for (const auto& Q : forms)
            for (int j = 0; j < n; ++j)
                for (const auto& V : enumerate_subspaces(ctx, j)) {
                    DiGraph G = build_graph(Q, V);
                    for (std::uint32_t x = 0; x < G.nverts; ++x)
                        REQUIRE(G.out_degree(x) <= 2 * V.count());
                }
    }
}

TEST_CASE("undirectedness", "[formgraph]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    for (int j = 0; j <= 2; ++j)
        for (const auto& V : enumerate_subspaces(ctx, j))
            CHECK(is_undirected(build_graph(q_plus(ctx), V)));

    // (1,1,0) is not always undirected: some dim-1 subspace must expose it
    QuadForm bad = make_form(ctx, ctx.one(), ctx.one(), ctx.zero());
    CHECK(bad.cls.tag == FormTag::not_always_undirected);
    bool found_directed = false;
    for (const auto& V : enumerate_subspaces(ctx, 1))
        if (!is_undirected(build_graph(bad, V))) found_directed = true;
    CHECK(found_directed);
}

TEST_CASE("count_N against brute force", "[formgraph]") {
    FieldCtx f9 = make_tower(3, 1, 2);
    CHECK(count_N(f9, f9.zero(), zero_subspace(f9)) == 1);

    // oracle for N(0, F_3): enumerate z in F_9 with z^2 in {0,1,2}
    Subspace f3 = span(f9, {f9.one()});
    std::uint64_t oracle = 0;
    for (std::uint32_t z = 0; z < 9; ++z)
        if (f9.sq(f9.from_index(z)).index < 3) ++oracle;
    CHECK(oracle == 5);
    CHECK(count_N(f9, f9.zero(), f3) == 5);

    for (auto [p, n] : {std::array{3, 2}, std::array{3, 3}}) {
        FieldCtx ctx = make_tower(p, 1, n);
        for (int j = 0; j <= n; ++j)
            for (const auto& V : enumerate_subspaces(ctx, j))
                for (std::uint32_t u = 0; u < ctx.size(); ++u) {
                    std::uint64_t brute = 0;
                    for (std::uint32_t z = 0; z < ctx.size(); ++z) {
                        Elem diff = ctx.sub(ctx.sq(ctx.from_index(z)), ctx.from_index(u));
                        if (V.contains(diff)) ++brute;
                    }
                    REQUIRE(count_N(ctx, ctx.from_index(u), V) == brute);
                }
    }

    // Lemma 2.1 instance: odd n makes N(0, V) = #V
    FieldCtx f27 = make_tower(3, 1, 3);
    for (int j = 0; j <= 3; ++j)
        for (const auto& V : enumerate_subspaces(f27, j))
            CHECK(count_N(f27, f27.zero(), V) == V.count());
}

TEST_CASE("structured cliques of Gamma(Q_+, V)", "[formgraph]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    Subspace f3 = span(ctx, {ctx.one()});
    PlusCliqueStructure s = structured_cliques_plus(ctx, f3);
    CHECK_FALSE(s.trivial);
    CHECK(s.clique.size() == 5);

    // a line with no nonzero square: t+1 and its multiples are nonsquares
    Subspace bad_line = span(ctx, {ctx.from_index(4)});
    bool has_sq = false;
    for (Elem v : bad_line.elements())
        if (v.index != 0 && ctx.eta(v) == 1) has_sq = true;
    REQUIRE_FALSE(has_sq);
    PlusCliqueStructure s2 = structured_cliques_plus(ctx, bad_line);
    CHECK(s2.trivial);
    CHECK(s2.clique == std::vector<Elem>{ctx.zero()});

    for (int j = 0; j <= 2; ++j)
        for (const auto& V : enumerate_subspaces(ctx, j)) {
            auto st = structured_cliques_plus(ctx, V);
            bool zero_in = false;
            for (Elem u : st.clique)
                if (u.index == 0) zero_in = true;
            CHECK(zero_in);
        }
}

TEST_CASE("components of Gamma(Q_-, V) by square classes", "[formgraph]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    CHECK(components_minus(ctx, whole_field(ctx)).size() == 1);

    // q=5, n=2, dim-1: #V = 5 = q^{n/2}; every class count stays <= q^n/#V
    FieldCtx f25 = make_tower(5, 1, 2);
    for (const auto& V : enumerate_subspaces(f25, 1)) {
        auto classes = components_minus(f25, V);
        CHECK(classes.size() <= f25.size() / V.count());
    }

    // oracle: union-find over the defining relation x ~ y iff x^2 - y^2 in V
    for (auto [p, n, dim] : {std::array{3, 2, 1}, std::array{3, 4, 1}}) {
        FieldCtx big = make_tower(p, 1, n);
        Subspace V = span(big, {big.one()});
        (void)dim;
        std::vector<std::uint32_t> parent(big.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::uint32_t v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (std::uint32_t x = 0; x < big.size(); ++x)
            for (std::uint32_t y = x + 1; y < big.size(); ++y) {
                Elem diff = big.sub(big.sq(big.from_index(x)), big.sq(big.from_index(y)));
                if (V.contains(diff)) parent[find(x)] = find(y);
            }
        std::vector<std::vector<std::uint32_t>> oracle_classes(big.size());
        for (std::uint32_t x = 0; x < big.size(); ++x)
            oracle_classes[find(x)].push_back(x);
        std::vector<std::vector<std::uint32_t>> expected;
        for (auto& cl : oracle_classes)
            if (!cl.empty()) expected.push_back(cl);
        std::sort(expected.begin(), expected.end());

        auto got = components_minus(big, V);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            REQUIRE(got[i].size() == expected[i].size());
            for (std::size_t k = 0; k < got[i].size(); ++k)
                CHECK(got[i][k].index == expected[i][k]);
        }
    }
}

TEST_CASE("exports", "[formgraph]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    DiGraph G = build_graph(q_plus(ctx), span(ctx, {ctx.one()}));
    REQUIRE(is_undirected(G));

    std::ostringstream dot;
    write_dot(G, dot);
    std::string text = dot.str();
    CHECK(text.rfind("graph qfgl {", 0) == 0);
    CHECK(text.find("->") == std::string::npos);  // collapsed to undirected
    CHECK(text.find("0 -- ") != std::string::npos);

    std::ostringstream csv;
    write_edge_csv(G, csv);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "x_index,y_index");
    std::size_t rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == G.edge_count());
}

TEST_CASE("graph cap", "[formgraph]") {
    FieldCtx ctx = make_tower(3, 1, 2);
    CHECK_THROWS_MATCHES(build_graph(q_plus(ctx), zero_subspace(ctx), 4), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == errc::graph_cap_exceeded;
                         }));
}

TEST_CASE("even characteristic gates", "[formgraph]") {
    FieldCtx f4 = make_tower(2, 1, 2);
    // graph construction and classification accept p = 2
    DiGraph G = build_graph(q_plus(f4), span(f4, {f4.one()}));
    CHECK(is_undirected(G));
    CHECK(classify_form(f4, f4.one(), f4.one(), f4.one()).tag == FormTag::qb);
    // square-counting rejects it
    CHECK_THROWS_MATCHES(count_N(f4, f4.zero(), span(f4, {f4.one()})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == errc::even_characteristic;
                         }));
    CHECK_THROWS_AS(structured_cliques_plus(f4, span(f4, {f4.one()})), Error);
    CHECK_THROWS_AS(components_minus(f4, span(f4, {f4.one()})), Error);
}
