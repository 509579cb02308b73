// Quadratic forms aX^2 + bXY + cY^2, their undirectedness classification,
// the directed graph on F_{q^n} with edges x->y iff x != y and Q(x,y) in V,
// and the structured cliques/components of Gamma(Q_+, V) and Gamma(Q_-, V).
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "qfgl/bits.hpp"
#include "qfgl/caps.hpp"
#include "qfgl/errors.hpp"
#include "qfgl/gf.hpp"
#include "qfgl/subspace.hpp"

namespace qfgl {

enum class FormTag { star, plus, minus, qb, not_always_undirected };

inline const char* form_tag_name(FormTag t) {
    switch (t) {
        case FormTag::star: return "star";
        case FormTag::plus: return "plus";
        case FormTag::minus: return "minus";
        case FormTag::qb: return "qb";
        case FormTag::not_always_undirected: return "not_always_undirected";
    }
    return "?";
}

// Classification of a form per the undirectedness criterion: a graph is
// undirected for every subspace V iff a = c, or b = 0 and a = -c != 0.
// Such forms are scalar multiples lambda * T of one of the normalized types
// T in {XY, X^2+Y^2, X^2-Y^2, X^2+bXY+Y^2 (b != 0)}.
struct FormClass {
    FormTag tag = FormTag::not_always_undirected;
    Elem lambda{};    // scalar with (a,b,c) = lambda * normalized form
    Elem qb_coeff{};  // the b of the normalized X^2+bXY+Y^2 (tag qb only)

    bool always_undirected() const { return tag != FormTag::not_always_undirected; }
    bool is_scalar_multiple() const { return lambda.index > 1; }
};

inline FormClass classify_form(const FieldCtx& ctx, Elem a, Elem b, Elem c) {
    require(a.index != 0 || b.index != 0 || c.index != 0, errc::zero_form,
            "quadratic form must be nonzero");
    FormClass cls;
    if (a == c) {
        if (a.index == 0) {  // bXY
            cls.tag = FormTag::star;
            cls.lambda = b;
        } else if (b.index == 0) {  // a(X^2 + Y^2)
            cls.tag = FormTag::plus;
            cls.lambda = a;
        } else {  // a(X^2 + (b/a)XY + Y^2)
            cls.tag = FormTag::qb;
            cls.lambda = a;
            cls.qb_coeff = ctx.mul(b, ctx.inv(a));
        }
        return cls;
    }
    if (b.index == 0 && a.index != 0 && a == ctx.neg(c)) {  // a(X^2 - Y^2)
        cls.tag = FormTag::minus;
        cls.lambda = a;
        return cls;
    }
    cls.tag = FormTag::not_always_undirected;
    return cls;
}

struct QuadForm {
    Elem a, b, c;
    FormClass cls;
};

inline QuadForm make_form(const FieldCtx& ctx, Elem a, Elem b, Elem c) {
    return QuadForm{a, b, c, classify_form(ctx, a, b, c)};
}

inline QuadForm q_star(const FieldCtx& ctx) {
    return make_form(ctx, ctx.zero(), ctx.one(), ctx.zero());
}
inline QuadForm q_plus(const FieldCtx& ctx) {
    return make_form(ctx, ctx.one(), ctx.zero(), ctx.one());
}
inline QuadForm q_minus(const FieldCtx& ctx) {
    return make_form(ctx, ctx.one(), ctx.zero(), ctx.neg(ctx.one()));
}
inline QuadForm q_b(const FieldCtx& ctx, Elem b) {
    require(b.index != 0, errc::invalid_argument, "Q_b needs b != 0");
    return make_form(ctx, ctx.one(), b, ctx.one());
}

inline Elem eval_form(const FieldCtx& ctx, const QuadForm& Q, Elem x, Elem y) {
    Elem r = ctx.mul(Q.a, ctx.sq(x));
    r = ctx.add(r, ctx.mul(Q.b, ctx.mul(x, y)));
    return ctx.add(r, ctx.mul(Q.c, ctx.sq(y)));
}

// Directed graph on the whole vertex set F_{q^n} (isolated vertices stay),
// adjacency as dense bitset rows. Vertex ids are element indices.
struct DiGraph {
    const FieldCtx* ctx = nullptr;  // null for synthetic test graphs
    std::uint32_t nverts = 0;
    std::size_t row_words = 0;
    std::vector<std::uint64_t> bits;
    std::optional<QuadForm> form;
    std::optional<Subspace> space;

    DiGraph() = default;
    explicit DiGraph(std::uint32_t n)
        : nverts(n), row_words((n + 63) / 64), bits(static_cast<std::size_t>(n) * row_words, 0) {}

    const std::uint64_t* row(std::uint32_t x) const { return bits.data() + x * row_words; }
    std::uint64_t* row(std::uint32_t x) { return bits.data() + x * row_words; }

    bool edge(std::uint32_t x, std::uint32_t y) const { return row_test(row(x), y); }
    void add_edge(std::uint32_t x, std::uint32_t y) { row_set(row(x), y); }
    void add_undirected(std::uint32_t x, std::uint32_t y) {
        add_edge(x, y);
        add_edge(y, x);
    }

    std::size_t out_degree(std::uint32_t x) const { return row_popcount(row(x), row_words); }

    std::uint64_t edge_count() const {  // directed count
        std::uint64_t c = 0;
        for (std::uint32_t x = 0; x < nverts; ++x) c += out_degree(x);
        return c;
    }

    template <class Fn>
    void for_each_out(std::uint32_t x, Fn&& fn) const {
        const std::uint64_t* r = row(x);
        for (std::size_t wi = 0; wi < row_words; ++wi) {
            std::uint64_t w = r[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                fn(static_cast<std::uint32_t>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }
};

inline DiGraph build_graph(const QuadForm& Q, const Subspace& V,
                           std::uint64_t graph_cap = Caps{}.graph, int workers = 1) {
    const FieldCtx& ctx = V.ctx();
    const std::uint32_t N = ctx.size();
    require(N <= graph_cap, errc::graph_cap_exceeded,
            "graph would have " + std::to_string(N) + " vertices, cap " +
                std::to_string(graph_cap));
    DiGraph G(N);
    G.ctx = &ctx;
    G.form = Q;
    G.space = V;
    DynBitset member = membership_bitmap(V, N);
    std::vector<Elem> asq(N), csq(N);
    for (std::uint32_t i = 0; i < N; ++i) {
        Elem s = ctx.sq(ctx.from_index(i));
        asq[i] = ctx.mul(Q.a, s);
        csq[i] = ctx.mul(Q.c, s);
    }
    auto fill_rows = [&](std::uint32_t lo, std::uint32_t hi) {
        for (std::uint32_t x = lo; x < hi; ++x) {
            std::uint64_t* r = G.row(x);
            Elem bx = ctx.mul(Q.b, ctx.from_index(x));
            for (std::uint32_t y = 0; y < N; ++y) {
                if (y == x) continue;
                Elem v = ctx.add(ctx.add(asq[x], ctx.mul(bx, ctx.from_index(y))), csq[y]);
                if (member.test(v.index)) row_set(r, y);
            }
        }
    };
    if (workers <= 1) {
        fill_rows(0, N);
    } else {
        std::vector<std::thread> threads;
        std::uint32_t chunk = (N + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::uint32_t lo = std::min<std::uint32_t>(N, w * chunk);
            std::uint32_t hi = std::min<std::uint32_t>(N, lo + chunk);
            if (lo < hi) threads.emplace_back(fill_rows, lo, hi);
        }
        for (auto& t : threads) t.join();
    }
    return G;
}

inline bool is_undirected(const DiGraph& G) {
    for (std::uint32_t x = 0; x < G.nverts; ++x) {
        bool ok = true;
        G.for_each_out(x, [&](std::uint32_t y) {
            if (!G.edge(y, x)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

// N(u, V) = #{z : z^2 in u + V} = sum over v in V of (1 + eta(u + v)).
inline std::uint64_t count_N(const FieldCtx& ctx, Elem u, const Subspace& V) {
    require(ctx.p() != 2, errc::even_characteristic, "count_N requires odd characteristic");
    std::int64_t total = 0;
    for (Elem v : V.elements(ctx.size()))
        total += 1 + ctx.eta(ctx.add(u, v));
    return static_cast<std::uint64_t>(total);
}

// Proposition-level structure of Gamma(Q_+, V): C_V = {u : u^2 in V} induces
// the unique maximal clique of size >= 3 unless V has no nonzero square.
struct PlusCliqueStructure {
    bool trivial = false;       // true iff the only square in V is 0
    std::vector<Elem> clique;   // C_V, ascending by index
};

inline PlusCliqueStructure structured_cliques_plus(const FieldCtx& ctx, const Subspace& V) {
    require(ctx.p() != 2, errc::even_characteristic,
            "square structure requires odd characteristic");
    PlusCliqueStructure out;
    out.trivial = true;
    for (Elem v : V.elements(ctx.size())) {
        if (v.index != 0 && ctx.eta(v) == 1) {
            out.trivial = false;
            break;
        }
    }
    DynBitset member = membership_bitmap(V, ctx.size());
    for (std::uint32_t u = 0; u < ctx.size(); ++u)
        if (member.test(ctx.sq(ctx.from_index(u)).index))
            out.clique.push_back(ctx.from_index(u));
    return out;
}

// Partition of the vertex set by x ~ y iff x^2 - y^2 in V; the classes are
// the sets A_y = {u : u^2 in y^2 + V}, simultaneously the connected
// components and the maximal cliques of Gamma(Q_-, V). Classes are ordered
// by their smallest member.
inline std::vector<std::vector<Elem>> components_minus(const FieldCtx& ctx,
                                                       const Subspace& V) {
    require(ctx.p() != 2, errc::even_characteristic,
            "square classes require odd characteristic");
    CosetList cosets = coset_reps(V, ctx.size());
    std::vector<std::uint32_t> coset_id = coset_id_table(V, cosets);
    std::vector<std::vector<Elem>> classes(cosets.reps.size());
    for (std::uint32_t x = 0; x < ctx.size(); ++x)
        classes[coset_id[ctx.sq(ctx.from_index(x)).index]].push_back(ctx.from_index(x));
    std::vector<std::vector<Elem>> out;
    for (auto& cl : classes)
        if (!cl.empty()) out.push_back(std::move(cl));
    // coset reps ascend by minimal element, but the square map reorders the
    // nonempty classes; sort by smallest member for a stable result
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

// DOT export; collapses to an undirected graph when adjacency is symmetric.
inline void write_dot(const DiGraph& G, std::ostream& os) {
    bool sym = is_undirected(G);
    os << (sym ? "graph" : "digraph") << " qfgl {\n";
    for (std::uint32_t x = 0; x < G.nverts; ++x) os << "  " << x << ";\n";
    for (std::uint32_t x = 0; x < G.nverts; ++x) {
        G.for_each_out(x, [&](std::uint32_t y) {
            if (sym) {
                if (x < y) os << "  " << x << " -- " << y << ";\n";
            } else {
                os << "  " << x << " -> " << y << ";\n";
            }
        });
    }
    os << "}\n";
}

// Edge-list CSV: one "x_index,y_index" row per directed edge.
inline void write_edge_csv(const DiGraph& G, std::ostream& os) {
    os << "x_index,y_index\n";
    for (std::uint32_t x = 0; x < G.nverts; ++x)
        G.for_each_out(x, [&](std::uint32_t y) { os << x << "," << y << "\n"; });
}

}  // namespace qfgl
