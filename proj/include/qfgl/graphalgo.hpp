// Generic algorithms on symmetric DiGraphs: connected components, BFS
// diameter, the diameter-2 fast path, and exact maximum clique via
// branch-and-bound with greedy-coloring pruning.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qfgl/bits.hpp"
#include "qfgl/caps.hpp"
#include "qfgl/errors.hpp"
#include "qfgl/formgraph.hpp"

namespace qfgl {

inline void require_symmetric(const DiGraph& G) {
    require(is_undirected(G), errc::not_symmetric, "graph adjacency is not symmetric");
}

inline bool is_complete(const DiGraph& G) {
    for (std::uint32_t x = 0; x < G.nverts; ++x)
        if (G.out_degree(x) != G.nverts - 1) return false;
    return true;
}

// Connected components, ordered by smallest vertex; vertices ascend inside
// each component.
inline std::vector<std::vector<std::uint32_t>> components(const DiGraph& G) {
    require_symmetric(G);
    DynBitset visited(G.nverts);
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < G.nverts; ++s) {
        if (visited.test(s)) continue;
        std::vector<std::uint32_t> comp;
        stack.assign(1, s);
        visited.set(s);
        while (!stack.empty()) {
            std::uint32_t x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            G.for_each_out(x, [&](std::uint32_t y) {
                if (!visited.test(y)) {
                    visited.set(y);
                    stack.push_back(y);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

struct DiamReport {
    std::optional<int> diameter;  // empty means disconnected
    std::pair<std::uint32_t, std::uint32_t> witness{0, 0};

    bool connected() const { return diameter.has_value(); }
};

inline DiamReport diameter(const DiGraph& G) {
    require_symmetric(G);
    const std::size_t words = G.row_words;
    DiamReport rep;
    int best = 0;
    DynBitset visited(G.nverts), frontier(G.nverts), next(G.nverts);
    for (std::uint32_t s = 0; s < G.nverts; ++s) {
        visited.clear();
        frontier.clear();
        visited.set(s);
        frontier.set(s);
        int depth = 0;
        std::uint32_t far = s;
        for (;;) {
            next.clear();
            frontier.for_each_set([&](std::size_t x) {
                const std::uint64_t* r = G.row(static_cast<std::uint32_t>(x));
                for (std::size_t wi = 0; wi < words; ++wi) next.words[wi] |= r[wi];
            });
            for (std::size_t wi = 0; wi < words; ++wi) next.words[wi] &= ~visited.words[wi];
            if (!next.any()) break;
            ++depth;
            bool first = true;
            next.for_each_set([&](std::size_t y) {
                if (first) {
                    far = static_cast<std::uint32_t>(y);
                    first = false;
                }
                visited.set(y);
            });
            std::swap(frontier.words, next.words);
        }
        if (visited.count() != G.nverts) {
            std::uint32_t missing = 0;
            for (std::uint32_t y = 0; y < G.nverts; ++y)
                if (!visited.test(y)) {
                    missing = y;
                    break;
                }
            rep.diameter.reset();
            rep.witness = {s, missing};
            return rep;
        }
        if (depth > best) {
            best = depth;
            rep.witness = {s, far};
        }
    }
    rep.diameter = best;
    return rep;
}

// True iff the graph is not complete and every non-adjacent pair has a
// common neighbor, i.e. the diameter is exactly 2. Early exit on the first
// pair with an empty common neighborhood.
inline bool has_diameter_two(const DiGraph& G) {
    require_symmetric(G);
    if (is_complete(G)) return false;
    for (std::uint32_t x = 0; x < G.nverts; ++x) {
        for (std::uint32_t y = x + 1; y < G.nverts; ++y) {
            if (G.edge(x, y)) continue;
            if (!rows_intersect(G.row(x), G.row(y), G.row_words)) return false;
        }
    }
    return true;
}

struct CliqueReport {
    int omega = 0;
    std::vector<std::uint32_t> witness;
    std::uint64_t nodes_explored = 0;
};

namespace detail {

struct CliqueSearch {
    const DiGraph& G;
    std::uint64_t nodes = 0;
    int best = 0;
    std::vector<std::uint32_t> best_clique, current;

    explicit CliqueSearch(const DiGraph& g) : G(g) {}

    // Greedy coloring of the candidate set; returns vertices sorted by
    // ascending color, so scanning from the back gives the pruning bound.
    void color_sort(const DynBitset& P, std::vector<std::uint32_t>& order,
                    std::vector<int>& colors) const {
        order.clear();
        colors.clear();
        std::vector<DynBitset> classes;
        std::vector<std::vector<std::uint32_t>> members;
        P.for_each_set([&](std::size_t vi) {
            auto v = static_cast<std::uint32_t>(vi);
            std::size_t k = 0;
            for (; k < classes.size(); ++k) {
                if (!rows_intersect(classes[k].words.data(), G.row(v), G.row_words)) break;
            }
            if (k == classes.size()) {
                classes.emplace_back(G.nverts);
                members.emplace_back();
            }
            classes[k].set(v);
            members[k].push_back(v);
        });
        for (std::size_t k = 0; k < members.size(); ++k)
            for (auto v : members[k]) {
                order.push_back(v);
                colors.push_back(static_cast<int>(k) + 1);
            }
    }

    void expand(DynBitset P) {
        ++nodes;
        std::vector<std::uint32_t> order;
        std::vector<int> colors;
        color_sort(P, order, colors);
        while (!order.empty()) {
            std::uint32_t v = order.back();
            int c = colors.back();
            order.pop_back();
            colors.pop_back();
            if (static_cast<int>(current.size()) + c <= best) return;
            current.push_back(v);
            DynBitset Pv(G.nverts);
            for (std::size_t wi = 0; wi < G.row_words; ++wi)
                Pv.words[wi] = P.words[wi] & G.row(v)[wi];
            if (Pv.any()) {
                expand(Pv);
            } else if (static_cast<int>(current.size()) > best) {
                best = static_cast<int>(current.size());
                best_clique = current;
            }
            current.pop_back();
            P.reset(v);
        }
    }
};

}  // namespace detail

// Exact maximum clique. Roots follow a degeneracy order of the vertices;
// branches are pruned by the greedy-coloring bound.
inline CliqueReport clique_number(const DiGraph& G, std::uint64_t cap = Caps{}.clique) {
    require_symmetric(G);
    require(G.nverts <= cap, errc::clique_cap_exceeded,
            "clique search on " + std::to_string(G.nverts) + " vertices, cap " +
                std::to_string(cap));
    CliqueReport rep;
    if (G.nverts == 0) return rep;

    // degeneracy order: repeatedly remove a minimum-degree vertex
    std::vector<std::uint32_t> deg(G.nverts), order;
    DynBitset removed(G.nverts);
    for (std::uint32_t v = 0; v < G.nverts; ++v)
        deg[v] = static_cast<std::uint32_t>(G.out_degree(v));
    order.reserve(G.nverts);
    for (std::uint32_t step = 0; step < G.nverts; ++step) {
        std::uint32_t vmin = 0, dmin = G.nverts + 1;
        for (std::uint32_t v = 0; v < G.nverts; ++v)
            if (!removed.test(v) && deg[v] < dmin) {
                dmin = deg[v];
                vmin = v;
            }
        removed.set(vmin);
        order.push_back(vmin);
        G.for_each_out(vmin, [&](std::uint32_t y) {
            if (!removed.test(y) && deg[y] > 0) --deg[y];
        });
    }

    detail::CliqueSearch search(G);
    DynBitset later(G.nverts);  // vertices after position i in the order
    for (std::uint32_t v : order) later.set(v);
    for (std::uint32_t i = 0; i < G.nverts; ++i) {
        std::uint32_t v = order[i];
        later.reset(v);
        DynBitset P(G.nverts);
        for (std::size_t wi = 0; wi < G.row_words; ++wi)
            P.words[wi] = later.words[wi] & G.row(v)[wi];
        if (static_cast<int>(P.count()) + 1 <= search.best) continue;
        search.current.assign(1, v);
        if (P.any()) {
            search.expand(P);
        } else if (search.best < 1) {
            search.best = 1;
            search.best_clique = {v};
        }
    }

    rep.omega = search.best;
    rep.witness = search.best_clique;
    rep.nodes_explored = search.nodes;
    std::sort(rep.witness.begin(), rep.witness.end());
    // witness sanity: must be a clique of the reported size
    require(static_cast<int>(rep.witness.size()) == rep.omega, errc::invalid_argument,
            "clique witness size mismatch");
    for (std::size_t i = 0; i < rep.witness.size(); ++i)
        for (std::size_t j = i + 1; j < rep.witness.size(); ++j)
            require(G.edge(rep.witness[i], rep.witness[j]), errc::invalid_argument,
                    "clique witness is not a clique");
    return rep;
}

// Bron-Kerbosch with pivoting; fn receives each maximal clique (sorted).
template <class Fn>
void for_each_maximal_clique(const DiGraph& G, Fn&& fn) {
    require_symmetric(G);
    std::vector<std::uint32_t> R;
    auto rec = [&](auto&& self, DynBitset P, DynBitset X) -> void {
        if (!P.any() && !X.any()) {
            std::vector<std::uint32_t> clique = R;
            std::sort(clique.begin(), clique.end());
            fn(clique);
            return;
        }
        // pivot: vertex of P|X with most neighbours inside P
        std::uint32_t pivot = 0;
        std::size_t best_cover = 0;
        bool found = false;
        auto consider = [&](std::size_t ui) {
            auto u = static_cast<std::uint32_t>(ui);
            std::size_t cover = 0;
            for (std::size_t wi = 0; wi < G.row_words; ++wi)
                cover += static_cast<std::size_t>(
                    std::popcount(P.words[wi] & G.row(u)[wi]));
            if (!found || cover > best_cover) {
                pivot = u;
                best_cover = cover;
                found = true;
            }
        };
        P.for_each_set(consider);
        X.for_each_set(consider);
        DynBitset ext = P;
        for (std::size_t wi = 0; wi < G.row_words; ++wi)
            ext.words[wi] &= ~G.row(pivot)[wi];
        std::vector<std::uint32_t> verts;
        ext.for_each_set([&](std::size_t v) { verts.push_back(static_cast<std::uint32_t>(v)); });
        for (std::uint32_t v : verts) {
            DynBitset P2(G.nverts), X2(G.nverts);
            for (std::size_t wi = 0; wi < G.row_words; ++wi) {
                P2.words[wi] = P.words[wi] & G.row(v)[wi];
                X2.words[wi] = X.words[wi] & G.row(v)[wi];
            }
            R.push_back(v);
            self(self, std::move(P2), std::move(X2));
            R.pop_back();
            P.reset(v);
            X.set(v);
        }
    };
    DynBitset P(G.nverts), X(G.nverts);
    for (std::uint32_t v = 0; v < G.nverts; ++v) P.set(v);
    rec(rec, std::move(P), std::move(X));
}

}  // namespace qfgl
