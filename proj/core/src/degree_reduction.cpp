#include "gcol/degree_reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gcol/errors.hpp"

namespace gcol {

std::vector<Biclique> OneSidedOutcome::all_bicliques() const {
    std::vector<Biclique> out = a_bicliques;
    out.insert(out.end(), s_bicliques.begin(), s_bicliques.end());
    return out;
}

namespace {

void check_bipartition(const Graph& g, const VertexSet& left, const VertexSet& right) {
    if (left.intersects(right))
        throw std::invalid_argument("one_sided_reduce: sides overlap");
    for (auto [u, v] : g.edge_list()) {
        bool crosses = (left.test(u) && right.test(v)) || (left.test(v) && right.test(u));
        if (!crosses) throw std::invalid_argument("one_sided_reduce: graph is not bipartite "
                                                  "with all edges across the given sides");
    }
}

void check_claim_properties(const Graph& g, const OneSidedOutcome& out) {
    const auto& Q = out.q_classes;
    const auto& x = out.dominators;
    const auto& B = out.b_sets;
    VertexSet pfinal(g.num_vertices());
    for (const auto& q : Q) pfinal |= q;
    for (size_t i = 0; i < Q.size(); ++i) {
        // (i) Q_i non-empty independent
        GCOL_CHECK(!Q[i].empty());
        GCOL_CHECK(is_independent(g, Q[i]));
        // (ii) earlier dominators have neighbors in Q_i
        for (size_t j = 0; j < i; ++j) GCOL_CHECK(g.neighbors(x[j]).intersects(Q[i]));
        // (iii) B_i members cover N(x_i) \ P and never exceed x_i's degree
        VertexSet rim = g.neighbors(x[i]) - pfinal;
        B[i].for_each([&](int v) {
            GCOL_CHECK(rim.is_subset_of(g.neighbors(v)));
            GCOL_CHECK(g.degree(v) <= g.degree(x[i]));
        });
    }
}

} // namespace

OneSidedOutcome one_sided_reduce(const Graph& g, const VertexSet& left, const VertexSet& right,
                                 int k) {
    if (k < 1) throw std::invalid_argument("one_sided_reduce: k must be >= 1");
    check_bipartition(g, left, right);

    OneSidedOutcome out;
    std::vector<int> sigma = left.to_vector();
    std::stable_sort(sigma.begin(), sigma.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    if (sigma.empty()) return out;

    const int n = g.num_vertices();
    auto& Q = out.q_classes;
    auto& x = out.dominators;
    auto& B = out.b_sets;

    x.push_back(sigma[0]);
    Q.push_back(VertexSet::singleton(n, sigma[0]));
    B.push_back(VertexSet(n));
    VertexSet processed_left = VertexSet::singleton(n, sigma[0]);

    for (int v_r : sigma) {
        if (processed_left.test(v_r)) continue;
        VertexSet p(n);
        for (const auto& q : Q) p |= q;

        int host = -1; // smallest j with N(x_j) subset of P + N(v_r)
        for (size_t j = 0; j < Q.size() && host == -1; ++j)
            if (g.neighbors(x[j]).is_subset_of(p | g.neighbors(v_r))) host = int(j);

        if (host >= 0) {
            B[host].set(v_r);
            processed_left.set(v_r);
        } else {
            VertexSet next = VertexSet::singleton(n, v_r);
            for (size_t j = 0; j < Q.size(); ++j) {
                int w = (g.neighbors(x[j]) - (p | g.neighbors(v_r))).first();
                next.set(w);
            }
            x.push_back(v_r);
            Q.push_back(next);
            B.push_back(VertexSet(n));
            processed_left.set(v_r);
        }
    }

    const int q_final = int(Q.size()) + 1; // loop variable q after the last class
    if (q_final >= k + 1) {
        PartialGrundyWitness w;
        for (auto it = Q.rbegin(); it != Q.rend(); ++it) w.classes.push_back(*it);
        GCOL_CHECK(verify_pgw(g, w).has_value());
        out.witness = std::move(w);
        check_claim_properties(g, out);
        return out;
    }

    VertexSet pfinal(n);
    for (const auto& q : Q) pfinal |= q;
    for (size_t j = 0; j < Q.size(); ++j) {
        VertexSet a_right = g.neighbors(x[j]) - pfinal;
        if (!B[j].empty() && !a_right.empty())
            out.a_bicliques.push_back({B[j], a_right});
        if (!g.neighbors(x[j]).empty())
            out.s_bicliques.push_back({VertexSet::singleton(n, x[j]), g.neighbors(x[j])});
    }
    check_claim_properties(g, out);

    // residual guarantee on the processed side
    Graph residual = remove_edges(g, out.all_bicliques());
    left.for_each([&](int v) { GCOL_CHECK(residual.degree(v) <= k * k); });
    return out;
}

std::variant<PartialGrundyWitness, BicliqueDecomposition>
two_sided_reduce(const Graph& g, const VertexSet& left, const VertexSet& right, int k) {
    OneSidedOutcome first = one_sided_reduce(g, left, right, k);
    if (first.yes()) return *first.witness;
    OneSidedOutcome second = one_sided_reduce(g, right, left, k);
    if (second.yes()) return *second.witness;

    BicliqueDecomposition dec;
    dec.k = k;
    dec.bicliques = first.all_bicliques();
    for (auto& b : second.all_bicliques()) dec.bicliques.push_back(std::move(b));
    GCOL_CHECK(int(dec.bicliques.size()) <= 4 * k - 4);
    GCOL_CHECK(max_degree(remove_edges(g, dec.bicliques)) <= k * k);
    return dec;
}

std::variant<Coloring, BicliqueDecomposition> degree_reduce(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("degree_reduce: k must be >= 1");
    const int n = g.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Coloring greedy = first_fit(g, order);
    if (greedy.num_colors >= k) return greedy;

    const int kp = greedy.num_colors;
    std::vector<VertexSet> cls(kp + 1, VertexSet(n));
    for (int v = 0; v < n; ++v) cls[greedy.color[v]].set(v);

    BicliqueDecomposition dec;
    dec.k = k;
    for (int i = 1; i <= kp; ++i) {
        for (int j = i + 1; j <= kp; ++j) {
            // bipartite host on the same id space with only the (C_i, C_j)
            // cross edges
            std::vector<std::pair<int, int>> cross;
            cls[i].for_each([&](int u) {
                (g.neighbors(u) & cls[j]).for_each([&](int v) { cross.emplace_back(u, v); });
            });
            Graph h(n, cross);
            auto res = two_sided_reduce(h, cls[i], cls[j], k);
            if (auto* w = std::get_if<PartialGrundyWitness>(&res)) {
                // edges of h are edges of g, so the witness transfers
                GCOL_CHECK(verify_pgw(g, *w).has_value());
                Coloring c = pgw_to_coloring(g, *w);
                GCOL_CHECK(c.num_colors >= k);
                GCOL_CHECK(is_partial_grundy_coloring(g, c));
                return c;
            }
            for (auto& b : std::get<BicliqueDecomposition>(res).bicliques)
                dec.bicliques.push_back(std::move(b));
        }
    }
    GCOL_CHECK(int(dec.bicliques.size()) <= 2 * k * k * k);
    GCOL_CHECK(max_degree(remove_edges(g, dec.bicliques)) <= k * k * k);
    return dec;
}

} // namespace gcol
