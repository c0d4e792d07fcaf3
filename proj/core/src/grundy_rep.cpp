#include "gcol/grundy_rep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "gcol/errors.hpp"

namespace gcol {

LabelColoring::LabelColoring(std::vector<int> labels, int k_, int n) : k(k_), chi(std::move(labels)) {
    if (int(chi.size()) != n) throw std::invalid_argument("LabelColoring: label count != n");
    classes.assign(k, VertexSet(n));
    for (int v = 0; v < n; ++v) {
        if (chi[v] < 1 || chi[v] > k) throw std::invalid_argument("LabelColoring: label out of range");
        classes[chi[v] - 1].set(v);
    }
}

int SizeVector::sum() const {
    int s = 0;
    for (int x : q) s += x;
    return s;
}

bool SizeVector::leq(const SizeVector& o) const {
    for (int z = 0; z < k(); ++z)
        if (q[z] > o.q[z]) return false;
    return true;
}

SizeVector SizeVector::bumped(int z, int delta) const {
    SizeVector out = *this;
    out.q[z - 1] = std::max(0, out.q[z - 1] + delta);
    return out;
}

long double RepParams::alpha(int p) const {
    return 3.0L * k * powl((long double)p * eta(), i + 1);
}

long double RepParams::heavy_bound(int p) const {
    return powl((long double)p * eta(), i + 1);
}

bool is_chi_independent(const Graph& g, const LabelColoring& chi, const VertexSet& a) {
    for (int z = 1; z <= chi.k; ++z)
        if (!is_independent(g, a & chi.cls(z))) return false;
    return true;
}

bool fits(const Graph& g, const LabelColoring& chi, const VertexSet& a, const VertexSet& b) {
    return is_chi_independent(g, chi, a | b);
}

namespace {

void push_unique(SetFamily& fam, std::unordered_set<VertexSet, VertexSetHash>& seen,
                 const VertexSet& s) {
    if (seen.insert(s).second) fam.sets.push_back(s);
}

} // namespace

SetFamily star(const Graph& g, const LabelColoring& chi, const SetFamily& f1, const SetFamily& f2,
               int cap) {
    SetFamily out;
    out.p = cap;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (const auto& a : f1.sets)
        for (const auto& b : f2.sets) {
            VertexSet u = a | b;
            if (u.count() > cap) continue;
            if (!is_chi_independent(g, chi, u)) continue;
            push_unique(out, seen, u);
        }
    return out;
}

SetFamily maximal_disjoint_subfamily(const SetFamily& f) {
    SetFamily out;
    out.p = f.p;
    for (const auto& s : f.sets) {
        bool clash = false;
        for (const auto& d : out.sets)
            if (s.intersects(d)) clash = true;
        if (!clash) out.sets.push_back(s);
    }
    return out;
}

VertexSet heavy_vertices(const Graph& g, const VertexSet& u, const LabelColoring& chi, int z,
                         int i) {
    VertexSet uz = chi.cls(z) & u;
    VertexSet out(g.num_vertices());
    chi.cls(z).for_each([&](int v) {
        if ((g.neighbors(v) & uz).count() >= i) out.set(v);
    });
    return out;
}

namespace {

SetFamily rep_recurse(const SetFamily& f, int p, const SizeVector& q, const RepParams& params,
                      const LabelColoring& chi, const Graph& g, RepMemo* memo);

SetFamily rep_compute(const SetFamily& f, int p, const SizeVector& q, const RepParams& params,
                      const LabelColoring& chi, const Graph& g, RepMemo* memo) {
    // Base cases. p = 0 forces F subset of {emptyset}; |q| = 0 keeps one
    // arbitrary set, resolved as the first in family order.
    if (f.sets.empty()) return f;
    if (p == 0) {
        SetFamily out;
        out.p = 0;
        out.sets.push_back(f.sets.front());
        return out;
    }
    if (q.sum() == 0) {
        SetFamily out;
        out.p = p;
        out.sets.push_back(f.sets.front());
        return out;
    }
    // The empty set fits every B that anything fits (A fits B forces B
    // chi-independent), so it represents the whole family alone. This also
    // keeps the hitting-set argument below honest: maximality only makes
    // the disjoint union hit non-empty members.
    for (const auto& s : f.sets)
        if (s.empty()) {
            SetFamily out;
            out.p = p;
            out.sets.push_back(s);
            return out;
        }

    SetFamily disj = maximal_disjoint_subfamily(f);
    const long long eta = params.eta();
    SetFamily out;
    out.p = p;
    std::unordered_set<VertexSet, VertexSetHash> seen;

    if (disj.size() <= eta - 1) {
        // Case 1: small disjoint family => its union hits every member.
        // Split on the hitting vertex, recurse with p-1 on both the bumped
        // and the unchanged vector, and re-attach the vertex.
        VertexSet hitting(g.num_vertices());
        for (const auto& d : disj.sets) hitting |= d;
        hitting.for_each([&](int u) {
            SetFamily fu_minus;
            fu_minus.p = p - 1;
            std::unordered_set<VertexSet, VertexSetHash> fu_seen;
            for (const auto& y : f.sets)
                if (y.test(u)) {
                    VertexSet rest = y;
                    rest.reset(u);
                    push_unique(fu_minus, fu_seen, rest);
                }
            if (fu_minus.sets.empty()) return;
            SizeVector qu = q.bumped(chi.label(u), +1);
            SetFamily hat = rep_recurse(fu_minus, p - 1, qu, params, chi, g, memo);
            SetFamily tilde = rep_recurse(fu_minus, p - 1, q, params, chi, g, memo);
            for (const SetFamily* part : {&hat, &tilde})
                for (const auto& a : part->sets) {
                    VertexSet back = a;
                    back.set(u); // a came from a set containing u, so this is in F
                    push_unique(out, seen, back);
                }
        });
    } else {
        // Case 2: eta disjoint sets already fit almost everything; only
        // size-q sets touching a heavy vertex need dedicated recursion.
        SetFamily dstar;
        dstar.p = p;
        dstar.sets.assign(disj.sets.begin(), disj.sets.begin() + size_t(eta));
        VertexSet u_all(g.num_vertices());
        for (const auto& d : dstar.sets) u_all |= d;

        VertexSet s_all(g.num_vertices());
        for (int z = 1; z <= chi.k; ++z) {
            VertexSet sz = heavy_vertices(g, u_all, chi, z, params.i);
            VertexSet uz = chi.cls(z) & u_all;
            if ((long double)(sz - uz).count() >= params.heavy_bound(p))
                throw kij_error("grundy_representative: heavy-set bound violated; "
                                "host graph is not K_{i,j}-free as declared");
            s_all |= sz;
        }

        for (const auto& d : dstar.sets) push_unique(out, seen, d);
        s_all.for_each([&](int s) {
            if (q.q[chi.label(s) - 1] < 1) return;
            SetFamily fs;
            fs.p = p;
            VertexSet sv = VertexSet::singleton(g.num_vertices(), s);
            for (const auto& a : f.sets)
                if (fits(g, chi, a, sv)) fs.sets.push_back(a);
            if (fs.sets.empty()) return;
            SizeVector qs = q.bumped(chi.label(s), -1);
            SetFamily reduced = rep_recurse(fs, p, qs, params, chi, g, memo);
            for (const auto& a : reduced.sets) push_unique(out, seen, a);
        });
    }

    // size bound |F'| <= alpha^(2p+|q|), compared in log space
    long double limit = (2.0L * p + q.sum()) * logl(params.alpha(p));
    GCOL_CHECK(logl((long double)std::max(1, out.size())) <= limit + 1e-9L);
    return out;
}

SetFamily rep_recurse(const SetFamily& f, int p, const SizeVector& q, const RepParams& params,
                      const LabelColoring& chi, const Graph& g, RepMemo* memo) {
    if (!memo) return rep_compute(f, p, q, params, chi, g, nullptr);
    auto key = std::make_tuple(p, q.q, f.sets);
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
    SetFamily out = rep_compute(f, p, q, params, chi, g, memo);
    (*memo)[std::move(key)] = out;
    return out;
}

} // namespace

SetFamily grundy_representative(const SetFamily& f, int p, const SizeVector& q,
                                const RepParams& params, const LabelColoring& chi, const Graph& g,
                                RepMemo* memo) {
    if (p < 0 || q.k() != params.k)
        throw std::invalid_argument("grundy_representative: malformed parameters");
    if (p + q.sum() > params.f_k)
        throw std::invalid_argument("grundy_representative: p + |q| exceeds the f(k) budget");
    for (const auto& s : f.sets) {
        if (s.count() > p)
            throw std::invalid_argument("grundy_representative: member larger than p");
        if (!is_chi_independent(g, chi, s))
            throw std::invalid_argument("grundy_representative: member not chi-independent");
    }
    return rep_recurse(f, p, q, params, chi, g, memo);
}

namespace {

// Enumerate chi-independent B with |B intersect X_z| = q_z for every z.
bool for_each_size_q(const Graph& g, const LabelColoring& chi, const SizeVector& q,
                     const std::function<bool(const VertexSet&)>& visit) {
    const int n = g.num_vertices();
    VertexSet cur(n);
    auto per_class = [&](auto&& self, int z) -> bool {
        if (z > chi.k) return visit(cur);
        std::vector<int> pool = chi.cls(z).to_vector();
        int need = q.q[z - 1];
        if (need > int(pool.size())) return true;
        std::vector<int> idx(need);
        auto choose = [&](auto&& pick, int at, int from) -> bool {
            if (at == need) return self(self, z + 1);
            for (int t = from; t < int(pool.size()); ++t) {
                int v = pool[t];
                // keep the class slice independent: non-independent slices
                // fit nothing, so they never separate families
                if ((g.neighbors(v) & cur & chi.cls(z)).count() > 0) continue;
                cur.set(v);
                if (!pick(pick, at + 1, t + 1)) return false;
                cur.reset(v);
            }
            return true;
        };
        return choose(choose, 0, 0);
    };
    return per_class(per_class, 1);
}

} // namespace

bool is_representative(const SetFamily& f_sub, const SetFamily& f, const SizeVector& q,
                       const LabelColoring& chi, const Graph& g) {
    for (const auto& s : f_sub.sets) {
        bool member = false;
        for (const auto& t : f.sets)
            if (s == t) member = true;
        if (!member) throw std::invalid_argument("is_representative: f_sub is not a subfamily");
    }
    long double space = 1;
    for (int z = 1; z <= chi.k; ++z) {
        long double c = 1;
        int m = chi.cls(z).count();
        int need = q.q[z - 1];
        for (int t = 0; t < need; ++t) c = c * (m - t) / (t + 1);
        space *= std::max(1.0L, c);
    }
    if (space > 5e6L) throw std::invalid_argument("is_representative: enumeration too large");

    bool ok = true;
    for_each_size_q(g, chi, q, [&](const VertexSet& b) {
        bool any = false;
        for (const auto& a : f.sets)
            if (fits(g, chi, a, b)) {
                any = true;
                break;
            }
        if (!any) return true;
        for (const auto& a : f_sub.sets)
            if (fits(g, chi, a, b)) return true;
        ok = false;
        return false; // stop enumeration
    });
    return ok;
}

} // namespace gcol
