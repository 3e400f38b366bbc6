#include "btv/statesum.hpp"

#include <algorithm>
#include <thread>

namespace btv {

TetKey tet_key(const DirectedTriangulation& t, const StratifiedComplex::Tet& tet,
               const Coloring& c) {
    const auto s = t.direction_sorted(tet);
    TetKey k;
    k.edge = {c.edge.at(make_edge(s[0], s[1])), c.edge.at(make_edge(s[1], s[2])),
              c.edge.at(make_edge(s[2], s[3])), c.edge.at(make_edge(s[0], s[3])),
              c.edge.at(make_edge(s[0], s[2])), c.edge.at(make_edge(s[1], s[3]))};
    k.tri = {c.tri.at(make_tri(s[0], s[1], s[2])), c.tri.at(make_tri(s[1], s[2], s[3])),
             c.tri.at(make_tri(s[0], s[1], s[3])), c.tri.at(make_tri(s[0], s[2], s[3]))};
    return k;
}

cplx coloring_weight(const Biparcel& b, const DirectedTriangulation& t,
                     const Coloring& c) {
    cplx w = 1.0;
    for (const auto& v : t.complex.vertices)
        w /= global_constant(b, t.stratum_object.at(v.stratum));
    for (const auto& [e, s] : c.edge) w *= b.simple(s).dim;
    for (const auto& tet : t.complex.tets)
        w *= tet_amplitude(b, tet_key(t, tet, c), t.epsilon(tet));
    return w;
}

namespace {

// precomputed search order: edges by sorted key, each triangle checked as
// soon as its last edge is assigned
struct Plan {
    std::vector<EdgeKey> edges;
    std::vector<std::vector<int>> candidates;       // per edge
    std::vector<TriKey> tris;
    std::vector<std::array<std::size_t, 3>> tri_edge;  // uv, vw, uw positions
    std::vector<std::vector<std::size_t>> triggered;   // per edge: triangles

    Plan(const Biparcel& b, const DirectedTriangulation& t) {
        edges = t.complex.edges();
        std::map<EdgeKey, std::size_t> pos;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            pos[edges[i]] = i;
            candidates.push_back(b.simples_over(t.delta.at(edges[i])));
        }
        triggered.resize(edges.size());
        for (const auto& tri : t.complex.triangles()) {
            std::array<int, 3> v = tri;
            std::sort(v.begin(), v.end(),
                      [&](int a, int c) { return t.before(a, c); });
            std::array<std::size_t, 3> ep{pos.at(make_edge(v[0], v[1])),
                                          pos.at(make_edge(v[1], v[2])),
                                          pos.at(make_edge(v[0], v[2]))};
            tris.push_back(tri);
            tri_edge.push_back(ep);
            triggered[*std::max_element(ep.begin(), ep.end())].push_back(
                tris.size() - 1);
        }
    }

    int tri_mult(const Biparcel& b, const std::vector<int>& assign,
                 std::size_t ti) const {
        const auto& ep = tri_edge[ti];
        return b.mult(assign[ep[0]], assign[ep[1]], assign[ep[2]]);
    }
};

void assign_tris(const Biparcel& b, const Plan& p, std::vector<int>& edge_assign,
                 std::vector<int>& tri_assign, std::size_t ti,
                 const std::function<void(const Coloring&)>& visit) {
    if (ti == p.tris.size()) {
        Coloring c;
        for (std::size_t i = 0; i < p.edges.size(); ++i)
            c.edge[p.edges[i]] = edge_assign[i];
        for (std::size_t i = 0; i < p.tris.size(); ++i)
            c.tri[p.tris[i]] = tri_assign[i];
        visit(c);
        return;
    }
    const int mult = p.tri_mult(b, edge_assign, ti);
    for (int idx = 0; idx < mult; ++idx) {
        tri_assign[ti] = idx;
        assign_tris(b, p, edge_assign, tri_assign, ti + 1, visit);
    }
}

void assign_edges(const Biparcel& b, const Plan& p, std::vector<int>& edge_assign,
                  std::size_t ei, const std::function<void(const Coloring&)>& visit) {
    if (ei == p.edges.size()) {
        std::vector<int> tri_assign(p.tris.size(), 0);
        assign_tris(b, p, edge_assign, tri_assign, 0, visit);
        return;
    }
    for (int s : p.candidates[ei]) {
        edge_assign[ei] = s;
        bool alive = true;
        for (std::size_t ti : p.triggered[ei])
            if (p.tri_mult(b, edge_assign, ti) == 0) {
                alive = false;
                break;
            }
        if (alive) assign_edges(b, p, edge_assign, ei + 1, visit);
    }
}

}  // namespace

void enumerate_colorings(const Biparcel& b, const DirectedTriangulation& t,
                         const std::function<void(const Coloring&)>& visit) {
    Plan p(b, t);
    std::vector<int> edge_assign(p.edges.size(), 0);
    if (p.edges.empty()) {
        visit(Coloring{});
        return;
    }
    assign_edges(b, p, edge_assign, 0, visit);
}

InvariantResult invariant(const Biparcel& b, const DirectedTriangulation& t,
                          int threads) {
    Plan p(b, t);
    cplx vertex_factor = 1.0;
    for (const auto& v : t.complex.vertices)
        vertex_factor /= global_constant(b, t.stratum_object.at(v.stratum));

    // weight of one coloring, with the constant vertex factor pulled out
    auto body = [&](const Coloring& c) -> cplx {
        cplx w = 1.0;
        for (const auto& [e, s] : c.edge) w *= b.simple(s).dim;
        for (const auto& tet : t.complex.tets)
            w *= tet_amplitude(b, tet_key(t, tet, c), t.epsilon(tet));
        return w;
    };

    if (p.edges.empty())
        return {vertex_factor, 1};

    const auto& first = p.candidates[0];
    const int n_threads =
        std::max(1, std::min<int>(threads, static_cast<int>(first.size())));

    std::vector<cplx> partial(n_threads, 0.0);
    std::vector<long long> counts(n_threads, 0);

    auto run = [&](int slot) {
        std::vector<int> edge_assign(p.edges.size(), 0);
        for (std::size_t fi = slot; fi < first.size();
             fi += static_cast<std::size_t>(n_threads)) {
            edge_assign[0] = first[fi];
            bool alive = true;
            for (std::size_t ti : p.triggered[0])
                if (p.tri_mult(b, edge_assign, ti) == 0) {
                    alive = false;
                    break;
                }
            if (!alive) continue;
            assign_edges(b, p, edge_assign, 1, [&](const Coloring& c) {
                partial[slot] += body(c);
                ++counts[slot];
            });
        }
    };

    if (n_threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(run, i);
        for (auto& th : pool) th.join();
    }

    InvariantResult out{0.0, 0};
    for (int i = 0; i < n_threads; ++i) {
        out.value += partial[i];
        out.colorings += counts[i];
    }
    out.value *= vertex_factor;
    return out;
}

cplx dw_oracle(const std::vector<std::vector<int>>& group_table,
               const Cochain3& omega, const DirectedTriangulation& t) {
    const int n = static_cast<int>(group_table.size());
    const auto edges = t.complex.edges();
    std::map<EdgeKey, std::size_t> pos;
    for (std::size_t i = 0; i < edges.size(); ++i) pos[edges[i]] = i;

    // flatness constraints, one per triangle, checked when complete
    struct Flat {
        std::size_t uv, vw, uw;
    };
    std::vector<std::vector<Flat>> by_last(edges.size());
    for (const auto& tri : t.complex.triangles()) {
        std::array<int, 3> v = tri;
        std::sort(v.begin(), v.end(), [&](int a, int c) { return t.before(a, c); });
        Flat f{pos.at(make_edge(v[0], v[1])), pos.at(make_edge(v[1], v[2])),
               pos.at(make_edge(v[0], v[2]))};
        by_last[std::max({f.uv, f.vw, f.uw})].push_back(f);
    }

    std::vector<int> g(edges.size(), 0);
    cplx total = 0.0;

    std::function<void(std::size_t)> rec = [&](std::size_t ei) {
        if (ei == edges.size()) {
            cplx w = 1.0;
            for (const auto& tet : t.complex.tets) {
                const auto s = t.direction_sorted(tet);
                std::array<int, 3> args{g[pos.at(make_edge(s[0], s[1]))],
                                        g[pos.at(make_edge(s[1], s[2]))],
                                        g[pos.at(make_edge(s[2], s[3]))]};
                cplx val = omega.at(args[0], args[1], args[2]);
                w *= (t.epsilon(tet) > 0) ? val : 1.0 / val;
            }
            total += w;
            return;
        }
        for (int x = 0; x < n; ++x) {
            g[ei] = x;
            bool flat = true;
            for (const auto& f : by_last[ei])
                if (group_table[g[f.uv]][g[f.vw]] != g[f.uw]) {
                    flat = false;
                    break;
                }
            if (flat) rec(ei + 1);
        }
    };
    rec(0);

    cplx norm = 1.0;
    for (std::size_t i = 0; i < t.complex.vertices.size(); ++i)
        norm /= static_cast<double>(n);
    return total * norm;
}

InvarianceReport invariance_check(const Biparcel& b, const DirectedTriangulation& t,
                                  const std::vector<MoveStep>& steps, double tol,
                                  int threads) {
    InvarianceReport rep;
    rep.tolerance = tol;
    rep.base_value = invariant(b, t, threads).value;

    DirectedTriangulation cur = t;
    for (const auto& step : steps) {
        cur = pachner_move(cur, step.move, step.site);
        cplx v = invariant(b, cur, threads).value;
        double dev = std::abs(v - rep.base_value);
        rep.steps.push_back({move_name(step.move), step.site, v, dev});
        rep.max_deviation = std::max(rep.max_deviation, dev);
    }
    rep.ok = rep.max_deviation <= tol;
    return rep;
}

}  // namespace btv
