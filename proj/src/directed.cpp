#include "btv/directed.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace btv {

int DirectedTriangulation::order_pos(int v) const {
    const int s = complex.stratum_of_vertex(v);
    const auto& order = stratum_order.at(s);
    auto it = std::find(order.begin(), order.end(), v);
    if (it == order.end())
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " missing from its stratum order");
    return static_cast<int>(it - order.begin());
}

bool DirectedTriangulation::before(int u, int v) const {
    auto e = make_edge(u, v);
    auto it = edge_dir.find(e);
    if (it != edge_dir.end()) return it->second[0] == u;
    int su = complex.stratum_of_vertex(u), sv = complex.stratum_of_vertex(v);
    if (su != sv) return su < sv;
    return order_pos(u) < order_pos(v);
}

std::array<int, 2> DirectedTriangulation::directed_edge(int a, int b) const {
    return before(a, b) ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a};
}

std::array<int, 4> DirectedTriangulation::direction_sorted(
    const StratifiedComplex::Tet& t) const {
    std::array<int, 4> v = t.v;
    std::sort(v.begin(), v.end(), [&](int a, int b) { return before(a, b); });
    return v;
}

int DirectedTriangulation::epsilon(const StratifiedComplex::Tet& t) const {
    std::array<int, 4> sorted = direction_sorted(t);
    // parity of the permutation taking the stored tuple to the sorted tuple
    std::array<int, 4> perm;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
            if (t.v[j] == sorted[i]) perm[i] = j;
    }
    int par = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (perm[i] > perm[j]) par = -par;
    return t.sign * par;
}

std::map<int, std::vector<int>> default_orders(const StratifiedComplex& sc) {
    std::map<int, std::vector<int>> orders;
    for (const auto& v : sc.vertices) orders[v.stratum].push_back(v.id);
    for (auto& [s, vec] : orders) std::sort(vec.begin(), vec.end());
    return orders;
}

DirectedTriangulation direct(
    const StratifiedComplex& sc, std::map<int, std::vector<int>> orders,
    DirectionMode mode, const std::map<EdgeKey, std::array<int, 2>>& overrides) {
    {
        auto rep = validate_flaglike(sc);
        if (!rep.ok())
            throw InvalidStratification("not flag-like: " +
                                        rep.failures().front().witness);
    }
    // orders must partition the vertices by stratum
    for (const auto& v : sc.vertices) {
        auto it = orders.find(v.stratum);
        if (it == orders.end() ||
            std::find(it->second.begin(), it->second.end(), v.id) == it->second.end())
            throw std::invalid_argument("vertex " + std::to_string(v.id) +
                                        " missing from its stratum order");
    }

    DirectedTriangulation t;
    t.complex = sc;
    t.stratum_order = std::move(orders);
    t.mode = mode;
    t.edge_dir = overrides;

    // base category: poset chain on the occurring stratum dimensions
    auto strata = sc.occurring_strata();
    t.gamma = poset_chain(static_cast<int>(strata.size()));
    for (std::size_t i = 0; i < strata.size(); ++i)
        t.stratum_object[strata[i]] = static_cast<int>(i) + 1;

    for (const auto& e : sc.edges()) {
        if (!t.edge_dir.count(e)) t.edge_dir[e] = t.directed_edge(e[0], e[1]);
    }

    // per-simplex acyclicity: the direction relation must linearly order
    // every tet's vertices
    for (const auto& tet : sc.tets) {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k) {
                    int a = tet.v[i], b = tet.v[j], c = tet.v[k];
                    // count a 3-cycle among the directed pairs
                    auto dir = [&](int u, int v) { return t.before(u, v) ? 1 : 0; };
                    int fwd = dir(a, b) + dir(b, c) + dir(c, a);
                    if (fwd == 3 || fwd == 0) {
                        std::ostringstream os;
                        os << "directed cycle on (" << a << "," << b << "," << c
                           << ")";
                        throw NotDirectable(os.str());
                    }
                }
    }

    // delta on edges, checked for functoriality on every triangle
    auto arrow_between = [&](int u, int v) -> int {
        int ou = t.stratum_object.at(sc.stratum_of_vertex(u));
        int ov = t.stratum_object.at(sc.stratum_of_vertex(v));
        auto hom = t.gamma.hom(ou, ov);
        if (hom.size() != 1) {
            std::ostringstream os;
            os << "no base arrow for directed edge (" << u << "," << v << ")";
            throw DeltaInconsistent(os.str());
        }
        return hom.front();
    };
    for (const auto& [e, dir] : t.edge_dir) t.delta[e] = arrow_between(dir[0], dir[1]);

    for (const auto& tri : sc.triangles()) {
        std::array<int, 3> v = tri;
        std::sort(v.begin(), v.end(), [&](int a, int b) { return t.before(a, b); });
        int duv = t.delta.at(make_edge(v[0], v[1]));
        int dvw = t.delta.at(make_edge(v[1], v[2]));
        int duw = t.delta.at(make_edge(v[0], v[2]));
        auto comp = t.gamma.compose_opt(duv, dvw);
        if (!comp || *comp != duw) {
            std::ostringstream os;
            os << "delta not functorial on triangle (" << tri[0] << "," << tri[1]
               << "," << tri[2] << ")";
            throw DeltaInconsistent(os.str());
        }
    }
    return t;
}

DirectedTriangulation direct_default(const StratifiedComplex& sc) {
    return direct(sc, default_orders(sc));
}

StratifiedComplex canonical_form(const DirectedTriangulation& t) {
    // relabel by (stratum, order position)
    std::vector<std::pair<std::pair<int, int>, int>> keyed;
    for (const auto& v : t.complex.vertices)
        keyed.push_back({{v.stratum, t.order_pos(v.id)}, v.id});
    std::sort(keyed.begin(), keyed.end());
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < keyed.size(); ++i)
        relabel[keyed[i].second] = static_cast<int>(i);

    StratifiedComplex out;
    for (std::size_t i = 0; i < keyed.size(); ++i)
        out.vertices.push_back(
            {static_cast<int>(i), t.complex.stratum_of_vertex(keyed[i].second)});
    for (const auto& tet : t.complex.tets) {
        std::array<int, 4> v{relabel.at(tet.v[0]), relabel.at(tet.v[1]),
                             relabel.at(tet.v[2]), relabel.at(tet.v[3])};
        int par = sort_parity(v);
        std::sort(v.begin(), v.end());
        out.tets.push_back({v, tet.sign * par});
    }
    std::sort(out.tets.begin(), out.tets.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.v, a.sign) < std::make_pair(b.v, b.sign);
    });
    for (const auto& [e, s] : t.complex.edge_stratum_override)
        out.edge_stratum_override[make_edge(relabel.at(e[0]), relabel.at(e[1]))] = s;
    for (const auto& [tr, s] : t.complex.tri_stratum_override)
        out.tri_stratum_override[make_tri(relabel.at(tr[0]), relabel.at(tr[1]),
                                          relabel.at(tr[2]))] = s;
    return out;
}

bool isomorphic(const DirectedTriangulation& a, const DirectedTriangulation& b) {
    return canonical_form(a) == canonical_form(b);
}

}  // namespace btv
