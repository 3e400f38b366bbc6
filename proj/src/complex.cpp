#include "btv/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace btv {

EdgeKey make_edge(int a, int b) {
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

TriKey make_tri(int a, int b, int c) {
    TriKey t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

int sort_parity(std::array<int, 4> v) {
    int parity = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) {
                std::swap(v[i], v[j]);
                parity = -parity;
            }
        }
    return parity;
}

int sort_parity3(std::array<int, 3> v) {
    int parity = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) {
                std::swap(v[i], v[j]);
                parity = -parity;
            }
        }
    return parity;
}

const StratifiedComplex::Vertex* StratifiedComplex::find_vertex(int id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

int StratifiedComplex::stratum_of_vertex(int id) const {
    const Vertex* v = find_vertex(id);
    if (!v) throw std::invalid_argument("unknown vertex " + std::to_string(id));
    return v->stratum;
}

int StratifiedComplex::stratum_of_edge(const EdgeKey& e) const {
    auto it = edge_stratum_override.find(e);
    if (it != edge_stratum_override.end()) return it->second;
    return std::max(stratum_of_vertex(e[0]), stratum_of_vertex(e[1]));
}

int StratifiedComplex::stratum_of_triangle(const TriKey& t) const {
    auto it = tri_stratum_override.find(t);
    if (it != tri_stratum_override.end()) return it->second;
    return std::max({stratum_of_vertex(t[0]), stratum_of_vertex(t[1]),
                     stratum_of_vertex(t[2])});
}

std::vector<EdgeKey> StratifiedComplex::edges() const {
    std::set<EdgeKey> out;
    for (const auto& t : tets)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) out.insert(make_edge(t.v[i], t.v[j]));
    return {out.begin(), out.end()};
}

std::vector<TriKey> StratifiedComplex::triangles() const {
    std::set<TriKey> out;
    for (const auto& t : tets)
        for (int omit = 0; omit < 4; ++omit) {
            std::array<int, 3> tri;
            int k = 0;
            for (int i = 0; i < 4; ++i)
                if (i != omit) tri[k++] = t.v[i];
            out.insert(make_tri(tri[0], tri[1], tri[2]));
        }
    return {out.begin(), out.end()};
}

std::vector<int> StratifiedComplex::occurring_strata() const {
    std::set<int> out;
    for (const auto& v : vertices) out.insert(v.stratum);
    return {out.begin(), out.end()};
}

int StratifiedComplex::max_vertex_id() const {
    int m = -1;
    for (const auto& v : vertices) m = std::max(m, v.id);
    return m;
}

namespace {

// induced orientation value of the face omitting position p, relative to the
// sorted triangle
int induced_face_value(const StratifiedComplex::Tet& t, int omit) {
    std::array<int, 3> tri;
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != omit) tri[k++] = t.v[i];
    int par = sort_parity3(tri);
    int sgn = (omit % 2 == 0) ? 1 : -1;
    return t.sign * sgn * par;
}

}  // namespace

ValidationReport validate_complex(const StratifiedComplex& sc) {
    ValidationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& wit = "") {
        rep.checks.push_back({name, pass, pass ? "" : wit});
    };

    bool wf = true;
    std::string wf_w;
    for (const auto& t : sc.tets) {
        std::set<int> distinct(t.v.begin(), t.v.end());
        if (distinct.size() != 4) {
            wf = false;
            wf_w = "tet with repeated vertex";
            break;
        }
        for (int v : t.v)
            if (!sc.find_vertex(v)) {
                wf = false;
                wf_w = "tet references unknown vertex " + std::to_string(v);
            }
        if (t.sign != 1 && t.sign != -1) {
            wf = false;
            wf_w = "tet sign must be +1 or -1";
        }
        if (!wf) break;
    }
    add("well-formed", wf, wf_w);
    if (!wf) return rep;

    std::map<TriKey, std::vector<int>> tri_values;
    for (const auto& t : sc.tets)
        for (int omit = 0; omit < 4; ++omit) {
            std::array<int, 3> tri;
            int k = 0;
            for (int i = 0; i < 4; ++i)
                if (i != omit) tri[k++] = t.v[i];
            tri_values[make_tri(tri[0], tri[1], tri[2])].push_back(
                induced_face_value(t, omit));
        }

    bool closed = true, oriented = true;
    std::string closed_w, oriented_w;
    for (const auto& [tri, vals] : tri_values) {
        std::ostringstream os;
        os << "(" << tri[0] << "," << tri[1] << "," << tri[2] << ")";
        if (vals.size() != 2) {
            closed = false;
            closed_w = "triangle " + os.str() + " lies in " +
                       std::to_string(vals.size()) + " tets";
            continue;
        }
        if (vals[0] + vals[1] != 0) {
            oriented = false;
            oriented_w = "triangle " + os.str() + " has matching induced orientations";
        }
    }
    add("closed-pseudo-manifold", closed, closed_w);
    add("orientation-consistency", oriented, oriented_w);
    return rep;
}

ValidationReport validate_flaglike(const StratifiedComplex& sc) {
    ValidationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& wit = "") {
        rep.checks.push_back({name, pass, pass ? "" : wit});
    };

    // overrides may only raise a simplex above its vertices, and strata must
    // be closed under faces
    bool mono = true;
    std::string mono_w;
    for (const auto& [e, s] : sc.edge_stratum_override) {
        int base = std::max(sc.stratum_of_vertex(e[0]), sc.stratum_of_vertex(e[1]));
        if (s < base) {
            mono = false;
            mono_w = "edge override below its vertices";
            break;
        }
    }
    for (const auto& tri : sc.triangles()) {
        int st = sc.stratum_of_triangle(tri);
        for (int i = 0; i < 3 && mono; ++i)
            for (int j = i + 1; j < 3; ++j) {
                if (sc.stratum_of_edge(make_edge(tri[i], tri[j])) > st) {
                    mono = false;
                    std::ostringstream os;
                    os << "edge of triangle (" << tri[0] << "," << tri[1] << ","
                       << tri[2] << ") lies above the triangle's stratum";
                    mono_w = os.str();
                }
            }
        if (!mono) break;
    }
    add("stratum-closure", mono, mono_w);

    // per-simplex flag: for each tet and each level d, the faces of stratum
    // <= d must be exactly the face lattice of the span of the low vertices
    bool flag = true;
    std::string flag_w;
    for (const auto& t : sc.tets) {
        for (int d = 0; d <= 2 && flag; ++d) {
            std::vector<int> low;
            for (int v : t.v)
                if (sc.stratum_of_vertex(v) <= d) low.push_back(v);
            for (std::size_t i = 0; i < low.size(); ++i)
                for (std::size_t j = i + 1; j < low.size(); ++j) {
                    if (sc.stratum_of_edge(make_edge(low[i], low[j])) > d) {
                        flag = false;
                        std::ostringstream os;
                        os << "tet (" << t.v[0] << "," << t.v[1] << "," << t.v[2]
                           << "," << t.v[3] << "): vertices " << low[i] << "," << low[j]
                           << " lie in stratum <= " << d
                           << " but their edge does not";
                        flag_w = os.str();
                    }
                }
            if (low.size() == 3 && flag) {
                if (sc.stratum_of_triangle(make_tri(low[0], low[1], low[2])) > d) {
                    flag = false;
                    std::ostringstream os;
                    os << "tet (" << t.v[0] << "," << t.v[1] << "," << t.v[2] << ","
                       << t.v[3] << "): triangle of low vertices escapes stratum "
                       << d;
                    flag_w = os.str();
                }
            }
        }
        if (!flag) break;
    }
    add("flag-like", flag, flag_w);
    return rep;
}

StratifiedComplex barycentric_subdivide(const StratifiedComplex& sc) {
    // precondition: strata closed under faces
    {
        auto rep = validate_flaglike(sc);
        for (const auto& c : rep.checks)
            if (c.name == "stratum-closure" && !c.pass)
                throw InvalidStratification(c.witness);
    }

    StratifiedComplex out;
    out.vertices = sc.vertices;
    int next = sc.max_vertex_id() + 1;
    std::map<EdgeKey, int> edge_bary;
    std::map<TriKey, int> tri_bary;
    std::map<std::array<int, 4>, int> tet_bary;
    for (const auto& e : sc.edges()) {
        edge_bary[e] = next;
        out.vertices.push_back({next, sc.stratum_of_edge(e)});
        ++next;
    }
    for (const auto& t : sc.triangles()) {
        tri_bary[t] = next;
        out.vertices.push_back({next, sc.stratum_of_triangle(t)});
        ++next;
    }
    for (const auto& t : sc.tets) {
        std::array<int, 4> key = t.v;
        std::sort(key.begin(), key.end());
        tet_bary[key] = next;
        out.vertices.push_back({next, 3});
        ++next;
    }

    static const int perms[24][4] = {
        {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2},
        {0, 3, 2, 1}, {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0},
        {1, 3, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3},
        {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0}, {3, 0, 1, 2}, {3, 0, 2, 1},
        {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};

    auto perm_sign = [](const int* p) {
        int s = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) s = -s;
        return s;
    };

    for (const auto& t : sc.tets) {
        std::array<int, 4> key = t.v;
        std::sort(key.begin(), key.end());
        for (const auto& p : perms) {
            int v0 = t.v[p[0]];
            int v1 = edge_bary.at(make_edge(t.v[p[0]], t.v[p[1]]));
            int v2 = tri_bary.at(make_tri(t.v[p[0]], t.v[p[1]], t.v[p[2]]));
            int v3 = tet_bary.at(key);
            out.tets.push_back({{v0, v1, v2, v3}, t.sign * perm_sign(p)});
        }
    }
    return out;
}

StratifiedComplex disjoint_union(const StratifiedComplex& a,
                                 const StratifiedComplex& b) {
    StratifiedComplex out = a;
    const int off = a.max_vertex_id() + 1;
    for (const auto& v : b.vertices) out.vertices.push_back({v.id + off, v.stratum});
    for (const auto& t : b.tets)
        out.tets.push_back(
            {{t.v[0] + off, t.v[1] + off, t.v[2] + off, t.v[3] + off}, t.sign});
    for (const auto& [e, s] : b.edge_stratum_override)
        out.edge_stratum_override[{e[0] + off, e[1] + off}] = s;
    for (const auto& [t, s] : b.tri_stratum_override)
        out.tri_stratum_override[{t[0] + off, t[1] + off, t[2] + off}] = s;
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const auto& x, const auto& y) { return x.id < y.id; });
    return out;
}

void orient_by_propagation(StratifiedComplex& sc) {
    const int n = static_cast<int>(sc.tets.size());
    std::map<TriKey, std::vector<std::pair<int, int>>> tri_to_tets;  // (tet, omit)
    for (int ti = 0; ti < n; ++ti)
        for (int omit = 0; omit < 4; ++omit) {
            std::array<int, 3> tri;
            int k = 0;
            for (int i = 0; i < 4; ++i)
                if (i != omit) tri[k++] = sc.tets[ti].v[i];
            tri_to_tets[make_tri(tri[0], tri[1], tri[2])].push_back({ti, omit});
        }

    std::vector<int> assigned(n, 0);
    for (int start = 0; start < n; ++start) {
        if (assigned[start]) continue;
        sc.tets[start].sign = 1;
        assigned[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int ti = stack.back();
            stack.pop_back();
            for (int omit = 0; omit < 4; ++omit) {
                std::array<int, 3> tri;
                int k = 0;
                for (int i = 0; i < 4; ++i)
                    if (i != omit) tri[k++] = sc.tets[ti].v[i];
                for (auto [tj, omit2] : tri_to_tets.at(make_tri(tri[0], tri[1], tri[2]))) {
                    if (tj == ti || assigned[tj]) continue;
                    // opposite induced orientation on the shared triangle
                    sc.tets[tj].sign = 1;
                    int a = induced_face_value(sc.tets[ti], omit);
                    int b = induced_face_value(sc.tets[tj], omit2);
                    sc.tets[tj].sign = (a + b == 0) ? 1 : -1;
                    assigned[tj] = 1;
                    stack.push_back(tj);
                }
            }
        }
    }
}

StratifiedComplex boundary_4_simplex() {
    StratifiedComplex sc;
    for (int v = 0; v < 5; ++v) sc.vertices.push_back({v, 3});
    for (int omit = 0; omit < 5; ++omit) {
        std::array<int, 4> t;
        int k = 0;
        for (int v = 0; v < 5; ++v)
            if (v != omit) t[k++] = v;
        sc.tets.push_back({t, omit % 2 == 0 ? 1 : -1});
    }
    return sc;
}

StratifiedComplex sphere_join_unknot() {
    StratifiedComplex sc;
    for (int v = 0; v < 3; ++v) sc.vertices.push_back({v, 1});      // knot circle
    for (int v = 3; v < 6; ++v) sc.vertices.push_back({v, 3});      // bulk circle
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            sc.tets.push_back(
                {{i, (i + 1) % 3, 3 + j, 3 + (j + 1) % 3}, 1});
    orient_by_propagation(sc);
    return sc;
}

StratifiedComplex sphere_join_unknot_disk() {
    StratifiedComplex sc = sphere_join_unknot();
    // cone of the knot to vertex 3 is the Seifert disk
    for (auto& v : sc.vertices)
        if (v.id == 3) v.stratum = 2;
    return sc;
}

}  // namespace btv
