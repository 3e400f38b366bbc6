#include "btv/consistency.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "btv/complex.hpp"

namespace btv {

namespace {

struct LTet {
    std::array<int, 4> v;  // ascending vertex labels, which is also the
                           // direction order (single object, order by label)
    int sign;
};

struct Patch {
    std::vector<LTet> tets;
    std::vector<EdgeKey> interior_edges;
    std::vector<TriKey> interior_tris;
    int interior_vertices = 0;
};

std::vector<EdgeKey> patch_edges(const Patch& p) {
    std::set<EdgeKey> out;
    for (const auto& t : p.tets)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) out.insert(make_edge(t.v[i], t.v[j]));
    return {out.begin(), out.end()};
}

std::vector<TriKey> patch_tris(const Patch& p) {
    std::set<TriKey> out;
    for (const auto& t : p.tets)
        for (int omit = 0; omit < 4; ++omit) {
            std::array<int, 3> tri;
            int k = 0;
            for (int i = 0; i < 4; ++i)
                if (i != omit) tri[k++] = t.v[i];
            out.insert(tri);
        }
    return {out.begin(), out.end()};
}

TetKey local_key(const LTet& t, const std::map<EdgeKey, int>& edge,
                 const std::map<TriKey, int>& tri) {
    const auto& v = t.v;
    TetKey k;
    k.edge = {edge.at(make_edge(v[0], v[1])), edge.at(make_edge(v[1], v[2])),
              edge.at(make_edge(v[2], v[3])), edge.at(make_edge(v[0], v[3])),
              edge.at(make_edge(v[0], v[2])), edge.at(make_edge(v[1], v[3]))};
    k.tri = {tri.at(make_tri(v[0], v[1], v[2])), tri.at(make_tri(v[1], v[2], v[3])),
             tri.at(make_tri(v[0], v[1], v[3])), tri.at(make_tri(v[0], v[2], v[3]))};
    return k;
}

int tri_mult(const Biparcel& b, const std::map<EdgeKey, int>& edge,
             const TriKey& tr) {
    return b.mult(edge.at(make_edge(tr[0], tr[1])), edge.at(make_edge(tr[1], tr[2])),
                  edge.at(make_edge(tr[0], tr[2])));
}

/// Sum over interior edge simples and interior triangle indices of the
/// weighted amplitude product, with boundary labels clamped.
cplx patch_sum(const Biparcel& b, const std::vector<int>& local_simples,
               cplx c_inv, const Patch& p, std::map<EdgeKey, int> edge,
               std::map<TriKey, int> tri) {
    cplx total = 0.0;

    std::function<void(std::size_t, cplx)> over_tris =
        [&](std::size_t ti, cplx acc) {
            if (ti == p.interior_tris.size()) {
                for (const auto& t : p.tets) {
                    cplx a = tet_amplitude(b, local_key(t, edge, tri), t.sign);
                    acc *= a;
                }
                total += acc;
                return;
            }
            const auto& tr = p.interior_tris[ti];
            const int mult = tri_mult(b, edge, tr);
            for (int idx = 0; idx < mult; ++idx) {
                tri[tr] = idx;
                over_tris(ti + 1, acc);
            }
            tri.erase(tr);
        };

    std::function<void(std::size_t, cplx)> over_edges =
        [&](std::size_t ei, cplx acc) {
            if (ei == p.interior_edges.size()) {
                over_tris(0, acc);
                return;
            }
            const auto& e = p.interior_edges[ei];
            for (int s : local_simples) {
                edge[e] = s;
                over_edges(ei + 1, acc * b.simple(s).dim);
            }
            edge.erase(e);
        };

    cplx start = 1.0;
    for (int i = 0; i < p.interior_vertices; ++i) start *= c_inv;
    over_edges(0, start);
    return total;
}

/// Compares the two patch sums over every clamped boundary coloring.
CheckResult compare_patches(const Biparcel& b, int object, const std::string& name,
                            const Patch& before, const Patch& after, double tol) {
    const int id_arrow = b.base.identity_of(object);
    const auto local_simples = b.simples_over(id_arrow);
    const cplx c = global_constant(b, object);
    const cplx c_inv = 1.0 / c;

    // boundary simplices (shared between the two patches)
    std::set<EdgeKey> interior_e(before.interior_edges.begin(),
                                 before.interior_edges.end());
    interior_e.insert(after.interior_edges.begin(), after.interior_edges.end());
    std::set<TriKey> interior_t(before.interior_tris.begin(),
                                before.interior_tris.end());
    interior_t.insert(after.interior_tris.begin(), after.interior_tris.end());

    std::set<EdgeKey> boundary_e;
    std::set<TriKey> boundary_t;
    for (const auto* p : {&before, &after}) {
        for (const auto& e : patch_edges(*p))
            if (!interior_e.count(e)) boundary_e.insert(e);
        for (const auto& tr : patch_tris(*p))
            if (!interior_t.count(tr)) boundary_t.insert(tr);
    }
    const std::vector<EdgeKey> bedges(boundary_e.begin(), boundary_e.end());
    const std::vector<TriKey> btris(boundary_t.begin(), boundary_t.end());

    std::map<EdgeKey, int> edge;
    std::map<TriKey, int> tri;
    std::string witness;

    std::function<bool(std::size_t)> over_btris = [&](std::size_t ti) -> bool {
        if (ti == btris.size()) {
            cplx lhs = patch_sum(b, local_simples, c_inv, before, edge, tri);
            cplx rhs = patch_sum(b, local_simples, c_inv, after, edge, tri);
            if (std::abs(lhs - rhs) > tol) {
                std::ostringstream os;
                os << "mismatch " << lhs.real();
                if (lhs.imag() != 0) os << (lhs.imag() < 0 ? "" : "+") << lhs.imag() << "i";
                os << " vs " << rhs.real();
                if (rhs.imag() != 0) os << (rhs.imag() < 0 ? "" : "+") << rhs.imag() << "i";
                os << " at object " << object << ", boundary edges (";
                for (std::size_t i = 0; i < bedges.size(); ++i)
                    os << (i ? "," : "") << edge.at(bedges[i]);
                os << ")";
                witness = os.str();
                return false;
            }
            return true;
        }
        const int mult = tri_mult(b, edge, btris[ti]);
        for (int idx = 0; idx < mult; ++idx) {
            tri[btris[ti]] = idx;
            if (!over_btris(ti + 1)) return false;
        }
        tri.erase(btris[ti]);
        return true;
    };

    std::function<bool(std::size_t)> over_bedges = [&](std::size_t ei) -> bool {
        if (ei == bedges.size()) return over_btris(0);
        for (int s : local_simples) {
            edge[bedges[ei]] = s;
            if (!over_bedges(ei + 1)) return false;
        }
        edge.erase(bedges[ei]);
        return true;
    };

    bool pass = over_bedges(0);
    return {name, pass, witness};
}

}  // namespace

ValidationReport check_move_consistency(const Biparcel& b, double tol) {
    ValidationReport rep;

    // bipyramid on {0..4}: two tets sharing triangle 123 vs the three tets
    // sharing edge 04
    Patch bip_before;
    bip_before.tets = {{{0, 1, 2, 3}, +1}, {{1, 2, 3, 4}, +1}};
    bip_before.interior_tris = {make_tri(1, 2, 3)};

    Patch bip_after;
    bip_after.tets = {{{0, 2, 3, 4}, +1}, {{0, 1, 3, 4}, -1}, {{0, 1, 2, 4}, +1}};
    bip_after.interior_edges = {make_edge(0, 4)};
    bip_after.interior_tris = {make_tri(0, 1, 4), make_tri(0, 2, 4),
                               make_tri(0, 3, 4)};

    // one tet vs its cone at an interior vertex 4
    Patch cone_before;
    cone_before.tets = {{{0, 1, 2, 3}, +1}};

    Patch cone_after;
    cone_after.tets = {{{1, 2, 3, 4}, +1},
                       {{0, 2, 3, 4}, -1},
                       {{0, 1, 3, 4}, +1},
                       {{0, 1, 2, 4}, -1}};
    cone_after.interior_vertices = 1;
    cone_after.interior_edges = {make_edge(0, 4), make_edge(1, 4), make_edge(2, 4),
                                 make_edge(3, 4)};
    cone_after.interior_tris = {make_tri(0, 1, 4), make_tri(0, 2, 4),
                                make_tri(0, 3, 4), make_tri(1, 2, 4),
                                make_tri(1, 3, 4), make_tri(2, 3, 4)};

    for (int obj : b.base.objects) {
        rep.checks.push_back(compare_patches(
            b, obj, "2-3 identity at object " + std::to_string(obj), bip_before,
            bip_after, tol));
        rep.checks.push_back(compare_patches(
            b, obj, "1-4 identity at object " + std::to_string(obj), cone_before,
            cone_after, tol));
    }
    return rep;
}

}  // namespace btv
