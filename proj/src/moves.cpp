#include "btv/moves.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace btv {

std::string move_name(Move m) {
    switch (m) {
        case Move::M14: return "1-4";
        case Move::M41: return "4-1";
        case Move::M23: return "2-3";
        case Move::M32: return "3-2";
        case Move::M26: return "2-6";
        case Move::M62: return "6-2";
        case Move::M36: return "3-6";
        case Move::M63: return "6-3";
    }
    return "?";
}

Move move_from_name(const std::string& name) {
    if (name == "1-4") return Move::M14;
    if (name == "4-1") return Move::M41;
    if (name == "2-3") return Move::M23;
    if (name == "3-2") return Move::M32;
    if (name == "2-6") return Move::M26;
    if (name == "6-2") return Move::M62;
    if (name == "3-6") return Move::M36;
    if (name == "6-3") return Move::M63;
    throw std::invalid_argument("unknown move " + name);
}

namespace {

using Tet = StratifiedComplex::Tet;

int induced_value(const Tet& t, int omit) {
    std::array<int, 3> tri;
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != omit) tri[k++] = t.v[i];
    int par = sort_parity3(tri);
    return t.sign * (omit % 2 == 0 ? 1 : -1) * par;
}

// assigns signs to the tets at indices >= first_new by propagation from the
// already-oriented part of the complex
void orient_patch(StratifiedComplex& sc, std::size_t first_new) {
    const std::size_t n = sc.tets.size();
    std::map<TriKey, std::vector<std::pair<int, int>>> tri_to_tets;
    for (std::size_t ti = 0; ti < n; ++ti)
        for (int omit = 0; omit < 4; ++omit) {
            std::array<int, 3> tri;
            int k = 0;
            for (int i = 0; i < 4; ++i)
                if (i != omit) tri[k++] = sc.tets[ti].v[i];
            tri_to_tets[make_tri(tri[0], tri[1], tri[2])].push_back(
                {static_cast<int>(ti), omit});
        }
    std::vector<char> fixed(n, 0);
    for (std::size_t i = 0; i < first_new; ++i) fixed[i] = 1;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t ti = first_new; ti < n; ++ti) {
            if (fixed[ti]) continue;
            for (int omit = 0; omit < 4 && !fixed[ti]; ++omit) {
                std::array<int, 3> tri;
                int k = 0;
                for (int i = 0; i < 4; ++i)
                    if (i != omit) tri[k++] = sc.tets[ti].v[i];
                for (auto [tj, omit2] :
                     tri_to_tets.at(make_tri(tri[0], tri[1], tri[2]))) {
                    if (static_cast<std::size_t>(tj) == ti || !fixed[tj]) continue;
                    sc.tets[ti].sign = 1;
                    int a = induced_value(sc.tets[tj], omit2);
                    int b = induced_value(sc.tets[ti], omit);
                    sc.tets[ti].sign = (a + b == 0) ? 1 : -1;
                    fixed[ti] = 1;
                    progress = true;
                    break;
                }
            }
        }
    }
    for (std::size_t ti = first_new; ti < n; ++ti)
        if (!fixed[ti]) throw InapplicableSite("patch orientation did not propagate");
}

std::vector<int> tets_containing_vertex(const StratifiedComplex& sc, int v) {
    std::vector<int> out;
    for (std::size_t i = 0; i < sc.tets.size(); ++i)
        if (std::count(sc.tets[i].v.begin(), sc.tets[i].v.end(), v))
            out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> tets_containing_edge(const StratifiedComplex& sc, const EdgeKey& e) {
    std::vector<int> out;
    for (std::size_t i = 0; i < sc.tets.size(); ++i) {
        const auto& t = sc.tets[i];
        if (std::count(t.v.begin(), t.v.end(), e[0]) &&
            std::count(t.v.begin(), t.v.end(), e[1]))
            out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<int> tets_containing_tri(const StratifiedComplex& sc, const TriKey& tr) {
    std::vector<int> out;
    for (std::size_t i = 0; i < sc.tets.size(); ++i) {
        const auto& t = sc.tets[i];
        if (std::count(t.v.begin(), t.v.end(), tr[0]) &&
            std::count(t.v.begin(), t.v.end(), tr[1]) &&
            std::count(t.v.begin(), t.v.end(), tr[2]))
            out.push_back(static_cast<int>(i));
    }
    return out;
}

bool edge_exists(const StratifiedComplex& sc, int a, int b) {
    return !tets_containing_edge(sc, make_edge(a, b)).empty();
}

bool tri_exists(const StratifiedComplex& sc, int a, int b, int c) {
    return !tets_containing_tri(sc, make_tri(a, b, c)).empty();
}

// insert the new vertex into its stratum order right after the earliest site
// vertex of the same stratum, or at the end when there is none
void insert_order(const DirectedTriangulation& base,
                  std::map<int, std::vector<int>>& orders, int new_v, int stratum,
                  const std::vector<int>& site) {
    auto& order = orders[stratum];
    int best_pos = -1;
    for (int v : site) {
        if (base.complex.stratum_of_vertex(v) != stratum) continue;
        auto it = std::find(order.begin(), order.end(), v);
        int pos = static_cast<int>(it - order.begin());
        if (best_pos < 0 || pos < best_pos) best_pos = pos;
    }
    if (best_pos < 0)
        order.push_back(new_v);
    else
        order.insert(order.begin() + best_pos + 1, new_v);
}

void erase_order(std::map<int, std::vector<int>>& orders, int v) {
    for (auto& [s, order] : orders)
        std::erase(order, v);
    std::erase_if(orders, [](const auto& kv) { return kv.second.empty(); });
}

DirectedTriangulation rebuild(const DirectedTriangulation& t, StratifiedComplex sc,
                              std::map<int, std::vector<int>> orders,
                              std::size_t first_new) {
    orient_patch(sc, first_new);
    auto rep = validate_complex(sc);
    if (!rep.ok())
        throw InapplicableSite("move breaks the complex: " +
                               rep.failures().front().witness);
    return direct(sc, std::move(orders), t.mode);
}

}  // namespace

DirectedTriangulation pachner_move(const DirectedTriangulation& t, Move move,
                                   const MoveSite& site) {
    const StratifiedComplex& sc = t.complex;

    auto site_error = [&](const std::string& why) -> InapplicableSite {
        std::ostringstream os;
        os << move_name(move) << " inapplicable at (";
        for (std::size_t i = 0; i < site.size(); ++i)
            os << (i ? "," : "") << site[i];
        os << "): " << why;
        return InapplicableSite(os.str());
    };

    switch (move) {
        case Move::M14: {
            if (site.size() != 4) throw site_error("site must be a tet");
            std::array<int, 4> want{site[0], site[1], site[2], site[3]};
            std::sort(want.begin(), want.end());
            int found = -1;
            for (std::size_t i = 0; i < sc.tets.size(); ++i) {
                std::array<int, 4> have = sc.tets[i].v;
                std::sort(have.begin(), have.end());
                if (have == want) found = static_cast<int>(i);
            }
            if (found < 0) throw site_error("no such tet");

            StratifiedComplex out = sc;
            const int e = sc.max_vertex_id() + 1;
            out.vertices.push_back({e, 3});
            const Tet old = out.tets[found];
            out.tets.erase(out.tets.begin() + found);
            std::size_t first_new = out.tets.size();
            for (int omit = 0; omit < 4; ++omit) {
                std::array<int, 4> v;
                int k = 0;
                for (int i = 0; i < 4; ++i)
                    if (i != omit) v[k++] = old.v[i];
                v[3] = e;
                out.tets.push_back({v, 1});
            }
            auto orders = t.stratum_order;
            insert_order(t, orders, e, 3, site);
            return rebuild(t, std::move(out), std::move(orders), first_new);
        }

        case Move::M41: {
            if (site.size() != 1) throw site_error("site must be a vertex");
            const int e = site[0];
            if (!sc.find_vertex(e)) throw site_error("no such vertex");
            if (sc.stratum_of_vertex(e) != 3) throw site_error("vertex is not bulk");
            auto star = tets_containing_vertex(sc, e);
            if (star.size() != 4) throw site_error("vertex is not in exactly 4 tets");
            std::set<int> others;
            for (int ti : star)
                for (int v : sc.tets[ti].v)
                    if (v != e) others.insert(v);
            if (others.size() != 4) throw site_error("link is not a tetrahedron boundary");
            std::array<int, 4> abcd;
            std::copy(others.begin(), others.end(), abcd.begin());
            for (const auto& tet : sc.tets) {
                auto have = tet.v;
                std::sort(have.begin(), have.end());
                if (have == abcd) throw site_error("weld tet already exists");
            }

            StratifiedComplex out = sc;
            std::erase_if(out.vertices, [&](const auto& v) { return v.id == e; });
            std::vector<Tet> kept;
            for (std::size_t i = 0; i < out.tets.size(); ++i)
                if (!std::count(star.begin(), star.end(), static_cast<int>(i)))
                    kept.push_back(out.tets[i]);
            out.tets = std::move(kept);
            std::size_t first_new = out.tets.size();
            out.tets.push_back({abcd, 1});
            auto orders = t.stratum_order;
            erase_order(orders, e);
            return rebuild(t, std::move(out), std::move(orders), first_new);
        }

        case Move::M23:
        case Move::M26: {
            if (site.size() != 3) throw site_error("site must be a triangle");
            TriKey tr = make_tri(site[0], site[1], site[2]);
            auto pair = tets_containing_tri(sc, tr);
            if (pair.size() != 2) throw site_error("triangle is not shared by 2 tets");
            int d = -1, e = -1;
            for (int v : sc.tets[pair[0]].v)
                if (!std::count(tr.begin(), tr.end(), v)) d = v;
            for (int v : sc.tets[pair[1]].v)
                if (!std::count(tr.begin(), tr.end(), v)) e = v;
            if (d == e) throw site_error("degenerate apex pair");

            if (move == Move::M23) {
                if (sc.stratum_of_triangle(tr) != 3)
                    throw site_error("triangle lies in a lower stratum");
                if (edge_exists(sc, d, e)) throw site_error("apex edge already exists");

                StratifiedComplex out = sc;
                std::vector<Tet> kept;
                for (std::size_t i = 0; i < out.tets.size(); ++i)
                    if (!std::count(pair.begin(), pair.end(), static_cast<int>(i)))
                        kept.push_back(out.tets[i]);
                out.tets = std::move(kept);
                std::size_t first_new = out.tets.size();
                for (int i = 0; i < 3; ++i)
                    out.tets.push_back({{tr[i], tr[(i + 1) % 3], d, e}, 1});
                if (std::max(sc.stratum_of_vertex(d), sc.stratum_of_vertex(e)) < 3)
                    out.edge_stratum_override[make_edge(d, e)] = 3;
                return rebuild(t, std::move(out), t.stratum_order, first_new);
            }

            // 2-6: Alexander subdivision of a 2-stratum triangle
            if (sc.stratum_of_triangle(tr) != 2)
                throw site_error("triangle is not in the 2-stratum");
            StratifiedComplex out = sc;
            const int f = sc.max_vertex_id() + 1;
            out.vertices.push_back({f, 2});
            std::vector<Tet> kept;
            for (std::size_t i = 0; i < out.tets.size(); ++i)
                if (!std::count(pair.begin(), pair.end(), static_cast<int>(i)))
                    kept.push_back(out.tets[i]);
            out.tets = std::move(kept);
            std::size_t first_new = out.tets.size();
            for (int apex : {d, e})
                for (int i = 0; i < 3; ++i)
                    out.tets.push_back({{tr[i], tr[(i + 1) % 3], f, apex}, 1});
            auto orders = t.stratum_order;
            insert_order(t, orders, f, 2, site);
            return rebuild(t, std::move(out), std::move(orders), first_new);
        }

        case Move::M32:
        case Move::M36: {
            if (site.size() != 2) throw site_error("site must be an edge");
            EdgeKey edge = make_edge(site[0], site[1]);
            auto around = tets_containing_edge(sc, edge);
            if (around.size() != 3) throw site_error("edge is not in exactly 3 tets");
            // link must be a 3-cycle x-y-z
            std::set<int> linkset;
            for (int ti : around)
                for (int v : sc.tets[ti].v)
                    if (v != edge[0] && v != edge[1]) linkset.insert(v);
            if (linkset.size() != 3) throw site_error("edge link is not a 3-cycle");
            std::array<int, 3> link;
            std::copy(linkset.begin(), linkset.end(), link.begin());
            // each pair of link vertices must span exactly one of the tets
            for (int ti : around) {
                int cnt = 0;
                for (int v : sc.tets[ti].v)
                    if (linkset.count(v)) ++cnt;
                if (cnt != 2) throw site_error("edge link is not a 3-cycle");
            }

            if (move == Move::M32) {
                if (sc.stratum_of_edge(edge) != 3)
                    throw site_error("edge lies in a lower stratum");
                if (tri_exists(sc, link[0], link[1], link[2]))
                    throw site_error("link triangle already exists");
                StratifiedComplex out = sc;
                std::vector<Tet> kept;
                for (std::size_t i = 0; i < out.tets.size(); ++i)
                    if (!std::count(around.begin(), around.end(), static_cast<int>(i)))
                        kept.push_back(out.tets[i]);
                out.tets = std::move(kept);
                std::size_t first_new = out.tets.size();
                out.tets.push_back({{link[0], link[1], link[2], edge[0]}, 1});
                out.tets.push_back({{link[0], link[1], link[2], edge[1]}, 1});
                out.edge_stratum_override.erase(edge);
                int tri_str = std::max(
                    {sc.stratum_of_vertex(link[0]), sc.stratum_of_vertex(link[1]),
                     sc.stratum_of_vertex(link[2])});
                if (tri_str < 3)
                    out.tri_stratum_override[make_tri(link[0], link[1], link[2])] = 3;
                return rebuild(t, std::move(out), t.stratum_order, first_new);
            }

            // 3-6: Alexander subdivision of a 1-stratum edge
            if (sc.stratum_of_edge(edge) != 1)
                throw site_error("edge is not in the 1-stratum");
            int n_surface = 0;
            for (int v : link) {
                int s = sc.stratum_of_vertex(v);
                if (s <= 1) throw site_error("link vertex in a stratum of dim <= 1");
                if (s == 2) ++n_surface;
            }
            if (n_surface > 1)
                throw site_error("more than one link vertex in the 2-stratum");

            StratifiedComplex out = sc;
            const int g = sc.max_vertex_id() + 1;
            out.vertices.push_back({g, 1});
            std::vector<Tet> kept;
            std::vector<Tet> removed;
            for (std::size_t i = 0; i < out.tets.size(); ++i) {
                if (std::count(around.begin(), around.end(), static_cast<int>(i)))
                    removed.push_back(out.tets[i]);
                else
                    kept.push_back(out.tets[i]);
            }
            out.tets = std::move(kept);
            std::size_t first_new = out.tets.size();
            for (const Tet& old : removed) {
                std::array<int, 2> pq;
                int k = 0;
                for (int v : old.v)
                    if (v != edge[0] && v != edge[1]) pq[k++] = v;
                out.tets.push_back({{edge[0], g, pq[0], pq[1]}, 1});
                out.tets.push_back({{g, edge[1], pq[0], pq[1]}, 1});
            }
            auto orders = t.stratum_order;
            insert_order(t, orders, g, 1, site);
            return rebuild(t, std::move(out), std::move(orders), first_new);
        }

        case Move::M62: {
            if (site.size() != 1) throw site_error("site must be a vertex");
            const int f = site[0];
            if (!sc.find_vertex(f)) throw site_error("no such vertex");
            if (sc.stratum_of_vertex(f) != 2)
                throw site_error("vertex is not in the 2-stratum");
            auto star = tets_containing_vertex(sc, f);
            if (star.size() != 6) throw site_error("vertex is not in exactly 6 tets");
            std::set<int> surface, bulk;
            for (int ti : star)
                for (int v : sc.tets[ti].v) {
                    if (v == f) continue;
                    if (sc.stratum_of_edge(make_edge(f, v)) <= 2)
                        surface.insert(v);
                    else
                        bulk.insert(v);
                }
            if (surface.size() != 3 || bulk.size() != 2)
                throw site_error("link does not split into 3 surface and 2 bulk vertices");
            std::array<int, 3> abc;
            std::copy(surface.begin(), surface.end(), abc.begin());
            std::array<int, 2> de;
            std::copy(bulk.begin(), bulk.end(), de.begin());
            for (int z : de)
                for (int i = 0; i < 3; ++i) {
                    std::array<int, 4> want{abc[i], abc[(i + 1) % 3], f, z};
                    std::sort(want.begin(), want.end());
                    bool found = false;
                    for (int ti : star) {
                        auto have = sc.tets[ti].v;
                        std::sort(have.begin(), have.end());
                        if (have == want) found = true;
                    }
                    if (!found) throw site_error("star is not a subdivided bipyramid");
                }
            if (tri_exists(sc, abc[0], abc[1], abc[2]))
                throw site_error("weld triangle already exists");

            StratifiedComplex out = sc;
            std::erase_if(out.vertices, [&](const auto& v) { return v.id == f; });
            std::vector<Tet> kept;
            for (std::size_t i = 0; i < out.tets.size(); ++i)
                if (!std::count(star.begin(), star.end(), static_cast<int>(i)))
                    kept.push_back(out.tets[i]);
            out.tets = std::move(kept);
            std::size_t first_new = out.tets.size();
            out.tets.push_back({{abc[0], abc[1], abc[2], de[0]}, 1});
            out.tets.push_back({{abc[0], abc[1], abc[2], de[1]}, 1});
            auto orders = t.stratum_order;
            erase_order(orders, f);
            return rebuild(t, std::move(out), std::move(orders), first_new);
        }

        case Move::M63: {
            if (site.size() != 1) throw site_error("site must be a vertex");
            const int g = site[0];
            if (!sc.find_vertex(g)) throw site_error("no such vertex");
            if (sc.stratum_of_vertex(g) != 1)
                throw site_error("vertex is not in the 1-stratum");
            auto star = tets_containing_vertex(sc, g);
            if (star.size() != 6) throw site_error("vertex is not in exactly 6 tets");
            std::set<int> knot, other;
            for (int ti : star)
                for (int v : sc.tets[ti].v) {
                    if (v == g) continue;
                    if (sc.stratum_of_edge(make_edge(g, v)) == 1)
                        knot.insert(v);
                    else
                        other.insert(v);
                }
            if (knot.size() != 2 || other.size() != 3)
                throw site_error("link does not split into 2 knot and 3 link vertices");
            std::array<int, 2> ab;
            std::copy(knot.begin(), knot.end(), ab.begin());
            std::array<int, 3> xyz;
            std::copy(other.begin(), other.end(), xyz.begin());
            for (int a : ab)
                for (int i = 0; i < 3; ++i) {
                    std::array<int, 4> want{a, g, xyz[i], xyz[(i + 1) % 3]};
                    std::sort(want.begin(), want.end());
                    bool found = false;
                    for (int ti : star) {
                        auto have = sc.tets[ti].v;
                        std::sort(have.begin(), have.end());
                        if (have == want) found = true;
                    }
                    if (!found) throw site_error("star is not a subdivided edge star");
                }
            if (edge_exists(sc, ab[0], ab[1]))
                throw site_error("weld edge already exists");

            StratifiedComplex out = sc;
            std::erase_if(out.vertices, [&](const auto& v) { return v.id == g; });
            std::vector<Tet> kept;
            for (std::size_t i = 0; i < out.tets.size(); ++i)
                if (!std::count(star.begin(), star.end(), static_cast<int>(i)))
                    kept.push_back(out.tets[i]);
            out.tets = std::move(kept);
            std::size_t first_new = out.tets.size();
            for (int i = 0; i < 3; ++i)
                out.tets.push_back({{ab[0], ab[1], xyz[i], xyz[(i + 1) % 3]}, 1});
            auto orders = t.stratum_order;
            erase_order(orders, g);
            return rebuild(t, std::move(out), std::move(orders), first_new);
        }
    }
    throw std::invalid_argument("unknown move");
}

std::vector<MoveSite> candidate_sites(const DirectedTriangulation& t, Move move) {
    const StratifiedComplex& sc = t.complex;
    std::vector<MoveSite> out;
    switch (move) {
        case Move::M14:
            for (const auto& tet : sc.tets)
                out.push_back({tet.v[0], tet.v[1], tet.v[2], tet.v[3]});
            break;
        case Move::M41:
            for (const auto& v : sc.vertices)
                if (v.stratum == 3 && tets_containing_vertex(sc, v.id).size() == 4)
                    out.push_back({v.id});
            break;
        case Move::M23:
            for (const auto& tr : sc.triangles())
                if (sc.stratum_of_triangle(tr) == 3) out.push_back({tr[0], tr[1], tr[2]});
            break;
        case Move::M26:
            for (const auto& tr : sc.triangles())
                if (sc.stratum_of_triangle(tr) == 2) out.push_back({tr[0], tr[1], tr[2]});
            break;
        case Move::M32:
            for (const auto& e : sc.edges())
                if (sc.stratum_of_edge(e) == 3 &&
                    tets_containing_edge(sc, e).size() == 3)
                    out.push_back({e[0], e[1]});
            break;
        case Move::M36:
            for (const auto& e : sc.edges())
                if (sc.stratum_of_edge(e) == 1 &&
                    tets_containing_edge(sc, e).size() == 3)
                    out.push_back({e[0], e[1]});
            break;
        case Move::M62:
            for (const auto& v : sc.vertices)
                if (v.stratum == 2 && tets_containing_vertex(sc, v.id).size() == 6)
                    out.push_back({v.id});
            break;
        case Move::M63:
            for (const auto& v : sc.vertices)
                if (v.stratum == 1 && tets_containing_vertex(sc, v.id).size() == 6)
                    out.push_back({v.id});
            break;
    }
    return out;
}

}  // namespace btv
