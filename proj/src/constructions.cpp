#include "btv/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace btv {

cplx Cochain3::at(int g, int h, int k) const {
    auto it = values.find({g, h, k});
    if (it == values.end())
        throw std::invalid_argument("cochain value missing");
    return it->second;
}

bool Cochain3::normalized(double tol) const {
    const int e = group.identity_of(0);
    for (const auto& a : group.arrows)
        for (const auto& b : group.arrows) {
            if (!approx(at(e, a.id, b.id), cplx{1.0, 0.0}, tol)) return false;
            if (!approx(at(a.id, e, b.id), cplx{1.0, 0.0}, tol)) return false;
            if (!approx(at(a.id, b.id, e), cplx{1.0, 0.0}, tol)) return false;
        }
    return true;
}

CocycleCheck check_cocycle(const Cochain3& c, double tol) {
    const auto& G = c.group;
    auto mul = [&](int a, int b) { return *G.compose_opt(a, b); };
    for (const auto& g : G.arrows)
        for (const auto& h : G.arrows)
            for (const auto& k : G.arrows)
                for (const auto& l : G.arrows) {
                    cplx lhs = c.at(h.id, k.id, l.id) *
                               c.at(g.id, mul(h.id, k.id), l.id) *
                               c.at(g.id, h.id, k.id);
                    cplx rhs = c.at(mul(g.id, h.id), k.id, l.id) *
                               c.at(g.id, h.id, mul(k.id, l.id));
                    if (!approx(lhs, rhs, tol))
                        return {false, {g.id, h.id, k.id, l.id}};
                }
    return {true, {0, 0, 0, 0}};
}

int paired_simple_id(int simple_index, int arrow_index, int n_arrows) {
    return simple_index * n_arrows + arrow_index;
}

ValidationReport validate_bicat(const BicategoryData& d, double tol) {
    Biparcel bp;
    static_cast<FinCat&>(bp.base) = d.base;
    bp.simples = d.simples;
    bp.identity_simple = d.identity_simple;
    bp.fusion = d.fusion;
    bp.tet_plus = d.tet_plus;
    bp.tet_minus = d.tet_minus;
    ValidationReport rep = validate(bp, tol);
    std::erase_if(rep.checks,
                  [](const CheckResult& c) { return c.name == "base-gaunt"; });
    return rep;
}

Biparcel pointed_biparcel(const FiniteGroupoid& G, const Cochain3& omega,
                          const GauntCategory& gamma, const Functor& phi) {
    {
        auto cc = check_cocycle(omega);
        if (!cc.ok) {
            std::ostringstream os;
            os << "3-cochain is not a cocycle; violated at (" << cc.witness[0] << ","
               << cc.witness[1] << "," << cc.witness[2] << "," << cc.witness[3] << ")";
            throw InvalidCocycle(os.str());
        }
        if (!omega.normalized())
            throw InvalidCocycle("3-cochain is not normalized");
    }
    {
        auto bad = phi.validate(gamma, G);
        if (!bad.empty()) throw InvalidFunctor("invalid functor: " + bad.front());
    }

    Biparcel b;
    b.base = gamma;
    // one simple per base arrow, reusing the arrow id
    for (const auto& a : gamma.arrows)
        b.simples.push_back({a.id, a.id, cplx{1.0, 0.0}, std::nullopt});
    std::sort(b.simples.begin(), b.simples.end(),
              [](const SimpleArrow& x, const SimpleArrow& y) { return x.id < y.id; });
    for (const auto& [obj, id] : gamma.identities) b.identity_simple[obj] = id;

    // duals: the unique reversed arrow whose image is the inverse, when it exists
    for (auto& s : b.simples) {
        const Arrow& a = gamma.arrow(s.gamma_arrow);
        int img = phi.arrow_map.at(a.id);
        int inv = G.inverse.at(img);
        std::vector<int> cands;
        for (int r : gamma.hom(a.tgt, a.src))
            if (phi.arrow_map.at(r) == inv) cands.push_back(r);
        if (cands.size() == 1) s.dual = cands.front();
    }

    for (const auto& [pair, fg] : gamma.compose) b.fusion[{pair.first, pair.second, fg}] = 1;

    for (const auto& a1 : gamma.arrows)
        for (const auto& a2 : gamma.arrows) {
            auto c12 = gamma.compose_opt(a1.id, a2.id);
            if (!c12) continue;
            for (const auto& a3 : gamma.arrows) {
                auto c23 = gamma.compose_opt(a2.id, a3.id);
                if (!c23) continue;
                auto c123 = gamma.compose_opt(*c12, a3.id);
                if (!c123) continue;
                TetKey key{{a1.id, a2.id, a3.id, *c123, *c12, *c23}, {0, 0, 0, 0}};
                cplx w = omega.at(phi.arrow_map.at(a1.id), phi.arrow_map.at(a2.id),
                                  phi.arrow_map.at(a3.id));
                b.tet_plus[key] = w;
                b.tet_minus[key] = cplx{1.0, 0.0} / w;
            }
        }
    return b;
}

Biparcel fusion_biparcel(std::vector<SimpleArrow> simples, int identity_simple_id,
                         std::map<std::array<int, 3>, int> fusion,
                         std::map<TetKey, cplx> tet_plus,
                         std::map<TetKey, cplx> tet_minus) {
    Biparcel b;
    b.base = poset_chain(1);
    const int id_arrow = b.base.identity_of(1);
    for (auto& s : simples) s.gamma_arrow = id_arrow;
    b.simples = std::move(simples);
    std::sort(b.simples.begin(), b.simples.end(),
              [](const SimpleArrow& x, const SimpleArrow& y) { return x.id < y.id; });
    b.identity_simple[1] = identity_simple_id;
    b.fusion = std::move(fusion);
    b.tet_plus = std::move(tet_plus);
    b.tet_minus = std::move(tet_minus);

    ValidationReport rep = validate(b);
    if (!rep.ok()) {
        const auto f = rep.failures().front();
        throw std::invalid_argument("fusion data invalid: " + f.name +
                                    (f.witness.empty() ? "" : " (" + f.witness + ")"));
    }
    return b;
}

BicategoryData sharp_construction(const Biparcel& c, const FiniteGroupoid& g) {
    if (c.base.objects.size() != 1)
        throw std::invalid_argument("sharp_construction expects a one-object biparcel");
    {
        ValidationReport rep = validate(c);
        if (!rep.ok())
            throw std::invalid_argument("sharp_construction: input data invalid: " +
                                        rep.failures().front().name);
    }
    const int n_arrows = static_cast<int>(g.arrows.size());
    auto arrow_index = [&](int id) {
        for (int i = 0; i < n_arrows; ++i)
            if (g.arrows[i].id == id) return i;
        throw std::invalid_argument("unknown groupoid arrow");
    };
    auto simple_index = [&](int id) {
        for (std::size_t i = 0; i < c.simples.size(); ++i)
            if (c.simples[i].id == id) return static_cast<int>(i);
        throw std::invalid_argument("unknown simple");
    };
    auto pair_id = [&](int sid, int fid) {
        return paired_simple_id(simple_index(sid), arrow_index(fid), n_arrows);
    };

    BicategoryData d;
    d.base = g;
    for (std::size_t si = 0; si < c.simples.size(); ++si)
        for (int fi = 0; fi < n_arrows; ++fi) {
            const SimpleArrow& s = c.simples[si];
            const Arrow& f = g.arrows[fi];
            SimpleArrow out;
            out.id = paired_simple_id(static_cast<int>(si), fi, n_arrows);
            out.gamma_arrow = f.id;
            out.dim = s.dim;
            if (s.dual) out.dual = pair_id(*s.dual, g.inverse.at(f.id));
            d.simples.push_back(out);
        }
    std::sort(d.simples.begin(), d.simples.end(),
              [](const SimpleArrow& x, const SimpleArrow& y) { return x.id < y.id; });

    const int c_identity = c.identity_simple.at(c.base.objects.front());
    for (int obj : g.objects)
        d.identity_simple[obj] = pair_id(c_identity, g.identity_of(obj));

    for (const auto& [key, m] : c.fusion) {
        if (m == 0) continue;
        for (const auto& f1 : g.arrows)
            for (const auto& f2 : g.arrows) {
                auto f12 = g.compose_opt(f1.id, f2.id);
                if (!f12) continue;
                d.fusion[{pair_id(key[0], f1.id), pair_id(key[1], f2.id),
                          pair_id(key[2], *f12)}] = m;
            }
    }

    auto lift_tets = [&](const std::map<TetKey, cplx>& src,
                         std::map<TetKey, cplx>& dst) {
        for (const auto& [key, val] : src)
            for (const auto& f1 : g.arrows)
                for (const auto& f2 : g.arrows) {
                    auto f12 = g.compose_opt(f1.id, f2.id);
                    if (!f12) continue;
                    for (const auto& f3 : g.arrows) {
                        auto f23 = g.compose_opt(f2.id, f3.id);
                        if (!f23) continue;
                        auto f123 = g.compose_opt(*f12, f3.id);
                        if (!f123) continue;
                        TetKey out;
                        out.edge = {pair_id(key.edge[0], f1.id),
                                    pair_id(key.edge[1], f2.id),
                                    pair_id(key.edge[2], f3.id),
                                    pair_id(key.edge[3], *f123),
                                    pair_id(key.edge[4], *f12),
                                    pair_id(key.edge[5], *f23)};
                        out.tri = key.tri;
                        dst[out] = val;
                    }
                }
    };
    lift_tets(c.tet_plus, d.tet_plus);
    lift_tets(c.tet_minus, d.tet_minus);
    return d;
}

Biparcel pullback(const BicategoryData& d, const GauntCategory& gamma,
                  const Functor& phi) {
    {
        auto bad = gamma.check_gaunt();
        if (!bad.empty())
            throw std::invalid_argument("pullback base is not gaunt: " + bad.front());
        auto fbad = phi.validate(gamma, d.base);
        if (!fbad.empty()) throw InvalidFunctor("invalid functor: " + fbad.front());
    }
    const int n_arrows = static_cast<int>(gamma.arrows.size());
    auto arrow_index = [&](int id) {
        for (int i = 0; i < n_arrows; ++i)
            if (gamma.arrows[i].id == id) return i;
        throw std::invalid_argument("unknown base arrow");
    };
    auto simple_index = [&](int id) {
        for (std::size_t i = 0; i < d.simples.size(); ++i)
            if (d.simples[i].id == id) return static_cast<int>(i);
        throw std::invalid_argument("unknown simple");
    };
    auto pair_id = [&](int sid, int gid) {
        return paired_simple_id(simple_index(sid), arrow_index(gid), n_arrows);
    };
    auto over = [&](int sid, int gamma_arrow_id) {
        // the d-simple sid lies over the image of the gamma arrow
        const SimpleArrow* s = nullptr;
        for (const auto& x : d.simples)
            if (x.id == sid) s = &x;
        return s && s->gamma_arrow == phi.arrow_map.at(gamma_arrow_id);
    };

    Biparcel b;
    b.base = gamma;
    for (int gi = 0; gi < n_arrows; ++gi) {
        const Arrow& ga = gamma.arrows[gi];
        const int img = phi.arrow_map.at(ga.id);
        for (std::size_t si = 0; si < d.simples.size(); ++si) {
            const SimpleArrow& s = d.simples[si];
            if (s.gamma_arrow != img) continue;
            SimpleArrow out;
            out.id = paired_simple_id(static_cast<int>(si), gi, n_arrows);
            out.gamma_arrow = ga.id;
            out.dim = s.dim;
            // dual kept only when the reversed gamma arrow exists and carries it
            if (s.dual) {
                const SimpleArrow* sd = nullptr;
                for (const auto& x : d.simples)
                    if (x.id == *s.dual) sd = &x;
                std::vector<int> cands;
                for (int r : gamma.hom(ga.tgt, ga.src))
                    if (sd && phi.arrow_map.at(r) == sd->gamma_arrow) cands.push_back(r);
                if (cands.size() == 1) out.dual = pair_id(*s.dual, cands.front());
            }
            b.simples.push_back(out);
        }
    }
    std::sort(b.simples.begin(), b.simples.end(),
              [](const SimpleArrow& x, const SimpleArrow& y) { return x.id < y.id; });

    for (int obj : gamma.objects) {
        int ida = gamma.identity_of(obj);
        int dsimple = d.identity_simple.at(phi.object_map.at(obj));
        b.identity_simple[obj] = pair_id(dsimple, ida);
    }

    for (const auto& [key, m] : d.fusion) {
        if (m == 0) continue;
        for (const auto& g1 : gamma.arrows)
            for (const auto& g2 : gamma.arrows) {
                auto g12 = gamma.compose_opt(g1.id, g2.id);
                if (!g12) continue;
                if (!over(key[0], g1.id) || !over(key[1], g2.id) ||
                    !over(key[2], *g12))
                    continue;
                b.fusion[{pair_id(key[0], g1.id), pair_id(key[1], g2.id),
                          pair_id(key[2], *g12)}] = m;
            }
    }

    auto lift_tets = [&](const std::map<TetKey, cplx>& src,
                         std::map<TetKey, cplx>& dst) {
        for (const auto& [key, val] : src)
            for (const auto& g1 : gamma.arrows)
                for (const auto& g2 : gamma.arrows) {
                    auto g12 = gamma.compose_opt(g1.id, g2.id);
                    if (!g12) continue;
                    for (const auto& g3 : gamma.arrows) {
                        auto g23 = gamma.compose_opt(g2.id, g3.id);
                        if (!g23) continue;
                        auto g123 = gamma.compose_opt(*g12, g3.id);
                        if (!g123) continue;
                        if (!over(key.edge[0], g1.id) || !over(key.edge[1], g2.id) ||
                            !over(key.edge[2], g3.id) || !over(key.edge[3], *g123) ||
                            !over(key.edge[4], *g12) || !over(key.edge[5], *g23))
                            continue;
                        TetKey out;
                        out.edge = {pair_id(key.edge[0], g1.id),
                                    pair_id(key.edge[1], g2.id),
                                    pair_id(key.edge[2], g3.id),
                                    pair_id(key.edge[3], *g123),
                                    pair_id(key.edge[4], *g12),
                                    pair_id(key.edge[5], *g23)};
                        out.tri = key.tri;
                        dst[out] = val;
                    }
                }
    };
    lift_tets(d.tet_plus, b.tet_plus);
    lift_tets(d.tet_minus, b.tet_minus);
    return b;
}

BicategoryData multifusion_sectors(const std::vector<int>& J,
                                   const std::vector<SectorSimple>& simples,
                                   const std::map<int, int>& identity_summand,
                                   const std::map<std::array<int, 3>, int>& fusion,
                                   const std::map<TetKey, cplx>& tet_plus,
                                   const std::map<TetKey, cplx>& tet_minus) {
    GauntCategory ch = chaotic_preorder(J);
    auto arrow_of = [&](std::pair<int, int> s) {
        auto h = ch.hom(s.first, s.second);
        if (h.size() != 1) throw InvalidSector("unknown sector");
        return h.front();
    };
    auto sector_of = [&](int sid) -> std::pair<int, int> {
        for (const auto& s : simples)
            if (s.id == sid) return s.sector;
        throw InvalidSector("fusion entry references unknown simple " +
                            std::to_string(sid));
    };

    // sector composition must land in the right sector
    for (const auto& [key, m] : fusion) {
        if (m == 0) continue;
        auto sa = sector_of(key[0]);
        auto sb = sector_of(key[1]);
        auto sc = sector_of(key[2]);
        if (sa.second != sb.first || sc != std::make_pair(sa.first, sb.second)) {
            std::ostringstream os;
            os << "fusion entry (" << key[0] << "," << key[1] << "," << key[2]
               << ") crosses sectors inconsistently";
            throw InvalidSector(os.str());
        }
    }

    BicategoryData d;
    d.base = ch;
    for (const auto& s : simples)
        d.simples.push_back({s.id, arrow_of(s.sector), s.dim, s.dual});
    std::sort(d.simples.begin(), d.simples.end(),
              [](const SimpleArrow& x, const SimpleArrow& y) { return x.id < y.id; });
    for (int j : J) {
        auto it = identity_summand.find(j);
        if (it == identity_summand.end())
            throw InvalidSector("missing identity summand for sector " +
                                std::to_string(j));
        if (sector_of(it->second) != std::make_pair(j, j))
            throw InvalidSector("identity summand of sector " + std::to_string(j) +
                                " lies in the wrong sector");
        d.identity_simple[j] = it->second;
    }
    d.fusion = fusion;
    d.tet_plus = tet_plus;
    d.tet_minus = tet_minus;
    return d;
}

}  // namespace btv
