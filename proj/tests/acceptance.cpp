// End-to-end acceptance checks; prints one line per criterion.
#include <cmath>
#include <cstdio>
#include <random>

#include "btv/builtin.hpp"
#include "btv/consistency.hpp"
#include "btv/statesum.hpp"

using namespace btv;

namespace {

int failures = 0;

void report(int criterion, bool pass, const char* what) {
    std::printf("criterion %d: %s - %s\n", criterion, pass ? "PASS" : "FAIL", what);
    if (!pass) ++failures;
}

Functor chain_to_cyclic(const GauntCategory& chain, int n) {
    Functor phi;
    for (int obj : chain.objects) phi.object_map[obj] = 0;
    for (const auto& a : chain.arrows) phi.arrow_map[a.id] = (a.tgt - a.src) % n;
    return phi;
}

// one dim-1 simple per chain arrow, all amplitudes 1
Biparcel unit_biparcel(int chain_length) {
    GauntCategory chain = poset_chain(chain_length);
    return pointed_biparcel(cyclic_groupoid(1), trivial_cocycle(1), chain,
                            chain_to_cyclic(chain, 1));
}

Biparcel defect_biparcel(int chain_length) {
    GauntCategory chain = poset_chain(chain_length);
    FiniteGroupoid z2 = cyclic_groupoid(2);
    return pointed_biparcel(z2, cyclic_cocycle(2, 1), chain,
                            chain_to_cyclic(chain, 2));
}

Biparcel pulled_chain2() {
    GauntCategory chain = poset_chain(2);
    FiniteGroupoid z2 = cyclic_groupoid(2);
    return pullback(sharp_construction(builtin_category("vec-z2"), z2), chain,
                    chain_to_cyclic(chain, 2));
}

double dev(cplx a, cplx b) { return std::abs(a - b); }

void criterion_1() {
    bool ok = true;
    struct Case {
        StratifiedComplex sc;
        int chain;
    };
    std::vector<Case> cases;
    cases.push_back({boundary_4_simplex(), 1});
    cases.push_back({sphere_join_unknot(), 2});
    cases.push_back({sphere_join_unknot_disk(), 3});
    cases.push_back({disjoint_union(boundary_4_simplex(), sphere_join_unknot()), 2});
    for (auto& c : cases) {
        auto r = invariant(unit_biparcel(c.chain), direct_default(c.sc));
        ok = ok && dev(r.value, cplx{1.0, 0.0}) <= 1e-12;
    }
    report(1, ok, "unit normalization on all four generators (<= 1e-12)");
}

void criterion_2() {
    bool ok = true;
    auto t0 = direct_default(boundary_4_simplex());
    auto t1 = pachner_move(t0, Move::M14, {0, 1, 2, 3});
    auto t2 = pachner_move(t1, Move::M23, {0, 1, 2});

    for (const char* name : {"z2-trivial", "z2-nontrivial", "z3-trivial"}) {
        Cochain3 om = builtin_cochain(name);
        const int n = static_cast<int>(om.group.arrows.size());
        Biparcel b = vec_cyclic(n, om);
        for (const auto* t : {&t0, &t1, &t2})
            ok = ok && dev(dw_oracle(cyclic_table(n), om, *t),
                           invariant(b, *t).value) <= 1e-9;
    }
    ok = ok && dev(invariant(builtin_category("vec-z2"), t0).value,
                   cplx{0.5, 0.0}) <= 1e-9;
    ok = ok && dev(invariant(builtin_category("vec-z3"), t0).value,
                   cplx{1.0 / 3.0, 0.0}) <= 1e-9;
    report(2, ok, "gauge-theory oracle agreement before and after bulk moves");
}

void criterion_3() {
    bool ok = true;
    const std::vector<Move> bulk{Move::M14, Move::M41, Move::M23, Move::M32};
    for (const char* name : {"vec-z2-twisted", "fibonacci"}) {
        Biparcel b = builtin_category(name);
        for (unsigned seed = 0; seed < 20 && ok; ++seed) {
            std::mt19937 rng(seed);
            DirectedTriangulation cur = direct_default(boundary_4_simplex());
            std::vector<MoveStep> steps;
            for (int i = 0; i < 5; ++i) {
                for (int attempt = 0; attempt < 100; ++attempt) {
                    Move mv = bulk[rng() % bulk.size()];
                    auto sites = candidate_sites(cur, mv);
                    if (sites.empty()) continue;
                    const auto& site = sites[rng() % sites.size()];
                    try {
                        cur = pachner_move(cur, mv, site);
                    } catch (const InapplicableSite&) {
                        continue;
                    }
                    steps.push_back({mv, site});
                    break;
                }
            }
            auto rep = invariance_check(b, direct_default(boundary_4_simplex()),
                                        steps, 1e-9);
            ok = ok && rep.ok && !steps.empty();
        }
    }
    report(3, ok, "bulk move sequences preserve the invariant (20 seeds x 2 categories)");
}

void criterion_4() {
    bool ok = true;
    Biparcel b = defect_biparcel(3);
    ok = ok && validate(b).ok() && check_move_consistency(b).ok();

    auto t = direct_default(sphere_join_unknot_disk());
    const std::vector<std::vector<MoveStep>> pairs{
        {{Move::M26, {0, 1, 3}}, {Move::M62, {6}}},
        {{Move::M36, {0, 1}}, {Move::M63, {6}}}};
    for (const auto& steps : pairs) {
        auto rep = invariance_check(b, t, steps, 1e-9);
        ok = ok && rep.ok;
        DirectedTriangulation cur = t;
        for (const auto& s : steps) cur = pachner_move(cur, s.move, s.site);
        ok = ok && isomorphic(cur, t);
    }
    report(4, ok, "2-6/6-2 and 3-6/6-3 round-trips on the spanning disk");
}

void criterion_5() {
    bool ok = true;
    struct Case {
        Biparcel b;
        StratifiedComplex x;
        StratifiedComplex y;
    };
    std::vector<Case> cases;
    cases.push_back({builtin_category("vec-z2"), boundary_4_simplex(),
                     boundary_4_simplex()});
    cases.push_back({builtin_category("fibonacci"), boundary_4_simplex(),
                     boundary_4_simplex()});
    cases.push_back({pulled_chain2(), sphere_join_unknot(), sphere_join_unknot()});
    cases.push_back({defect_biparcel(3), sphere_join_unknot_disk(),
                     sphere_join_unknot_disk()});
    for (auto& c : cases) {
        cplx vx = invariant(c.b, direct_default(c.x)).value;
        cplx vy = invariant(c.b, direct_default(c.y)).value;
        cplx vu = invariant(c.b, direct_default(disjoint_union(c.x, c.y))).value;
        ok = ok && dev(vu, vx * vy) <= 1e-9;
    }
    report(5, ok, "multiplicativity under disjoint union");
}

void criterion_6() {
    bool ok = true;
    int rejected = 0, non_cocycles = 0;
    for (int mask = 0; mask < 16; ++mask) {
        Cochain3 om;
        om.group = cyclic_groupoid(2);
        int bit = 0;
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                om.values[{0, b, c}] = 1.0;
                om.values[{1, b, c}] = (mask >> bit++ & 1) ? -1.0 : 1.0;
            }
        bool cocycle = check_cocycle(om).ok;

        Biparcel bp;
        bp.base = poset_chain(1);
        for (int a = 0; a < 2; ++a) bp.simples.push_back({a, 0, 1.0, (2 - a) % 2});
        bp.identity_simple[1] = 0;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) bp.fusion[{a, b, (a + b) % 2}] = 1;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) {
                    TetKey k{{a, b, c, (a + b + c) % 2, (a + b) % 2, (b + c) % 2},
                             {0, 0, 0, 0}};
                    bp.tet_plus[k] = om.at(a, b, c);
                    bp.tet_minus[k] = 1.0 / om.at(a, b, c);
                }
        bool consistent = check_move_consistency(bp).ok();
        if (!consistent) ++rejected;
        if (!cocycle) ++non_cocycles;
        ok = ok && (consistent == cocycle);
    }
    ok = ok && rejected == non_cocycles && non_cocycles > 0;
    report(6, ok, "consistency checker rejects exactly the non-cocycles (16 cochains)");
}

void criterion_7() {
    bool ok = true;
    {
        std::map<int, std::vector<int>> alt{{1, {1, 2, 0}}, {3, {4, 5, 3}}};
        for (Biparcel b : {defect_biparcel(2), pulled_chain2()}) {
            cplx a = invariant(b, direct_default(sphere_join_unknot())).value;
            cplx c = invariant(b, direct(sphere_join_unknot(), alt)).value;
            ok = ok && dev(a, c) <= 1e-9;
        }
    }
    {
        std::map<int, std::vector<int>> alt{
            {1, {2, 0, 1}}, {2, {3}}, {3, {5, 4}}};
        Biparcel b = defect_biparcel(3);
        cplx a = invariant(b, direct_default(sphere_join_unknot_disk())).value;
        cplx c = invariant(b, direct(sphere_join_unknot_disk(), alt)).value;
        ok = ok && dev(a, c) <= 1e-9;
    }
    report(7, ok, "reordering vertices within strata leaves the invariant fixed");
}

void criterion_8() {
    bool ok = true;
    for (const auto& name : builtin_category_names()) {
        auto rep = validate(builtin_category(name));
        bool completeness = false;
        for (const auto& c : rep.checks)
            if (c.name == "completeness" && c.pass) completeness = true;
        ok = ok && completeness;
    }
    report(8, ok, "completeness of the fusion tables in all shipped categories");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
