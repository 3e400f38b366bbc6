#include "btv/statesum.hpp"

#include <cmath>

#include "btv/builtin.hpp"
#include "btv/consistency.hpp"
#include "doctest.h"

using namespace btv;

namespace {

Biparcel defect_over_chain(int length) {
    GauntCategory chain = poset_chain(length);
    FiniteGroupoid z2 = cyclic_groupoid(2);
    Functor phi;
    for (int obj : chain.objects) phi.object_map[obj] = 0;
    for (const auto& a : chain.arrows) phi.arrow_map[a.id] = (a.tgt - a.src) % 2;
    return pointed_biparcel(z2, cyclic_cocycle(2, 1), chain, phi);
}

}  // namespace

TEST_CASE("trivial category gives 1") {
    Biparcel triv = trivial_biparcel();
    auto r = invariant(triv, direct_default(boundary_4_simplex()));
    CHECK(r.colorings == 1);
    CHECK(std::abs(r.value - cplx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("sphere values for cyclic groups") {
    auto t = direct_default(boundary_4_simplex());

    auto z2 = invariant(builtin_category("vec-z2"), t);
    CHECK(z2.colorings == 16);
    CHECK(std::abs(z2.value - cplx{0.5, 0.0}) < 1e-9);

    auto z3 = invariant(builtin_category("vec-z3"), t);
    CHECK(z3.colorings == 81);
    CHECK(std::abs(z3.value - cplx{1.0 / 3.0, 0.0}) < 1e-9);

    auto tw = invariant(builtin_category("vec-z2-twisted"), t);
    CHECK(std::abs(tw.value - cplx{0.5, 0.0}) < 1e-9);
}

TEST_CASE("fibonacci sphere value") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    auto r = invariant(fibonacci_biparcel(), direct_default(boundary_4_simplex()));
    CHECK(std::abs(r.value - cplx{1.0 / (1.0 + phi * phi), 0.0}) < 1e-9);
}

TEST_CASE("threaded sum matches the single-threaded one") {
    Biparcel fib = fibonacci_biparcel();
    auto t = direct_default(boundary_4_simplex());
    auto one = invariant(fib, t, 1);
    auto four = invariant(fib, t, 4);
    CHECK(one.colorings == four.colorings);
    CHECK(std::abs(one.value - four.value) < 1e-12);
}

TEST_CASE("gauge-theory oracle agrees") {
    auto t = direct_default(boundary_4_simplex());
    for (const char* name : {"z2-trivial", "z2-nontrivial", "z3-trivial"}) {
        CAPTURE(name);
        Cochain3 om = builtin_cochain(name);
        const int n = static_cast<int>(om.group.arrows.size());
        Biparcel b = vec_cyclic(n, om);
        cplx dw = dw_oracle(cyclic_table(n), om, t);
        cplx inv = invariant(b, t).value;
        CHECK(std::abs(dw - inv) < 1e-9);
    }
}

TEST_CASE("pointed chain data forces one coloring") {
    auto t = direct_default(sphere_join_unknot());
    auto r = invariant(defect_over_chain(2), t);
    CHECK(r.colorings == 1);
    CHECK(std::abs(r.value - cplx{1.0, 0.0}) < 1e-9);
}

TEST_CASE("richer defect data on the stratified sphere") {
    GauntCategory chain = poset_chain(2);
    FiniteGroupoid z2 = cyclic_groupoid(2);
    Functor phi;
    for (int obj : chain.objects) phi.object_map[obj] = 0;
    for (const auto& a : chain.arrows) phi.arrow_map[a.id] = (a.tgt - a.src) % 2;
    Biparcel pulled =
        pullback(sharp_construction(builtin_category("vec-z2"), z2), chain, phi);
    REQUIRE(validate(pulled).ok());

    auto t = direct_default(sphere_join_unknot());
    auto r = invariant(pulled, t);
    CHECK(r.colorings > 1);

    // move invariance carries over to the richer data
    auto rep = invariance_check(pulled, t, {{Move::M14, {0, 1, 3, 4}}});
    CHECK(rep.ok);
}

TEST_CASE("multiplicativity under disjoint union") {
    Biparcel z2 = builtin_category("vec-z2");
    StratifiedComplex two =
        disjoint_union(boundary_4_simplex(), boundary_4_simplex());
    auto r = invariant(z2, direct_default(two));
    CHECK(std::abs(r.value - cplx{0.25, 0.0}) < 1e-9);
    CHECK(r.colorings == 256);
}

TEST_CASE("subdivision preserves the trivial normalization") {
    StratifiedComplex sub = barycentric_subdivide(sphere_join_unknot_disk());
    auto r = invariant(defect_over_chain(3), direct_default(sub));
    CHECK(std::abs(r.value - cplx{1.0, 0.0}) < 1e-9);
}

TEST_CASE("invariance trace records deviations") {
    Biparcel fib = fibonacci_biparcel();
    auto t = direct_default(boundary_4_simplex());
    std::vector<MoveStep> steps{{Move::M14, {0, 1, 2, 3}}, {Move::M41, {5}}};
    auto rep = invariance_check(fib, t, steps);
    REQUIRE(rep.steps.size() == 2);
    CHECK(rep.ok);
    CHECK(rep.max_deviation < 1e-9);
    CHECK(rep.steps[0].move == "1-4");
}

TEST_CASE("move consistency checker") {
    CHECK(check_move_consistency(trivial_biparcel()).ok());
    CHECK(check_move_consistency(builtin_category("vec-z2-twisted")).ok());
    CHECK(check_move_consistency(fibonacci_biparcel()).ok());

    // perturbing one amplitude breaks the local identities
    Biparcel broken = fibonacci_biparcel();
    broken.tet_plus.begin()->second *= 1.01;
    CHECK_FALSE(check_move_consistency(broken).ok());
}
