#include "btv/constructions.hpp"

#include "btv/builtin.hpp"
#include "doctest.h"

using namespace btv;

namespace {

Functor chain_to_cyclic(const GauntCategory& chain, int n) {
    Functor phi;
    for (int obj : chain.objects) phi.object_map[obj] = 0;
    for (const auto& a : chain.arrows) phi.arrow_map[a.id] = (a.tgt - a.src) % n;
    return phi;
}

}  // namespace

TEST_CASE("cocycle condition") {
    CHECK(check_cocycle(trivial_cocycle(2)).ok);
    CHECK(check_cocycle(cyclic_cocycle(2, 1)).ok);
    CHECK(check_cocycle(cyclic_cocycle(3, 1)).ok);
    CHECK(cyclic_cocycle(2, 1).at(1, 1, 1) == cplx{-1.0, 0.0});
    CHECK(cyclic_cocycle(2, 1).normalized());

    Cochain3 bad = trivial_cocycle(2);
    bad.values[{1, 1, 0}] = -1.0;
    auto cc = check_cocycle(bad);
    CHECK_FALSE(cc.ok);
    // the witness names a concrete violated instance
    CHECK(std::abs(bad.at(cc.witness[1], cc.witness[2], cc.witness[3]) *
                       bad.at(cc.witness[0],
                              *bad.group.compose_opt(cc.witness[1], cc.witness[2]),
                              cc.witness[3]) *
                       bad.at(cc.witness[0], cc.witness[1], cc.witness[2]) -
                   bad.at(*bad.group.compose_opt(cc.witness[0], cc.witness[1]),
                          cc.witness[2], cc.witness[3]) *
                       bad.at(cc.witness[0], cc.witness[1],
                              *bad.group.compose_opt(cc.witness[2], cc.witness[3]))) >
          0.5);
}

TEST_CASE("pointed data over a chain") {
    GauntCategory chain = poset_chain(2);
    FiniteGroupoid z2 = cyclic_groupoid(2);
    Functor phi = chain_to_cyclic(chain, 2);

    Biparcel b = pointed_biparcel(z2, cyclic_cocycle(2, 1), chain, phi);
    CHECK(b.simples.size() == 3);  // two identities + one over 1->2
    for (const auto& s : b.simples) CHECK(s.dim == cplx{1.0, 0.0});
    CHECK(validate(b).ok());

    // the cross arrow has no reverse, so its simple has no dual
    int cross = chain_arrow(chain, 1, 2);
    CHECK_FALSE(b.simple(cross).dual.has_value());

    SUBCASE("non-cocycle input is rejected") {
        Cochain3 bad = trivial_cocycle(2);
        bad.values[{1, 1, 0}] = -1.0;
        CHECK_THROWS_AS(pointed_biparcel(z2, bad, chain, phi), InvalidCocycle);
    }
    SUBCASE("invalid functor is rejected") {
        Functor broken = phi;
        broken.arrow_map[chain.identity_of(1)] = 1;
        CHECK_THROWS_AS(pointed_biparcel(z2, cyclic_cocycle(2, 1), chain, broken),
                        InvalidFunctor);
    }
}

TEST_CASE("sharp with a group recovers the pointed tables") {
    BicategoryData d = sharp_construction(trivial_biparcel(), cyclic_groupoid(2));
    CHECK(d.simples.size() == 2);
    CHECK(validate_bicat(d).ok());

    Biparcel z2 = builtin_category("vec-z2");
    // same fusion table under the identity relabeling of {0, 1}
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                auto it = d.fusion.find({a, b, c});
                int m = it == d.fusion.end() ? 0 : it->second;
                CHECK(m == z2.mult(a, b, c));
            }
    CHECK(d.tet_plus.size() == z2.tet_plus.size());
    for (const auto& [key, val] : d.tet_plus) CHECK(z2.tet_plus.at(key) == val);
}

TEST_CASE("pullback of one-object data matches the pointed construction") {
    GauntCategory chain = poset_chain(2);
    FiniteGroupoid z2 = cyclic_groupoid(2);
    Functor phi = chain_to_cyclic(chain, 2);

    BicategoryData d = sharp_construction(trivial_biparcel(), z2);
    Biparcel pulled = pullback(d, chain, phi);
    CHECK(validate(pulled).ok());

    Biparcel pointed = pointed_biparcel(z2, trivial_cocycle(2), chain, phi);
    CHECK(pulled.simples.size() == pointed.simples.size());
    // one simple over each chain arrow in both constructions
    for (const auto& a : chain.arrows) {
        CHECK(pulled.simples_over(a.id).size() == 1);
        CHECK(pointed.simples_over(a.id).size() == 1);
    }
    CHECK(pulled.fusion.size() == pointed.fusion.size());
    CHECK(pulled.tet_plus.size() == pointed.tet_plus.size());
}

TEST_CASE("pullback can carry several simples per arrow") {
    GauntCategory chain = poset_chain(3);
    FiniteGroupoid z2 = cyclic_groupoid(2);
    Functor phi = chain_to_cyclic(chain, 2);

    BicategoryData d = sharp_construction(builtin_category("vec-z2"), z2);
    Biparcel pulled = pullback(d, chain, phi);
    CHECK(validate(pulled).ok());
    for (const auto& a : chain.arrows)
        CHECK(pulled.simples_over(a.id).size() == 2);
}

TEST_CASE("multifusion sector bookkeeping") {
    std::vector<int> J{0, 1};
    std::vector<SectorSimple> simples{{0, {0, 0}, 1.0, 0},
                                      {1, {1, 1}, 1.0, 1},
                                      {2, {0, 1}, 1.0, 3},
                                      {3, {1, 0}, 1.0, 2}};
    std::map<int, int> ids{{0, 0}, {1, 1}};
    std::map<std::array<int, 3>, int> fusion{
        {{0, 0, 0}, 1}, {{1, 1, 1}, 1}, {{0, 2, 2}, 1}, {{2, 1, 2}, 1},
        {{2, 3, 0}, 1}, {{3, 2, 1}, 1}, {{3, 0, 3}, 1}, {{1, 3, 3}, 1}};

    BicategoryData d = multifusion_sectors(J, simples, ids, fusion, {}, {});
    CHECK(d.simples.size() == 4);
    CHECK(d.base.objects.size() == 2);

    SUBCASE("fusion crossing sectors is rejected") {
        auto bad = fusion;
        bad[{2, 2, 0}] = 1;  // (0,1) after (0,1) does not compose
        CHECK_THROWS_AS(multifusion_sectors(J, simples, ids, bad, {}, {}),
                        InvalidSector);
    }
    SUBCASE("identity summand must sit on the diagonal") {
        std::map<int, int> wrong{{0, 2}, {1, 1}};
        CHECK_THROWS_AS(multifusion_sectors(J, simples, wrong, fusion, {}, {}),
                        InvalidSector);
    }
}
