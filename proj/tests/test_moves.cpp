#include "btv/moves.hpp"

#include "doctest.h"

using namespace btv;

namespace {

DirectedTriangulation bulk_sphere() { return direct_default(boundary_4_simplex()); }

}  // namespace

TEST_CASE("move names round-trip") {
    for (Move m : {Move::M14, Move::M41, Move::M23, Move::M32, Move::M26,
                   Move::M62, Move::M36, Move::M63})
        CHECK(move_from_name(move_name(m)) == m);
    CHECK_THROWS_AS(move_from_name("5-5"), std::invalid_argument);
}

TEST_CASE("1-4 and its inverse") {
    DirectedTriangulation t = bulk_sphere();
    DirectedTriangulation u = pachner_move(t, Move::M14, {0, 1, 2, 3});
    CHECK(u.complex.vertices.size() == 6);
    CHECK(u.complex.tets.size() == 8);
    CHECK(validate_complex(u.complex).ok());

    DirectedTriangulation back = pachner_move(u, Move::M41, {5});
    CHECK(isomorphic(back, t));

    CHECK_THROWS_AS(pachner_move(t, Move::M14, {0, 1, 2, 9}), InapplicableSite);
    // vertex 0 has four tets around it only after the subdivision
    CHECK_THROWS_AS(pachner_move(t, Move::M41, {0}), InapplicableSite);
    // both the fresh barycenter and the vertex opposite the subdivided tet
    // now have four-tet stars
    CHECK(candidate_sites(u, Move::M41) == std::vector<MoveSite>{{4}, {5}});
}

TEST_CASE("2-3 and its inverse") {
    // on the bare 4-simplex boundary every vertex pair is already an edge,
    // so 2-3 is blocked everywhere until a 1-4 opens room
    CHECK_THROWS_AS(pachner_move(bulk_sphere(), Move::M23, {0, 1, 2}),
                    InapplicableSite);

    DirectedTriangulation t = pachner_move(bulk_sphere(), Move::M14, {0, 1, 2, 3});
    DirectedTriangulation u = pachner_move(t, Move::M23, {0, 1, 2});
    CHECK(u.complex.tets.size() == t.complex.tets.size() + 1);
    CHECK(validate_complex(u.complex).ok());
    // the new interior edge joins the two apexes
    CHECK(u.complex.stratum_of_edge(make_edge(4, 5)) == 3);

    DirectedTriangulation back = pachner_move(u, Move::M32, {4, 5});
    CHECK(isomorphic(back, t));
}

TEST_CASE("defect triangle blocks bulk moves") {
    DirectedTriangulation t = direct_default(sphere_join_unknot_disk());
    CHECK_THROWS_AS(pachner_move(t, Move::M23, {0, 1, 3}), InapplicableSite);
    CHECK_THROWS_AS(pachner_move(t, Move::M36, {0, 3}), InapplicableSite);
}

TEST_CASE("2-6 and its inverse on the disk") {
    DirectedTriangulation t = direct_default(sphere_join_unknot_disk());
    DirectedTriangulation u = pachner_move(t, Move::M26, {0, 1, 3});
    CHECK(u.complex.vertices.size() == 7);
    CHECK(u.complex.tets.size() == t.complex.tets.size() + 4);
    CHECK(u.complex.stratum_of_vertex(6) == 2);
    CHECK(validate_complex(u.complex).ok());
    CHECK(validate_flaglike(u.complex).ok());

    DirectedTriangulation back = pachner_move(u, Move::M62, {6});
    CHECK(isomorphic(back, t));

    // bulk triangles are not 2-6 sites
    CHECK_THROWS_AS(pachner_move(t, Move::M26, {0, 1, 4}), InapplicableSite);
}

TEST_CASE("3-6 and its inverse on the knot") {
    DirectedTriangulation t = direct_default(sphere_join_unknot_disk());
    DirectedTriangulation u = pachner_move(t, Move::M36, {0, 1});
    CHECK(u.complex.vertices.size() == 7);
    CHECK(u.complex.stratum_of_vertex(6) == 1);
    CHECK(u.complex.tets.size() == t.complex.tets.size() + 3);
    CHECK(validate_complex(u.complex).ok());
    CHECK(validate_flaglike(u.complex).ok());

    DirectedTriangulation back = pachner_move(u, Move::M63, {6});
    CHECK(isomorphic(back, t));
}

TEST_CASE("3-6 needs a mostly-bulk link") {
    // without the disk every knot edge qualifies; the link of (0,1) is
    // {3,4,5}, all bulk
    DirectedTriangulation t = direct_default(sphere_join_unknot());
    DirectedTriangulation u = pachner_move(t, Move::M36, {0, 1});
    CHECK(validate_flaglike(u.complex).ok());
    CHECK(u.complex.stratum_of_vertex(6) == 1);
}

TEST_CASE("candidate sites respect strata") {
    DirectedTriangulation t = direct_default(sphere_join_unknot_disk());
    for (const auto& site : candidate_sites(t, Move::M26))
        CHECK(t.complex.stratum_of_triangle(make_tri(site[0], site[1], site[2])) == 2);
    for (const auto& site : candidate_sites(t, Move::M36))
        CHECK(t.complex.stratum_of_edge(make_edge(site[0], site[1])) == 1);
    for (const auto& site : candidate_sites(t, Move::M23))
        CHECK(t.complex.stratum_of_triangle(make_tri(site[0], site[1], site[2])) == 3);
}

TEST_CASE("moves keep the triangulation directable") {
    DirectedTriangulation t = direct_default(sphere_join_unknot_disk());
    DirectedTriangulation u = pachner_move(t, Move::M26, {0, 1, 3});
    u = pachner_move(u, Move::M14, {u.complex.tets.front().v[0],
                                    u.complex.tets.front().v[1],
                                    u.complex.tets.front().v[2],
                                    u.complex.tets.front().v[3]});
    CHECK(validate_complex(u.complex).ok());
    CHECK(validate_flaglike(u.complex).ok());
    for (const auto& tet : u.complex.tets)
        CHECK((u.epsilon(tet) == 1 || u.epsilon(tet) == -1));
}
