#include "btv/complex.hpp"

#include "doctest.h"

using namespace btv;

TEST_CASE("boundary of the 4-simplex") {
    StratifiedComplex sc = boundary_4_simplex();
    CHECK(sc.vertices.size() == 5);
    CHECK(sc.edges().size() == 10);
    CHECK(sc.triangles().size() == 10);
    CHECK(sc.tets.size() == 5);
    CHECK(validate_complex(sc).ok());
    CHECK(validate_flaglike(sc).ok());
    CHECK(sc.occurring_strata() == std::vector<int>{3});
}

TEST_CASE("sphere as a join with a knotted circle") {
    StratifiedComplex sc = sphere_join_unknot();
    CHECK(sc.vertices.size() == 6);
    CHECK(sc.edges().size() == 15);
    CHECK(sc.triangles().size() == 18);
    CHECK(sc.tets.size() == 9);
    // Euler characteristic of a closed 3-manifold
    CHECK(6 - 15 + 18 - 9 == 0);
    CHECK(validate_complex(sc).ok());
    CHECK(validate_flaglike(sc).ok());
    CHECK(sc.occurring_strata() == std::vector<int>{1, 3});
    // the knot is the derived 1-stratum
    CHECK(sc.stratum_of_edge(make_edge(0, 1)) == 1);
    CHECK(sc.stratum_of_edge(make_edge(0, 3)) == 3);
}

TEST_CASE("disk spanning the knot") {
    StratifiedComplex sc = sphere_join_unknot_disk();
    CHECK(validate_complex(sc).ok());
    CHECK(validate_flaglike(sc).ok());
    CHECK(sc.occurring_strata() == std::vector<int>{1, 2, 3});
    // the cone triangles of the knot to vertex 3 form the 2-stratum disk
    CHECK(sc.stratum_of_triangle(make_tri(0, 1, 3)) == 2);
    CHECK(sc.stratum_of_triangle(make_tri(1, 2, 3)) == 2);
    CHECK(sc.stratum_of_triangle(make_tri(0, 1, 4)) == 3);
    CHECK(sc.stratum_of_edge(make_edge(0, 3)) == 2);
}

TEST_CASE("stratum overrides can break flag-likeness") {
    StratifiedComplex sc = sphere_join_unknot();
    // an edge of the knot relabeled as bulk between two 1-stratum vertices
    sc.edge_stratum_override[make_edge(0, 1)] = 3;
    CHECK_FALSE(validate_flaglike(sc).ok());
}

TEST_CASE("orientation consistency is checked") {
    StratifiedComplex sc = boundary_4_simplex();
    sc.tets[2].sign = -sc.tets[2].sign;
    CHECK_FALSE(validate_complex(sc).ok());

    SUBCASE("propagation restores a consistent orientation") {
        orient_by_propagation(sc);
        CHECK(validate_complex(sc).ok());
    }
}

TEST_CASE("open star is rejected") {
    StratifiedComplex sc = boundary_4_simplex();
    sc.tets.pop_back();
    CHECK_FALSE(validate_complex(sc).ok());
}

TEST_CASE("barycentric subdivision") {
    StratifiedComplex sub = barycentric_subdivide(boundary_4_simplex());
    CHECK(sub.vertices.size() == 30);  // 5 + 10 + 10 + 5 barycenters
    CHECK(sub.tets.size() == 120);
    CHECK(validate_complex(sub).ok());
    CHECK(validate_flaglike(sub).ok());
    // Euler characteristic stays zero
    int chi = static_cast<int>(sub.vertices.size()) -
              static_cast<int>(sub.edges().size()) +
              static_cast<int>(sub.triangles().size()) -
              static_cast<int>(sub.tets.size());
    CHECK(chi == 0);
}

TEST_CASE("subdivision keeps the knot in its stratum") {
    StratifiedComplex sub = barycentric_subdivide(sphere_join_unknot());
    CHECK(validate_complex(sub).ok());
    CHECK(validate_flaglike(sub).ok());
    int knot_vertices = 0;
    for (const auto& v : sub.vertices)
        if (v.stratum == 1) ++knot_vertices;
    // original 3 knot vertices plus one barycenter per knot edge
    CHECK(knot_vertices == 6);
}

TEST_CASE("disjoint union offsets ids") {
    StratifiedComplex a = boundary_4_simplex();
    StratifiedComplex u = disjoint_union(a, sphere_join_unknot());
    CHECK(u.vertices.size() == 11);
    CHECK(u.tets.size() == 14);
    CHECK(validate_complex(u).ok());
    CHECK(validate_flaglike(u).ok());
}
