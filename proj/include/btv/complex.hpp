#ifndef BTV_COMPLEX_HPP
#define BTV_COMPLEX_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "btv/biparcel.hpp"  // ValidationReport

namespace btv {

struct InvalidStratification : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using EdgeKey = std::array<int, 2>;  // sorted vertex ids
using TriKey = std::array<int, 3>;   // sorted vertex ids

EdgeKey make_edge(int a, int b);
TriKey make_tri(int a, int b, int c);

/// Sign of the permutation sorting the tuple; 0 if entries repeat.
int sort_parity(std::array<int, 4> v);
int sort_parity3(std::array<int, 3> v);

/// Abstract closed stratified 3-dimensional simplicial complex. The stratum
/// of a simplex defaults to the maximum stratum dimension of its vertices;
/// explicit overrides may push an edge or triangle into a higher stratum.
struct StratifiedComplex {
    struct Vertex {
        int id;
        int stratum;  // 0..3
        bool operator==(const Vertex&) const = default;
    };
    struct Tet {
        std::array<int, 4> v;
        int sign;  // +1 / -1
        bool operator==(const Tet&) const = default;
    };

    std::vector<Vertex> vertices;  // sorted by id
    std::vector<Tet> tets;
    std::map<EdgeKey, int> edge_stratum_override;
    std::map<TriKey, int> tri_stratum_override;

    const Vertex* find_vertex(int id) const;
    int stratum_of_vertex(int id) const;
    int stratum_of_edge(const EdgeKey& e) const;
    int stratum_of_triangle(const TriKey& t) const;

    std::vector<EdgeKey> edges() const;
    std::vector<TriKey> triangles() const;
    std::vector<int> occurring_strata() const;  // sorted ascending
    int max_vertex_id() const;

    bool operator==(const StratifiedComplex&) const = default;
};

/// Closed-pseudo-manifold and orientation-consistency checks: every triangle
/// in exactly two tets, with opposite induced orientations.
ValidationReport validate_complex(const StratifiedComplex& sc);

/// Per-simplex flag check of the stratification.
ValidationReport validate_flaglike(const StratifiedComplex& sc);

/// 24 tets per tet; each barycenter inherits the stratum of its simplex.
StratifiedComplex barycentric_subdivide(const StratifiedComplex& sc);

StratifiedComplex disjoint_union(const StratifiedComplex& a,
                                 const StratifiedComplex& b);

/// Boundary of the 4-simplex: the all-bulk triangulation of S^3 with 5 tets.
StratifiedComplex boundary_4_simplex();

/// S^3 as the join of two 3-cycles; one 3-cycle is the 1-stratum knot.
StratifiedComplex sphere_join_unknot();

/// Same complex with the cone of the knot to a vertex of the other 3-cycle
/// marked as the 2-stratum disk.
StratifiedComplex sphere_join_unknot_disk();

/// Assigns tet signs by propagation across shared triangles, starting from
/// +1 on the first tet of each connected component.
void orient_by_propagation(StratifiedComplex& sc);

}  // namespace btv

#endif
