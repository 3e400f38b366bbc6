#ifndef BTV_STATESUM_HPP
#define BTV_STATESUM_HPP

#include <functional>
#include <vector>

#include "btv/biparcel.hpp"
#include "btv/constructions.hpp"
#include "btv/moves.hpp"

namespace btv {

/// A global coloring: a simple per edge and a multiplicity index per
/// triangle.
struct Coloring {
    std::map<EdgeKey, int> edge;
    std::map<TriKey, int> tri;
};

/// The tetrahedron key of a tet under the coloring, with respect to the
/// direction-sorted vertex tuple.
TetKey tet_key(const DirectedTriangulation& t, const StratifiedComplex::Tet& tet,
               const Coloring& c);

/// Full weight of one coloring: product over vertices of the inverse global
/// constant at the vertex object, over edges of the simple dimension and
/// over tets of the signed amplitude.
cplx coloring_weight(const Biparcel& b, const DirectedTriangulation& t,
                     const Coloring& c);

/// Deterministic backtracking enumeration of the admissible colorings:
/// edges in sorted-key order (pruning on the first zero hom-space), then
/// triangle indices. The visitor sees every admissible coloring exactly once.
void enumerate_colorings(const Biparcel& b, const DirectedTriangulation& t,
                         const std::function<void(const Coloring&)>& visit);

struct InvariantResult {
    cplx value;
    long long colorings;  // admissible colorings visited
};

/// State-sum invariant of the directed triangulation. With threads > 1 the
/// search is split on the first edge's candidates; partial sums are combined
/// in partition order so the result is deterministic.
InvariantResult invariant(const Biparcel& b, const DirectedTriangulation& t,
                          int threads = 1);

/// Brute-force Dijkgraaf-Witten oracle for an all-bulk triangulation: sums
/// omega over flat group-element labelings of the directed edges, normalized
/// by |G|^-V. Independent of invariant() by construction.
cplx dw_oracle(const std::vector<std::vector<int>>& group_table,
               const Cochain3& omega, const DirectedTriangulation& t);

struct MoveStep {
    Move move;
    MoveSite site;
};

struct InvarianceStep {
    std::string move;
    MoveSite site;
    cplx value;
    double deviation;  // |value - base_value|
};

struct InvarianceReport {
    cplx base_value;
    std::vector<InvarianceStep> steps;
    double max_deviation = 0.0;
    double tolerance;
    bool ok = true;
};

/// Applies the moves in sequence, recomputing the invariant after each and
/// comparing against the starting value.
InvarianceReport invariance_check(const Biparcel& b, const DirectedTriangulation& t,
                                  const std::vector<MoveStep>& steps,
                                  double tol = kDefaultTolerance, int threads = 1);

}  // namespace btv

#endif
