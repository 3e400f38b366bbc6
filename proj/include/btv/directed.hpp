#ifndef BTV_DIRECTED_HPP
#define BTV_DIRECTED_HPP

#include <map>
#include <vector>

#include "btv/complex.hpp"
#include "btv/gaunt.hpp"

namespace btv {

struct NotDirectable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DeltaInconsistent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class DirectionMode {
    /// Within-stratum edges follow the per-stratum vertex order; cross-stratum
    /// edges point from the lower-dimensional stratum to the higher.
    ExitDimension,
};

/// Flag-like triangulation with directed edges and the induced edge -> base
/// arrow assignment. The base category is the poset chain on the occurring
/// stratum dimensions.
struct DirectedTriangulation {
    StratifiedComplex complex;
    std::map<int, std::vector<int>> stratum_order;  // stratum -> ordered ids
    DirectionMode mode = DirectionMode::ExitDimension;

    // derived
    GauntCategory gamma;
    std::map<int, int> stratum_object;             // stratum dim -> gamma object
    std::map<EdgeKey, std::array<int, 2>> edge_dir;  // sorted key -> (src, tgt)
    std::map<EdgeKey, int> delta;                  // sorted key -> gamma arrow

    int order_pos(int v) const;
    /// true when u precedes v in the direction order (lower stratum first,
    /// then per-stratum position)
    bool before(int u, int v) const;
    std::array<int, 2> directed_edge(int a, int b) const;

    /// Vertices of the tet sorted by edge direction.
    std::array<int, 4> direction_sorted(const StratifiedComplex::Tet& t) const;

    /// +1 when the direction-sorted tuple's orientation class matches the
    /// stored sign, else -1.
    int epsilon(const StratifiedComplex::Tet& t) const;
};

/// Default per-stratum orders: vertex ids ascending within each stratum.
std::map<int, std::vector<int>> default_orders(const StratifiedComplex& sc);

/// Builds the directed triangulation, checking flag-likeness, per-simplex
/// acyclicity and delta-functoriality. edge_dir_overrides (sorted key ->
/// directed pair) exist to exercise the failure paths.
DirectedTriangulation direct(
    const StratifiedComplex& sc, std::map<int, std::vector<int>> orders,
    DirectionMode mode = DirectionMode::ExitDimension,
    const std::map<EdgeKey, std::array<int, 2>>& edge_dir_overrides = {});

DirectedTriangulation direct_default(const StratifiedComplex& sc);

/// Lexicographic relabeling by (stratum, order position), sorted tet list.
StratifiedComplex canonical_form(const DirectedTriangulation& t);

bool isomorphic(const DirectedTriangulation& a, const DirectedTriangulation& b);

}  // namespace btv

#endif
