#ifndef BTV_MOVES_HPP
#define BTV_MOVES_HPP

#include <string>
#include <vector>

#include "btv/directed.hpp"

namespace btv {

struct InapplicableSite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Move { M14, M41, M23, M32, M26, M62, M36, M63 };

std::string move_name(Move m);
Move move_from_name(const std::string& name);

/// Site vertices: 4 for 1-4 (a tet), 1 for 4-1/6-2/6-3 (a vertex), 3 for
/// 2-3/2-6 (a triangle), 2 for 3-2/3-6 (an edge).
using MoveSite = std::vector<int>;

/// Applies the move, returning a freshly directed triangulation. New
/// vertices get fresh ids and are inserted into their per-stratum order
/// immediately after the site's minimal vertex in that stratum.
/// Throws InapplicableSite / InvalidStratification / NotDirectable.
DirectedTriangulation pachner_move(const DirectedTriangulation& t, Move move,
                                   const MoveSite& site);

/// Candidate sites for the move (cheap local checks only; a candidate may
/// still be rejected by pachner_move).
std::vector<MoveSite> candidate_sites(const DirectedTriangulation& t, Move move);

}  // namespace btv

#endif
