#ifndef BTV_CONSISTENCY_HPP
#define BTV_CONSISTENCY_HPP

#include "btv/biparcel.hpp"

namespace btv {

/// Verifies the local move identities the amplitude tables must satisfy for
/// the state sum to be triangulation-independent: at every base object, the
/// 2-3 and 1-4 bipyramid/cone configurations are summed over their interior
/// colorings for every clamped boundary coloring and compared.
ValidationReport check_move_consistency(const Biparcel& b,
                                        double tol = kDefaultTolerance);

}  // namespace btv

#endif
