#ifndef BTV_CONSTRUCTIONS_HPP
#define BTV_CONSTRUCTIONS_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "btv/biparcel.hpp"
#include "btv/gaunt.hpp"

namespace btv {

struct InvalidCocycle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidFunctor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidSector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Normalized k^x-valued 3-cochain on a finite group (one-object groupoid).
struct Cochain3 {
    FiniteGroupoid group;
    std::map<std::array<int, 3>, cplx> values;  // (g, h, k) -> nonzero scalar

    cplx at(int g, int h, int k) const;
    bool normalized(double tol = kDefaultTolerance) const;
};

struct CocycleCheck {
    bool ok;
    std::array<int, 4> witness;  // first violated instance (g, h, k, l)
};

/// Cocycle condition w(h,k,l) w(g,hk,l) w(g,h,k) = w(gh,k,l) w(g,h,kl).
CocycleCheck check_cocycle(const Cochain3& c, double tol = kDefaultTolerance);

/// Biparcel-shaped data over an arbitrary finite base category; intermediate
/// form before pullback to a gaunt base.
struct BicategoryData {
    FinCat base;
    std::vector<SimpleArrow> simples;
    std::map<int, int> identity_simple;
    std::map<std::array<int, 3>, int> fusion;
    std::map<TetKey, cplx> tet_plus;
    std::map<TetKey, cplx> tet_minus;
};

/// Same local checks as validate(Biparcel) except gauntness of the base.
ValidationReport validate_bicat(const BicategoryData& d,
                                double tol = kDefaultTolerance);

/// Pointed biparcel: one dim-1 simple per base arrow, fusion given by
/// composition, amplitudes by the cocycle transported along phi.
Biparcel pointed_biparcel(const FiniteGroupoid& G, const Cochain3& omega,
                          const GauntCategory& gamma, const Functor& phi);

/// One-object biparcel from fusion-category data. gamma_arrow fields of the
/// input simples are overwritten; validation failures are thrown.
Biparcel fusion_biparcel(std::vector<SimpleArrow> simples, int identity_simple_id,
                         std::map<std::array<int, 3>, int> fusion,
                         std::map<TetKey, cplx> tet_plus,
                         std::map<TetKey, cplx> tet_minus);

/// C # G: simples are pairs (simple of C, arrow of G); fusion and amplitudes
/// inherited coordinate-wise with the groupoid bookkeeping.
BicategoryData sharp_construction(const Biparcel& c, const FiniteGroupoid& g);

/// Pullback along phi: gamma -> base(d). Simples over an arrow of gamma are
/// the simples of d over its image; duals are kept only when the reversed
/// arrow exists in gamma.
Biparcel pullback(const BicategoryData& d, const GauntCategory& gamma,
                  const Functor& phi);

struct SectorSimple {
    int id;
    std::pair<int, int> sector;  // (i, j) in J x J
    cplx dim;
    std::optional<int> dual;
};

/// Multifusion data with identity summands I_j reassembled as data over the
/// chaotic preorder on J.
BicategoryData multifusion_sectors(const std::vector<int>& J,
                                   const std::vector<SectorSimple>& simples,
                                   const std::map<int, int>& identity_summand,
                                   const std::map<std::array<int, 3>, int>& fusion,
                                   const std::map<TetKey, cplx>& tet_plus,
                                   const std::map<TetKey, cplx>& tet_minus);

/// Remap of simple ids produced by the pairing constructions, for tests that
/// compare tables structurally.
int paired_simple_id(int simple_index, int arrow_index, int n_arrows);

}  // namespace btv

#endif
