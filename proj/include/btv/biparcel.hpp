#ifndef BTV_BIPARCEL_HPP
#define BTV_BIPARCEL_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "btv/amplitude.hpp"
#include "btv/gaunt.hpp"

namespace btv {

/// Representative of an isomorphism class of simple 1-arrows, lying over a
/// base arrow. The dual is absent in the quasi-spherical case, when the
/// reversed base arrow does not exist.
struct SimpleArrow {
    int id;
    int gamma_arrow;
    cplx dim;
    std::optional<int> dual;
};

/// Coloring key of a single tetrahedron: the six edge simples in the order
/// (01, 12, 23, 03, 02, 13) and the four triangle multiplicity indices in
/// the order (012, 123, 013, 023).
struct TetKey {
    std::array<int, 6> edge;  // i, j, k, l, m, n
    std::array<int, 4> tri;   // t012, t123, t013, t023
    auto operator<=>(const TetKey&) const = default;
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string witness;  // empty when pass
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::vector<CheckResult> failures() const {
        std::vector<CheckResult> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(c);
        return out;
    }
};

struct InadmissibleColoring : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Validated categorical data for the state sum: simples over a gaunt base,
/// fusion multiplicities, tetrahedron amplitude tables and per-object
/// constants.
struct Biparcel {
    GauntCategory base;
    std::vector<SimpleArrow> simples;            // sorted by id
    std::map<int, int> identity_simple;          // base object -> simple id
    std::map<std::array<int, 3>, int> fusion;    // (a, b, c) -> multiplicity
    std::map<TetKey, cplx> tet_plus;
    std::map<TetKey, cplx> tet_minus;

    const SimpleArrow& simple(int id) const;
    const SimpleArrow* find_simple(int id) const;
    std::vector<int> simples_over(int gamma_arrow) const;

    /// Fusion multiplicity N(a, b; c); 0 for omitted entries.
    int mult(int a, int b, int c) const;

    /// All (c, multiplicity) with N(a, b; c) > 0.
    std::vector<std::pair<int, int>> fusion_targets(int a, int b) const;

    /// A key is admissible when all four triangle hom-spaces are non-zero
    /// and each multiplicity index is in range.
    bool admissible(const TetKey& k) const;

    bool gamma_consistent(const TetKey& k) const;
};

/// Runs all numeric consistency checks; findings are report entries, never
/// exceptions.
ValidationReport validate(const Biparcel& b, double tol = kDefaultTolerance);

/// c_n: sum of squared dimensions of the simples over id_n.
cplx global_constant(const Biparcel& b, int object);

/// Table lookup of the tetrahedron amplitude. Absent admissible key -> 0;
/// inadmissible key -> InadmissibleColoring.
cplx tet_amplitude(const Biparcel& b, const TetKey& key, int sign);

}  // namespace btv

#endif
