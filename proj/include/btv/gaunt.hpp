#ifndef BTV_GAUNT_HPP
#define BTV_GAUNT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace btv {

struct Arrow {
    int id;
    int src;
    int tgt;
    bool operator==(const Arrow&) const = default;
};

/// Finite category presented by an explicit (partial) composition table.
/// Composition is diagrammatic: compose(f, g) means "f then g", so it is
/// defined only when tgt(f) == src(g).
struct FinCat {
    std::vector<int> objects;
    std::vector<Arrow> arrows;                    // sorted by id
    std::map<int, int> identities;                // object -> arrow id
    std::map<std::pair<int, int>, int> compose;   // (f, g) -> fg

    bool has_object(int obj) const;
    const Arrow& arrow(int id) const;
    const Arrow* find_arrow(int id) const;
    int identity_of(int obj) const;

    /// Partial composition lookup. nullopt is the partiality signal
    /// (e.g. word-length overflow in a truncated path category).
    std::optional<int> compose_opt(int f, int g) const;

    std::vector<int> hom(int x, int y) const;

    /// Identity laws, associativity on defined triples, src/tgt bookkeeping.
    /// Returns a list of violation messages; empty means valid.
    std::vector<std::string> check_category() const;

    bool operator==(const FinCat&) const = default;
};

struct GauntCategory : FinCat {
    /// Invertibility surrogate for gauntness: no non-identity arrow has a
    /// two-sided inverse.
    std::vector<std::string> check_gaunt() const;
};

struct FiniteGroupoid : FinCat {
    std::map<int, int> inverse;  // arrow -> arrow

    std::vector<std::string> check_groupoid() const;
};

/// Functor between table categories, given by its object and arrow maps.
struct Functor {
    std::map<int, int> object_map;
    std::map<int, int> arrow_map;

    std::vector<std::string> validate(const FinCat& src, const FinCat& tgt) const;
    bool valid(const FinCat& src, const FinCat& tgt) const {
        return validate(src, tgt).empty();
    }
};

/// Totally ordered set {1..n} as a category: one arrow i->j per i <= j.
GauntCategory poset_chain(int n);

/// Unique arrow i -> j of poset_chain(n); requires 1 <= i <= j <= n.
int chain_arrow(const GauntCategory& chain, int i, int j);

/// Truncated presentation of the path category of a digraph: arrows are
/// edge-paths of length <= max_word_length; composition is defined only
/// when the concatenation stays within the bound.
GauntCategory path_category(int n_vertices,
                            const std::vector<std::pair<int, int>>& edges,
                            int max_word_length);

/// Exactly one arrow between every ordered pair of elements of J.
GauntCategory chaotic_preorder(const std::vector<int>& J);

/// One-object groupoid from a group multiplication table over {0..n-1}.
/// Throws std::invalid_argument naming the first violated group axiom.
FiniteGroupoid group_as_groupoid(const std::vector<std::vector<int>>& table);

/// Cyclic group Z/n as a one-object groupoid.
FiniteGroupoid cyclic_groupoid(int n);

/// Codiscrete groupoid on the given objects: one arrow per ordered pair.
FiniteGroupoid codiscrete_groupoid(const std::vector<int>& objects);

}  // namespace btv

#endif
