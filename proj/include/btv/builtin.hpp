#ifndef BTV_BUILTIN_HPP
#define BTV_BUILTIN_HPP

#include <string>

#include "btv/complex.hpp"
#include "btv/constructions.hpp"

namespace btv {

/// omega == 1 on Z/n.
Cochain3 trivial_cocycle(int n);

/// omega(a, b, c) = exp(2 pi i p a floor((b + c) / n) / n) on Z/n; p = 1 is
/// a generator of H^3(Z/n, U(1)).
Cochain3 cyclic_cocycle(int n, int p);

std::vector<std::vector<int>> cyclic_table(int n);

/// One simple of dimension 1 over the one-object chain.
Biparcel trivial_biparcel();

/// Pointed data of Z/n twisted by the cocycle, over the one-object chain.
Biparcel vec_cyclic(int n, const Cochain3& omega);

/// Rank-2 fusion data with the golden-ratio quantum dimension.
Biparcel fibonacci_biparcel();

/// Named built-ins: "trivial", "vec-z2", "vec-z2-twisted", "vec-z3",
/// "vec-z3-twisted", "fibonacci". Throws std::invalid_argument otherwise.
Biparcel builtin_category(const std::string& name);

/// Named cochains: "z2-trivial", "z2-nontrivial", "z3-trivial", "z3-twisted".
Cochain3 builtin_cochain(const std::string& name);

/// Named generators: "boundary-4-simplex", "sphere-join-unknot",
/// "sphere-join-unknot-disk".
StratifiedComplex builtin_triangulation(const std::string& name);

std::vector<std::string> builtin_category_names();
std::vector<std::string> builtin_cochain_names();
std::vector<std::string> builtin_triangulation_names();

}  // namespace btv

#endif
