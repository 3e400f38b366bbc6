#include "btv/builtin.hpp"

#include <cmath>
#include <numbers>

namespace btv {

Cochain3 trivial_cocycle(int n) {
    Cochain3 c;
    c.group = cyclic_groupoid(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k) c.values[{a, b, k}] = 1.0;
    return c;
}

Cochain3 cyclic_cocycle(int n, int p) {
    Cochain3 c;
    c.group = cyclic_groupoid(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k) {
                // exact on the rational lattice: phase q/n turns of the circle
                const int q = ((p * a * ((b + k) / n)) % n + n) % n;
                if (2 * q % n == 0) {
                    c.values[{a, b, k}] = cplx{(2 * q == n) ? -1.0 : 1.0, 0.0};
                } else {
                    double arg = 2.0 * std::numbers::pi * q / n;
                    c.values[{a, b, k}] = cplx{std::cos(arg), std::sin(arg)};
                }
            }
    return c;
}

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return table;
}

Biparcel vec_cyclic(int n, const Cochain3& omega) {
    std::vector<SimpleArrow> simples;
    for (int a = 0; a < n; ++a)
        simples.push_back({a, 0, cplx{1.0, 0.0}, (n - a) % n});

    std::map<std::array<int, 3>, int> fusion;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) fusion[{a, b, (a + b) % n}] = 1;

    std::map<TetKey, cplx> plus, minus;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k) {
                TetKey key{{a, b, k, (a + b + k) % n, (a + b) % n, (b + k) % n},
                           {0, 0, 0, 0}};
                cplx w = omega.at(a, b, k);
                plus[key] = w;
                minus[key] = 1.0 / w;
            }
    return fusion_biparcel(std::move(simples), 0, std::move(fusion),
                           std::move(plus), std::move(minus));
}

Biparcel trivial_biparcel() { return vec_cyclic(1, trivial_cocycle(1)); }

Biparcel fibonacci_biparcel() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double dims[2] = {1.0, phi};

    std::vector<SimpleArrow> simples{{0, 0, cplx{1.0, 0.0}, 0},
                                     {1, 0, cplx{phi, 0.0}, 1}};
    std::map<std::array<int, 3>, int> fusion;
    fusion[{0, 0, 0}] = 1;
    fusion[{0, 1, 1}] = 1;
    fusion[{1, 0, 1}] = 1;
    fusion[{1, 1, 0}] = 1;
    fusion[{1, 1, 1}] = 1;
    auto mult = [&](int a, int b, int c) {
        auto it = fusion.find({a, b, c});
        return it == fusion.end() ? 0 : it->second;
    };

    // the nontrivial associator block, an involutive symmetric matrix
    const double s = 1.0 / std::sqrt(phi);
    const double F[2][2] = {{1.0 / phi, s}, {s, -1.0 / phi}};
    auto f_entry = [&](int i, int j, int k, int l, int m, int n) {
        if (i == 1 && j == 1 && k == 1 && l == 1) return F[m][n];
        return 1.0;
    };

    std::map<TetKey, cplx> plus, minus;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    for (int m = 0; m < 2; ++m)
                        for (int n = 0; n < 2; ++n) {
                            if (!mult(i, j, m) || !mult(j, k, n) || !mult(i, n, l) ||
                                !mult(m, k, l))
                                continue;
                            TetKey key{{i, j, k, l, m, n}, {0, 0, 0, 0}};
                            const double g = f_entry(i, j, k, l, m, n) /
                                             std::sqrt(dims[m] * dims[n]);
                            plus[key] = g;
                            minus[key] = g;
                        }
    return fusion_biparcel(std::move(simples), 0, std::move(fusion),
                           std::move(plus), std::move(minus));
}

Biparcel builtin_category(const std::string& name) {
    if (name == "trivial") return trivial_biparcel();
    if (name == "vec-z2") return vec_cyclic(2, trivial_cocycle(2));
    if (name == "vec-z2-twisted") return vec_cyclic(2, cyclic_cocycle(2, 1));
    if (name == "vec-z3") return vec_cyclic(3, trivial_cocycle(3));
    if (name == "vec-z3-twisted") return vec_cyclic(3, cyclic_cocycle(3, 1));
    if (name == "fibonacci") return fibonacci_biparcel();
    throw std::invalid_argument("unknown built-in category " + name);
}

Cochain3 builtin_cochain(const std::string& name) {
    if (name == "z2-trivial") return trivial_cocycle(2);
    if (name == "z2-nontrivial") return cyclic_cocycle(2, 1);
    if (name == "z3-trivial") return trivial_cocycle(3);
    if (name == "z3-twisted") return cyclic_cocycle(3, 1);
    throw std::invalid_argument("unknown built-in cochain " + name);
}

StratifiedComplex builtin_triangulation(const std::string& name) {
    if (name == "boundary-4-simplex") return boundary_4_simplex();
    if (name == "sphere-join-unknot") return sphere_join_unknot();
    if (name == "sphere-join-unknot-disk") return sphere_join_unknot_disk();
    throw std::invalid_argument("unknown built-in triangulation " + name);
}

std::vector<std::string> builtin_category_names() {
    return {"trivial",  "vec-z2",         "vec-z2-twisted",
            "vec-z3",   "vec-z3-twisted", "fibonacci"};
}

std::vector<std::string> builtin_cochain_names() {
    return {"z2-trivial", "z2-nontrivial", "z3-trivial", "z3-twisted"};
}

std::vector<std::string> builtin_triangulation_names() {
    return {"boundary-4-simplex", "sphere-join-unknot", "sphere-join-unknot-disk"};
}

}  // namespace btv
