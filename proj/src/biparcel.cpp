#include "btv/biparcel.hpp"

#include <cmath>
#include <sstream>

namespace btv {

const SimpleArrow* Biparcel::find_simple(int id) const {
    for (const auto& s : simples)
        if (s.id == id) return &s;
    return nullptr;
}

const SimpleArrow& Biparcel::simple(int id) const {
    const SimpleArrow* s = find_simple(id);
    if (!s) throw std::invalid_argument("unknown simple id " + std::to_string(id));
    return *s;
}

std::vector<int> Biparcel::simples_over(int gamma_arrow) const {
    std::vector<int> out;
    for (const auto& s : simples)
        if (s.gamma_arrow == gamma_arrow) out.push_back(s.id);
    return out;
}

int Biparcel::mult(int a, int b, int c) const {
    auto it = fusion.find({a, b, c});
    return it == fusion.end() ? 0 : it->second;
}

std::vector<std::pair<int, int>> Biparcel::fusion_targets(int a, int b) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, m] : fusion)
        if (key[0] == a && key[1] == b && m > 0) out.emplace_back(key[2], m);
    return out;
}

bool Biparcel::gamma_consistent(const TetKey& k) const {
    // edge order: i=01, j=12, k=23, l=03, m=02, n=13
    const auto* si = find_simple(k.edge[0]);
    const auto* sj = find_simple(k.edge[1]);
    const auto* sk = find_simple(k.edge[2]);
    const auto* sl = find_simple(k.edge[3]);
    const auto* sm = find_simple(k.edge[4]);
    const auto* sn = find_simple(k.edge[5]);
    if (!si || !sj || !sk || !sl || !sm || !sn) return false;
    auto gij = base.compose_opt(si->gamma_arrow, sj->gamma_arrow);
    if (!gij || *gij != sm->gamma_arrow) return false;
    auto gjk = base.compose_opt(sj->gamma_arrow, sk->gamma_arrow);
    if (!gjk || *gjk != sn->gamma_arrow) return false;
    auto gmk = base.compose_opt(sm->gamma_arrow, sk->gamma_arrow);
    if (!gmk || *gmk != sl->gamma_arrow) return false;
    return true;
}

bool Biparcel::admissible(const TetKey& k) const {
    if (!gamma_consistent(k)) return false;
    const int i = k.edge[0], j = k.edge[1], kk = k.edge[2], l = k.edge[3],
              m = k.edge[4], n = k.edge[5];
    const int n012 = mult(i, j, m);
    const int n123 = mult(j, kk, n);
    const int n013 = mult(i, n, l);
    const int n023 = mult(m, kk, l);
    if (n012 == 0 || n123 == 0 || n013 == 0 || n023 == 0) return false;
    return k.tri[0] >= 0 && k.tri[0] < n012 && k.tri[1] >= 0 && k.tri[1] < n123 &&
           k.tri[2] >= 0 && k.tri[2] < n013 && k.tri[3] >= 0 && k.tri[3] < n023;
}

cplx global_constant(const Biparcel& b, int object) {
    if (!b.base.has_object(object))
        throw std::invalid_argument("unknown base object " + std::to_string(object));
    cplx c{0.0, 0.0};
    for (int s : b.simples_over(b.base.identity_of(object))) {
        cplx d = b.simple(s).dim;
        c += d * d;
    }
    return c;
}

cplx tet_amplitude(const Biparcel& b, const TetKey& key, int sign) {
    if (!b.admissible(key)) {
        std::ostringstream os;
        os << "inadmissible tetrahedron coloring (" << key.edge[0];
        for (int q = 1; q < 6; ++q) os << "," << key.edge[q];
        os << ";" << key.tri[0];
        for (int q = 1; q < 4; ++q) os << "," << key.tri[q];
        os << ")";
        throw InadmissibleColoring(os.str());
    }
    const auto& table = sign >= 0 ? b.tet_plus : b.tet_minus;
    auto it = table.find(key);
    return it == table.end() ? cplx{0.0, 0.0} : it->second;
}

namespace {

std::string simple_name(int id) { return "simple " + std::to_string(id); }

}  // namespace

ValidationReport validate(const Biparcel& b, double tol) {
    ValidationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& wit = "") {
        rep.checks.push_back({name, pass, pass ? "" : wit});
    };

    // base is a well-formed gaunt category
    {
        auto bad = b.base.check_category();
        auto gaunt = b.base.check_gaunt();
        add("base-category", bad.empty(), bad.empty() ? "" : bad.front());
        add("base-gaunt", gaunt.empty(), gaunt.empty() ? "" : gaunt.front());
    }

    // every simple lies over a base arrow, with non-zero dimension
    {
        bool ok = true;
        std::string wit;
        for (const auto& s : b.simples) {
            if (!b.base.find_arrow(s.gamma_arrow)) {
                ok = false;
                wit = simple_name(s.id) + " lies over unknown base arrow";
                break;
            }
            if (std::abs(s.dim) <= tol) {
                ok = false;
                wit = simple_name(s.id) + " has zero dimension";
                break;
            }
        }
        add("simples-well-formed", ok, wit);
    }

    // identity simples: one per object, over the identity arrow, dim 1, self-dual
    {
        bool ok = true;
        std::string wit;
        for (int obj : b.base.objects) {
            auto it = b.identity_simple.find(obj);
            if (it == b.identity_simple.end()) {
                ok = false;
                wit = "object " + std::to_string(obj) + " has no identity simple";
                break;
            }
            const SimpleArrow* s = b.find_simple(it->second);
            if (!s || s->gamma_arrow != b.base.identity_of(obj)) {
                ok = false;
                wit = "identity simple of object " + std::to_string(obj) +
                      " does not lie over the identity arrow";
                break;
            }
            if (!approx(s->dim, cplx{1.0, 0.0}, tol)) {
                ok = false;
                wit = "identity simple of object " + std::to_string(obj) +
                      " has dim != 1";
                break;
            }
            if (s->dual && *s->dual != s->id) {
                ok = false;
                wit = "identity simple of object " + std::to_string(obj) +
                      " is not its own dual";
                break;
            }
        }
        add("identity-simples", ok, wit);
    }

    // dual involution, reversed base arrow, dim equality
    {
        bool inv_ok = true, rev_ok = true, dim_ok = true;
        std::string inv_w, rev_w, dim_w;
        for (const auto& s : b.simples) {
            if (!s.dual) continue;
            const SimpleArrow* d = b.find_simple(*s.dual);
            if (!d || !d->dual || *d->dual != s.id) {
                if (inv_ok) inv_w = simple_name(s.id) + " dual is not involutive";
                inv_ok = false;
                continue;
            }
            const Arrow& ga = b.base.arrow(s.gamma_arrow);
            const Arrow& gd = b.base.arrow(d->gamma_arrow);
            if (gd.src != ga.tgt || gd.tgt != ga.src) {
                if (rev_ok)
                    rev_w = simple_name(s.id) + " dual does not reverse the base arrow";
                rev_ok = false;
            }
            if (!approx(s.dim, d->dim, tol)) {
                if (dim_ok) dim_w = simple_name(s.id) + " dual has different dim";
                dim_ok = false;
            }
        }
        add("dual-involution", inv_ok, inv_w);
        add("dual-reverses-base-arrow", rev_ok, rev_w);
        add("dual-dim-equality", dim_ok, dim_w);
    }

    // duality pairing N(a, abar; id) = 1 when the dual is present
    {
        bool ok = true;
        std::string wit;
        for (const auto& s : b.simples) {
            if (!s.dual) continue;
            const Arrow& ga = b.base.arrow(s.gamma_arrow);
            auto it = b.identity_simple.find(ga.src);
            if (it == b.identity_simple.end()) continue;
            if (b.mult(s.id, *s.dual, it->second) != 1) {
                ok = false;
                wit = "N(" + std::to_string(s.id) + ", dual, id) != 1";
                break;
            }
        }
        add("duality-pairing", ok, wit);
    }

    // unit law: N(id, a) = {a:1}, N(a, id) = {a:1}
    {
        bool ok = true;
        std::string wit;
        for (const auto& s : b.simples) {
            const Arrow& ga = b.base.arrow(s.gamma_arrow);
            auto idsrc = b.identity_simple.find(ga.src);
            auto idtgt = b.identity_simple.find(ga.tgt);
            if (idsrc != b.identity_simple.end()) {
                for (int c : b.simples_over(s.gamma_arrow)) {
                    int want = (c == s.id) ? 1 : 0;
                    if (b.mult(idsrc->second, s.id, c) != want) {
                        ok = false;
                        wit = "unit law fails on (id, " + std::to_string(s.id) + ")";
                    }
                }
            }
            if (idtgt != b.identity_simple.end()) {
                for (int c : b.simples_over(s.gamma_arrow)) {
                    int want = (c == s.id) ? 1 : 0;
                    if (b.mult(s.id, idtgt->second, c) != want) {
                        ok = false;
                        wit = "unit law fails on (" + std::to_string(s.id) + ", id)";
                    }
                }
            }
            if (!ok) break;
        }
        add("unit-law", ok, wit);
    }

    // completeness: sum_c N(a,b,c) dim(c) = dim(a) dim(b) on composable pairs
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : b.simples) {
            for (const auto& bb : b.simples) {
                auto comp = b.base.compose_opt(a.gamma_arrow, bb.gamma_arrow);
                if (!comp) continue;
                cplx sum{0.0, 0.0};
                for (int c : b.simples_over(*comp))
                    sum += static_cast<double>(b.mult(a.id, bb.id, c)) *
                           b.simple(c).dim;
                if (!approx(sum, a.dim * bb.dim, tol)) {
                    ok = false;
                    std::ostringstream os;
                    os << "completeness fails on (" << a.id << "," << bb.id << ")";
                    wit = os.str();
                    break;
                }
            }
            if (!ok) break;
        }
        add("completeness", ok, wit);
    }

    // fusion entries must land over the composite base arrow
    {
        bool ok = true;
        std::string wit;
        for (const auto& [key, m] : b.fusion) {
            if (m < 0) {
                ok = false;
                wit = "negative multiplicity";
                break;
            }
            if (m == 0) continue;
            const SimpleArrow* a = b.find_simple(key[0]);
            const SimpleArrow* bb = b.find_simple(key[1]);
            const SimpleArrow* c = b.find_simple(key[2]);
            if (!a || !bb || !c) {
                ok = false;
                wit = "fusion entry references unknown simple";
                break;
            }
            auto comp = b.base.compose_opt(a->gamma_arrow, bb->gamma_arrow);
            if (!comp || *comp != c->gamma_arrow) {
                ok = false;
                std::ostringstream os;
                os << "fusion entry (" << key[0] << "," << key[1] << "," << key[2]
                   << ") does not lie over the composite";
                wit = os.str();
                break;
            }
        }
        add("fusion-over-composite", ok, wit);
    }

    // c_n != 0 and non-empty identity fibers
    {
        bool ok = true;
        std::string wit;
        for (int obj : b.base.objects) {
            if (b.simples_over(b.base.identity_of(obj)).empty()) {
                ok = false;
                wit = "no simples over the identity of object " + std::to_string(obj);
                break;
            }
            cplx c = global_constant(b, obj);
            if (std::abs(c) <= tol) {
                ok = false;
                wit = "c_" + std::to_string(obj) + " vanishes";
                break;
            }
        }
        add("vertex-constants", ok, wit);
    }

    // every stored amplitude sits on an admissible key
    {
        bool ok = true;
        std::string wit;
        for (const auto* table : {&b.tet_plus, &b.tet_minus}) {
            for (const auto& [key, val] : *table) {
                if (std::abs(val) <= tol) continue;
                if (!b.admissible(key)) {
                    ok = false;
                    std::ostringstream os;
                    os << "amplitude on inadmissible key (" << key.edge[0];
                    for (int q = 1; q < 6; ++q) os << "," << key.edge[q];
                    os << ")";
                    wit = os.str();
                    break;
                }
            }
            if (!ok) break;
        }
        add("amplitude-admissibility", ok, wit);
    }

    return rep;
}

}  // namespace btv
