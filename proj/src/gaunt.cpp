#include "btv/gaunt.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace btv {

bool FinCat::has_object(int obj) const {
    return std::find(objects.begin(), objects.end(), obj) != objects.end();
}

const Arrow* FinCat::find_arrow(int id) const {
    for (const auto& a : arrows)
        if (a.id == id) return &a;
    return nullptr;
}

const Arrow& FinCat::arrow(int id) const {
    const Arrow* a = find_arrow(id);
    if (!a) throw std::invalid_argument("unknown arrow id " + std::to_string(id));
    return *a;
}

int FinCat::identity_of(int obj) const {
    auto it = identities.find(obj);
    if (it == identities.end())
        throw std::invalid_argument("unknown object " + std::to_string(obj));
    return it->second;
}

std::optional<int> FinCat::compose_opt(int f, int g) const {
    auto it = compose.find({f, g});
    if (it == compose.end()) return std::nullopt;
    return it->second;
}

std::vector<int> FinCat::hom(int x, int y) const {
    std::vector<int> out;
    for (const auto& a : arrows)
        if (a.src == x && a.tgt == y) out.push_back(a.id);
    return out;
}

std::vector<std::string> FinCat::check_category() const {
    std::vector<std::string> bad;
    auto note = [&](std::string m) { bad.push_back(std::move(m)); };

    for (const auto& a : arrows) {
        if (!has_object(a.src) || !has_object(a.tgt))
            note("arrow " + std::to_string(a.id) + " has unknown endpoint");
    }
    for (int obj : objects) {
        auto it = identities.find(obj);
        if (it == identities.end()) {
            note("object " + std::to_string(obj) + " has no identity arrow");
            continue;
        }
        const Arrow* id = find_arrow(it->second);
        if (!id || id->src != obj || id->tgt != obj)
            note("identity of object " + std::to_string(obj) + " is not an endo-arrow");
    }
    // src/tgt consistency of the table
    for (const auto& [pair, fg] : compose) {
        const Arrow* f = find_arrow(pair.first);
        const Arrow* g = find_arrow(pair.second);
        const Arrow* h = find_arrow(fg);
        if (!f || !g || !h) {
            note("composition table references unknown arrow");
            continue;
        }
        if (f->tgt != g->src)
            note("composite defined for non-composable pair (" +
                 std::to_string(f->id) + "," + std::to_string(g->id) + ")");
        else if (h->src != f->src || h->tgt != g->tgt)
            note("composite of (" + std::to_string(f->id) + "," +
                 std::to_string(g->id) + ") has wrong endpoints");
    }
    // identity laws
    for (const auto& a : arrows) {
        auto ids = identities.find(a.src);
        auto idt = identities.find(a.tgt);
        if (ids != identities.end()) {
            auto c = compose_opt(ids->second, a.id);
            if (c && *c != a.id)
                note("left identity law fails for arrow " + std::to_string(a.id));
        }
        if (idt != identities.end()) {
            auto c = compose_opt(a.id, idt->second);
            if (c && *c != a.id)
                note("right identity law fails for arrow " + std::to_string(a.id));
        }
    }
    // associativity on every defined triple
    for (const auto& f : arrows)
        for (const auto& g : arrows) {
            auto fg = compose_opt(f.id, g.id);
            if (!fg) continue;
            for (const auto& h : arrows) {
                auto gh = compose_opt(g.id, h.id);
                auto fg_h = compose_opt(*fg, h.id);
                auto f_gh = gh ? compose_opt(f.id, *gh) : std::nullopt;
                if (fg_h && f_gh && *fg_h != *f_gh) {
                    std::ostringstream os;
                    os << "associativity fails on (" << f.id << "," << g.id << ","
                       << h.id << ")";
                    note(os.str());
                }
            }
        }
    return bad;
}

std::vector<std::string> GauntCategory::check_gaunt() const {
    std::vector<std::string> bad;
    auto is_identity = [&](int arrow_id) {
        for (const auto& [obj, id] : identities)
            if (id == arrow_id) return true;
        return false;
    };
    for (const auto& f : arrows) {
        if (is_identity(f.id)) continue;
        for (const auto& g : arrows) {
            auto fg = compose_opt(f.id, g.id);
            auto gf = compose_opt(g.id, f.id);
            if (fg && gf && is_identity(*fg) && is_identity(*gf)) {
                bad.push_back("non-identity arrow " + std::to_string(f.id) +
                              " is invertible (inverse " + std::to_string(g.id) + ")");
            }
        }
    }
    return bad;
}

std::vector<std::string> FiniteGroupoid::check_groupoid() const {
    std::vector<std::string> bad = check_category();
    for (const auto& a : arrows) {
        auto it = inverse.find(a.id);
        if (it == inverse.end()) {
            bad.push_back("arrow " + std::to_string(a.id) + " has no inverse");
            continue;
        }
        const Arrow* b = find_arrow(it->second);
        if (!b || b->src != a.tgt || b->tgt != a.src) {
            bad.push_back("inverse of arrow " + std::to_string(a.id) + " is malformed");
            continue;
        }
        auto ab = compose_opt(a.id, b->id);
        auto ba = compose_opt(b->id, a.id);
        if (!ab || *ab != identity_of(a.src) || !ba || *ba != identity_of(a.tgt))
            bad.push_back("arrow " + std::to_string(a.id) + " is not invertible");
    }
    return bad;
}

std::vector<std::string> Functor::validate(const FinCat& src, const FinCat& tgt) const {
    std::vector<std::string> bad;
    for (int obj : src.objects) {
        auto it = object_map.find(obj);
        if (it == object_map.end())
            bad.push_back("object " + std::to_string(obj) + " unmapped");
        else if (!tgt.has_object(it->second))
            bad.push_back("object " + std::to_string(obj) + " maps outside target");
    }
    for (const auto& a : src.arrows) {
        auto it = arrow_map.find(a.id);
        if (it == arrow_map.end()) {
            bad.push_back("arrow " + std::to_string(a.id) + " unmapped");
            continue;
        }
        const Arrow* fa = tgt.find_arrow(it->second);
        if (!fa) {
            bad.push_back("arrow " + std::to_string(a.id) + " maps outside target");
            continue;
        }
        auto os = object_map.find(a.src);
        auto ot = object_map.find(a.tgt);
        if (os == object_map.end() || ot == object_map.end()) continue;
        if (fa->src != os->second || fa->tgt != ot->second)
            bad.push_back("arrow " + std::to_string(a.id) + " endpoint mismatch");
    }
    for (const auto& [obj, id] : src.identities) {
        auto io = object_map.find(obj);
        auto ia = arrow_map.find(id);
        if (io == object_map.end() || ia == arrow_map.end()) continue;
        if (tgt.identity_of(io->second) != ia->second)
            bad.push_back("identity of object " + std::to_string(obj) + " not preserved");
    }
    for (const auto& [pair, fg] : src.compose) {
        auto mf = arrow_map.find(pair.first);
        auto mg = arrow_map.find(pair.second);
        auto mfg = arrow_map.find(fg);
        if (mf == arrow_map.end() || mg == arrow_map.end() || mfg == arrow_map.end())
            continue;
        auto c = tgt.compose_opt(mf->second, mg->second);
        if (!c || *c != mfg->second)
            bad.push_back("composite of (" + std::to_string(pair.first) + "," +
                          std::to_string(pair.second) + ") not preserved");
    }
    return bad;
}

GauntCategory poset_chain(int n) {
    if (n < 1) throw std::invalid_argument("poset_chain requires n >= 1");
    GauntCategory c;
    for (int i = 1; i <= n; ++i) c.objects.push_back(i);
    // arrow i->j for i <= j, id by lexicographic (i, j)
    std::map<std::pair<int, int>, int> ids;
    int next = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            ids[{i, j}] = next;
            c.arrows.push_back({next, i, j});
            ++next;
        }
    for (int i = 1; i <= n; ++i) c.identities[i] = ids[{i, i}];
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k)
                c.compose[{ids[{i, j}], ids[{j, k}]}] = ids[{i, k}];
    return c;
}

int chain_arrow(const GauntCategory& chain, int i, int j) {
    auto h = chain.hom(i, j);
    if (h.size() != 1)
        throw std::invalid_argument("no chain arrow " + std::to_string(i) + "->" +
                                    std::to_string(j));
    return h.front();
}

GauntCategory path_category(int n_vertices,
                            const std::vector<std::pair<int, int>>& edges,
                            int max_word_length) {
    if (max_word_length < 1)
        throw std::invalid_argument("path_category requires max_word_length >= 1");
    for (auto [s, t] : edges)
        if (s < 0 || s >= n_vertices || t < 0 || t >= n_vertices)
            throw std::invalid_argument("edge endpoint out of range");

    GauntCategory c;
    for (int v = 0; v < n_vertices; ++v) c.objects.push_back(v);

    // words as sequences of edge indices; identities are the empty words
    struct Word {
        std::vector<int> es;
        int src, tgt;
    };
    std::vector<Word> words;
    std::map<std::vector<int>, int> word_id;
    for (int v = 0; v < n_vertices; ++v) {
        // encode the empty word at v as {-1 - v} to keep keys distinct
        words.push_back({{}, v, v});
        c.identities[v] = static_cast<int>(words.size()) - 1;
    }
    std::vector<std::vector<int>> frontier;
    for (std::size_t e = 0; e < edges.size(); ++e) frontier.push_back({static_cast<int>(e)});
    for (int len = 1; len <= max_word_length; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier) {
            // validate the word is a path
            int src = edges[w.front()].first;
            int cur = src;
            bool ok = true;
            for (int e : w) {
                if (edges[e].first != cur) { ok = false; break; }
                cur = edges[e].second;
            }
            if (!ok) continue;
            word_id[w] = static_cast<int>(words.size());
            words.push_back({w, src, cur});
            if (len < max_word_length)
                for (std::size_t e = 0; e < edges.size(); ++e) {
                    if (edges[e].first == cur) {
                        auto w2 = w;
                        w2.push_back(static_cast<int>(e));
                        next.push_back(std::move(w2));
                    }
                }
        }
        frontier = std::move(next);
    }
    for (std::size_t i = 0; i < words.size(); ++i)
        c.arrows.push_back({static_cast<int>(i), words[i].src, words[i].tgt});

    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (words[i].tgt != words[j].src) continue;
            std::vector<int> cat = words[i].es;
            cat.insert(cat.end(), words[j].es.begin(), words[j].es.end());
            if (static_cast<int>(cat.size()) > max_word_length) continue;  // truncated
            int fg;
            if (cat.empty())
                fg = c.identities[words[i].src];
            else
                fg = word_id.at(cat);
            c.compose[{static_cast<int>(i), static_cast<int>(j)}] = fg;
        }
    return c;
}

GauntCategory chaotic_preorder(const std::vector<int>& J) {
    if (J.empty()) throw std::invalid_argument("chaotic_preorder requires non-empty J");
    GauntCategory c;
    c.objects = J;
    std::map<std::pair<int, int>, int> ids;
    int next = 0;
    for (int i : J)
        for (int j : J) {
            ids[{i, j}] = next;
            c.arrows.push_back({next, i, j});
            ++next;
        }
    for (int i : J) c.identities[i] = ids[{i, i}];
    for (int i : J)
        for (int j : J)
            for (int k : J) c.compose[{ids[{i, j}], ids[{j, k}]}] = ids[{i, k}];
    return c;
}

FiniteGroupoid group_as_groupoid(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("empty multiplication table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("multiplication table is not square");
        for (int x : row)
            if (x < 0 || x >= n)
                throw std::invalid_argument("closure fails: entry out of range");
    }
    // identity
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int g = 0; g < n; ++g)
            if (table[cand][g] != g || table[g][cand] != g) { ok = false; break; }
        if (ok) { e = cand; break; }
    }
    if (e < 0) throw std::invalid_argument("no identity element");
    // associativity, naming the first violated triple
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc)
                if (table[table[a][b]][cc] != table[a][table[b][cc]]) {
                    std::ostringstream os;
                    os << "associativity fails on triple (" << a << "," << b << ","
                       << cc << ")";
                    throw std::invalid_argument(os.str());
                }
    // inverses
    std::map<int, int> inv;
    for (int g = 0; g < n; ++g) {
        int gi = -1;
        for (int h = 0; h < n; ++h)
            if (table[g][h] == e && table[h][g] == e) { gi = h; break; }
        if (gi < 0)
            throw std::invalid_argument("element " + std::to_string(g) +
                                        " has no inverse");
        inv[g] = gi;
    }

    FiniteGroupoid gp;
    gp.objects = {0};
    for (int g = 0; g < n; ++g) gp.arrows.push_back({g, 0, 0});
    gp.identities[0] = e;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) gp.compose[{a, b}] = table[a][b];
    gp.inverse = std::move(inv);
    return gp;
}

FiniteGroupoid cyclic_groupoid(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_groupoid requires n >= 1");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return group_as_groupoid(table);
}

FiniteGroupoid codiscrete_groupoid(const std::vector<int>& objs) {
    if (objs.empty()) throw std::invalid_argument("codiscrete_groupoid needs objects");
    FiniteGroupoid g;
    g.objects = objs;
    std::map<std::pair<int, int>, int> ids;
    int next = 0;
    for (int i : objs)
        for (int j : objs) {
            ids[{i, j}] = next;
            g.arrows.push_back({next, i, j});
            ++next;
        }
    for (int i : objs) g.identities[i] = ids[{i, i}];
    for (int i : objs)
        for (int j : objs)
            for (int k : objs) g.compose[{ids[{i, j}], ids[{j, k}]}] = ids[{i, k}];
    for (int i : objs)
        for (int j : objs) g.inverse[ids[{i, j}]] = ids[{j, i}];
    return g;
}

}  // namespace btv
