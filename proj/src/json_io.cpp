#include "btv/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace btv {

namespace {

void dump_rec(const json& j, std::string& out, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + json(it.key()).dump() + ": ";
                dump_rec(it.value(), out, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& el : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump_rec(el, out, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case json::value_t::number_float: {
            double v = j.get<double>();
            if (v == 0.0) v = 0.0;  // collapse negative zero
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string canonical_dump(const json& j) {
    std::string out;
    dump_rec(j, out, 0);
    out += "\n";
    return out;
}

json base_to_json(const GauntCategory& g) {
    json j;
    j["objects"] = g.objects;
    json arrows = json::array();
    for (const auto& a : g.arrows)
        arrows.push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
    j["arrows"] = arrows;
    json ids = json::object();
    for (const auto& [obj, id] : g.identities) ids[std::to_string(obj)] = id;
    j["identities"] = ids;
    json comp = json::array();
    for (const auto& [pair, fg] : g.compose)
        comp.push_back({{"f", pair.first}, {"g", pair.second}, {"fg", fg}});
    j["compose"] = comp;
    return j;
}

GauntCategory base_from_json(const json& j) {
    GauntCategory g;
    g.objects = j.at("objects").get<std::vector<int>>();
    for (const auto& a : j.at("arrows"))
        g.arrows.push_back({a.at("id").get<int>(), a.at("src").get<int>(),
                            a.at("tgt").get<int>()});
    std::sort(g.arrows.begin(), g.arrows.end(),
              [](const Arrow& x, const Arrow& y) { return x.id < y.id; });
    for (const auto& [key, val] : j.at("identities").items())
        g.identities[std::stoi(key)] = val.get<int>();
    for (const auto& c : j.at("compose"))
        g.compose[{c.at("f").get<int>(), c.at("g").get<int>()}] = c.at("fg").get<int>();
    return g;
}

namespace {

json tets_to_json(const std::map<TetKey, cplx>& tets) {
    json out = json::array();
    for (const auto& [k, v] : tets)
        out.push_back({{"i", k.edge[0]},
                       {"j", k.edge[1]},
                       {"k", k.edge[2]},
                       {"l", k.edge[3]},
                       {"m", k.edge[4]},
                       {"n", k.edge[5]},
                       {"t012", k.tri[0]},
                       {"t123", k.tri[1]},
                       {"t013", k.tri[2]},
                       {"t023", k.tri[3]},
                       {"re", v.real()},
                       {"im", v.imag()}});
    return out;
}

std::map<TetKey, cplx> tets_from_json(const json& j) {
    std::map<TetKey, cplx> out;
    for (const auto& e : j) {
        TetKey k;
        k.edge = {e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(),
                  e.at("l").get<int>(), e.at("m").get<int>(), e.at("n").get<int>()};
        k.tri = {e.at("t012").get<int>(), e.at("t123").get<int>(),
                 e.at("t013").get<int>(), e.at("t023").get<int>()};
        out[k] = cplx{e.at("re").get<double>(), e.at("im").get<double>()};
    }
    return out;
}

}  // namespace

json biparcel_to_json(const Biparcel& b) {
    json j;
    j["base"] = base_to_json(b.base);
    json simples = json::array();
    for (const auto& s : b.simples) {
        json e{{"id", s.id},
               {"over", s.gamma_arrow},
               {"dim_re", s.dim.real()},
               {"dim_im", s.dim.imag()}};
        e["dual"] = s.dual ? json(*s.dual) : json(nullptr);
        simples.push_back(e);
    }
    j["simples"] = simples;
    json ids = json::object();
    for (const auto& [obj, id] : b.identity_simple) ids[std::to_string(obj)] = id;
    j["identity_simples"] = ids;
    json fusion = json::array();
    for (const auto& [key, m] : b.fusion)
        if (m != 0)
            fusion.push_back({{"a", key[0]}, {"b", key[1]}, {"c", key[2]}, {"mult", m}});
    j["fusion"] = fusion;
    j["tet_plus"] = tets_to_json(b.tet_plus);
    j["tet_minus"] = tets_to_json(b.tet_minus);
    return j;
}

Biparcel biparcel_from_json(const json& j) {
    Biparcel b;
    b.base = base_from_json(j.at("base"));
    for (const auto& s : j.at("simples")) {
        SimpleArrow out{s.at("id").get<int>(), s.at("over").get<int>(),
                        cplx{s.at("dim_re").get<double>(), s.at("dim_im").get<double>()},
                        std::nullopt};
        if (!s.at("dual").is_null()) out.dual = s.at("dual").get<int>();
        b.simples.push_back(out);
    }
    std::sort(b.simples.begin(), b.simples.end(),
              [](const SimpleArrow& x, const SimpleArrow& y) { return x.id < y.id; });
    for (const auto& [key, val] : j.at("identity_simples").items())
        b.identity_simple[std::stoi(key)] = val.get<int>();
    for (const auto& f : j.at("fusion"))
        b.fusion[{f.at("a").get<int>(), f.at("b").get<int>(), f.at("c").get<int>()}] =
            f.at("mult").get<int>();
    b.tet_plus = tets_from_json(j.at("tet_plus"));
    b.tet_minus = tets_from_json(j.at("tet_minus"));
    return b;
}

json cochain_to_json(const Cochain3& c) {
    const int n = static_cast<int>(c.group.arrows.size());
    json table = json::array();
    for (int a = 0; a < n; ++a) {
        json row = json::array();
        for (int b = 0; b < n; ++b) row.push_back(*c.group.compose_opt(a, b));
        table.push_back(row);
    }
    json values = json::array();
    for (const auto& [key, v] : c.values)
        values.push_back({{"g", key[0]},
                          {"h", key[1]},
                          {"k", key[2]},
                          {"re", v.real()},
                          {"im", v.imag()}});
    return json{{"group", table}, {"values", values}};
}

Cochain3 cochain_from_json(const json& j) {
    Cochain3 c;
    c.group = group_as_groupoid(j.at("group").get<std::vector<std::vector<int>>>());
    for (const auto& v : j.at("values"))
        c.values[{v.at("g").get<int>(), v.at("h").get<int>(), v.at("k").get<int>()}] =
            cplx{v.at("re").get<double>(), v.at("im").get<double>()};
    return c;
}

json triangulation_to_json(const TriangulationFile& t) {
    json j;
    json verts = json::array();
    for (const auto& v : t.complex.vertices)
        verts.push_back({{"id", v.id}, {"stratum", v.stratum}});
    j["vertices"] = verts;
    json tets = json::array();
    for (const auto& tet : t.complex.tets)
        tets.push_back({{"v", tet.v}, {"sign", tet.sign}});
    j["tets"] = tets;
    if (!t.order.empty()) {
        json order = json::object();
        for (const auto& [s, ids] : t.order) order[std::to_string(s)] = ids;
        j["order"] = order;
    }
    if (!t.complex.edge_stratum_override.empty()) {
        json es = json::array();
        for (const auto& [e, s] : t.complex.edge_stratum_override)
            es.push_back({{"v", e}, {"stratum", s}});
        j["edge_strata"] = es;
    }
    if (!t.complex.tri_stratum_override.empty()) {
        json ts = json::array();
        for (const auto& [tr, s] : t.complex.tri_stratum_override)
            ts.push_back({{"v", tr}, {"stratum", s}});
        j["tri_strata"] = ts;
    }
    return j;
}

TriangulationFile triangulation_from_json(const json& j) {
    TriangulationFile t;
    for (const auto& v : j.at("vertices"))
        t.complex.vertices.push_back(
            {v.at("id").get<int>(), v.at("stratum").get<int>()});
    std::sort(t.complex.vertices.begin(), t.complex.vertices.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& tet : j.at("tets"))
        t.complex.tets.push_back(
            {tet.at("v").get<std::array<int, 4>>(), tet.at("sign").get<int>()});
    if (j.contains("order"))
        for (const auto& [key, ids] : j.at("order").items())
            t.order[std::stoi(key)] = ids.get<std::vector<int>>();
    if (j.contains("edge_strata"))
        for (const auto& e : j.at("edge_strata")) {
            auto v = e.at("v").get<std::array<int, 2>>();
            t.complex.edge_stratum_override[make_edge(v[0], v[1])] =
                e.at("stratum").get<int>();
        }
    if (j.contains("tri_strata"))
        for (const auto& e : j.at("tri_strata")) {
            auto v = e.at("v").get<std::array<int, 3>>();
            t.complex.tri_stratum_override[make_tri(v[0], v[1], v[2])] =
                e.at("stratum").get<int>();
        }
    return t;
}

json result_to_json(cplx value, long long colorings, double tolerance) {
    return json{{"re", value.real()},
                {"im", value.imag()},
                {"colorings_counted", colorings},
                {"tolerance", tolerance}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

}  // namespace btv
