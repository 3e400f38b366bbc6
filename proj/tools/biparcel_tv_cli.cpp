#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "btv/builtin.hpp"
#include "btv/consistency.hpp"
#include "btv/json_io.hpp"
#include "btv/statesum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;
constexpr int kExitInapplicable = 3;

struct Config {
    double tolerance = btv::kDefaultTolerance;
    int threads = 1;
    unsigned seed = 0;
    std::string out;
};

void emit(const Config& cfg, const btv::json& j) {
    std::string text = btv::canonical_dump(j);
    if (cfg.out.empty() || cfg.out == "-")
        std::cout << text;
    else
        btv::write_text_file(cfg.out, text);
}

std::string dashed(std::string name) {
    for (char& c : name)
        if (c == '_') c = '-';
    return name;
}

btv::Biparcel load_category(const std::string& arg) {
    for (const auto& n : btv::builtin_category_names())
        if (dashed(arg) == n) return btv::builtin_category(n);
    return btv::biparcel_from_json(btv::load_json_file(arg));
}

btv::TriangulationFile load_triangulation(const std::string& arg) {
    for (const auto& n : btv::builtin_triangulation_names())
        if (dashed(arg) == n) return {btv::builtin_triangulation(n), {}};
    return btv::triangulation_from_json(btv::load_json_file(arg));
}

btv::Cochain3 load_cochain(const std::string& arg) {
    for (const auto& n : btv::builtin_cochain_names())
        if (dashed(arg) == n) return btv::builtin_cochain(n);
    return btv::cochain_from_json(btv::load_json_file(arg));
}

btv::DirectedTriangulation direct_file(const btv::TriangulationFile& tf) {
    auto orders = tf.order.empty() ? btv::default_orders(tf.complex) : tf.order;
    return btv::direct(tf.complex, std::move(orders));
}

btv::json report_to_json(const btv::ValidationReport& rep) {
    btv::json checks = btv::json::array();
    for (const auto& c : rep.checks) {
        btv::json e{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) e["witness"] = c.witness;
        checks.push_back(e);
    }
    return btv::json{{"ok", rep.ok()}, {"checks", checks}};
}

int cmd_validate(const Config& cfg, const std::string& category) {
    btv::Biparcel b = load_category(category);
    btv::ValidationReport rep = btv::validate(b, cfg.tolerance);
    if (rep.ok()) {
        auto moves = btv::check_move_consistency(b, cfg.tolerance);
        rep.checks.insert(rep.checks.end(), moves.checks.begin(), moves.checks.end());
    }
    emit(cfg, report_to_json(rep));
    return rep.ok() ? kExitOk : kExitDomain;
}

int cmd_invariant(const Config& cfg, const std::string& category,
                  const std::string& triangulation) {
    btv::Biparcel b = load_category(category);
    {
        auto rep = btv::validate(b, cfg.tolerance);
        if (!rep.ok()) {
            emit(cfg, report_to_json(rep));
            return kExitDomain;
        }
    }
    auto t = direct_file(load_triangulation(triangulation));
    auto res = btv::invariant(b, t, cfg.threads);
    emit(cfg, btv::result_to_json(res.value, res.colorings, cfg.tolerance));
    return kExitOk;
}

int cmd_moves_check(const Config& cfg, const std::string& category,
                    const std::string& triangulation, int n_moves,
                    const std::vector<std::string>& forced) {
    btv::Biparcel b = load_category(category);
    auto t = direct_file(load_triangulation(triangulation));

    std::vector<btv::MoveStep> steps;
    btv::DirectedTriangulation cur = t;

    if (!forced.empty()) {
        // explicit move sequence: "NAME:v1,v2,..."
        for (const auto& spec : forced) {
            auto colon = spec.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("move spec must look like 2-3:0,1,2");
            btv::Move mv = btv::move_from_name(spec.substr(0, colon));
            btv::MoveSite site;
            std::stringstream ss(spec.substr(colon + 1));
            for (std::string tok; std::getline(ss, tok, ',');)
                site.push_back(std::stoi(tok));
            cur = btv::pachner_move(cur, mv, site);
            steps.push_back({mv, site});
        }
    } else {
        std::mt19937 rng(cfg.seed);
        const std::vector<btv::Move> all{btv::Move::M14, btv::Move::M41,
                                         btv::Move::M23, btv::Move::M32,
                                         btv::Move::M26, btv::Move::M62,
                                         btv::Move::M36, btv::Move::M63};
        for (int i = 0; i < n_moves; ++i) {
            bool applied = false;
            for (int attempt = 0; attempt < 200 && !applied; ++attempt) {
                btv::Move mv = all[rng() % all.size()];
                auto sites = btv::candidate_sites(cur, mv);
                if (sites.empty()) continue;
                const auto& site = sites[rng() % sites.size()];
                try {
                    cur = btv::pachner_move(cur, mv, site);
                } catch (const btv::InapplicableSite&) {
                    continue;
                }
                steps.push_back({mv, site});
                applied = true;
            }
            if (!applied) {
                std::cerr << "no applicable move found after bounded retries\n";
                return kExitInapplicable;
            }
        }
    }

    auto rep = btv::invariance_check(b, t, steps, cfg.tolerance, cfg.threads);
    btv::json trace = btv::json::array();
    for (const auto& s : rep.steps)
        trace.push_back({{"move", s.move},
                         {"site", s.site},
                         {"re", s.value.real()},
                         {"im", s.value.imag()},
                         {"deviation", s.deviation}});
    emit(cfg, btv::json{{"re", rep.base_value.real()},
                        {"im", rep.base_value.imag()},
                        {"tolerance", rep.tolerance},
                        {"max_deviation", rep.max_deviation},
                        {"ok", rep.ok},
                        {"trace", trace}});
    return rep.ok ? kExitOk : kExitDomain;
}

int cmd_generate(const Config& cfg, const std::string& name) {
    const auto known = btv::builtin_triangulation_names();
    if (std::find(known.begin(), known.end(), dashed(name)) == known.end())
        throw std::runtime_error("unknown triangulation " + name);
    btv::TriangulationFile tf{btv::builtin_triangulation(dashed(name)), {}};
    emit(cfg, btv::triangulation_to_json(tf));
    return kExitOk;
}

int cmd_subdivide(const Config& cfg, const std::string& triangulation) {
    auto tf = load_triangulation(triangulation);
    btv::TriangulationFile out{btv::barycentric_subdivide(tf.complex), {}};
    emit(cfg, btv::triangulation_to_json(out));
    return kExitOk;
}

btv::FiniteGroupoid named_group(const std::string& name) {
    if (name == "z2") return btv::cyclic_groupoid(2);
    if (name == "z3") return btv::cyclic_groupoid(3);
    if (name.size() > 1 && name[0] == 'z')
        return btv::cyclic_groupoid(std::stoi(name.substr(1)));
    throw std::invalid_argument("unknown group " + name);
}

int cmd_construct(const Config& cfg, const std::string& kind,
                  const std::string& name, const std::string& group,
                  const std::string& cocycle, const std::string& base) {
    if (kind == "builtin") {
        const auto known = btv::builtin_category_names();
        if (std::find(known.begin(), known.end(), dashed(name)) == known.end())
            throw std::runtime_error("unknown built-in category " + name);
        emit(cfg, btv::biparcel_to_json(btv::builtin_category(dashed(name))));
        return kExitOk;
    }
    if (kind == "pointed") {
        btv::FiniteGroupoid G = named_group(group);
        const int n = static_cast<int>(G.arrows.size());
        btv::Cochain3 omega =
            (cocycle == "trivial") ? btv::trivial_cocycle(n)
            : (cocycle == "nontrivial") ? btv::cyclic_cocycle(n, 1)
                                        : load_cochain(cocycle);
        if (base.rfind("chain", 0) != 0)
            throw std::invalid_argument("base must be chainN");
        const int len = std::stoi(base.substr(5));
        btv::GauntCategory gamma = btv::poset_chain(len);
        // chain generators map to the group generator
        btv::Functor phi;
        for (int obj : gamma.objects) phi.object_map[obj] = 0;
        for (const auto& a : gamma.arrows)
            phi.arrow_map[a.id] = (a.tgt - a.src) % n;
        emit(cfg, btv::biparcel_to_json(
                      btv::pointed_biparcel(G, omega, gamma, phi)));
        return kExitOk;
    }
    if (kind == "sharp") {
        btv::Biparcel c = load_category(name);
        btv::FiniteGroupoid g = named_group(group);
        btv::BicategoryData d = btv::sharp_construction(c, g);
        btv::Biparcel out;
        static_cast<btv::FinCat&>(out.base) = d.base;
        out.simples = d.simples;
        out.identity_simple = d.identity_simple;
        out.fusion = d.fusion;
        out.tet_plus = d.tet_plus;
        out.tet_minus = d.tet_minus;
        emit(cfg, btv::biparcel_to_json(out));
        return kExitOk;
    }
    throw std::runtime_error("unknown construct kind " + kind);
}

int cmd_oracle_dw(const Config& cfg, const std::string& cochain,
                  const std::string& triangulation) {
    btv::Cochain3 omega = load_cochain(cochain);
    auto t = direct_file(load_triangulation(triangulation));
    const int n = static_cast<int>(omega.group.arrows.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = *omega.group.compose_opt(a, b);
    btv::cplx v = btv::dw_oracle(table, omega, t);
    emit(cfg, btv::json{{"re", v.real()}, {"im", v.imag()}});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"state-sum invariants of stratified triangulations"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    if (const char* env = std::getenv("BIPARCEL_TV_TOLERANCE"))
        cfg.tolerance = std::atof(env);
    app.add_option("--tolerance", cfg.tolerance, "numeric tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.threads, "worker threads for the state sum")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized move sequences");
    app.add_option("--out", cfg.out, "output path (default stdout)");

    std::string category, triangulation, name, cochain;
    std::string kind, group = "z2", cocycle_name = "trivial", base = "chain1";
    int n_moves = 5;
    std::vector<std::string> forced_moves;

    auto* validate = app.add_subcommand("validate", "check a category file");
    validate->add_option("category", category)->required();

    auto* invariant = app.add_subcommand("invariant", "compute the state sum");
    invariant->add_option("category", category)->required();
    invariant->add_option("triangulation", triangulation)->required();

    auto* moves = app.add_subcommand("moves-check",
                                     "verify invariance under random moves");
    moves->add_option("category", category)->required();
    moves->add_option("triangulation", triangulation)->required();
    moves->add_option("--moves", n_moves, "number of random moves");
    moves->add_option("--apply", forced_moves,
                      "explicit moves NAME:v1,v2,... instead of random ones");

    auto* generate = app.add_subcommand("generate", "emit a built-in triangulation");
    generate->add_option("name", name)->required();

    auto* construct = app.add_subcommand("construct", "emit a category file");
    construct->add_option("kind", kind, "builtin | pointed | sharp")->required();
    construct->add_option("--name", name, "built-in name / input category");
    construct->add_option("--c", name, "input category (sharp)");
    construct->add_option("--group", group);
    construct->add_option("--groupoid", group);
    construct->add_option("--cocycle", cocycle_name);
    construct->add_option("--base", base, "chainN");

    auto* oracle = app.add_subcommand("oracle-dw", "brute-force gauge-theory sum");
    oracle->add_option("cochain", cochain)->required();
    oracle->add_option("triangulation", triangulation)->required();

    auto* subdivide = app.add_subcommand("subdivide", "barycentric subdivision");
    subdivide->add_option("triangulation", triangulation)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(cfg, category);
        if (app.got_subcommand(invariant))
            return cmd_invariant(cfg, category, triangulation);
        if (app.got_subcommand(moves))
            return cmd_moves_check(cfg, category, triangulation, n_moves,
                                   forced_moves);
        if (app.got_subcommand(generate)) return cmd_generate(cfg, name);
        if (app.got_subcommand(construct))
            return cmd_construct(cfg, kind, name, group, cocycle_name, base);
        if (app.got_subcommand(oracle))
            return cmd_oracle_dw(cfg, cochain, triangulation);
        if (app.got_subcommand(subdivide)) return cmd_subdivide(cfg, triangulation);
    } catch (const std::runtime_error& e) {
        // file / parse problems
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        // domain rejections (invalid data, inapplicable moves, bad stratification)
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitInput;
}
