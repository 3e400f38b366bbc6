#include "btv/json_io.hpp"

#include "btv/builtin.hpp"
#include "doctest.h"

using namespace btv;

TEST_CASE("category files round-trip byte-identically") {
    for (const auto& name : builtin_category_names()) {
        CAPTURE(name);
        Biparcel b = builtin_category(name);
        std::string first = canonical_dump(biparcel_to_json(b));
        Biparcel loaded = biparcel_from_json(json::parse(first));
        std::string second = canonical_dump(biparcel_to_json(loaded));
        CHECK(first == second);
        CHECK(validate(loaded).ok());
    }
}

TEST_CASE("triangulation files round-trip") {
    for (const auto& name : builtin_triangulation_names()) {
        CAPTURE(name);
        TriangulationFile tf{builtin_triangulation(name), {}};
        std::string first = canonical_dump(triangulation_to_json(tf));
        TriangulationFile loaded = triangulation_from_json(json::parse(first));
        CHECK(loaded.complex == tf.complex);
        CHECK(canonical_dump(triangulation_to_json(loaded)) == first);
    }
}

TEST_CASE("orders and overrides survive the file format") {
    TriangulationFile tf{sphere_join_unknot(), {{1, {2, 0, 1}}, {3, {3, 4, 5}}}};
    tf.complex.edge_stratum_override[make_edge(3, 4)] = 3;
    std::string text = canonical_dump(triangulation_to_json(tf));
    TriangulationFile loaded = triangulation_from_json(json::parse(text));
    CHECK(loaded.order == tf.order);
    CHECK(loaded.complex.edge_stratum_override == tf.complex.edge_stratum_override);
}

TEST_CASE("cochain files round-trip") {
    Cochain3 om = builtin_cochain("z3-twisted");
    std::string first = canonical_dump(cochain_to_json(om));
    Cochain3 loaded = cochain_from_json(json::parse(first));
    CHECK(canonical_dump(cochain_to_json(loaded)) == first);
    CHECK(check_cocycle(loaded).ok);
}

TEST_CASE("base category serialization is stable") {
    GauntCategory g = poset_chain(3);
    json j = base_to_json(g);
    CHECK(base_from_json(j) == static_cast<const FinCat&>(g));
    // keys come out sorted in the canonical dump
    std::string text = canonical_dump(j);
    CHECK(text.find("\"arrows\"") < text.find("\"compose\""));
    CHECK(text.find("\"compose\"") < text.find("\"identities\""));
    CHECK(text.find("\"identities\"") < text.find("\"objects\""));
}

TEST_CASE("result payload carries the agreed fields") {
    json j = result_to_json(cplx{0.5, 0.0}, 16, 1e-9);
    CHECK(j.at("re").get<double>() == 0.5);
    CHECK(j.at("im").get<double>() == 0.0);
    CHECK(j.at("colorings_counted").get<long long>() == 16);
    CHECK(j.at("tolerance").get<double>() == 1e-9);
}

TEST_CASE("floats are printed with full precision") {
    json j = json::object();
    j["x"] = 1.0 / 3.0;
    std::string text = canonical_dump(j);
    CHECK(text.find("0.33333333333333331") != std::string::npos);
}
