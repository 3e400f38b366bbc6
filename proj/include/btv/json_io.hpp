#ifndef BTV_JSON_IO_HPP
#define BTV_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "btv/complex.hpp"
#include "btv/constructions.hpp"
#include "btv/directed.hpp"

namespace btv {

using json = nlohmann::json;

/// Deterministic serialization: keys sorted, floats printed with 17
/// significant digits, two-space indent. Load -> dump is byte-identical.
std::string canonical_dump(const json& j);

json base_to_json(const GauntCategory& g);
GauntCategory base_from_json(const json& j);

json biparcel_to_json(const Biparcel& b);
Biparcel biparcel_from_json(const json& j);

json cochain_to_json(const Cochain3& c);
Cochain3 cochain_from_json(const json& j);

struct TriangulationFile {
    StratifiedComplex complex;
    std::map<int, std::vector<int>> order;  // empty -> use default orders
};

json triangulation_to_json(const TriangulationFile& t);
TriangulationFile triangulation_from_json(const json& j);

json result_to_json(cplx value, long long colorings, double tolerance);

json load_json_file(const std::string& path);  // throws std::runtime_error
void write_text_file(const std::string& path, const std::string& text);

}  // namespace btv

#endif
