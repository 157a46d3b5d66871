#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "bqinv/cohomology.hpp"
#include "bqinv/diagram.hpp"
#include "bqinv/statesum.hpp"
#include "json.hpp"

namespace bqinv::io {

using nlohmann::json;

// Throws InvalidInput if the file cannot be read.
std::string read_file(const std::filesystem::path& path);
// Throws InvalidInput on malformed JSON.
json parse_json(const std::string& text, const std::string& origin = "<input>");

// Biquandle file: {"n", "under", "over"} or {"n", "quandle"} (over = projection).
// Shape and range are validated; axioms are not.
struct BiquandleTables {
  Table under, over;
};
BiquandleTables biquandle_tables_from_json(const json& doc);
FiniteBiquandle biquandle_from_json(const json& doc, unsigned workers = 1);
json biquandle_to_json(const FiniteBiquandle& bq);

// Cocycle file: {"modulus", "entries": [{"triple": [a,b,c], "exp": e}, ...]}
// with an optional "n". Duplicate triples are summed and reported.
struct CocycleFile {
  Cocycle3 cocycle;
  std::vector<Triple> duplicates;
};
CocycleFile cocycle_from_json(const json& doc);
json cocycle_to_json(const Cocycle3& theta);

DiagramData diagram_from_json(const json& doc);
json diagram_to_json(const DiagramData& d);

json census_to_json(const PointCensus& c);

// Output document of the state-sum computation.
json statesum_document(const StateSumResult& result, const std::vector<Coloring>& nontrivial);

}  // namespace bqinv::io
