#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ndpoly/enumerate.hpp"
#include "ndpoly/hull_analysis.hpp"
#include "ndpoly/loops.hpp"

namespace ndpoly {

using json = nlohmann::json;

json polygon_to_json(const LatticePolygon& p);
// Accepts {"vertices": [[x,y], ...]} in any order/orientation; the points are
// normalized to the CCW hull. Throws on degenerate input.
LatticePolygon polygon_from_json(const json& j);

json report_to_json(const PolygonReport& r);

json loop_to_json(const LegalLoop& l);
LegalLoop loop_from_json(const json& j);
json twelve_to_json(const TwelveCheck& t);

json moduli_row_to_json(const ModuliRow& row);
std::string moduli_table_text(const std::vector<ModuliRow>& rows);

// JSON-lines corpus: one canonical polygon object per line.
std::string corpus_to_jsonl(const GenusCorpus& corpus);

}  // namespace ndpoly
