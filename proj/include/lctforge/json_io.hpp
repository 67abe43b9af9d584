#pragma once

#include <json.hpp>

#include "lctforge/blowup.hpp"
#include "lctforge/monomial_ideal.hpp"
#include "lctforge/morse.hpp"
#include "lctforge/newton.hpp"
#include "lctforge/sublevel_oracle.hpp"
#include "lctforge/zariski.hpp"

// File schemas, version 1. Exact rationals travel as strings "p/q" (or
// "p"); plain JSON integers are accepted on input. Every document carries
// "schema": 1.

namespace lctforge::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json load_file(const std::string& path);

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& q);

MonomialIdeal ideal_from_json(const json& j);
json ideal_to_json(const MonomialIdeal& ideal);

SurfaceData surface_from_json(const json& j);

DivisorClass class_from_json(const json& j, const ClassBasis& basis);
json class_to_json(const DivisorClass& c, const ClassBasis& basis);

BlowupSequence sequence_from_json(const json& j);
json prune_to_json(const PruneResult& result);

MorseInput morse_input_from_json(const json& j);

json lct_report_to_json(const MonomialIdeal& ideal, const LctReport& report);
json paths_to_json(const std::vector<PathEntry>& entries);
json verdict_to_json(const LelongVerdict& verdict);
json zariski_to_json(const ZariskiDecomposition& z, const SurfaceData& data);
json bound_report_to_json(const BoundReport& rep);
json oracle_report_to_json(const MonomialIdeal& ideal, const OracleReport& rep);

} // namespace lctforge::io
