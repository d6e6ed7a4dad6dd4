#pragma once

// JSON forms of the library types.
//
//   ChargedPartition  {"parts": [8,6,3,1], "charge": 0}
//   LSPath            {"shape": "L0", "n": 4, "steps": [3,2,2,1]}
//   Weight            {"c0": "1/1", "c1": "0/1", "d": "-9/1"}
//
// Parsers throw std::invalid_argument on malformed input.

#include <json.hpp>

#include "sl2hat/charged_partition.hpp"
#include "sl2hat/kk_modules.hpp"
#include "sl2hat/ls_path.hpp"
#include "sl2hat/tensor_crystal.hpp"
#include "sl2hat/weight.hpp"

namespace sl2hat {

using Json = nlohmann::ordered_json;

Json to_json(const ChargedPartition& cp);
ChargedPartition partition_from_json(const Json& j);

Json to_json(const LSPath& path);
/// Lists directions ("w+8", ...) and turning times ("1/8", ...) explicitly.
Json to_verbose_json(const LSPath& path);
LSPath path_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const TensorElement& t);
Json to_json(const MultiplicityTable& table);
Json to_json(const CrystalGraph& g);

/// Parses "8,6,3,1" (empty string for the empty partition).
std::vector<int> parse_parts(std::string_view text);

std::string shape_name(Fundamental f);  // "L0" / "L1"
Fundamental parse_shape(std::string_view text);

}  // namespace sl2hat
