#pragma once

#include <string>

#include <json.hpp>

#include "spg/family.hpp"
#include "spg/polytope.hpp"

namespace spg {

using Json = nlohmann::json;

Json universe_to_json(const SymbolUniverse& u);
SymbolUniverse universe_from_json(const Json& j);

/// Faces serialize as sorted symbol arrays: plain ints, or "r:i" strings for
/// doubled universes.
Json face_to_json(const SymbolUniverse& u, const FaceSet& f);
FaceSet face_from_json(const SymbolUniverse& u, const Json& j);

Json family_to_json(const LayerFamily& family);
LayerFamily family_from_json(const Json& j);

Json incidence_to_json(const PolytopeIncidence& p);
PolytopeIncidence incidence_from_json(const Json& j);

std::string dot_export(const SubsetPartitionGraph& g);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace spg
