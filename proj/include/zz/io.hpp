#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "zz/constructions.hpp"
#include "zz/monodromy.hpp"

namespace zz {

// Schemas are documented in docs/formats.md. Parsers reject unknown keys.

SurfaceMap parse_tri_json(const nlohmann::json& j);
SurfaceMap parse_map_json(const nlohmann::json& j);
DirectedEmbeddingSpec parse_dig_json(const nlohmann::json& j);

/// dispatch on the object's keys: triangles / faces+gluing
SurfaceMap parse_surface_json(const nlohmann::json& j);

nlohmann::json emit_tri_json(const SurfaceMap& map);
nlohmann::json emit_map_json(const SurfaceMap& map);
nlohmann::json emit_dig_json(const DirectedEmbeddingSpec& spec);

std::string digraph_to_dot(const SurfaceMap& map, const EmbeddedDigraph& g);
std::string subgraph_to_dot(const SurfaceMap& map, const MonodromySubgraphs& gs, int which);

std::uint64_t fnv1a64(const std::string& data);
std::string digest_hex(const std::string& data);

}  // namespace zz
