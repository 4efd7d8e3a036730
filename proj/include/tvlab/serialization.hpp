#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tvlab/complex.hpp"
#include "tvlab/homology.hpp"
#include "tvlab/shelling.hpp"

namespace tvlab {

using Json = nlohmann::ordered_json;

/// {"vertices":[{"label":str,"row":int?,"block":int?}...],"facets":[[int...]...]}
/// with vertices referenced by index.
Json complex_to_json(const SimplicialComplex& sigma);
/// Throws ParseError naming the offending member, VertexOutOfRange or
/// NotAntichain.
SimplicialComplex complex_from_json(const Json& j);

/// {"order":[facet index...],"witnesses":[{"B":i,"C":j,"v":k}...]}
Json shelling_to_json(const ShellingOrder& s);
ShellingOrder shelling_from_json(const Json& j);

/// [β̃_0, β̃_1, ...]; a non-zero β̃_{-1} is prepended as {"minus_one": 1}.
Json betti_to_json(const BettiVector& b);

/// Parses a document; syntax errors throw ParseError carrying the byte
/// offset reported by the parser.
Json parse_json(std::string_view text);

/// Reads and parses a file; ParseError messages are prefixed with the path.
Json read_json_file(const std::string& path);

/// Canonical text: two-space indent, trailing newline.
std::string dump(const Json& j);

/// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::string& path, std::string_view contents);

}  // namespace tvlab
