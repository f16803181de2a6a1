#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "signedspan/core.hpp"

namespace signedspan::io {

using nlohmann::json;

// Instance file: {"n": int, "plus_edges": [[u,v],...]} with 1 <= u < v <= n.
// Unlisted pairs are minus. Errors name the offending field.
SignedCompleteGraph parse_instance(const json& doc);
json instance_to_json(const SignedCompleteGraph& host);

// Pattern file: {"n": int, "edges": [[u,v],...]}.
Pattern parse_pattern(const json& doc);
json pattern_to_json(const Pattern& pattern);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

// 64-bit FNV-1a over the canonical form (n and sorted plus edges), printed as
// 16 hex digits. Independent of field order and edge order in the source file.
std::string digest(const SignedCompleteGraph& host);

}  // namespace signedspan::io
