#pragma once

#include <filesystem>

#include <json.hpp>

#include "elliptica/harmonic_map.hpp"

namespace elliptica {

// Mapping file format:
//   {"a": [[re,im],...], "b": [[re,im],...], "tail_bound": x, "r_ref": y}
// a[0] is a_0, b[0] is b_1.

nlohmann::json map_to_json(const HarmonicMap& f);

/// Throws std::runtime_error naming the offending field on malformed input.
HarmonicMap map_from_json(const nlohmann::json& j);

HarmonicMap read_map_file(const std::filesystem::path& path);

void write_map_file(const std::filesystem::path& path, const HarmonicMap& f);

}  // namespace elliptica
