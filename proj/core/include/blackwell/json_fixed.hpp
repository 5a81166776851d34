#pragma once

#include <string>

#include "json.hpp"

namespace blackwell {

using Json = nlohmann::ordered_json;

// Serializes with a fixed shortest-round-trip float format so that repeated
// runs of the same computation produce byte-identical files on any libc.
std::string dump_fixed(const Json& j, int indent = 2);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

// Locale-independent double formatting: shortest decimal string that parses
// back to the same bits ("1.5", "0.1", "2.220446049250313e-16").
std::string format_double(double v);

}  // namespace blackwell
