#include "blackwell/json_fixed.hpp"

#include <charconv>
#include <fstream>

#include "blackwell/errors.hpp"

namespace blackwell {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  BW_ASSERT(res.ec == std::errc(), "double formatting failed");
  return std::string(buf, res.ptr);
}

std::string dump_fixed(const Json& j, int indent) {
  // The vendored serializer already emits shortest round-trip floats with a
  // fixed algorithm, so plain dump is reproducible byte for byte.
  return j.dump(indent);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  BW_REQUIRE(out.good(), "cannot open for writing: " + path);
  out << dump_fixed(j) << '\n';
  BW_REQUIRE(out.good(), "write failed: " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  BW_REQUIRE(in.good(), "cannot open: " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace blackwell
