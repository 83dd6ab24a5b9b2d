#include "order_file.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace tiled::cli {

using nlohmann::json;

LatticeMatrix load_order_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();

  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw FileError(path + ": parse error: " + e.what());
  }
  if (!doc.is_object()) throw FileError(path + ": expected a JSON object");
  for (const auto& item : doc.items())
    if (item.key() != "alpha") throw FileError(path + ": unknown key \"" + item.key() + "\"");
  if (!doc.contains("alpha")) throw FileError(path + ": missing key \"alpha\"");

  const auto& alpha = doc["alpha"];
  if (!alpha.is_array()) throw FileError(path + ": \"alpha\" must be an array of rows");
  std::vector<std::vector<Exponent>> rows;
  for (const auto& row : alpha) {
    if (!row.is_array()) throw FileError(path + ": every row of \"alpha\" must be an array");
    auto& out = rows.emplace_back();
    for (const auto& entry : row) {
      if (entry.is_number_unsigned()) {
        if (entry.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Exponent>::max()))
          throw FileError(path + ": entry out of range");
        out.push_back(static_cast<Exponent>(entry.get<std::uint64_t>()));
      } else if (entry.is_number_integer()) {
        out.push_back(entry.get<Exponent>());
      } else {
        throw FileError(path + ": entries must be integers");
      }
    }
  }
  return LatticeMatrix::from_rows(rows);
}

std::string format_order_file(const ExponentMatrix& a) {
  std::string out = "{\"alpha\": [";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(a(i, j));
    }
    out += ']';
  }
  return out + "]}";
}

}  // namespace tiled::cli
