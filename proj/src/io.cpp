#include "rpotent/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace rpotent {

namespace {

Rational entry_from_json(const nlohmann::json& e) {
  if (e.is_number_integer()) {
    return e.is_number_unsigned() ? Rational(std::to_string(e.get<std::uint64_t>()), 10)
                                  : Rational(std::to_string(e.get<std::int64_t>()), 10);
  }
  if (e.is_string()) return parse_rational(e.get<std::string>());
  throw InvalidInput("matrix entry must be an integer or a \"p/q\" string, got " + e.dump());
}

}  // namespace

RMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("matrix JSON does not parse: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries")) throw InvalidInput("matrix JSON needs an \"entries\" array");
  const auto& rows = doc["entries"];
  if (!rows.is_array() || rows.empty()) throw InvalidInput("\"entries\" must be a nonempty array of rows");
  std::vector<std::vector<Rational>> grid;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InvalidInput("every row of \"entries\" must be an array");
    auto& out = grid.emplace_back();
    for (const auto& e : row) out.push_back(entry_from_json(e));
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() != static_cast<std::int64_t>(grid.size())) {
      throw InvalidInput("\"n\" does not match the number of rows");
    }
  }
  try {
    return RMatrix::from_rows(grid);
  } catch (const DimensionError& e) {
    throw InvalidInput(e.what());
  }
}

RMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Rational>> grid;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto& row = grid.emplace_back();
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_rational(cell));
  }
  if (grid.empty()) throw InvalidInput("CSV matrix is empty");
  try {
    return RMatrix::from_rows(grid);
  } catch (const DimensionError& e) {
    throw InvalidInput(e.what());
  }
}

RMatrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InvalidInput("matrix input is empty");
  return text[first] == '{' ? parse_matrix_json(text) : parse_matrix_csv(text);
}

RMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open matrix file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(to_string(q));
}

Json matrix_to_json(const RMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (const auto& e : m.row(i)) row.push_back(rational_to_json(e));
    rows.push_back(std::move(row));
  }
  Json doc;
  doc["n"] = m.size();
  doc["entries"] = std::move(rows);
  return doc;
}

std::string to_json_text(const RMatrix& m) { return matrix_to_json(m).dump() + "\n"; }

std::string to_csv_text(const RMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out += ',';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace rpotent
