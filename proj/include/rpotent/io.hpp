#pragma once

// Matrix files. JSON: {"n": <int>, "entries": [[e, ...], ...]} where each
// entry is a JSON integer or a "p" / "p/q" string. Extra top-level keys
// (such as "provenance") are ignored on read. CSV: one row per line, cells
// are integers or p/q.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rpotent/matrix.hpp"

namespace rpotent {

using Json = nlohmann::ordered_json;

RMatrix parse_matrix_json(std::string_view text);
RMatrix parse_matrix_csv(std::string_view text);
// Chooses JSON or CSV by the first non-blank character.
RMatrix parse_matrix(std::string_view text);
RMatrix load_matrix(const std::filesystem::path& path);

Json matrix_to_json(const RMatrix& m);
std::string to_json_text(const RMatrix& m);
std::string to_csv_text(const RMatrix& m);

// Entry as JSON: an integer when it fits in 64 bits, a string otherwise.
Json rational_to_json(const Rational& q);

}  // namespace rpotent
