#pragma once

#include <string>

#include <json.hpp>

#include "aluthge/linalg.hpp"

namespace aluthge {

/// {"rows": m, "cols": m, "entries": [[re, im], ...]} row-major.
nlohmann::json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const nlohmann::json& j);

/// CSV with alternating re,im columns, one matrix row per line.
std::string matrix_to_csv(const Matrix& a);
Matrix matrix_from_csv(const std::string& text);

/// Dispatches on extension: .json or .csv.
Matrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const Matrix& a);

} // namespace aluthge
