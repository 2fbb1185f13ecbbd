#pragma once

#include <string>

#include <json.hpp>

#include "skewlab/spectral.hpp"

namespace skewlab {

/// Matrix JSON format: {"dim": d, "re": [[...]], "im": [[...]]} with d x d
/// row-major arrays. Ragged or mis-sized arrays are rejected.
CMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const CMatrix& m);

CMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const CMatrix& m);

/// Locale-independent formatting with 17 significant digits ('%.17g'
/// semantics via std::to_chars), so repeated runs are byte-identical.
std::string format_double(double v);

} // namespace skewlab
