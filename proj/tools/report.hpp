#pragma once

#include <string>

#include <json.hpp>

#include "coocc/beta.hpp"

namespace coocc::cli {

using Json = nlohmann::ordered_json;

/// %.17g for finite values, otherwise "+inf", "-inf" or "nan".
std::string format_double(double v);

/// Finite values as numbers, non-finite ones as the strings above.
Json number(double v);

/// Pretty-printed JSON with every float at 17 significant digits.
std::string dump(const Json& j);

/// Writes to a sibling temporary file and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

/// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path);

/// Self-contained SVG heatmap of a similarity matrix.
std::string heatmap_svg(const PairwiseMatrix& m, const std::string& title);

}  // namespace coocc::cli
