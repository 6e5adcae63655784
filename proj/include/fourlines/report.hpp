#pragma once

// Text formats shared by the CLI and the Python module: weight matrices as
// "a,b,c,d;...", coefficient lists as "b1,b2,b3,b4", reports as JSON or text.

#include <array>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fourlines/surface.hpp"

namespace fourlines {

using Json = nlohmann::ordered_json;

/// Parses four ';'-separated rows of four ','-separated integers. Throws
/// std::invalid_argument naming the offending row.
IntMatrix4 parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix4& m);

/// Parses four ','-separated rationals.
std::array<Rational, 4> parse_coefficients(std::string_view text);

/// Matrix text plus coefficient text to a configuration; row problems are
/// reported as "row k ...".
SurfaceConfig parse_config(std::string_view matrix, std::string_view b);

Json to_json(const InvariantReport& r);
std::string to_text(const InvariantReport& r);

}  // namespace fourlines
