#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "chz/matrix_core.hpp"

namespace chz {

using Json = nlohmann::ordered_json;

/// Parses "a", "a+bi" or "a-bi" (also "bi"/"i" forms) with dot decimals; locale independent.
Complex parse_complex(std::string_view text);

/// Shortest round-trip rendering: "a" for real values, otherwise "a+bi" / "a-bi".
std::string format_complex(Complex z);

/// Shortest round-trip rendering of a double.
std::string format_double(double x);

/// Comma separated list of complex literals, e.g. "1,0" or "1+2i, -3".
std::vector<Complex> parse_complex_list(std::string_view text);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);
ComplexMatrix parse_matrix(std::string_view text);
std::string matrix_to_string(const ComplexMatrix& m);

Json complex_array_to_json(std::span<const Complex> values);

}  // namespace chz
