#include "chz/json_io.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace chz {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("empty number in complex literal '" + std::string(whole) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value))
    throw ParseError("invalid number '" + std::string(text) + "' in complex literal '" +
                     std::string(whole) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_imag_part(std::string_view text, std::string_view whole) {
  // text is "[+-]b" without the trailing 'i'; a bare sign means unit magnitude
  if (text == "" || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text, whole);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw ParseError("empty complex literal");
  if (text.back() != 'i') return {parse_real(text, whole), 0.0};

  text.remove_suffix(1);
  // Split at the last sign that is not leading and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imag_part(text, whole)};
  return {parse_real(text.substr(0, split), whole), parse_imag_part(text.substr(split), whole)};
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf.data(), ptr);
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string out = format_double(z.real());
  out += z.imag() < 0 ? '-' : '+';
  out += format_double(std::abs(z.imag()));
  out += 'i';
  return out;
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_complex(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Json complex_array_to_json(std::span<const Complex> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(format_complex(v));
  return arr;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(format_complex(m(i, j)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["n"] = m.n();
  out["entries"] = std::move(rows);
  return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("matrix JSON needs an integer field \"n\"");
  if (!j.contains("entries") || !j["entries"].is_array())
    throw ParseError("matrix JSON needs an array field \"entries\"");
  const auto n_signed = j["n"].get<long long>();
  if (n_signed < 1) throw ParseError("matrix dimension \"n\" must be >= 1");
  const auto n = static_cast<std::size_t>(n_signed);
  const auto& rows = j["entries"];
  if (rows.size() != n)
    throw ParseError("\"entries\" has " + std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(n));
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != n)
      throw ParseError("row " + std::to_string(r) + " must be an array of " + std::to_string(n) +
                       " strings");
    for (std::size_t c = 0; c < n; ++c) {
      if (!row[c].is_string())
        throw ParseError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") must be a string");
      m(r, c) = parse_complex(row[c].get<std::string>());
    }
  }
  return m;
}

ComplexMatrix parse_matrix(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

std::string matrix_to_string(const ComplexMatrix& m) { return matrix_to_json(m).dump(); }

}  // namespace chz
