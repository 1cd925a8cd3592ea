// Tabular output for the CLI: CSV with 15 significant digits, or JSON where
// every real carries a decimal string and a binary-exact hexfloat.
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace artin::cli {

using Cell = std::variant<std::int64_t, std::uint64_t, long double, std::string, bool, std::monostate>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

std::string render_csv(const Table& t);
std::string render_json(const Table& t);
std::string render(const Table& t, Format f);

// Newline-delimited decimal integers.
std::string render_list(const std::vector<std::uint64_t>& values);

std::string format_real(long double v);  // %.15Lg
std::string format_hex(long double v);   // %La

// Writes to path via a temporary file and rename; "-" or empty means stdout.
void write_output(const std::string& path, const std::string& data, bool gzip = false);

// Parses "1000", "1e6", "2.5e3" as exact integers; throws std::invalid_argument
// when the value is not an integer.
std::uint64_t parse_exact_integer(const std::string& s);
std::vector<std::uint64_t> parse_grid(const std::string& s);

}  // namespace artin::cli
