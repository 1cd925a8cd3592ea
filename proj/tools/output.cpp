#include "output.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <unistd.h>
#include <zlib.h>

#include <json.hpp>

namespace artin::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, long double>) return format_real(v);
        else if constexpr (std::is_same_v<T, std::string>) return csv_escape(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::monostate>) return "";
        else return std::to_string(v);
      },
      c);
}

nlohmann::json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, long double>) return {{"decimal", format_real(v)}, {"hex", format_hex(v)}};
        else if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else return v;
      },
      c);
}

}  // namespace

std::string format_real(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", v);
  return buf;
}

std::string format_hex(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%La", v);
  return buf;
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + csv_escape(t.columns[i]);
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& t) {
  auto arr = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render(const Table& t, Format f) { return f == Format::Json ? render_json(t) : render_csv(t); }

std::string render_list(const std::vector<std::uint64_t>& values) {
  std::string out;
  out.reserve(values.size() * 8);
  for (auto v : values) {
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

void write_output(const std::string& path, const std::string& data, bool gzip) {
  if (path.empty() || path == "-") {
    if (gzip) throw std::invalid_argument("--gzip requires --output");
    std::cout << data << std::flush;
    return;
  }
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  if (gzip) {
    gzFile gz = gzopen(tmp.c_str(), "wb");
    if (!gz) throw std::runtime_error("cannot open " + tmp);
    const bool ok = data.empty() || gzwrite(gz, data.data(), static_cast<unsigned>(data.size())) > 0;
    if (gzclose(gz) != Z_OK || !ok) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("gzip write failed for " + path);
    }
  } else {
    std::ofstream os(tmp, std::ios::binary);
    os << data;
    os.close();
    if (!os) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed for " + path);
    }
  }
  std::filesystem::rename(tmp, path);
}

std::uint64_t parse_exact_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  std::size_t pos = 0;
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
    const char c = s[pos];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      frac_digits += seen_dot;
    } else if (c != '_' && c != '\'') {
      throw std::invalid_argument("not a number: " + s);
    }
  }
  if (digits.empty()) throw std::invalid_argument("not a number: " + s);
  long exponent = 0;
  if (pos < s.size()) {
    const std::string e = s.substr(pos + 1);
    if (e.empty() || e.find_first_not_of("+-0123456789") != std::string::npos)
      throw std::invalid_argument("bad exponent: " + s);
    exponent = std::stol(e);
  }
  exponent -= frac_digits;
  while (exponent < 0) {
    if (digits.back() != '0') throw std::invalid_argument("not an integer: " + s);
    digits.pop_back();
    ++exponent;
    if (digits.empty()) digits = "0";
  }
  digits.append(static_cast<std::size_t>(exponent), '0');
  unsigned __int128 v = 0;
  for (char c : digits) {
    v = v * 10 + static_cast<unsigned>(c - '0');
    if (v > UINT64_MAX) throw std::out_of_range("number exceeds 64 bits: " + s);
  }
  return static_cast<std::uint64_t>(v);
}

std::vector<std::uint64_t> parse_grid(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = s.find(',', start);
    const std::string item = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!item.empty()) out.push_back(parse_exact_integer(item));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace artin::cli
