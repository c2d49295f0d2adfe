#include "refl/cli/table.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace refl::cli {

extern const std::string_view kBundledTable;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<int> int_list(const std::string& s, int line) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw std::runtime_error("table line " + std::to_string(line) + ": bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<int> ShephardToddRecord::all_codegrees() const {
  if (codegrees) return *codegrees;
  std::vector<int> out;
  for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) out.push_back(degrees.back() - *it);
  return out;
}

std::uint64_t table_checksum(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<ShephardToddRecord> parse_table(std::string_view text) {
  const auto key = text.find("\nchecksum ");
  if (key == std::string_view::npos) throw std::runtime_error("table has no checksum line");
  const auto eol = text.find('\n', key + 1);
  if (eol == std::string_view::npos) throw std::runtime_error("table ends after checksum line");
  const std::string stated = trim(text.substr(key + 10, eol - key - 10));
  const std::string_view body = text.substr(eol + 1);
  std::ostringstream hex;
  hex << std::hex;
  hex.width(16);
  hex.fill('0');
  hex << table_checksum(body);
  if (hex.str() != stated) throw std::runtime_error("table checksum mismatch: stated " + stated + ", computed " + hex.str());

  std::vector<ShephardToddRecord> out;
  std::istringstream in{std::string(body)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty() || line[0] == '#') continue;
    const auto f = split(line, '|');
    ShephardToddRecord r;
    if (f[0] == "series") {
      if (f.size() != 8) throw std::runtime_error("table line " + std::to_string(lineno) + ": expected 8 fields");
      r.series = true;
      r.label = f[1];
      r.conditions = f[2];
      r.degrees_text = f[3];
      r.codegrees_text = f[4];
      if (f[4] != "*") r.codegrees = std::vector<int>{};
      r.regular_text = f[5];
      r.field = f[6];
      r.quotient = f[7];
    } else {
      if (f.size() != 7) throw std::runtime_error("table line " + std::to_string(lineno) + ": expected 7 fields");
      r.label = f[0];
      r.rank = int_list(f[1], lineno).at(0);
      r.degrees_text = f[2];
      r.degrees = int_list(f[2], lineno);
      r.codegrees_text = f[3];
      if (f[3] != "*") r.codegrees = int_list(f[3], lineno);
      r.regular_text = f[4];
      r.regular_degrees = int_list(f[4], lineno);
      r.field = f[5];
      r.quotient = f[6];
      if (static_cast<int>(r.degrees.size()) != r.rank || (r.codegrees && static_cast<int>(r.codegrees->size()) != r.rank))
        throw std::runtime_error("table line " + std::to_string(lineno) + ": rank does not match degree count");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string_view bundled_table_text() { return kBundledTable; }

const std::vector<ShephardToddRecord>& load_table() {
  static const std::vector<ShephardToddRecord> table = parse_table(kBundledTable);
  return table;
}

std::optional<ShephardToddRecord> find_record(std::string_view label) {
  for (const auto& r : load_table())
    if (r.label == label) return r;
  return std::nullopt;
}

std::optional<std::string> coxeter_type_of(std::string_view label) {
  static const std::map<std::string, std::string, std::less<>> types = {
      {"G23", "H3"}, {"G28", "F4"}, {"G30", "H4"}, {"G35", "E6"}, {"G36", "E7"}, {"G37", "E8"}};
  auto it = types.find(label);
  if (it == types.end()) return std::nullopt;
  return it->second;
}

}  // namespace refl::cli
