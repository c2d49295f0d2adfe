#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace refl::cli {

/// One row of the bundled table of irreducible reflection groups.
struct ShephardToddRecord {
  std::string label;  // "G23", or a series tag such as "G(de,e,n)"
  bool series = false;
  std::string conditions;  // series only
  int rank = 0;            // exceptional only
  std::string degrees_text;
  std::vector<int> degrees;            // exceptional only
  std::string codegrees_text;  // "*" when well-generated
  std::optional<std::vector<int>> codegrees;  // unset when well-generated
  std::vector<int> regular_degrees;    // the bold degrees, exceptional only
  std::string regular_text;
  std::string field;
  std::string quotient;  // W/Z(W)

  bool well_generated() const { return !codegrees.has_value(); }
  /// Listed codegrees, or d_n - d_{n-i+1} for well-generated groups.
  std::vector<int> all_codegrees() const;
};

/// FNV-1a 64.
std::uint64_t table_checksum(std::string_view bytes);

/// Parses the table text; throws std::runtime_error on a checksum mismatch
/// or malformed line.
std::vector<ShephardToddRecord> parse_table(std::string_view text);
/// The copy compiled into the library.
std::string_view bundled_table_text();
const std::vector<ShephardToddRecord>& load_table();
std::optional<ShephardToddRecord> find_record(std::string_view label);

/// Coxeter type of the real exceptional rows (G23 -> H3, ..., G37 -> E8).
std::optional<std::string> coxeter_type_of(std::string_view label);

}  // namespace refl::cli
