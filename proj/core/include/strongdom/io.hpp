#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "strongdom/graph.hpp"
#include "strongdom/rational.hpp"

namespace strongdom {

// ---------------------------------------------------------------------------
// Edge-list text format: header "n m", then m lines "u v" (0-based).
// Canonical form sorts edges and writes each as "lo hi".
// ---------------------------------------------------------------------------

/// Throws ParseError (with 1-based line number) on malformed lines, loops,
/// duplicates, out-of-range endpoints, or edge-count mismatch.
Graph parse_edge_list(std::string_view text);

std::string write_edge_list(const Graph& g);

// ---------------------------------------------------------------------------
// graph6: size prefix N(n), then the upper triangle of the adjacency matrix
// in column-major order, 6 bits per character, each character value + 63.
// 1-byte prefixes cover n <= 62; '~' + 3 bytes and '~~' + 6 bytes cover the
// larger ranges. Decoding is strict: minimal size prefix, zero padding bits,
// no trailing data.
// ---------------------------------------------------------------------------

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// ---------------------------------------------------------------------------
// JSON-lines report records
// ---------------------------------------------------------------------------

/// Quantity values are exact: integers, rationals ("p/q" strings on the
/// wire), or flags. No floating point.
using ReportValue = std::variant<long long, Rational, bool>;

struct ReportRecord {
  int schema = 1;
  std::string theorem;   // record kind: theorem id, "solve", "header", ...
  std::string instance;  // deterministic instance descriptor
  std::string method;    // solver method(s); empty when not relevant
  std::string status = "applicable";  // "applicable" | "not-applicable"
  std::string reason;                 // set when not applicable
  bool pass = true;
  bool tight_lower = false;
  bool tight_upper = false;
  std::vector<std::pair<std::string, ReportValue>> quantities;
  std::optional<std::vector<int>> witness;
  std::optional<std::uint64_t> nodes;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

/// One compact JSON object per record, stable key order, no trailing spaces.
std::string emit_report(const std::vector<ReportRecord>& records);

/// Single record as one JSON line (no newline appended).
std::string emit_record_line(const ReportRecord& record);

/// Inverse of emit_report. Throws ParseError with the offending line number.
std::vector<ReportRecord> load_report(std::string_view text);

}  // namespace strongdom
