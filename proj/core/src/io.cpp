#include "strongdom/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace strongdom {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Exactly two integers separated by whitespace, nothing else.
bool two_ints(std::string_view line, long long& a, long long& b) {
  std::istringstream in{std::string(line)};
  if (!(in >> a >> b)) return false;
  std::string rest;
  in >> rest;
  return rest.empty();
}

}  // namespace

// ---------------------------------------------------------------------------
// Edge-list text format
// ---------------------------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty() || blank(lines[0]))
    throw ParseError("missing header line 'n m'", 1);
  long long n = 0, m = 0;
  if (!two_ints(strip_cr(lines[0]), n, m) || n < 0 || m < 0)
    throw ParseError("malformed header, expected 'n m'", 1);

  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  std::size_t line_no = 1;
  for (long long i = 0; i < m; ++i) {
    ++line_no;
    if (line_no > lines.size())
      throw ParseError("expected " + std::to_string(m) + " edges, got " +
                           std::to_string(i),
                       static_cast<int>(line_no));
    long long u = 0, v = 0;
    if (!two_ints(strip_cr(lines[line_no - 1]), u, v))
      throw ParseError("malformed edge line", static_cast<int>(line_no));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("endpoint out of range", static_cast<int>(line_no));
    if (u == v) throw ParseError("loop edge", static_cast<int>(line_no));
    Edge e{static_cast<int>(u), static_cast<int>(v)};
    if (!seen.insert({e.lo(), e.hi()}).second)
      throw ParseError("duplicate edge", static_cast<int>(line_no));
    edges.push_back({e.lo(), e.hi()});
  }
  for (std::size_t i = line_no; i < lines.size(); ++i)
    if (!blank(lines[i]))
      throw ParseError("unexpected content after " + std::to_string(m) +
                           " edges",
                       static_cast<int>(i + 1));
  return Graph::build(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.lo()) + " " + std::to_string(e.hi()) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

namespace {

constexpr long long kMaxGraph6Small = 62;
constexpr long long kMaxGraph6Medium = 258047;
constexpr long long kMaxGraph6Large = 68719476735ll;  // 2^36 - 1
// Practical decode ceiling; vertex ids are ints and the bit stream for
// anything near the format's 36-bit limit could never fit in memory anyway.
constexpr long long kDecodeVertexCap = 100'000'000;

void append_size(std::string& out, long long n) {
  if (n <= kMaxGraph6Small) {
    out += static_cast<char>(63 + n);
  } else if (n <= kMaxGraph6Medium) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6)
      out += static_cast<char>(63 + (n >> shift & 63));
  } else if (n <= kMaxGraph6Large) {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out += static_cast<char>(63 + (n >> shift & 63));
  } else {
    throw ValidationError("graph too large for graph6");
  }
}

int char_value(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: truncated data");
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    throw ParseError("graph6: invalid character at offset " +
                     std::to_string(pos));
  return c - 63;
}

long long decode_size(std::string_view text, std::size_t& pos) {
  int first = char_value(text, pos);
  if (first != '~' - 63) {
    ++pos;
    return first;
  }
  ++pos;
  int second = char_value(text, pos);
  int chars = 3;
  long long minimum = kMaxGraph6Small + 1;
  if (second == '~' - 63) {
    ++pos;
    chars = 6;
    minimum = kMaxGraph6Medium + 1;
  }
  long long n = 0;
  for (int i = 0; i < chars; ++i, ++pos) n = n << 6 | char_value(text, pos);
  if (n < minimum) throw ParseError("graph6: non-minimal size prefix");
  return n;
}

}  // namespace

std::string write_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  append_size(out, n);
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

Graph parse_graph6(std::string_view text) {
  // tolerate a trailing newline from line-oriented files
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long long n = decode_size(text, pos);
  if (n > kDecodeVertexCap)
    throw ParseError("graph6: vertex count too large to decode");
  long long bits = n * (n - 1) / 2;
  std::size_t needed = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < needed) throw ParseError("graph6: truncated data");
  if (text.size() - pos > needed) throw ParseError("graph6: trailing data");

  std::vector<Edge> edges;
  long long bit_index = 0;
  int i = 0, j = 1;
  for (std::size_t c = 0; c < needed; ++c) {
    int value = char_value(text, pos + c);
    for (int b = 5; b >= 0; --b, ++bit_index) {
      int bit = value >> b & 1;
      if (bit_index >= bits) {
        if (bit) throw ParseError("graph6: nonzero padding bits");
        continue;
      }
      if (bit) edges.push_back({i, j});
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::build(static_cast<int>(n), std::move(edges));
}

// ---------------------------------------------------------------------------
// JSON-lines reports
// ---------------------------------------------------------------------------

namespace {

using ojson = nlohmann::ordered_json;

ojson record_to_json(const ReportRecord& r) {
  ojson j;
  j["schema"] = r.schema;
  j["theorem"] = r.theorem;
  j["instance"] = r.instance;
  if (!r.method.empty()) j["method"] = r.method;
  j["status"] = r.status;
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["pass"] = r.pass;
  j["tight_lower"] = r.tight_lower;
  j["tight_upper"] = r.tight_upper;
  ojson q = ojson::object();
  for (const auto& [name, value] : r.quantities) {
    if (std::holds_alternative<long long>(value))
      q[name] = std::get<long long>(value);
    else if (std::holds_alternative<Rational>(value))
      q[name] = std::get<Rational>(value).to_string();
    else
      q[name] = std::get<bool>(value);
  }
  j["quantities"] = std::move(q);
  if (r.witness) j["witness"] = *r.witness;
  if (r.nodes) j["nodes"] = *r.nodes;
  return j;
}

ReportRecord record_from_json(const ojson& j, int line_no) {
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("report record: " + what, line_no);
  };
  ReportRecord r;
  try {
    r.schema = j.at("schema").get<int>();
    r.theorem = j.at("theorem").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    if (j.contains("method")) r.method = j["method"].get<std::string>();
    r.status = j.at("status").get<std::string>();
    if (j.contains("reason")) r.reason = j["reason"].get<std::string>();
    r.pass = j.at("pass").get<bool>();
    r.tight_lower = j.at("tight_lower").get<bool>();
    r.tight_upper = j.at("tight_upper").get<bool>();
    const ojson& q = j.at("quantities");
    if (!q.is_object()) throw fail("quantities must be an object");
    for (auto it = q.begin(); it != q.end(); ++it) {
      if (it->is_number_integer() || it->is_number_unsigned())
        r.quantities.emplace_back(it.key(),
                                  ReportValue(it->get<long long>()));
      else if (it->is_string())
        r.quantities.emplace_back(
            it.key(), ReportValue(Rational::parse(it->get<std::string>())));
      else if (it->is_boolean())
        r.quantities.emplace_back(it.key(), ReportValue(it->get<bool>()));
      else
        throw fail("quantity '" + it.key() + "' has unsupported type");
    }
    if (j.contains("witness"))
      r.witness = j["witness"].get<std::vector<int>>();
    if (j.contains("nodes")) r.nodes = j["nodes"].get<std::uint64_t>();
  } catch (const ojson::exception& e) {
    throw fail(e.what());
  } catch (const ParseError& e) {
    throw ParseError(std::string("report record: ") + e.what(), line_no);
  }
  return r;
}

}  // namespace

std::string emit_record_line(const ReportRecord& record) {
  return record_to_json(record).dump();
}

std::string emit_report(const std::vector<ReportRecord>& records) {
  std::string out;
  for (const ReportRecord& r : records) {
    out += emit_record_line(r);
    out += '\n';
  }
  return out;
}

std::vector<ReportRecord> load_report(std::string_view text) {
  std::vector<ReportRecord> records;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = strip_cr(lines[i]);
    if (blank(line)) continue;
    ojson j;
    try {
      j = ojson::parse(line);
    } catch (const ojson::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(),
                       static_cast<int>(i + 1));
    }
    records.push_back(record_from_json(j, static_cast<int>(i + 1)));
  }
  return records;
}

}  // namespace strongdom
