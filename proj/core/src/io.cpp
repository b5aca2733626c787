#include "wicket/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace wicket {

namespace {

// Strips the trailing comment and tells whether anything remains.
bool strip_to_content(std::string& line) {
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

std::vector<std::uint64_t> parse_fields(const std::string& line, int line_no,
                                        std::size_t expect) {
  std::istringstream is(line);
  std::vector<std::uint64_t> out;
  std::string tok;
  while (is >> tok) {
    std::uint64_t value = 0;
    std::size_t used = 0;
    try {
      value = std::stoull(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(line_no, "expected a non-negative integer, got '" + tok + "'");
    }
    if (used != tok.size() || tok[0] == '-' || tok[0] == '+') {
      throw ParseError(line_no, "expected a non-negative integer, got '" + tok + "'");
    }
    out.push_back(value);
  }
  if (out.size() != expect) {
    std::ostringstream os;
    os << "expected " << expect << " fields, got " << out.size();
    throw ParseError(line_no, os.str());
  }
  return out;
}

VertexId checked_vertex(std::uint64_t raw, int line_no) {
  if (raw > std::numeric_limits<VertexId>::max()) {
    throw ParseError(line_no, "vertex id too large");
  }
  return static_cast<VertexId>(raw);
}

void add_checked(LinearTripleSystem& sys, VertexId a, VertexId b, VertexId c, int line_no) {
  if (auto err = sys.add_edge(a, b, c)) {
    std::ostringstream os;
    os << "edge {" << a << "," << b << "," << c << "}: " << to_string(*err);
    throw FileValidationError(line_no, *err, os.str());
  }
}

}  // namespace

std::string ParseError::format(int line, const std::string& what) {
  std::ostringstream os;
  if (line > 0) os << "line " << line << ": ";
  os << what;
  return os.str();
}

std::string FileValidationError::format(int line, AddError kind, const std::string& what) {
  std::ostringstream os;
  if (line > 0) os << "line " << line << ": ";
  os << what;
  (void)kind;
  return os.str();
}

LinearTripleSystem read_system_text(std::istream& in) {
  std::string line;
  int line_no = 0;
  int header_line = 0;
  std::uint64_t n = 0, m = 0;
  bool have_header = false;
  std::vector<std::array<std::uint64_t, 3>> raw;
  std::vector<int> raw_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (!strip_to_content(line)) continue;
    if (!have_header) {
      auto f = parse_fields(line, line_no, 2);
      n = f[0];
      m = f[1];
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (raw.size() == m) throw ParseError(line_no, "content after the last declared edge");
    auto f = parse_fields(line, line_no, 3);
    raw.push_back({f[0], f[1], f[2]});
    raw_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'n m' header");
  if (raw.size() != m) {
    std::ostringstream os;
    os << "header declares " << m << " edges, file has " << raw.size();
    throw ParseError(header_line, os.str());
  }
  if (n > std::numeric_limits<VertexId>::max()) {
    throw ParseError(header_line, "vertex count too large");
  }
  LinearTripleSystem sys(static_cast<VertexId>(n));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const int ln = raw_lines[i];
    add_checked(sys, checked_vertex(raw[i][0], ln), checked_vertex(raw[i][1], ln),
                checked_vertex(raw[i][2], ln), ln);
  }
  return sys;
}

LinearTripleSystem read_system_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_system_text(in);
}

void write_system_text(const LinearTripleSystem& sys, std::ostream& out) {
  std::vector<TripleEdge> edges = sys.edges();
  std::sort(edges.begin(), edges.end());
  out << sys.vertex_count() << ' ' << edges.size() << '\n';
  for (const TripleEdge& e : edges) {
    out << e.v[0] << ' ' << e.v[1] << ' ' << e.v[2] << '\n';
  }
}

void write_system_text_file(const LinearTripleSystem& sys, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_system_text(sys, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

LinearTripleSystem read_system_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError(0, "expected an object with fields 'n' and 'edges'");
  }
  if (!j["n"].is_number_unsigned()) throw ParseError(0, "'n' must be a non-negative integer");
  const std::uint64_t n = j["n"].get<std::uint64_t>();
  if (n > std::numeric_limits<VertexId>::max()) throw ParseError(0, "vertex count too large");
  if (!j["edges"].is_array()) throw ParseError(0, "'edges' must be an array");
  LinearTripleSystem sys(static_cast<VertexId>(n));
  std::size_t idx = 0;
  for (const auto& item : j["edges"]) {
    ++idx;
    std::ostringstream where;
    where << "edges[" << (idx - 1) << "]";
    if (!item.is_array() || item.size() != 3) {
      throw ParseError(0, where.str() + " must be an array of 3 vertex ids");
    }
    VertexId v[3];
    for (int k = 0; k < 3; ++k) {
      if (!item[k].is_number_unsigned() ||
          item[k].get<std::uint64_t>() > std::numeric_limits<VertexId>::max()) {
        throw ParseError(0, where.str() + " must hold non-negative vertex ids");
      }
      v[k] = item[k].get<VertexId>();
    }
    if (auto err = sys.add_edge(v[0], v[1], v[2])) {
      std::ostringstream os;
      os << where.str() << " {" << v[0] << "," << v[1] << "," << v[2]
         << "}: " << to_string(*err);
      throw FileValidationError(0, *err, os.str());
    }
  }
  return sys;
}

std::string write_system_json(const LinearTripleSystem& sys) {
  std::vector<TripleEdge> edges = sys.edges();
  std::sort(edges.begin(), edges.end());
  nlohmann::ordered_json j;
  j["n"] = sys.vertex_count();
  auto arr = nlohmann::ordered_json::array();
  for (const TripleEdge& e : edges) arr.push_back({e.v[0], e.v[1], e.v[2]});
  j["edges"] = std::move(arr);
  return j.dump(2);
}

}  // namespace wicket
