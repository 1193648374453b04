#include "ryser/rhg_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "ryser/error.hpp"

namespace ryser {

namespace {

[[noreturn]] void fail(ErrorKind kind, std::size_t line, const std::string& msg) {
  throw Error(kind, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') fail(ErrorKind::ParseError, line, "expected integer, got '" + std::string(tok) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  if (tok.empty()) fail(ErrorKind::ParseError, line, "expected integer");
  return v;
}

}  // namespace

std::string format_rhg(const PartiteHypergraph& h) {
  std::ostringstream out;
  out << "rhg 1 " << h.num_sides() << '\n';
  if (!h.name().empty()) out << "# name: " << h.name() << '\n';
  for (std::size_t s = 0; s < h.num_sides(); ++s) {
    out << "s " << s;
    for (const auto& l : h.sides()[s]) {
      if (l.empty() || l.find_first_of(" \t\r\n") != std::string::npos)
        throw Error(ErrorKind::ParseError, "vertex label '" + l + "' is not a single token");
      out << ' ' << l;
    }
    out << '\n';
  }
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    out << 'e';
    const auto& label = h.edge_label(i);
    if (!label.empty()) {
      if (label.find_first_of("\"\n\r") != std::string::npos)
        throw Error(ErrorKind::ParseError, "edge label '" + label + "' contains a quote or newline");
      out << " \"" << label << '"';
    }
    for (const auto& v : h.edge_vertices(i)) out << ' ' << to_string(v);
    out << '\n';
  }
  return out.str();
}

PartiteHypergraph parse_rhg(std::string_view text) {
  std::vector<std::vector<std::string>> sides;
  std::vector<EdgeSpec> edges;
  std::set<std::vector<VertexId>> seen;
  std::string name;
  std::size_t num_sides = 0;
  bool header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    line = line.substr(first);
    if (line[0] == '#') {
      constexpr std::string_view kName = "# name: ";
      if (header && sides.empty() && line.starts_with(kName)) {
        name = std::string(line.substr(kName.size()));
        while (!name.empty() && name.back() == '\r') name.pop_back();
      }
      if (end == text.size()) break;
      continue;
    }

    auto toks = split_ws(line);
    if (!header) {
      if (toks.size() != 3 || toks[0] != "rhg") fail(ErrorKind::ParseError, line_no, "expected 'rhg 1 <num_sides>'");
      if (toks[1] != "1") fail(ErrorKind::ParseError, line_no, "unsupported rhg version " + std::string(toks[1]));
      num_sides = parse_index(toks[2], line_no);
      header = true;
    } else if (toks[0] == "s") {
      if (!edges.empty()) fail(ErrorKind::ParseError, line_no, "side line after edge lines");
      if (toks.size() < 2) fail(ErrorKind::ParseError, line_no, "side line needs an index");
      const auto idx = parse_index(toks[1], line_no);
      if (idx != sides.size()) fail(ErrorKind::ParseError, line_no, "sides must appear in order, expected " + std::to_string(sides.size()));
      if (idx >= num_sides) fail(ErrorKind::ParseError, line_no, "side index beyond declared count");
      std::vector<std::string> labels;
      for (std::size_t t = 2; t < toks.size(); ++t) labels.emplace_back(toks[t]);
      sides.push_back(std::move(labels));
    } else if (toks[0] == "e") {
      if (sides.size() != num_sides) fail(ErrorKind::ParseError, line_no, "edge line before all sides declared");
      EdgeSpec e;
      std::string_view rest = line.substr(1);
      rest = rest.substr(std::min(rest.size(), rest.find_first_not_of(" \t")));
      if (!rest.empty() && rest[0] == '"') {
        const auto close = rest.find('"', 1);
        if (close == std::string_view::npos) fail(ErrorKind::ParseError, line_no, "unterminated edge label");
        e.label = std::string(rest.substr(1, close - 1));
        rest = rest.substr(close + 1);
      }
      for (auto tok : split_ws(rest)) {
        VertexId v;
        try {
          v = parse_vertex_ref(tok);
        } catch (const Error&) {
          fail(ErrorKind::ParseError, line_no, "bad vertex ref '" + std::string(tok) + "'");
        }
        if (v.side >= sides.size() || v.pos >= sides[v.side].size())
          fail(ErrorKind::ParseError, line_no, "unknown vertex " + std::string(tok));
        for (const auto& u : e.vertices)
          if (u.side == v.side) fail(ErrorKind::PartitenessViolation, line_no, "two vertices in side " + std::to_string(v.side));
        e.vertices.push_back(v);
      }
      if (e.vertices.empty()) fail(ErrorKind::ParseError, line_no, "edge without vertices");
      auto key = e.vertices;
      std::sort(key.begin(), key.end());
      if (!seen.insert(std::move(key)).second) fail(ErrorKind::DuplicateEdge, line_no, "duplicate edge");
      edges.push_back(std::move(e));
    } else {
      fail(ErrorKind::ParseError, line_no, "unknown record '" + std::string(toks[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!header) throw Error(ErrorKind::ParseError, "missing 'rhg' header");
  if (sides.size() != num_sides) throw Error(ErrorKind::ParseError, "declared " + std::to_string(num_sides) + " sides, found " + std::to_string(sides.size()));

  return PartiteHypergraph(std::move(sides), std::move(edges), std::move(name));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error(ErrorKind::IoError, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::IoError, "cannot rename into " + path.string());
  }
}

PartiteHypergraph read_rhg(const std::filesystem::path& path) { return parse_rhg(read_file(path)); }

void write_rhg(const PartiteHypergraph& h, const std::filesystem::path& path) { write_file_atomic(path, format_rhg(h)); }

}  // namespace ryser
