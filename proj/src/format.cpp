#include <algorithm>
#include <charconv>
#include <sstream>

#include "fiberlink/diagram.hpp"
#include "fiberlink/scene.hpp"

namespace fiberlink {

namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

using Record = std::vector<Token>;

// Records are separated by newlines or '/'; '#' starts a comment.
std::vector<Record> split_records(std::string_view text) {
  std::vector<Record> out;
  Record cur;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      flush();
      ++line;
      column = 1;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (ch == '/') {
      flush();
      ++column;
      ++i;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++column;
      ++i;
    } else {
      const std::size_t start = i;
      const int start_col = column;
      while (i < text.size() && std::string_view(" \t\r\n#/").find(text[i]) == std::string_view::npos) {
        ++i;
        ++column;
      }
      cur.push_back({text.substr(start, i - start), line, start_col});
    }
  }
  flush();
  return out;
}

std::int64_t to_int(const Token& t, bool positive) {
  std::int64_t v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (!t.text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(t.line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  }
  if (positive && v <= 0) {
    throw ParseError(t.line, t.column, "expected a positive integer, got " + std::to_string(v));
  }
  if (positive && v > 1'000'000'000) throw ParseError(t.line, t.column, "integer too large");
  return v;
}

void expect_arity(const Record& r, std::size_t min_fields, std::size_t max_fields, const char* what) {
  const std::size_t got = r.size() - 1;
  if (got < min_fields || got > max_fields) {
    std::ostringstream msg;
    msg << r[0].text << " expects " << what << ", got " << got << " field" << (got == 1 ? "" : "s");
    throw ParseError(r[0].line, r[0].column, msg.str());
  }
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

std::string to_string(Role role) { return role == Role::Fiber ? "fiber" : "singular"; }

PdCode parse_pd(std::string_view text) {
  PdCode pd;
  for (const Record& r : split_records(text)) {
    const std::string_view op = r[0].text;
    if (op == "X") {
      expect_arity(r, 4, 4, "4 arc ids");
      Crossing x;
      for (int k = 0; k < 4; ++k) x.arcs[k] = static_cast<ArcId>(to_int(r[k + 1], true));
      pd.crossings.push_back(x);
    } else if (op == "U") {
      expect_arity(r, 1, 1, "1 arc id");
      pd.unknots.push_back(static_cast<ArcId>(to_int(r[1], true)));
    } else if (op != "F" && op != "R") {
      throw ParseError(r[0].line, r[0].column, "unknown record type '" + std::string(op) + "'");
    }
  }
  return pd;
}

DiagramFile parse_file(std::string_view text) {
  DiagramFile file;
  file.diagram = LinkDiagram::from_pd(parse_pd(text));
  const LinkDiagram& d = file.diagram;
  for (const Record& r : split_records(text)) {
    const std::string_view op = r[0].text;
    if (op != "F" && op != "R") continue;
    if (op == "F") {
      expect_arity(r, 2, 2, "a component and a framing");
    } else {
      expect_arity(r, 2, 3, "a component, a role and an optional group");
    }
    const auto comp = static_cast<ComponentId>(to_int(r[1], true));
    if (!d.has_component(comp)) {
      throw ParseError(r[1].line, r[1].column, "no component " + std::to_string(comp));
    }
    if (op == "F") {
      if (!file.framings.emplace(comp, to_int(r[2], false)).second) {
        throw ParseError(r[0].line, r[0].column,
                         "duplicate framing for component " + std::to_string(comp));
      }
      continue;
    }
    Role role;
    if (r[2].text == "fiber") {
      role = Role::Fiber;
    } else if (r[2].text == "singular") {
      role = Role::Singular;
    } else {
      throw ParseError(r[2].line, r[2].column,
                       "role must be fiber or singular, got '" + std::string(r[2].text) + "'");
    }
    if (!file.roles.emplace(comp, role).second) {
      throw ParseError(r[0].line, r[0].column, "duplicate role for component " + std::to_string(comp));
    }
    if (r.size() == 4) {
      if (role != Role::Fiber) {
        throw ParseError(r[3].line, r[3].column, "only fiber components carry a group");
      }
      file.groups[comp] = static_cast<int>(to_int(r[3], true));
    }
  }
  return file;
}

LinkDiagram parse_diagram(std::string_view text) { return parse_file(text).diagram; }

std::string serialize(const LinkDiagram& d) {
  std::ostringstream out;
  for (const Crossing& x : d.crossings()) {
    out << "X " << x.arcs[0] << ' ' << x.arcs[1] << ' ' << x.arcs[2] << ' ' << x.arcs[3] << '\n';
  }
  for (ArcId u : d.pd().unknots) out << "U " << u << '\n';
  return out.str();
}

std::string serialize(const DiagramFile& file) {
  std::ostringstream out;
  out << serialize(file.diagram);
  for (auto [c, f] : file.framings) out << "F " << c << ' ' << f << '\n';
  for (auto [c, role] : file.roles) {
    out << "R " << c << ' ' << to_string(role);
    if (auto it = file.groups.find(c); it != file.groups.end()) out << ' ' << it->second;
    out << '\n';
  }
  return out.str();
}

}  // namespace fiberlink
