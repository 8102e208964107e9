#include "kgraph/text_format.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace kg {

namespace {

std::string located(SourceLocation where, const std::string& message, const std::vector<std::string>& expected) {
  std::string s = std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message;
  if (!expected.empty()) {
    s += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) s += " or ";
      s += expected[i];
    }
    s += ")";
  }
  return s;
}

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(SourceLocation where, const std::string& message, std::vector<std::string> expected)
    : Error(ErrorCode::Syntax, located(where, message, expected)), where_(where), expected_(std::move(expected)) {}

KGraphDocument parse_kgraph_text(std::string_view text) {
  Skeleton skeleton;
  std::vector<SquareRule> squares;
  std::map<std::string, SourceLocation> locations;
  std::set<std::string> edge_ids;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    auto at = [&](std::size_t i) {
      return SourceLocation{line_no, i < tokens.size() ? tokens[i].column : line.size() + 1};
    };
    auto expect_count = [&](std::size_t n, const char* shape) {
      if (tokens.size() < n) throw SyntaxError(at(tokens.size()), "truncated directive", {shape});
      if (tokens.size() > n) throw SyntaxError(at(n), "unexpected token '" + std::string(tokens[n].text) + "'", {"end of line"});
    };
    auto expect_literal = [&](std::size_t i, std::string_view lit) {
      if (tokens[i].text != lit)
        throw SyntaxError(at(i), "unexpected token '" + std::string(tokens[i].text) + "'", {"'" + std::string(lit) + "'"});
    };
    auto claim_id = [&](std::size_t i) {
      std::string id(tokens[i].text);
      if (locations.count(id)) throw SyntaxError(at(i), "duplicate id '" + id + "'");
      locations[id] = at(i);
      return id;
    };
    auto parse_uint = [&](std::size_t i) {
      std::uint32_t value = 0;
      const auto t = tokens[i].text;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
      if (ec != std::errc() || ptr != t.data() + t.size())
        throw SyntaxError(at(i), "expected a non-negative integer, got '" + std::string(t) + "'", {"integer"});
      return value;
    };

    const auto keyword = tokens[0].text;
    if (keyword == "kgraph") {
      if (have_header) throw SyntaxError(at(0), "duplicate header");
      expect_count(2, "kgraph <k>");
      skeleton.rank = parse_uint(1);
      if (skeleton.rank == 0) throw SyntaxError(at(1), "rank must be at least 1");
      have_header = true;
      continue;
    }
    if (!have_header) throw SyntaxError(at(0), "missing header", {"'kgraph <k>'"});
    if (keyword == "vertex") {
      expect_count(2, "vertex <id>");
      skeleton.vertices.push_back(claim_id(1));
    } else if (keyword == "edge") {
      expect_count(7, "edge <id> : <color> <range> <- <source>");
      expect_literal(2, ":");
      expect_literal(5, "<-");
      EdgeSpec e;
      e.id = claim_id(1);
      e.color = parse_uint(3);
      if (e.color < 1 || e.color > skeleton.rank)
        throw SyntaxError(at(3), "color " + std::to_string(e.color) + " outside 1.." + std::to_string(skeleton.rank));
      e.range = std::string(tokens[4].text);
      e.source = std::string(tokens[6].text);
      edge_ids.insert(e.id);
      skeleton.edges.push_back(std::move(e));
    } else if (keyword == "square") {
      expect_count(6, "square <f> <g> ~ <g2> <f2>");
      expect_literal(3, "~");
      for (std::size_t i : {1u, 2u, 4u, 5u})
        if (!edge_ids.count(std::string(tokens[i].text)))
          throw SyntaxError(at(i), "unknown edge '" + std::string(tokens[i].text) + "'", {"declared edge id"});
      squares.push_back({std::string(tokens[1].text), std::string(tokens[2].text), std::string(tokens[4].text),
                         std::string(tokens[5].text)});
      locations["square:" + std::to_string(squares.size())] = at(0);
    } else {
      throw SyntaxError(at(0), "unknown directive '" + std::string(keyword) + "'", {"'vertex'", "'edge'", "'square'"});
    }
  }
  if (!have_header) throw SyntaxError({line_no, 1}, "empty document", {"'kgraph <k>'"});

  try {
    KGraph graph(std::move(skeleton), std::move(squares));
    auto report = validate_kgraph(graph);
    return KGraphDocument{std::string(text), std::move(graph), std::move(report), std::move(locations)};
  } catch (const Error& e) {
    throw SyntaxError({0, 0}, e.what());
  }
}

std::string emit_kgraph_text(const KGraph& g) {
  std::ostringstream out;
  const auto& sk = g.skeleton();
  out << "kgraph " << sk.rank << '\n';
  for (const auto& v : sk.vertices) out << "vertex " << v << '\n';
  for (const auto& e : sk.edges) out << "edge " << e.id << " : " << e.color << ' ' << e.range << " <- " << e.source << '\n';
  for (const auto& s : g.squares()) out << "square " << s.f << ' ' << s.g << " ~ " << s.g2 << ' ' << s.f2 << '\n';
  return out.str();
}

}  // namespace kg
