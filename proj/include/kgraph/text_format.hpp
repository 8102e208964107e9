#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kgraph/kgraph.hpp"

namespace kg {

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

class SyntaxError : public Error {
 public:
  SyntaxError(SourceLocation where, const std::string& message, std::vector<std::string> expected = {});

  SourceLocation where() const { return where_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceLocation where_;
  std::vector<std::string> expected_;
};

struct KGraphDocument {
  std::string source;
  KGraph graph;
  ValidationReport report;
  /// Declaration site of every vertex, edge and square ("square:<n>").
  std::map<std::string, SourceLocation> locations;
};

/// Line-based format, '#' starts a comment:
///
///   kgraph <k>
///   vertex <id>
///   edge <id> : <color> <range> <- <source>
///   square <f> <g> ~ <g2> <f2>          # f g = g2 f2
///
/// Throws SyntaxError on malformed lines, duplicate ids, colors outside
/// 1..k or squares naming undeclared edges. Edges naming undeclared vertices
/// parse and surface as dangling-edge violations in the report.
KGraphDocument parse_kgraph_text(std::string_view text);

std::string emit_kgraph_text(const KGraph& g);

}  // namespace kg
