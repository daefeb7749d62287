#pragma once

// Native line-oriented graph format:
//
//   # comment
//   node <class-id> <package-id>
//   edge <src-id> <dst-id>
//
// Identifiers are runs of [A-Za-z0-9_.$-]. Tokens are separated by spaces or tabs, blank
// lines are ignored and CRLF line endings are accepted. A node must be declared before an
// edge uses it. The canonical form lists nodes sorted by id, then edges sorted by (src, dst),
// single spaces, LF endings.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "depmod/error.hpp"
#include "depmod/graph.hpp"

namespace depmod::io {

inline bool is_deps_identifier_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.' || c == '$' || c == '-';
}

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::string check_identifier(const Token& tok, std::size_t line) {
  for (std::size_t k = 0; k < tok.text.size(); ++k) {
    if (!is_deps_identifier_char(tok.text[k])) {
      throw Error(ErrorKind::Syntax,
                  "invalid character in identifier '" + std::string(tok.text) + "'", line,
                  tok.column + k);
    }
  }
  return std::string(tok.text);
}

}  // namespace detail

inline DependencyGraph parse_deps(std::string_view text) {
  GraphBuilder builder;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    const auto& keyword = tokens.front();
    if (keyword.text != "node" && keyword.text != "edge") {
      throw Error(ErrorKind::Syntax, "expected 'node' or 'edge', got '" + std::string(keyword.text) + "'",
                  line_no, keyword.column);
    }
    if (tokens.size() != 3) {
      const auto column = tokens.size() > 3 ? tokens[3].column : line.size() + 1;
      throw Error(ErrorKind::Syntax, std::string(keyword.text) + " takes exactly two identifiers",
                  line_no, column);
    }
    const auto first = detail::check_identifier(tokens[1], line_no);
    const auto second = detail::check_identifier(tokens[2], line_no);
    try {
      if (keyword.text == "node") builder.add_node(NodeId(first), PackageId(second));
      else builder.add_edge(NodeId(first), NodeId(second));
    } catch (const Error& e) {
      // re-raise graph constraint errors with the offending line
      std::string what = e.what();
      const auto colon = what.find(": ");
      throw Error(e.kind(), colon == std::string::npos ? what : what.substr(colon + 2), line_no,
                  keyword.column);
    }
  }
  return builder.build();
}

inline std::string serialize_deps(const DependencyGraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.node_count(); ++i)
    out << "node " << g.node(i).str() << ' ' << g.package_at(i).str() << '\n';
  for (const auto& e : g.edges()) out << "edge " << e.src.str() << ' ' << e.dst.str() << '\n';
  return out.str();
}

}  // namespace depmod::io
