#pragma once

// DOT subset reader.
//
// Accepted: `[strict] digraph [id] { ... }` containing node statements with an optional
// attribute list (`a [package=P]`), edge chains `a -> b -> c` with optional attributes,
// `id = id` graph attributes (ignored), and `subgraph cluster_<pkg> { ... }` blocks, which
// assign <pkg> to nodes first mentioned inside them. An explicit `package` attribute wins over
// the enclosing cluster. Comments (`//`, `/* */`, leading `#`) are skipped.
// Everything else is rejected as UnsupportedDot with its position.

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "depmod/error.hpp"
#include "depmod/graph.hpp"

namespace depmod::io {

namespace detail {

enum class DotTok { Id, LBrace, RBrace, LBracket, RBracket, Equals, Semi, Comma, Arrow, End };

struct DotToken {
  DotTok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  std::vector<DotToken> run() {
    std::vector<DotToken> out;
    while (true) {
      skip_space_and_comments();
      const auto line = line_, column = column_;
      if (pos_ >= text_.size()) {
        out.push_back({DotTok::End, "", line, column});
        return out;
      }
      const char c = text_[pos_];
      auto single = [&](DotTok kind) {
        advance();
        out.push_back({kind, std::string(1, c), line, column});
      };
      switch (c) {
        case '{': single(DotTok::LBrace); continue;
        case '}': single(DotTok::RBrace); continue;
        case '[': single(DotTok::LBracket); continue;
        case ']': single(DotTok::RBracket); continue;
        case '=': single(DotTok::Equals); continue;
        case ';': single(DotTok::Semi); continue;
        case ',': single(DotTok::Comma); continue;
        default: break;
      }
      if (c == '-' && peek(1) == '>') {
        advance();
        advance();
        out.push_back({DotTok::Arrow, "->", line, column});
        continue;
      }
      if (c == '-' && peek(1) == '-')
        throw Error(ErrorKind::UnsupportedDot, "undirected edge operator '--'", line, column);
      if (c == '"') {
        out.push_back({DotTok::Id, quoted(), line, column});
        continue;
      }
      if (is_id_char(c)) {
        std::string id;
        while (pos_ < text_.size() && (is_id_char(text_[pos_]) ||
                                       (text_[pos_] == '-' && peek(1) != '>' && peek(1) != '-'))) {
          id += text_[pos_];
          advance();
        }
        out.push_back({DotTok::Id, id, line, column});
        continue;
      }
      throw Error(ErrorKind::UnsupportedDot, std::string("unexpected character '") + c + "'", line,
                  column);
    }
  }

 private:
  static bool is_id_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '$' ||
           static_cast<unsigned char>(c) >= 0x80;
  }

  char peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '#' && column_ == 1) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        const auto line = line_, column = column_;
        advance();
        advance();
        while (pos_ < text_.size() && !(text_[pos_] == '*' && peek(1) == '/')) advance();
        if (pos_ >= text_.size()) throw Error(ErrorKind::Syntax, "unterminated comment", line, column);
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  std::string quoted() {
    const auto line = line_, column = column_;
    advance();
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && peek(1) == '"') advance();
      out += text_[pos_];
      advance();
    }
    if (pos_ >= text_.size()) throw Error(ErrorKind::Syntax, "unterminated string", line, column);
    advance();
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class DotParser {
 public:
  explicit DotParser(std::vector<DotToken> tokens) : toks_(std::move(tokens)) {}

  DependencyGraph parse() {
    if (is_keyword("strict")) ++pos_;
    if (is_keyword("graph")) throw unsupported(cur(), "undirected graph");
    if (!is_keyword("digraph")) throw syntax(cur(), "expected 'digraph'");
    ++pos_;
    if (cur().kind == DotTok::Id) ++pos_;
    expect(DotTok::LBrace, "'{'");
    statements(std::nullopt);
    expect(DotTok::RBrace, "'}'");
    if (cur().kind != DotTok::End) throw syntax(cur(), "trailing content after graph");
    return assemble();
  }

 private:
  struct NodeInfo {
    std::optional<std::string> explicit_package;
    std::optional<std::string> cluster_package;
    std::size_t line = 0, column = 0;
  };

  const DotToken& cur() const { return toks_[pos_]; }
  bool is_keyword(std::string_view kw) const { return cur().kind == DotTok::Id && cur().text == kw; }

  static Error syntax(const DotToken& t, const std::string& msg) {
    return Error(ErrorKind::Syntax, msg, t.line, t.column);
  }
  static Error unsupported(const DotToken& t, const std::string& msg) {
    return Error(ErrorKind::UnsupportedDot, msg, t.line, t.column);
  }

  void expect(DotTok kind, const char* what) {
    if (cur().kind != kind) throw syntax(cur(), std::string("expected ") + what);
    ++pos_;
  }

  void statements(const std::optional<std::string>& cluster) {
    while (cur().kind != DotTok::RBrace && cur().kind != DotTok::End) {
      statement(cluster);
      while (cur().kind == DotTok::Semi) ++pos_;
    }
  }

  void statement(const std::optional<std::string>& cluster) {
    const auto& t = cur();
    if (t.kind == DotTok::LBrace) throw unsupported(t, "anonymous subgraph");
    if (t.kind != DotTok::Id) throw syntax(t, "expected a statement");
    if (t.text == "subgraph") {
      ++pos_;
      std::optional<std::string> inner = cluster;
      if (cur().kind == DotTok::Id) {
        const std::string name = cur().text;
        if (name.rfind("cluster_", 0) == 0 && name.size() > 8) inner = name.substr(8);
        ++pos_;
      }
      expect(DotTok::LBrace, "'{'");
      statements(inner);
      expect(DotTok::RBrace, "'}'");
      return;
    }
    if (t.text == "graph" || t.text == "node" || t.text == "edge") {
      throw unsupported(t, "attribute statement '" + t.text + "'");
    }
    if (toks_[pos_ + 1].kind == DotTok::Equals) {
      pos_ += 2;
      if (cur().kind != DotTok::Id) throw syntax(cur(), "expected attribute value");
      ++pos_;
      return;
    }

    std::vector<DotToken> chain{t};
    ++pos_;
    while (cur().kind == DotTok::Arrow) {
      ++pos_;
      if (cur().kind == DotTok::LBrace) throw unsupported(cur(), "subgraph as edge endpoint");
      if (cur().kind != DotTok::Id) throw syntax(cur(), "expected node id after '->'");
      chain.push_back(cur());
      ++pos_;
    }
    std::map<std::string, std::string> attrs;
    while (cur().kind == DotTok::LBracket) attributes(attrs);

    for (const auto& n : chain) mention(n, cluster);
    if (chain.size() == 1) {
      if (auto it = attrs.find("package"); it != attrs.end()) {
        auto& info = nodes_[chain.front().text];
        if (info.explicit_package && *info.explicit_package != it->second)
          throw unsupported(chain.front(), "conflicting package for node '" + chain.front().text + "'");
        info.explicit_package = it->second;
      }
      return;
    }
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
      edges_.push_back({chain[k], chain[k + 1]});
  }

  void attributes(std::map<std::string, std::string>& attrs) {
    expect(DotTok::LBracket, "'['");
    while (cur().kind != DotTok::RBracket) {
      if (cur().kind != DotTok::Id) throw syntax(cur(), "expected attribute name");
      const std::string key = cur().text;
      ++pos_;
      expect(DotTok::Equals, "'='");
      if (cur().kind != DotTok::Id) throw syntax(cur(), "expected attribute value");
      attrs[key] = cur().text;
      ++pos_;
      if (cur().kind == DotTok::Comma || cur().kind == DotTok::Semi) ++pos_;
    }
    ++pos_;
  }

  void mention(const DotToken& n, const std::optional<std::string>& cluster) {
    auto [it, inserted] = nodes_.try_emplace(n.text);
    if (inserted) {
      it->second.line = n.line;
      it->second.column = n.column;
      order_.push_back(n.text);
    }
    if (cluster && !it->second.cluster_package) it->second.cluster_package = cluster;
  }

  DependencyGraph assemble() const {
    GraphBuilder b;
    for (const auto& name : order_) {
      const auto& info = nodes_.at(name);
      auto pkg = info.explicit_package ? info.explicit_package : info.cluster_package;
      if (!pkg)
        throw Error(ErrorKind::MissingPackage, "node '" + name + "' has no package", info.line,
                    info.column);
      try {
        b.add_node(NodeId(name), PackageId(*pkg));
      } catch (const Error& e) {
        throw Error(e.kind(), e.what(), info.line, info.column);
      }
    }
    for (const auto& [src, dst] : edges_) {
      try {
        b.add_edge(NodeId(src.text), NodeId(dst.text));
      } catch (const Error& e) {
        throw Error(e.kind(), "'" + src.text + "' -> '" + dst.text + "'", src.line, src.column);
      }
    }
    return b.build();
  }

  std::vector<DotToken> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, NodeInfo> nodes_;
  std::vector<std::string> order_;
  std::vector<std::pair<DotToken, DotToken>> edges_;
};

}  // namespace detail

inline DependencyGraph parse_dot_subset(std::string_view text) {
  return detail::DotParser(detail::DotLexer(text).run()).parse();
}

/// Writes `g` as a digraph with one cluster per package.
inline std::string to_dot(const DependencyGraph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "digraph deps {\n";
  for (const auto& p : g.packages()) {
    out += "  subgraph " + quote("cluster_" + p.str()) + " {\n";
    for (auto i : g.members(p)) out += "    " + quote(g.node(i).str()) + ";\n";
    out += "  }\n";
  }
  for (const auto& e : g.edges()) out += "  " + quote(e.src.str()) + " -> " + quote(e.dst.str()) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace depmod::io
