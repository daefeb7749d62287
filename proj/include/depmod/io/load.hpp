#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "depmod/error.hpp"
#include "depmod/graph.hpp"
#include "depmod/io/deps_format.hpp"
#include "depmod/io/dot_format.hpp"
#include "depmod/io/json_graph.hpp"

namespace depmod::io {

enum class InputFormat { Deps, Dot, Json };

inline std::optional<InputFormat> parse_input_format(const std::string& name) {
  if (name == "deps") return InputFormat::Deps;
  if (name == "dot" || name == "gv") return InputFormat::Dot;
  if (name == "json") return InputFormat::Json;
  return std::nullopt;
}

/// Format from the file extension; nullopt when the extension is not recognized.
inline std::optional<InputFormat> sniff_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext.empty()) return std::nullopt;
  return parse_input_format(ext.substr(1));
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline DependencyGraph parse_graph(std::string_view text, InputFormat format) {
  switch (format) {
    case InputFormat::Deps: return parse_deps(text);
    case InputFormat::Dot: return parse_dot_subset(text);
    case InputFormat::Json: return parse_json_graph(text);
  }
  return {};
}

inline DependencyGraph load_graph(const std::filesystem::path& path,
                                  std::optional<InputFormat> format = std::nullopt) {
  if (!format) format = sniff_format(path);
  if (!format)
    throw Error(ErrorKind::BadArgument,
                "cannot infer the format of '" + path.string() + "'; pass --input-format deps|dot|json");
  const auto text = read_text(path);
  // an empty file is an empty graph in every format
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};
  return parse_graph(text, *format);
}

}  // namespace depmod::io
