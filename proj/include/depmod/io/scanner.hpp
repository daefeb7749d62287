#pragma once

// Best-effort import scanner. Each file under the root that matches the profile's glob
// becomes a class named after its relative path ("a/b/C.java" -> "a.b.C"); each line
// matching the import pattern contributes an edge when its capture resolves to another
// scanned class, either by class name, by "<declared namespace>.<file stem>", or by a unique
// dotted suffix. Unresolved imports are dropped and counted.
//
// Profile file (one JSON object):
//   {"name": "java", "file_glob": "*.java",
//    "import_pattern": "^\\s*import\\s+(?:static\\s+)?([\\w.]+)\\s*;",
//    "package_rule": "by-directory" | "by-declared-namespace",
//    "namespace_pattern": "^\\s*package\\s+([\\w.]+)"}      // by-declared-namespace only

#include <fnmatch.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "depmod/error.hpp"
#include "depmod/graph.hpp"
#include "depmod/io/deps_format.hpp"

namespace depmod::io {

enum class PackageRule { ByDirectory, ByDeclaredNamespace };

struct ScanProfile {
  std::string name;
  std::string file_glob;
  std::string import_pattern;
  PackageRule package_rule = PackageRule::ByDirectory;
  std::string namespace_pattern;  // required for ByDeclaredNamespace

  /// Throws BadProfile unless both patterns compile with exactly one capture group.
  void validate() const {
    auto check = [&](const std::string& pattern, const char* field) {
      try {
        std::regex re(pattern, std::regex::ECMAScript);
        if (re.mark_count() != 1)
          throw Error(ErrorKind::BadProfile, std::string(field) + " must have exactly one capture group, has " +
                                                 std::to_string(re.mark_count()));
      } catch (const std::regex_error& e) {
        throw Error(ErrorKind::BadProfile, std::string(field) + ": " + e.what());
      }
    };
    if (file_glob.empty()) throw Error(ErrorKind::BadProfile, "file_glob is empty");
    check(import_pattern, "import_pattern");
    if (package_rule == PackageRule::ByDeclaredNamespace) check(namespace_pattern, "namespace_pattern");
  }
};

inline ScanProfile parse_profile(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::BadProfile, e.what());
  }
  auto field = [&](const char* key, bool required) -> std::string {
    if (!doc.is_object() || !doc.contains(key)) {
      if (required) throw Error(ErrorKind::BadProfile, std::string("missing field '") + key + "'");
      return {};
    }
    if (!doc[key].is_string()) throw Error(ErrorKind::BadProfile, std::string("'") + key + "' must be a string");
    return doc[key].get<std::string>();
  };
  ScanProfile p;
  p.name = field("name", true);
  p.file_glob = field("file_glob", true);
  p.import_pattern = field("import_pattern", true);
  const auto rule = field("package_rule", true);
  if (rule == "by-directory") p.package_rule = PackageRule::ByDirectory;
  else if (rule == "by-declared-namespace") p.package_rule = PackageRule::ByDeclaredNamespace;
  else throw Error(ErrorKind::BadProfile, "unknown package_rule '" + rule + "'");
  p.namespace_pattern = field("namespace_pattern", false);
  p.validate();
  return p;
}

struct UnresolvedImport {
  NodeId from;
  std::string module;
};

struct ScanResult {
  DependencyGraph graph;
  std::size_t files = 0;
  std::vector<UnresolvedImport> unresolved;
};

namespace detail {

inline std::string sanitize(std::string s) {
  for (auto& c : s)
    if (!is_deps_identifier_char(c)) c = '_';
  return s.empty() ? "_" : s;
}

/// "a/b/C.java" -> "a.b.C"
inline std::string class_name_for(const std::filesystem::path& relative) {
  auto stem = relative;
  stem.replace_extension();
  std::string out;
  for (const auto& part : stem) {
    if (!out.empty()) out += '.';
    out += part.string();
  }
  return sanitize(out);
}

inline std::string directory_package(const std::filesystem::path& relative) {
  const auto parent = relative.parent_path();
  if (parent.empty()) return "_root";
  std::string out;
  for (const auto& part : parent) {
    if (!out.empty()) out += '.';
    out += part.string();
  }
  return sanitize(out);
}

/// Turns an import capture into a dotted module name: "a/b.hpp" -> "a.b", "a::b" -> "a.b".
inline std::string normalize_module(std::string m) {
  if (m.find('/') != std::string::npos) {
    const auto slash = m.rfind('/');
    const auto dot = m.rfind('.');
    if (dot != std::string::npos && dot > slash) m.erase(dot);
    std::replace(m.begin(), m.end(), '/', '.');
  } else if (auto dot = m.rfind('.'); dot != std::string::npos) {
    // bare "b.hpp": drop a short lowercase extension
    const auto ext = m.substr(dot + 1);
    static const std::set<std::string> known{"h", "hh", "hpp", "hxx", "c", "cc", "cpp", "cxx", "py", "js", "ts"};
    if (known.contains(ext)) m.erase(dot);
  }
  for (std::size_t p; (p = m.find("::")) != std::string::npos;) m.replace(p, 2, ".");
  return sanitize(m);
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + p.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

inline ScanResult scan_sources(const std::filesystem::path& root, const ScanProfile& profile) {
  namespace fs = std::filesystem;
  profile.validate();
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw Error(ErrorKind::IoError, "'" + root.string() + "' is not a readable directory");

  std::vector<fs::path> files;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot list '" + root.string() + "': " + ec.message());
  for (const auto& entry : it) {
    if (!entry.is_regular_file()) continue;
    const auto rel = fs::relative(entry.path(), root).generic_string();
    const auto base = entry.path().filename().string();
    if (fnmatch(profile.file_glob.c_str(), rel.c_str(), 0) == 0 ||
        fnmatch(profile.file_glob.c_str(), base.c_str(), 0) == 0)
      files.push_back(fs::relative(entry.path(), root));
  }
  std::sort(files.begin(), files.end());

  const std::regex import_re(profile.import_pattern, std::regex::ECMAScript);
  const std::regex ns_re = profile.package_rule == PackageRule::ByDeclaredNamespace
                               ? std::regex(profile.namespace_pattern, std::regex::ECMAScript)
                               : std::regex();

  struct FileInfo {
    std::string cls;
    std::string package;
    std::vector<std::string> imports;
  };
  std::vector<FileInfo> infos;
  std::map<std::string, std::size_t> by_class;
  for (const auto& rel : files) {
    FileInfo info{detail::class_name_for(rel), detail::directory_package(rel), {}};
    const auto text = detail::read_file(root / rel);
    bool ns_found = false;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::smatch match;
      if (profile.package_rule == PackageRule::ByDeclaredNamespace && !ns_found &&
          std::regex_search(line, match, ns_re) && match[1].matched) {
        info.package = detail::sanitize(match[1].str());
        ns_found = true;
      }
      if (std::regex_search(line, match, import_re) && match[1].matched) info.imports.push_back(match[1].str());
    }
    // a.h and a.cpp collapse onto one class; the first file decides the package
    if (auto existing = by_class.find(info.cls); existing != by_class.end()) {
      auto& target = infos[existing->second].imports;
      target.insert(target.end(), info.imports.begin(), info.imports.end());
      continue;
    }
    by_class.emplace(info.cls, infos.size());
    infos.push_back(std::move(info));
  }

  // with declared namespaces, "<namespace>.<file stem>" also names a class
  std::map<std::string, std::optional<std::string>> qualified;
  if (profile.package_rule == PackageRule::ByDeclaredNamespace) {
    for (const auto& info : infos) {
      const auto dot = info.cls.rfind('.');
      const auto key = info.package + "." + (dot == std::string::npos ? info.cls : info.cls.substr(dot + 1));
      auto [it, fresh] = qualified.emplace(key, info.cls);
      if (!fresh) it->second.reset();
    }
  }

  auto resolve = [&](const std::string& module) -> std::optional<std::string> {
    const auto name = detail::normalize_module(module);
    if (by_class.contains(name)) return name;
    if (auto q = qualified.find(name); q != qualified.end()) return q->second;
    std::optional<std::string> found;
    for (const auto& [cls, idx] : by_class) {
      if (cls.size() > name.size() && cls.ends_with("." + name)) {
        if (found) return std::nullopt;  // ambiguous
        found = cls;
      }
    }
    return found;
  };

  ScanResult result;
  result.files = infos.size();
  GraphBuilder b;
  for (const auto& info : infos) b.add_node(NodeId(info.cls), PackageId(info.package));
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& info : infos) {
    for (const auto& module : info.imports) {
      auto target = resolve(module);
      if (!target) {
        result.unresolved.push_back({NodeId(info.cls), module});
        continue;
      }
      if (*target == info.cls || !seen.emplace(info.cls, *target).second) continue;
      b.add_edge(NodeId(info.cls), NodeId(*target));
    }
  }
  result.graph = b.build();
  return result;
}

}  // namespace depmod::io
