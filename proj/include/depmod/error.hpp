#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace depmod {

enum class ErrorKind {
  InvalidIdentifier,
  DuplicateNode,
  DuplicateEdge,
  SelfLoop,
  UnknownNode,
  UnknownPackage,
  EmptyGraph,
  NotBorderNode,
  InvalidMove,
  IncompletePartition,
  TooFewEdges,
  Syntax,
  UnsupportedDot,
  MissingPackage,
  IoError,
  BadProfile,
  BadArgument,
  Invariant,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidIdentifier: return "InvalidIdentifier";
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::UnknownPackage: return "UnknownPackage";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::NotBorderNode: return "NotBorderNode";
    case ErrorKind::InvalidMove: return "InvalidMove";
    case ErrorKind::IncompletePartition: return "IncompletePartition";
    case ErrorKind::TooFewEdges: return "TooFewEdges";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnsupportedDot: return "UnsupportedDot";
    case ErrorKind::MissingPackage: return "MissingPackage";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::BadProfile: return "BadProfile";
    case ErrorKind::BadArgument: return "BadArgument";
    case ErrorKind::Invariant: return "InvariantFailure";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` discriminates.
/// Parse errors additionally carry a 1-based line and column (0 when not applicable).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(format(kind, message, line, column)),
        kind_(kind),
        line_(line),
        column_(column) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(ErrorKind kind, const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string out(to_string(kind));
    if (line > 0) {
      out += " at line " + std::to_string(line);
      if (column > 0) out += ", column " + std::to_string(column);
    }
    out += ": " + message;
    return out;
  }

  ErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace depmod
