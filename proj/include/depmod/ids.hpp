#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "depmod/error.hpp"

namespace depmod {

/// Non-empty and free of whitespace and control characters.
inline bool is_valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (c <= 0x20 || c == 0x7f) return false;
  }
  return true;
}

namespace detail {

template <typename Tag>
class Identifier {
 public:
  Identifier() = default;
  explicit Identifier(std::string name) : name_(std::move(name)) {
    if (!is_valid_identifier(name_)) {
      throw Error(ErrorKind::InvalidIdentifier, std::string(Tag::label) + " '" + name_ + "'");
    }
  }

  const std::string& str() const noexcept { return name_; }

  // std::string comparison is bytewise, which matches code point order for UTF-8.
  friend auto operator<=>(const Identifier&, const Identifier&) = default;
  friend bool operator==(const Identifier&, const Identifier&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Identifier& id) { return os << id.name_; }

 private:
  std::string name_;
};

struct NodeTag {
  static constexpr const char* label = "node id";
};
struct PackageTag {
  static constexpr const char* label = "package id";
};

}  // namespace detail

using NodeId = detail::Identifier<detail::NodeTag>;
using PackageId = detail::Identifier<detail::PackageTag>;

}  // namespace depmod

template <typename Tag>
struct std::hash<depmod::detail::Identifier<Tag>> {
  std::size_t operator()(const depmod::detail::Identifier<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
