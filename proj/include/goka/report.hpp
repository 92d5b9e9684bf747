#pragma once

// Line-oriented `key: value` reports with insertion-ordered keys.

#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goka/digraph.hpp"

namespace goka {

inline std::string format_set(const std::vector<Vertex>& members) {
  if (members.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(members[i]);
  }
  return s;
}

inline std::string format_set(const VertexSet& s) { return format_set(s.members()); }

class Report {
 public:
  Report& add(std::string key, std::string value) {
    lines_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Report& add(std::string key, std::string_view value) { return add(std::move(key), std::string(value)); }
  Report& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
  Report& add(std::string key, bool value) { return add(std::move(key), std::string(value ? "true" : "false")); }
  Report& add(std::string key, const VertexSet& value) { return add(std::move(key), format_set(value)); }

  template <typename Int>
    requires std::is_integral_v<Int>
  Report& add(std::string key, Int value) {
    return add(std::move(key), std::to_string(value));
  }

  /// `prefix` is prepended to every line, e.g. "# " to embed the report as
  /// comments in a digraph file.
  void write(std::ostream& out, std::string_view prefix = "") const {
    for (const auto& [k, v] : lines_) out << prefix << k << ": " << v << '\n';
  }

  std::string str(std::string_view prefix = "") const {
    std::ostringstream out;
    write(out, prefix);
    return out.str();
  }

  const std::vector<std::pair<std::string, std::string>>& lines() const noexcept { return lines_; }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

}  // namespace goka
