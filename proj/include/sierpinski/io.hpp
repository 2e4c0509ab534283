#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "forest.hpp"
#include "optimizer.hpp"
#include "weights.hpp"

namespace sierpinski {

/// `{"n":<int>,"parents":[<int or null>,...]}`, compact, no trailing newline.
inline std::string to_json(const Forest& f) {
  nlohmann::json parents = nlohmann::json::array();
  for (const auto& p : f.parents()) {
    if (p) {
      parents.push_back(*p);
    } else {
      parents.push_back(nullptr);
    }
  }
  nlohmann::json doc;
  doc["n"] = f.size();
  doc["parents"] = std::move(parents);
  return doc.dump();
}

/// Parses the JSON forest format. Structural problems in the parent list
/// (cycles, self-loops, out-of-range parents) are left for validate().
inline Forest from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("forest JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("parents")) {
    throw FormatError("forest JSON must be an object with \"n\" and \"parents\"");
  }
  if (!doc["n"].is_number_unsigned()) throw FormatError("forest JSON: \"n\" must be a count");
  const auto& list = doc["parents"];
  if (!list.is_array()) throw FormatError("forest JSON: \"parents\" must be an array");
  const auto n = doc["n"].get<std::size_t>();
  if (list.size() != n) {
    throw FormatError("forest JSON: expected " + std::to_string(n) + " parents, found " +
                      std::to_string(list.size()));
  }
  std::vector<std::optional<std::size_t>> parents;
  parents.reserve(n);
  for (const auto& p : list) {
    if (p.is_null()) {
      parents.emplace_back(std::nullopt);
    } else if (p.is_number_unsigned()) {
      parents.emplace_back(p.get<std::size_t>());
    } else {
      throw FormatError("forest JSON: parent entries must be non-negative integers or null");
    }
  }
  return Forest(std::move(parents));
}

inline void write_dot(std::ostream& os, const Forest& f) {
  os << "digraph forest {\n";
  for (std::size_t j = 0; j < f.size(); ++j) os << "  " << j << " [label=\"" << j << "\"];\n";
  for (const auto& [p, c] : f.edges()) os << "  " << p << " -> " << c << ";\n";
  os << "}\n";
}

inline std::string to_dot(const Forest& f) {
  std::ostringstream os;
  write_dot(os, f);
  return os.str();
}

/// Comment line with the size and roots, then one `parent child` line per edge.
inline void write_edges(std::ostream& os, const Forest& f) {
  os << "# n=" << f.size() << " roots=";
  const auto roots = f.roots();
  for (std::size_t i = 0; i < roots.size(); ++i) os << (i ? "," : "") << roots[i];
  os << '\n';
  for (const auto& [p, c] : f.edges()) os << p << ' ' << c << '\n';
}

inline nlohmann::json prune_report_json(const PruneReport& r) {
  nlohmann::json deleted = nlohmann::json::array();
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) {
    deleted.push_back({s.parent, s.child});
    steps.push_back({{"edge", {s.parent, s.child}},
                     {"avg_before", to_string(s.avg_before)},
                     {"avg_after", to_string(s.avg_after)}});
  }
  return {{"deleted", deleted},
          {"avg_before", to_string(r.avg_before)},
          {"avg_after", to_string(r.avg_after)},
          {"steps", steps},
          {"sweeps", r.sweeps},
          {"forest", nlohmann::json::parse(to_json(r.result))}};
}

struct SizeRange {
  std::size_t first = 1;
  std::size_t last = 1;
};

/// "a..b" or a single size "a".
inline SizeRange parse_size_range(std::string_view text) {
  auto parse_count = [&](std::string_view s) {
    std::size_t value = 0;
    if (s.empty()) throw FormatError("empty size in range '" + std::string(text) + "'");
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw FormatError("bad size range '" + std::string(text) + "'");
      value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    return value;
  };
  SizeRange range;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    range.first = parse_count(text.substr(0, dots));
    range.last = parse_count(text.substr(dots + 2));
  } else {
    range.first = range.last = parse_count(text);
  }
  if (range.first == 0 || range.last < range.first) {
    throw FormatError("size range must satisfy 1 <= first <= last");
  }
  return range;
}

} // namespace sierpinski
