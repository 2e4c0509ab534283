#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "forest.hpp"
#include "weights.hpp"

namespace sierpinski {

/// Change in average weight caused by deleting the edge above `child`.
inline Rational deletion_gain(const Forest& f, std::size_t child) {
  return average_weight(delete_edge(f, child)) - average_weight(f);
}

struct PruneStep {
  std::size_t parent;
  std::size_t child;
  Rational avg_before;
  Rational avg_after;
};

struct PruneReport {
  std::vector<PruneStep> steps;
  Rational avg_before;
  Rational avg_after;
  std::size_t sweeps = 0;
  Forest result;

  std::vector<std::pair<std::size_t, std::size_t>> deleted() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.emplace_back(s.parent, s.child);
    return out;
  }
};

/// Sweeps children in ascending index order, deleting each parent edge whose
/// removal strictly lowers the average weight, until a sweep deletes nothing.
inline PruneReport greedy_prune(const Forest& f) {
  PruneReport report;
  report.result = f;
  Rational current = f.size() == 0 ? Rational(0) : average_weight(f);
  report.avg_before = current;
  bool changed = true;
  while (changed) {
    changed = false;
    ++report.sweeps;
    for (std::size_t c = 0; c < report.result.size(); ++c) {
      const auto p = report.result.parent_or_npos(c);
      if (p == Forest::npos) continue;
      auto candidate = delete_edge(report.result, c);
      const auto after = average_weight(candidate);
      if (after < current) {
        report.steps.push_back({p, c, current, after});
        report.result = std::move(candidate);
        current = after;
        changed = true;
      }
    }
  }
  report.avg_after = current;
  return report;
}

} // namespace sierpinski
