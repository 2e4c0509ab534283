#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "node_set.hpp"

namespace sierpinski {

/// Inclusive span of node indices.
struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t length() const noexcept { return hi - lo + 1; }
  bool contains(std::size_t j) const noexcept { return lo <= j && j <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Parent/children structure over nodes 0..N-1.
///
/// A Forest may be constructed from an arbitrary parent list (e.g. one read
/// from a file) so that validate() has something to inspect; every other
/// operation assumes the forest validates. Children lists are derived from
/// the parent list and kept in ascending index order. Parent entries outside
/// [0, N) are kept verbatim but contribute no child link.
class Forest {
public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Forest() = default;

  // Parent indices with npos marking roots.
  static Forest from_raw(std::vector<std::size_t> parent) {
    Forest f;
    f.parent_ = std::move(parent);
    f.rebuild_children();
    return f;
  }

  explicit Forest(std::vector<std::optional<std::size_t>> parents) {
    parent_.reserve(parents.size());
    for (const auto& p : parents) parent_.push_back(p ? *p : npos);
    rebuild_children();
  }

  std::size_t size() const noexcept { return parent_.size(); }

  std::optional<std::size_t> parent(std::size_t j) const {
    check_index(j);
    if (parent_[j] == npos) return std::nullopt;
    return parent_[j];
  }

  // Raw parent entry; npos for roots.
  std::size_t parent_or_npos(std::size_t j) const noexcept { return parent_[j]; }

  bool is_root(std::size_t j) const {
    check_index(j);
    return parent_[j] == npos;
  }

  const std::vector<std::size_t>& children(std::size_t j) const {
    check_index(j);
    return children_[j];
  }

  std::vector<std::optional<std::size_t>> parents() const {
    std::vector<std::optional<std::size_t>> out;
    out.reserve(parent_.size());
    for (auto p : parent_) {
      out.push_back(p == npos ? std::nullopt : std::optional<std::size_t>(p));
    }
    return out;
  }

  NodeSet roots() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < parent_.size(); ++j) {
      if (parent_[j] == npos) out.push_back(j);
    }
    return NodeSet::from_sorted(std::move(out));
  }

  /// (parent, child) pairs, ascending by parent then child.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t p = 0; p < children_.size(); ++p) {
      for (auto c : children_[p]) out.emplace_back(p, c);
    }
    return out;
  }

  std::size_t edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& c : children_) n += c.size();
    return n;
  }

  void check_index(std::size_t j) const {
    if (j >= parent_.size()) {
      throw IndexError("node index " + std::to_string(j) + " out of range for forest of size " +
                       std::to_string(parent_.size()));
    }
  }

  friend bool operator==(const Forest& a, const Forest& b) { return a.parent_ == b.parent_; }

private:
  friend Forest delete_edge(const Forest& f, std::size_t child);
  friend Forest truncate(const Forest& f, std::size_t n);

  void rebuild_children() {
    children_.assign(parent_.size(), {});
    // Ascending child order falls out of iterating children in index order.
    for (std::size_t j = 0; j < parent_.size(); ++j) {
      auto p = parent_[j];
      if (p != npos && p < parent_.size()) children_[p].push_back(j);
    }
  }

  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
};

namespace detail {

inline std::size_t next_power(std::size_t n, std::size_t base) {
  std::size_t m = 1;
  while (m < n) m *= base;
  return m;
}

inline void require_positive(std::size_t n) {
  if (n == 0) throw InvalidSizeError("forest size must be at least 1");
}

// Full tree on [start, end], end - start + 1 a power of 3. The centre of
// each interval parents the midpoints of its outer thirds.
inline void sierpinski_recurse(std::vector<std::size_t>& parent, std::size_t start,
                               std::size_t end) {
  if (start == end) return;
  const std::size_t third = (end - start + 1) / 3;
  const std::size_t left = start + (third - 1) / 2;
  const std::size_t centre = (start + end) / 2;
  const std::size_t right = end - (left - start);
  parent[left] = centre;
  parent[right] = centre;
  sierpinski_recurse(parent, start, start + third - 1);
  sierpinski_recurse(parent, start + third, start + 2 * third - 1);
  sierpinski_recurse(parent, start + 2 * third, end);
}

// Full tree on [start, end], end - start + 1 a power of 2.
inline void fenwick_recurse(std::vector<std::size_t>& parent, std::size_t start, std::size_t end) {
  if (start == end) return;
  const std::size_t mid = start + (end - start) / 2;
  parent[mid] = end;
  fenwick_recurse(parent, start, mid);
  fenwick_recurse(parent, mid + 1, end);
}

} // namespace detail

/// Deletes every node with index >= n, highest index first. Children of a
/// deleted node become roots.
inline Forest truncate(const Forest& f, std::size_t n) {
  if (n > f.size()) throw InvalidSizeError("cannot truncate to a larger size");
  std::vector<std::size_t> parent = f.parent_;
  for (std::size_t j = f.size(); j-- > n;) {
    for (auto c : f.children_[j]) parent[c] = Forest::npos;
  }
  parent.resize(n);
  return Forest::from_raw(std::move(parent));
}

inline Forest build_sierpinski(std::size_t n) {
  detail::require_positive(n);
  const std::size_t full = detail::next_power(n, 3);
  std::vector<std::size_t> parent(full, Forest::npos);
  detail::sierpinski_recurse(parent, 0, full - 1);
  auto tree = Forest::from_raw(std::move(parent));
  return full == n ? tree : truncate(tree, n);
}

inline Forest build_fenwick(std::size_t n) {
  detail::require_positive(n);
  const std::size_t full = detail::next_power(n, 2);
  std::vector<std::size_t> parent(full, Forest::npos);
  detail::fenwick_recurse(parent, 0, full - 1);
  auto tree = Forest::from_raw(std::move(parent));
  return full == n ? tree : truncate(tree, n);
}

enum class Structure { sierpinski, fenwick };

inline Forest build(Structure s, std::size_t n) {
  return s == Structure::sierpinski ? build_sierpinski(n) : build_fenwick(n);
}

inline std::string to_string(Structure s) {
  return s == Structure::sierpinski ? "sierpinski" : "fenwick";
}

/// Parent chain of j up to its root, nearest first; excludes j.
inline std::vector<std::size_t> ancestors(const Forest& f, std::size_t j) {
  f.check_index(j);
  std::vector<std::size_t> out;
  for (auto p = f.parent_or_npos(j); p != Forest::npos; p = f.parent_or_npos(p)) {
    if (out.size() >= f.size()) throw FormatError("parent links contain a cycle");
    out.push_back(p);
  }
  return out;
}

inline std::size_t depth(const Forest& f, std::size_t j) { return ancestors(f, j).size(); }

/// j together with all of its descendants.
inline NodeSet subtree_nodes(const Forest& f, std::size_t j) {
  f.check_index(j);
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{j};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (auto c : f.children(v)) stack.push_back(c);
  }
  return NodeSet(std::move(out));
}

/// The span of subtree(j) when it is contiguous, otherwise nullopt.
inline std::optional<Interval> subtree_interval(const Forest& f, std::size_t j) {
  auto nodes = subtree_nodes(f, j);
  Interval span{nodes[0], nodes[nodes.size() - 1]};
  if (span.length() != nodes.size()) return std::nullopt;
  return span;
}

/// Copy of f with the edge above `child` removed.
inline Forest delete_edge(const Forest& f, std::size_t child) {
  f.check_index(child);
  if (f.parent_[child] == Forest::npos) {
    throw NoEdgeError("node " + std::to_string(child) + " is a root and has no parent edge");
  }
  auto parent = f.parent_;
  parent[child] = Forest::npos;
  return Forest::from_raw(std::move(parent));
}

/// Returns nullopt for a well-formed forest, otherwise a description of the
/// first violation found: out-of-range parent, self-loop, or cycle.
inline std::optional<std::string> validate(const Forest& f) {
  const std::size_t n = f.size();
  for (std::size_t j = 0; j < n; ++j) {
    auto p = f.parent_or_npos(j);
    if (p == Forest::npos) continue;
    if (p >= n) {
      return "node " + std::to_string(j) + " has out-of-range parent " + std::to_string(p);
    }
    if (p == j) return "node " + std::to_string(j) + " is its own parent";
  }
  // 0 = unvisited, 1 = on current path, 2 = reaches a root.
  std::vector<unsigned char> state(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> path;
    std::size_t v = j;
    while (v != Forest::npos && state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = f.parent_or_npos(v);
    }
    if (v != Forest::npos && state[v] == 1) {
      return "cycle through node " + std::to_string(v);
    }
    for (auto u : path) state[u] = 2;
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (auto c : f.children(j)) {
      if (f.parent_or_npos(c) != j) {
        return "child list of node " + std::to_string(j) + " disagrees with parent of " +
               std::to_string(c);
      }
    }
  }
  return std::nullopt;
}

} // namespace sierpinski
