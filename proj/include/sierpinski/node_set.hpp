#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace sierpinski {

/// Strictly ascending set of node indices. Used for update sets, parity sets
/// and subtree node lists.
class NodeSet {
public:
  using value_type = std::size_t;
  using const_iterator = std::vector<std::size_t>::const_iterator;

  NodeSet() = default;

  NodeSet(std::initializer_list<std::size_t> nodes) : nodes_(nodes) { normalize(); }

  explicit NodeSet(std::vector<std::size_t> nodes) : nodes_(std::move(nodes)) { normalize(); }

  // Caller guarantees the input is already strictly ascending.
  static NodeSet from_sorted(std::vector<std::size_t> nodes) {
    NodeSet s;
    s.nodes_ = std::move(nodes);
    return s;
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  const_iterator begin() const noexcept { return nodes_.begin(); }
  const_iterator end() const noexcept { return nodes_.end(); }
  std::size_t operator[](std::size_t i) const { return nodes_[i]; }
  std::span<const std::size_t> view() const noexcept { return nodes_; }
  const std::vector<std::size_t>& to_vector() const noexcept { return nodes_; }

  bool contains(std::size_t node) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), node);
  }

  NodeSet united(const NodeSet& other) const {
    std::vector<std::size_t> out;
    out.reserve(nodes_.size() + other.nodes_.size());
    std::set_union(nodes_.begin(), nodes_.end(), other.nodes_.begin(), other.nodes_.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const NodeSet& s) {
    os << '{';
    for (std::size_t i = 0; i < s.nodes_.size(); ++i) {
      if (i != 0) os << ',';
      os << s.nodes_[i];
    }
    return os << '}';
  }

private:
  void normalize() {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  }

  std::vector<std::size_t> nodes_;
};

} // namespace sierpinski
