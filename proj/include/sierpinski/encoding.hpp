#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "forest.hpp"
#include "node_set.hpp"

namespace sierpinski {

/// Inclusive prefix at j covers n_0..n_j; exclusive covers n_0..n_{j-1}.
enum class Boundary { inclusive, exclusive };

/// {j} plus the ancestors of j.
inline NodeSet update_set(const Forest& f, std::size_t j) {
  auto chain = ancestors(f, j);
  chain.push_back(j);
  return NodeSet(std::move(chain));
}

namespace detail {

// Node k enters the inclusive prefix at j exactly when one of k, parent(k)
// lies at or below j; a root's parent counts as +infinity.
inline bool crosses(const Forest& f, std::size_t k, std::size_t j) {
  const auto p = f.parent_or_npos(k);
  return (k <= j) != (p != Forest::npos && p <= j);
}

} // namespace detail

/// Reference parity set: the nodes whose stored values combine to the prefix
/// at j. O(N) scan of every edge; see SetIndex for the precomputed version.
inline NodeSet parity_set(const Forest& f, std::size_t j, Boundary boundary = Boundary::inclusive) {
  f.check_index(j);
  if (boundary == Boundary::exclusive) {
    if (j == 0) return {};
    --j;
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (detail::crosses(f, k, j)) out.push_back(k);
  }
  return NodeSet::from_sorted(std::move(out));
}

/// Integer-mode prefix coefficients: sum_{i in prefix} n_i = sum_k c_k x_k.
using SignedCoefficients = std::map<std::size_t, int>;

inline SignedCoefficients signed_coefficients(const Forest& f, std::size_t j,
                                              Boundary boundary = Boundary::inclusive) {
  auto set = parity_set(f, j, boundary);
  SignedCoefficients out;
  if (set.empty()) return out;
  const std::size_t cut = boundary == Boundary::exclusive ? j - 1 : j;
  for (auto k : set) out.emplace(k, k <= cut ? +1 : -1);
  return out;
}

/// Precomputed update chains and inclusive parity sets for every node.
///
/// Parity sets are built by one left-to-right sweep: moving the cut from
/// j-1 to j toggles the crossing status of node j and of each child of j,
/// and nothing else. Total cost is O(N + sum of set sizes). The index is
/// bound to the forest it was built from; a forest with a deleted edge needs
/// a fresh index.
class SetIndex {
public:
  SetIndex() = default;

  explicit SetIndex(const Forest& f) : forest_(f) {
    const std::size_t n = f.size();
    offsets_.assign(n + 1, 0);
    std::vector<unsigned char> member(n, 0);
    std::vector<std::size_t> current;
    for (std::size_t j = 0; j < n; ++j) {
      member[j] ^= 1;
      for (auto c : f.children(j)) member[c] ^= 1;
      // Members differ from the previous set only at j and children(j); rebuild
      // the sorted list by merging those toggles into it.
      std::vector<std::size_t> toggled = f.children(j);
      toggled.push_back(j);
      std::sort(toggled.begin(), toggled.end());
      std::vector<std::size_t> next;
      next.reserve(current.size() + toggled.size());
      auto a = current.begin();
      auto b = toggled.begin();
      while (a != current.end() || b != toggled.end()) {
        std::size_t v;
        if (b == toggled.end() || (a != current.end() && *a < *b)) {
          v = *a++;
        } else if (a == current.end() || *b < *a) {
          v = *b++;
        } else {
          v = *a++;
          ++b;
        }
        if (member[v]) next.push_back(v);
      }
      current = std::move(next);
      flat_.insert(flat_.end(), current.begin(), current.end());
      offsets_[j + 1] = flat_.size();
    }
  }

  const Forest& forest() const noexcept { return forest_; }
  std::size_t size() const noexcept { return forest_.size(); }

  std::span<const std::size_t> inclusive_parity(std::size_t j) const {
    forest_.check_index(j);
    return {flat_.data() + offsets_[j], offsets_[j + 1] - offsets_[j]};
  }

  std::span<const std::size_t> parity(std::size_t j, Boundary boundary) const {
    forest_.check_index(j);
    if (boundary == Boundary::inclusive) return inclusive_parity(j);
    if (j == 0) return {};
    return inclusive_parity(j - 1);
  }

  NodeSet parity_set(std::size_t j, Boundary boundary = Boundary::inclusive) const {
    auto s = parity(j, boundary);
    return NodeSet::from_sorted({s.begin(), s.end()});
  }

  NodeSet update_set(std::size_t j) const { return sierpinski::update_set(forest_, j); }

  // |update_set(j) ∪ parity_set(j, inclusive)| without materialising either set.
  std::size_t union_size(std::size_t j) const {
    auto p = inclusive_parity(j);
    std::size_t count = p.size();
    for (std::size_t v = j; v != Forest::npos; v = forest_.parent_or_npos(v)) {
      if (!std::binary_search(p.begin(), p.end(), v)) ++count;
    }
    return count;
  }

private:
  Forest forest_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> flat_;
};

/// Bits under XOR. Deltas are flips, so the only legal delta is 1.
struct BitDomain {
  using value_type = std::uint8_t;
  static constexpr const char* name = "bit";
  static value_type zero() { return 0; }
  static value_type add(value_type a, value_type b) { return a ^ b; }
  static value_type sub(value_type a, value_type b) { return a ^ b; }
  static void check_delta(value_type delta) {
    if (delta != 1) throw std::invalid_argument("bit mode updates are flips: delta must be 1");
  }
};

/// Integers under addition.
struct CountDomain {
  using value_type = std::int64_t;
  static constexpr const char* name = "count";
  static value_type zero() { return 0; }
  static value_type add(value_type a, value_type b) { return a + b; }
  static value_type sub(value_type a, value_type b) { return a - b; }
  static void check_delta(value_type) {}
};

/// Logical array n stored as x_j = n_j + (sum of x over children of j).
///
/// Updates touch update_set(j); prefix queries read the parity set of j.
/// Single writer, any number of readers between writes.
template <class Domain>
class EncodedArray {
public:
  using value_type = typename Domain::value_type;

  explicit EncodedArray(const Forest& f)
      : index_(f), values_(f.size(), Domain::zero()) {}

  EncodedArray(const Forest& f, std::span<const value_type> logical) : EncodedArray(f) {
    if (logical.size() != f.size()) {
      throw SizeMismatchError("logical array has " + std::to_string(logical.size()) +
                              " entries, forest has " + std::to_string(f.size()));
    }
    // Children before parents: visit in post-order from each root.
    std::vector<std::size_t> order;
    order.reserve(f.size());
    for (auto r : f.roots()) {
      std::vector<std::pair<std::size_t, std::size_t>> stack{{r, 0}};
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& kids = f.children(v);
        if (next < kids.size()) {
          stack.emplace_back(kids[next++], 0);
        } else {
          order.push_back(v);
          stack.pop_back();
        }
      }
    }
    for (auto v : order) {
      value_type x = logical[v];
      for (auto c : f.children(v)) x = Domain::add(x, values_[c]);
      values_[v] = x;
    }
  }

  /// Wraps already-encoded values x.
  static EncodedArray from_stored(const Forest& f, std::vector<value_type> stored) {
    if (stored.size() != f.size()) {
      throw SizeMismatchError("stored array has " + std::to_string(stored.size()) +
                              " entries, forest has " + std::to_string(f.size()));
    }
    EncodedArray a(f);
    a.values_ = std::move(stored);
    return a;
  }

  const Forest& forest() const noexcept { return index_.forest(); }
  const SetIndex& sets() const noexcept { return index_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const value_type> values() const noexcept { return values_; }

  std::vector<value_type> decode() const {
    const auto& f = forest();
    std::vector<value_type> out(values_.size());
    for (std::size_t j = 0; j < values_.size(); ++j) {
      value_type n = values_[j];
      for (auto c : f.children(j)) n = Domain::sub(n, values_[c]);
      out[j] = n;
    }
    return out;
  }

  /// Adds delta to n_j. Returns the number of stored values written.
  std::size_t apply_update(std::size_t j, value_type delta) {
    forest().check_index(j);
    Domain::check_delta(delta);
    std::size_t touched = 0;
    for (std::size_t v = j; v != Forest::npos; v = forest().parent_or_npos(v)) {
      values_[v] = Domain::add(values_[v], delta);
      ++touched;
    }
    return touched;
  }

  value_type prefix_sum(std::size_t j, Boundary boundary = Boundary::inclusive) const {
    forest().check_index(j);
    auto set = index_.parity(j, boundary);
    value_type acc = Domain::zero();
    if (set.empty()) return acc;
    const std::size_t cut = boundary == Boundary::exclusive ? j - 1 : j;
    for (auto k : set) {
      acc = k <= cut ? Domain::add(acc, values_[k]) : Domain::sub(acc, values_[k]);
    }
    return acc;
  }

private:
  SetIndex index_;
  std::vector<value_type> values_;
};

using BitArray = EncodedArray<BitDomain>;
using CountArray = EncodedArray<CountDomain>;

template <class Domain>
EncodedArray<Domain> encode(std::span<const typename Domain::value_type> logical, const Forest& f) {
  return EncodedArray<Domain>(f, logical);
}

template <class Domain>
std::vector<typename Domain::value_type> decode(const EncodedArray<Domain>& a) {
  return a.decode();
}

} // namespace sierpinski
