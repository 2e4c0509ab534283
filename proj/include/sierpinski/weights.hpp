#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "encoding.hpp"
#include "forest.hpp"

namespace sierpinski {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Smallest k with 3^k >= n.
inline std::size_t ceil_log3(std::size_t n) {
  std::size_t k = 0;
  for (std::size_t m = 1; m < n; m *= 3) ++k;
  return k;
}

/// Exponent k if n == 3^k.
inline std::optional<std::size_t> exact_log3(std::size_t n) {
  std::size_t k = 0;
  std::size_t m = 1;
  while (m < n) {
    m *= 3;
    ++k;
  }
  if (m != n) return std::nullopt;
  return k;
}

/// Per-node bound ceil(log3 N) + 1.
inline std::size_t weight_bound(std::size_t n) { return ceil_log3(n) + 1; }

/// Lower bound log3(2N) on the average weight of any such encoding.
inline double jiang_lower_bound(std::size_t n) {
  return std::log(2.0 * static_cast<double>(n)) / std::log(3.0);
}

inline std::size_t node_weight(const Forest& f, std::size_t j) {
  return update_set(f, j).united(parity_set(f, j, Boundary::inclusive)).size();
}

inline std::vector<std::size_t> weight_table(const SetIndex& index) {
  std::vector<std::size_t> w(index.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = index.union_size(j);
  return w;
}

inline std::vector<std::size_t> weight_table(const Forest& f) { return weight_table(SetIndex(f)); }

inline Rational average_weight(const std::vector<std::size_t>& weights) {
  std::int64_t total = 0;
  for (auto w : weights) total += static_cast<std::int64_t>(w);
  return {total, static_cast<std::int64_t>(weights.size())};
}

inline Rational average_weight(const Forest& f) { return average_weight(weight_table(f)); }

struct WeightReport {
  std::size_t n = 0;
  std::vector<std::size_t> weights;
  std::size_t max_weight = 0;
  Rational avg_weight;
  std::size_t bound = 0;
  double jiang_lower = 0.0;
};

inline WeightReport weight_report(const Forest& f) {
  WeightReport r;
  r.n = f.size();
  r.weights = weight_table(f);
  r.max_weight = r.weights.empty() ? 0 : *std::max_element(r.weights.begin(), r.weights.end());
  r.avg_weight = r.weights.empty() ? Rational(0) : average_weight(r.weights);
  r.bound = r.n == 0 ? 0 : weight_bound(r.n);
  r.jiang_lower = r.n == 0 ? 0.0 : jiang_lower_bound(r.n);
  return r;
}

/// Header `N,j,weight,bound`, one row per node in index order.
inline void write_weight_csv(std::ostream& os, const WeightReport& r, bool header = true) {
  if (header) os << "N,j,weight,bound\n";
  for (std::size_t j = 0; j < r.weights.size(); ++j) {
    os << r.n << ',' << j << ',' << r.weights[j] << ',' << r.bound << '\n';
  }
}

struct WeightViolation {
  std::size_t n;
  std::size_t j;
  std::size_t weight;
  friend bool operator==(const WeightViolation&, const WeightViolation&) = default;
};

struct MonotonicityScan {
  std::size_t j = 0;
  std::size_t first_n = 0;
  // weights[i] is w_N(j) for N = first_n + i.
  std::vector<std::size_t> weights;
  // Sizes N where w_N(j) < w_{N-1}(j).
  std::vector<std::size_t> violations;
};

/// w_N(j) on Sierpinski forests for N = j+1 .. n_max.
inline MonotonicityScan monotonicity_scan(std::size_t j, std::size_t n_max) {
  if (j >= n_max) throw IndexError("monotonicity_scan: j must be below n_max");
  MonotonicityScan scan;
  scan.j = j;
  scan.first_n = j + 1;
  for (std::size_t n = j + 1; n <= n_max; ++n) {
    scan.weights.push_back(SetIndex(build_sierpinski(n)).union_size(j));
    const auto k = scan.weights.size();
    if (k >= 2 && scan.weights[k - 1] < scan.weights[k - 2]) scan.violations.push_back(n);
  }
  return scan;
}

/// Weight tables of the Sierpinski forests of size 1..n_max; entry N-1 holds w_N.
inline std::vector<std::vector<std::size_t>> sierpinski_weight_tables(std::size_t n_max) {
  std::vector<std::vector<std::size_t>> tables;
  tables.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) tables.push_back(weight_table(build_sierpinski(n)));
  return tables;
}

/// First (N, j) where w_N(j) < w_{N-1}(j), scanning all j < N <= n_max.
inline std::optional<WeightViolation> monotonicity_check(
    const std::vector<std::vector<std::size_t>>& tables) {
  for (std::size_t n = 2; n <= tables.size(); ++n) {
    const auto& prev = tables[n - 2];
    const auto& cur = tables[n - 1];
    for (std::size_t j = 0; j < prev.size(); ++j) {
      if (cur[j] < prev[j]) return WeightViolation{n, j, cur[j]};
    }
  }
  return std::nullopt;
}

/// Checks w_N(j) <= ceil(log3 N) + 1 for one table, with equality when N is a
/// power of 3.
inline std::optional<WeightViolation> theorem_check(std::size_t n,
                                                    const std::vector<std::size_t>& weights) {
  const auto bound = weight_bound(n);
  const auto exact = exact_log3(n);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] > bound || (exact && weights[j] != *exact + 1)) {
      return WeightViolation{n, j, weights[j]};
    }
  }
  return std::nullopt;
}

/// Runs the per-node bound over every Sierpinski forest of size 1..n_max.
inline std::optional<WeightViolation> theorem_check(std::size_t n_max) {
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (auto v = theorem_check(n, weight_table(build_sierpinski(n)))) return v;
  }
  return std::nullopt;
}

} // namespace sierpinski
