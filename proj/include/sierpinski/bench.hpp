#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "encoding.hpp"
#include "forest.hpp"

namespace sierpinski::bench {

enum class Variant { naive, fenwick, sierpinski };

inline std::string to_string(Variant v) {
  switch (v) {
  case Variant::naive: return "naive";
  case Variant::fenwick: return "fenwick";
  case Variant::sierpinski: return "sierpinski";
  }
  return "?";
}

struct Row {
  Variant variant = Variant::naive;
  std::size_t n = 0;
  std::size_t ops = 0;
  double update_ns = 0.0;
  double prefix_ns = 0.0;
  // Stored values written per update and read per prefix query.
  double update_touched = 0.0;
  double prefix_touched = 0.0;
  // Distinct stored values involved in an update plus a prefix query at the
  // same index, averaged over the workload.
  double combined_touched = 0.0;
  // Checksum of the prefix replies; keeps the compiler honest and lets runs be compared.
  std::uint64_t checksum = 0;
};

/// One update and one inclusive prefix query per op, at indices drawn from a
/// seeded generator, so the workload is identical across variants.
inline Row run(Variant variant, std::size_t n, std::size_t ops, std::uint64_t seed = 20240611) {
  using clock = std::chrono::steady_clock;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> indices(ops);
  for (auto& j : indices) j = pick(rng);

  Row row;
  row.variant = variant;
  row.n = n;
  row.ops = ops;
  std::size_t written = 0;
  std::size_t read = 0;
  std::size_t combined = 0;
  std::uint64_t checksum = 0;
  clock::duration update_time{};
  clock::duration prefix_time{};

  if (variant == Variant::naive) {
    std::vector<std::uint8_t> bits(n, 0);
    for (auto j : indices) {
      auto t0 = clock::now();
      bits[j] ^= 1;
      auto t1 = clock::now();
      std::uint8_t acc = 0;
      for (std::size_t k = 0; k <= j; ++k) acc ^= bits[k];
      auto t2 = clock::now();
      update_time += t1 - t0;
      prefix_time += t2 - t1;
      checksum = checksum * 31 + acc;
      written += 1;
      read += j + 1;
      combined += j + 1;
    }
  } else {
    const auto forest =
        variant == Variant::fenwick ? build_fenwick(n) : build_sierpinski(n);
    BitArray array(forest);
    for (auto j : indices) {
      auto t0 = clock::now();
      written += array.apply_update(j, 1);
      auto t1 = clock::now();
      const auto acc = array.prefix_sum(j);
      auto t2 = clock::now();
      update_time += t1 - t0;
      prefix_time += t2 - t1;
      checksum = checksum * 31 + acc;
      read += array.sets().inclusive_parity(j).size();
      combined += array.sets().union_size(j);
    }
  }

  const double denom = ops == 0 ? 1.0 : static_cast<double>(ops);
  row.update_ns = std::chrono::duration<double, std::nano>(update_time).count() / denom;
  row.prefix_ns = std::chrono::duration<double, std::nano>(prefix_time).count() / denom;
  row.update_touched = static_cast<double>(written) / denom;
  row.prefix_touched = static_cast<double>(read) / denom;
  row.combined_touched = static_cast<double>(combined) / denom;
  row.checksum = checksum;
  return row;
}

} // namespace sierpinski::bench
