// Minimal use of the library: encode a bit array in a Sierpinski forest,
// flip a few bits, and read prefix parities.

#include <cstdint>
#include <iostream>
#include <vector>

#include "sierpinski/sierpinski.hpp"

int main() {
  using namespace sierpinski;

  const auto forest = build_sierpinski(27);
  BitArray bits(forest);
  for (std::size_t j : {2u, 5u, 13u, 20u}) bits.apply_update(j, 1);

  for (std::size_t j : {4u, 13u, 26u}) {
    std::cout << "p_" << j << " = " << int(bits.prefix_sum(j)) << "  via x" << bits.sets().parity_set(j)
              << '\n';
  }

  const auto report = weight_report(forest);
  std::cout << "max weight " << report.max_weight << ", average " << to_string(report.avg_weight)
            << '\n';
}
