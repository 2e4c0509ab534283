#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "sierpinski/encoding.hpp"
#include "test_support.hpp"

using namespace sierpinski;

namespace {

using Bits = std::vector<std::uint8_t>;
using Ints = std::vector<std::int64_t>;

Bits indicator(std::size_t n, std::size_t j) {
  Bits v(n, 0);
  v[j] = 1;
  return v;
}

std::vector<Forest> standard_forests(std::size_t max_n) {
  std::vector<Forest> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    out.push_back(build_sierpinski(n));
    out.push_back(build_fenwick(n));
  }
  return out;
}

template <class T>
T naive_prefix(const std::vector<T>& logical, std::size_t j, Boundary b, bool xor_mode) {
  const std::size_t end = b == Boundary::inclusive ? j + 1 : j;
  T acc = 0;
  for (std::size_t i = 0; i < end; ++i) acc = xor_mode ? T(acc ^ logical[i]) : T(acc + logical[i]);
  return acc;
}

} // namespace

TEST(Encode, Examples) {
  const auto f27 = build_sierpinski(27);
  const BitArray zero(f27, Bits(27, 0));
  EXPECT_EQ(zero.decode(), Bits(27, 0));
  for (auto v : zero.values()) EXPECT_EQ(v, 0);

  const BitArray three(build_sierpinski(3), Bits{1, 0, 0});
  EXPECT_EQ(Bits(three.values().begin(), three.values().end()), (Bits{1, 1, 0}));

  const BitArray nine(build_sierpinski(9), indicator(9, 4));
  EXPECT_EQ(Bits(nine.values().begin(), nine.values().end()), indicator(9, 4));

  EXPECT_THROW(BitArray(build_sierpinski(9), Bits(8, 0)), SizeMismatchError);
}

TEST(Encode, MatchesSubtreeSumDefinition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = trial % 3 == 0 ? test_util::random_forest(rng, 1 + rng() % 120)
                                  : test_util::random_pruned_forest(rng, 200);
    Ints logical(f.size());
    for (auto& v : logical) v = static_cast<std::int64_t>(rng() % 21) - 10;
    const CountArray a(f, logical);
    const auto want = test_util::encode_by_definition(
        f, logical, [](std::int64_t x, std::int64_t y) { return x + y; });
    ASSERT_EQ(Ints(a.values().begin(), a.values().end()), want);
  }
}

TEST(Decode, Examples) {
  std::mt19937_64 rng(3);
  const auto f = build_sierpinski(27);
  for (int i = 0; i < 1000; ++i) {
    Bits n(27);
    for (auto& b : n) b = rng() & 1;
    ASSERT_EQ(decode(encode<BitDomain>(n, f)), n);
  }
  EXPECT_EQ(BitArray::from_stored(f, Bits(27, 0)).decode(), Bits(27, 0));
  EXPECT_EQ(BitArray::from_stored(build_fenwick(7), Bits(7, 1)).decode(),
            (Bits{1, 0, 1, 1, 1, 0, 1}));
}

TEST(UpdateSet, Examples) {
  EXPECT_EQ(update_set(build_sierpinski(9), 0), (NodeSet{0, 1, 4}));
  EXPECT_EQ(update_set(build_sierpinski(9), 4), (NodeSet{4}));
  EXPECT_EQ(update_set(build_sierpinski(27), 14), (NodeSet{13, 14}));
  EXPECT_THROW(update_set(build_sierpinski(27), 27), IndexError);
}

TEST(ParitySet, Examples) {
  EXPECT_EQ(parity_set(build_fenwick(7), 6), (NodeSet{3, 5, 6}));
  EXPECT_EQ(parity_set(build_sierpinski(9), 4), (NodeSet{4, 5, 7}));
  EXPECT_EQ(parity_set(build_sierpinski(9), 8), (NodeSet{4}));
  for (const auto& f : standard_forests(30)) {
    EXPECT_TRUE(parity_set(f, 0, Boundary::exclusive).empty());
  }
  EXPECT_EQ(parity_set(build_sierpinski(9), 5, Boundary::exclusive),
            parity_set(build_sierpinski(9), 4, Boundary::inclusive));
  EXPECT_THROW(parity_set(build_sierpinski(9), 9), IndexError);
}

TEST(SignedCoefficients, Examples) {
  EXPECT_EQ(signed_coefficients(build_sierpinski(9), 4),
            (SignedCoefficients{{4, +1}, {5, -1}, {7, -1}}));
  for (std::size_t k = 0; k <= 5; ++k) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) n *= 3;
    EXPECT_EQ(signed_coefficients(build_sierpinski(n), n - 1),
              (SignedCoefficients{{(n - 1) / 2, +1}}));
  }
  EXPECT_TRUE(signed_coefficients(build_sierpinski(9), 0, Boundary::exclusive).empty());
}

// Integer identity: for every unit logical vector e_i,
// sum_k c_k * [i in subtree(k)] must equal [i in prefix].
TEST(SignedCoefficients, IntegerIdentity) {
  std::mt19937_64 rng(5);
  std::vector<Forest> forests = standard_forests(40);
  for (int i = 0; i < 60; ++i) forests.push_back(test_util::random_pruned_forest(rng, 81));
  for (int i = 0; i < 60; ++i) forests.push_back(test_util::random_forest(rng, 1 + rng() % 60));
  for (const auto& f : forests) {
    std::vector<NodeSet> subtrees;
    for (std::size_t k = 0; k < f.size(); ++k) subtrees.push_back(subtree_nodes(f, k));
    for (auto b : {Boundary::inclusive, Boundary::exclusive}) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        const auto coeffs = signed_coefficients(f, j, b);
        const auto keys = parity_set(f, j, b);
        ASSERT_EQ(coeffs.size(), keys.size());
        for (const auto& [k, c] : coeffs) {
          ASSERT_TRUE(keys.contains(k));
          ASSERT_TRUE(c == 1 || c == -1);
        }
        const std::size_t end = b == Boundary::inclusive ? j + 1 : j;
        for (std::size_t i = 0; i < f.size(); ++i) {
          int total = 0;
          for (const auto& [k, c] : coeffs) total += subtrees[k].contains(i) ? c : 0;
          ASSERT_EQ(total, i < end ? 1 : 0) << "j=" << j << " i=" << i;
        }
      }
    }
  }
}

TEST(ApplyUpdate, Examples) {
  BitArray a(build_sierpinski(9));
  EXPECT_EQ(a.apply_update(0, 1), 3u);
  EXPECT_EQ(Bits(a.values().begin(), a.values().end()), (Bits{1, 1, 0, 0, 1, 0, 0, 0, 0}));
  a.apply_update(0, 1);
  EXPECT_EQ(Bits(a.values().begin(), a.values().end()), Bits(9, 0));
  EXPECT_THROW(a.apply_update(0, 0), std::invalid_argument);
  EXPECT_THROW(a.apply_update(9, 1), IndexError);

  CountArray c(build_sierpinski(27));
  c.apply_update(14, 5);
  for (std::size_t j = 0; j < 27; ++j) {
    EXPECT_EQ(c.values()[j], (j == 13 || j == 14) ? 5 : 0) << j;
  }
}

TEST(PrefixSum, Examples) {
  std::mt19937_64 rng(9);
  const auto f7 = build_fenwick(7);
  for (int i = 0; i < 20; ++i) {
    Bits x(7);
    for (auto& b : x) b = rng() & 1;
    const auto a = BitArray::from_stored(f7, x);
    EXPECT_EQ(a.prefix_sum(6), x[6] ^ x[5] ^ x[3]);
  }
  const auto f9 = build_sierpinski(9);
  for (std::size_t j = 0; j < 9; ++j) EXPECT_EQ(BitArray(f9).prefix_sum(j), 0);
  EXPECT_EQ(BitArray(f9, Bits(9, 1)).prefix_sum(4), 1);
  EXPECT_EQ(CountArray(f9, Ints(9, 1)).prefix_sum(4), 5);
  EXPECT_EQ(CountArray(f9, Ints(9, 1)).prefix_sum(4, Boundary::exclusive), 4);
  EXPECT_EQ(CountArray(f9, Ints(9, 1)).prefix_sum(0, Boundary::exclusive), 0);
}

TEST(SetIndex, MatchesReferenceFormula) {
  for (const auto& f : standard_forests(729)) {
    const SetIndex index(f);
    for (std::size_t j = 0; j < f.size(); ++j) {
      ASSERT_EQ(index.parity_set(j), parity_set(f, j)) << "n=" << f.size() << " j=" << j;
      ASSERT_EQ(index.parity_set(j, Boundary::exclusive), parity_set(f, j, Boundary::exclusive));
    }
  }
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = trial % 2 ? test_util::random_pruned_forest(rng, 243)
                             : test_util::random_forest(rng, 1 + rng() % 150);
    const SetIndex index(f);
    for (std::size_t j = 0; j < f.size(); ++j) {
      ASSERT_EQ(index.parity_set(j), parity_set(f, j));
      ASSERT_EQ(index.union_size(j), update_set(f, j).united(parity_set(f, j)).size());
    }
  }
}

TEST(EncodingProperties, ExhaustivePrefixUpToEightyOne) {
  std::mt19937_64 rng(23);
  for (const auto& f : standard_forests(81)) {
    const auto n = f.size();
    for (int state = 0; state < 4; ++state) {
      Bits bits(n);
      Ints ints(n);
      for (std::size_t i = 0; i < n; ++i) {
        bits[i] = rng() & 1;
        ints[i] = static_cast<std::int64_t>(rng() % 100) - 50;
      }
      const BitArray a(f, bits);
      const CountArray c(f, ints);
      for (std::size_t j = 0; j < n; ++j) {
        for (auto b : {Boundary::inclusive, Boundary::exclusive}) {
          ASSERT_EQ(a.prefix_sum(j, b), naive_prefix(bits, j, b, true));
          ASSERT_EQ(c.prefix_sum(j, b), naive_prefix(ints, j, b, false));
        }
      }
    }
  }
}

TEST(EncodingProperties, RandomOperationSequences) {
  std::mt19937_64 rng(29);
  for (int seq = 0; seq < 10000; ++seq) {
    const auto f = seq % 4 == 0 ? test_util::random_pruned_forest(rng, 81)
                                : (seq % 2 ? build_sierpinski(1 + rng() % 100)
                                           : build_fenwick(1 + rng() % 100));
    const auto n = f.size();
    BitArray a(f);
    CountArray c(f);
    Bits bits(n, 0);
    Ints ints(n, 0);
    for (int op = 0; op < 8; ++op) {
      const auto j = rng() % n;
      if (rng() & 1) {
        a.apply_update(j, 1);
        bits[j] ^= 1;
        const auto delta = static_cast<std::int64_t>(rng() % 9) - 4;
        c.apply_update(j, delta);
        ints[j] += delta;
      } else {
        const auto b = (rng() & 1) ? Boundary::inclusive : Boundary::exclusive;
        ASSERT_EQ(a.prefix_sum(j, b), naive_prefix(bits, j, b, true));
        ASSERT_EQ(c.prefix_sum(j, b), naive_prefix(ints, j, b, false));
      }
    }
    ASSERT_EQ(a.decode(), bits);
    ASSERT_EQ(c.decode(), ints);
  }
}

TEST(EncodingProperties, UpdateChangesDecodeOnlyAtIndex) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = test_util::random_pruned_forest(rng, 200);
    Ints logical(f.size());
    for (auto& v : logical) v = static_cast<std::int64_t>(rng() % 7);
    CountArray c(f, logical);
    const auto j = rng() % f.size();
    c.apply_update(j, 3);
    logical[j] += 3;
    ASSERT_EQ(c.decode(), logical);
  }
}

TEST(EncodingProperties, UpdateSetSizeIsDepthPlusOne) {
  for (const auto& f : standard_forests(243)) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      ASSERT_EQ(update_set(f, j).size(), 1 + ancestors(f, j).size());
    }
  }
}
