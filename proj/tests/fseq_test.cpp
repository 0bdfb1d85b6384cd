#include "cobweb/fseq.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cobweb/error.hpp"
#include "oracles.hpp"

namespace cobweb {
namespace {

using V = std::vector<std::size_t>;

TEST(FSequenceTest, Presets) {
  EXPECT_EQ(make_fsequence(Preset::naturals, 5).values(), (V{1, 2, 3, 4, 5}));
  EXPECT_EQ(make_fsequence(Preset::fibonacci, 6).values(), (V{1, 1, 2, 3, 5, 8}));
  EXPECT_EQ(make_fsequence(Preset::constant, 4, 1).values(), (V{1, 1, 1, 1}));
  EXPECT_EQ(make_fsequence(Preset::explicit_list, 0, 1, {1, 1, 1, 2, 3, 5, 8}).values(),
            (V{1, 1, 1, 2, 3, 5, 8}));
}

TEST(FSequenceTest, RejectsZeroAndEmpty) {
  EXPECT_THROW(FSequence(V{1, 0, 2}), InvalidSequenceError);
  EXPECT_THROW(FSequence(V{}), InvalidSequenceError);
  EXPECT_THROW(make_fsequence(Preset::naturals, 0), InvalidSequenceError);
  EXPECT_THROW(make_fsequence(Preset::constant, 3, 0), InvalidSequenceError);
}

TEST(LevelPartitionTest, Offsets) {
  auto p = partition_of(FSequence(V{1, 2, 3}), 3);
  EXPECT_EQ(p.offsets(), (V{0, 1, 3}));
  EXPECT_EQ(p.total(), 6u);

  auto fib = partition_of(FSequence(V{1, 1, 1, 2, 3, 5, 8}), 7);
  EXPECT_EQ(fib.offsets(), (V{0, 1, 2, 3, 5, 8, 13}));
  EXPECT_EQ(fib.total(), 21u);

  auto single = partition_of(FSequence(V{1}), 1);
  EXPECT_EQ(single.total(), 1u);
  EXPECT_EQ(single.levels(), 1u);
}

TEST(LevelPartitionTest, TooManyLevels) {
  EXPECT_THROW(partition_of(FSequence(V{1, 2}), 3), RangeError);
}

TEST(LevelPartitionTest, LevelOf) {
  auto p = partition_of(FSequence(V{1, 2, 3}), 3);
  EXPECT_EQ(level_of(p, 0), 0u);
  EXPECT_EQ(level_of(p, 4), 2u);
  EXPECT_THROW(level_of(p, 6), RangeError);

  V fib{1, 1, 1, 2, 3, 5, 8};
  auto q = partition_of(FSequence(fib), 7);
  EXPECT_EQ(level_of(q, 13), oracle::level_by_scan(fib, 13));
  EXPECT_EQ(level_of(q, 13), 6u);
}

TEST(LevelPartitionTest, LevelsTileTheVertexRange) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> len(1, 12), val(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    V sizes(len(rng));
    for (auto& s : sizes) s = val(rng);
    const auto p = partition_of(FSequence(sizes), sizes.size());
    std::size_t next = 0, sum = 0;
    for (std::size_t k = 0; k < p.levels(); ++k) {
      ASSERT_EQ(p.offset(k), next);
      for (std::size_t v = p.offset(k); v < p.offset(k) + p.size(k); ++v) {
        ASSERT_EQ(p.level_of(v), k);
        ASSERT_EQ(p.level_of(v), oracle::level_by_scan(sizes, v));
      }
      next += p.size(k);
      sum += sizes[k];
    }
    ASSERT_EQ(next, p.total());
    ASSERT_EQ(sum, p.total());
  }
}

}  // namespace
}  // namespace cobweb
