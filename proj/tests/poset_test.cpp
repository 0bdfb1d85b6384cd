#include "cobweb/poset.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cobweb/error.hpp"
#include "cobweb/io.hpp"
#include "cobweb/njoin.hpp"
#include "oracles.hpp"

namespace cobweb {
namespace {

using V = std::vector<std::size_t>;

BipartiteBlock blk(BoolMatrix m) { return BipartiteBlock(std::move(m)); }

BoolMatrix golden(const char* name) {
  return io::bool_matrix_from_text(oracle::read_file(std::string(COBWEB_GOLDEN_DIR) + "/" + name));
}

TEST(CobwebTest, Examples) {
  const auto g = cobweb(FSequence({1, 2, 3}), 3);
  ASSERT_EQ(g.blocks().size(), 2u);
  EXPECT_EQ(g.block(0).matrix(), ones_block(1, 2));
  EXPECT_EQ(g.block(1).matrix(), ones_block(2, 3));
  EXPECT_TRUE(g.is_complete_cobweb());

  const auto one = cobweb(FSequence({1}), 1);
  EXPECT_TRUE(one.blocks().empty());
  EXPECT_EQ(one.total(), 1u);

  const auto chain = cobweb(FSequence::constant(1, 4), 4);
  EXPECT_EQ(adjacency(chain), (BoolMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}));
  EXPECT_THROW(cobweb(FSequence({1, 2}), 3), RangeError);
}

TEST(FromBlocksTest, Examples) {
  EXPECT_NO_THROW(from_blocks({1, 2}, {blk({{1, 1}})}, true));
  EXPECT_THROW(from_blocks({1, 2}, {blk({{1, 0}})}, true), DomRanError);
  EXPECT_NO_THROW(from_blocks({1, 2}, {blk({{1, 0}})}, false));
  EXPECT_NO_THROW(from_blocks({2, 2}, {blk({{1, 0}, {0, 1}})}, true));
  EXPECT_THROW(from_blocks({1, 3}, {blk({{1, 1}})}), ChainError);
  EXPECT_THROW(from_blocks({1, 2, 2}, {blk({{1, 1}})}), ChainError);
  // A non-maximal vertex without upper covers.
  EXPECT_THROW(from_blocks({2, 1, 1}, {blk({{1}, {0}}), blk({{1}})}, true), DomRanError);
  // Rows of the last block may be empty.
  EXPECT_NO_THROW(from_blocks({1, 2, 1}, {blk({{1, 1}}), blk({{1}, {0}})}, true));
}

TEST(AdjacencyTest, Examples) {
  const auto a = adjacency(cobweb(FSequence({1, 2, 3}), 3));
  BoolMatrix expected(6, 6);
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})
    expected.set(i, j);
  EXPECT_EQ(a, expected);
  EXPECT_EQ(adjacency(cobweb(FSequence({4}), 1)), BoolMatrix::zeros(4, 4));
  EXPECT_EQ(adjacency(cobweb(FSequence({1, 1, 1}), 3)), (BoolMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST(CoverMatrixTest, Examples) {
  EXPECT_EQ(cover_matrix(cobweb(FSequence({1, 2}), 2)), (BoolMatrix{{0, 1, 1}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(cover_matrix(cobweb(FSequence({1, 1}), 2)), (BoolMatrix{{0, 1}, {0, 0}}));
  const auto y = young_lattice(4);
  EXPECT_EQ(cover_matrix(y), adjacency(y));
}

TEST(ZetaClosedFormTest, NaturalsFigure) {
  const auto z = zeta_closed_form(cobweb(FSequence::naturals(6), 6));
  EXPECT_EQ(z.slice(0, 0, 16, 16), golden("zeta_N_16.txt"));
  EXPECT_FALSE(z.get(1, 2));
  EXPECT_TRUE(z.get(1, 3));
}

TEST(ZetaClosedFormTest, FibonacciFigure) {
  const auto z = zeta_closed_form(cobweb(FSequence({1, 1, 1, 2, 3, 5, 8}), 7));
  EXPECT_EQ(z.slice(0, 0, 16, 16), golden("zeta_F_16.txt"));
  EXPECT_FALSE(z.get(3, 4));
  EXPECT_FALSE(z.get(8, 12));
  EXPECT_TRUE(z.get(8, 13));
}

TEST(ZetaClosedFormTest, SingleVertexAndNonCobweb) {
  EXPECT_EQ(zeta_closed_form(cobweb(FSequence({1}), 1)), (BoolMatrix{{1}}));
  EXPECT_THROW(zeta_closed_form(fan(2, 2)), PreconditionError);
}

TEST(ZetaClosedFormTest, AgreesWithClosureOnCobwebs) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> val(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    V sizes;
    std::size_t total = 0;
    while (true) {
      const std::size_t s = val(rng);
      if (total + s > 200) break;
      sizes.push_back(s);
      total += s;
      if (sizes.size() > 1 && rng() % 5 == 0) break;
    }
    const auto g = cobweb(FSequence(sizes), sizes.size());
    ASSERT_EQ(zeta_closed_form(g), reflexive_transitive_closure(adjacency(g)));
  }
  const auto n = cobweb(FSequence::naturals(19), 19);  // total 190
  EXPECT_EQ(zeta_closed_form(n), reflexive_transitive_closure(adjacency(n)));
}

TEST(LeqTest, Examples) {
  const GradedPoset p(cobweb(FSequence::naturals(5), 5));
  EXPECT_TRUE(leq(p, 3, 3));
  EXPECT_FALSE(leq(p, 1, 2));
  const auto reach = oracle::bfs_reflexive_reachability(oracle::to_dense(adjacency(p.digraph())));
  for (Vertex v = 0; v < p.total(); ++v) {
    EXPECT_TRUE(leq(p, 0, v));
    EXPECT_EQ(reach[0][v], 1);
  }
  EXPECT_THROW(leq(p, 0, p.total()), RangeError);
}

TEST(LeqTest, BlockProductsAgreeWithZeta) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const GradedPoset p(oracle::random_graded(rng, 10, 12));
    for (Vertex x = 0; x < p.total(); ++x)
      for (Vertex y = 0; y < p.total(); ++y) ASSERT_EQ(p.leq(x, y), p.zeta().get(x, y)) << x << "," << y;
  }
}

TEST(PosetAxiomsTest, ReflexiveAntisymmetricTransitive) {
  std::mt19937_64 rng(33);
  std::vector<GradedDigraph> corpus{young_lattice(6), fan(3, 4), complete_graded(3, 3), binary_tree(4),
                                    cobweb(FSequence::naturals(8), 8),
                                    cobweb(FSequence({1, 1, 1, 2, 3, 5, 8}), 7)};
  for (int i = 0; i < 30; ++i) corpus.push_back(oracle::random_graded(rng));
  for (const auto& g : corpus) {
    const GradedPoset p(g);
    const auto& z = p.zeta();
    ASSERT_TRUE(entrywise_leq(BoolMatrix::identity(z.rows()), z));
    const auto t = z.transpose();
    BoolMatrix both(z.rows(), z.cols());
    for (std::size_t i = 0; i < z.rows(); ++i)
      for (std::size_t j = 0; j < z.cols(); ++j)
        if (z.get(i, j) && t.get(i, j)) both.set(i, j);
    ASSERT_EQ(both, BoolMatrix::identity(z.rows()));
    ASSERT_EQ(bool_product(z, z), z);
  }
}

TEST(FerrersTest, Examples) {
  EXPECT_TRUE(is_ferrers_dim_one(cobweb(FSequence::naturals(6), 6)).dim_one);

  const auto g = from_blocks({1, 2, 2}, {blk({{1, 1}}), blk({{1, 0}, {0, 1}})});
  const auto r = is_ferrers_dim_one(g);
  EXPECT_FALSE(r.dim_one);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->block, 1u);
  const auto& b = g.block(1).matrix();
  const auto& w = *r.witness;
  EXPECT_TRUE(b.get(w.r1, w.c1) && b.get(w.r2, w.c2) && !b.get(w.r1, w.c2) && !b.get(w.r2, w.c1));

  EXPECT_TRUE(is_ferrers_dim_one(from_blocks({2, 2}, {blk({{1, 1}, {0, 1}})})).dim_one);
  EXPECT_FALSE(is_ferrers_dim_one(fan(2, 2)).dim_one);
}

TEST(FerrersTest, AgreesWithExhaustiveScan) {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto b = oracle::random_matrix(rng, dim(rng), dim(rng), dens(rng));
    const auto w = find_permutation_submatrix(b);
    ASSERT_EQ(w.has_value(), oracle::has_permutation_submatrix(oracle::to_dense(b)));
  }
}

TEST(YoungLatticeTest, Examples) {
  const auto y2 = young_lattice(2);
  EXPECT_EQ(y2.partition().sizes(), (V{1, 1, 2}));
  EXPECT_EQ(y2.block(1).matrix(), (BoolMatrix{{1, 1}}));
  EXPECT_EQ(young_lattice(0).total(), 1u);
  EXPECT_EQ(young_lattice(4).partition().sizes(), (V{1, 1, 2, 3, 5}));
  EXPECT_EQ(partitions_of(4), (std::vector<V>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
}

TEST(YoungLatticeTest, LevelSizesArePartitionCounts) {
  const auto p = oracle::partition_counts(10);
  const auto y = young_lattice(10);
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(y.partition().size(n), p[n]);
}

TEST(YoungLatticeTest, CoversAddOneBox) {
  const auto y = young_lattice(6);
  for (std::size_t n = 0; n < 6; ++n) {
    const auto lo = partitions_of(n), hi = partitions_of(n + 1);
    for (std::size_t i = 0; i < lo.size(); ++i)
      for (std::size_t j = 0; j < hi.size(); ++j) {
        // mu covers lambda iff lambda fits inside mu (sizes differ by one).
        bool contained = lo[i].size() <= hi[j].size();
        for (std::size_t r = 0; contained && r < lo[i].size(); ++r) contained = lo[i][r] <= hi[j][r];
        ASSERT_EQ(y.block(n).matrix().get(i, j), contained);
      }
  }
}

TEST(FanTest, Examples) {
  const auto f = fan(3, 2);
  EXPECT_EQ(f.partition().sizes(), (V{1, 3, 3}));
  EXPECT_EQ(f.block(0).matrix(), ones_block(1, 3));
  EXPECT_EQ(f.block(1).matrix(), BoolMatrix::identity(3));
  EXPECT_EQ(adjacency(fan(1, 3)), adjacency(cobweb(FSequence::constant(1, 4), 4)));
  EXPECT_EQ(fan(4, 1).partition().sizes(), (V{1, 4}));
  EXPECT_EQ(fan(4, 1).block(0).matrix(), ones_block(1, 4));
}

TEST(CompleteGradedTest, Examples) {
  const auto c = complete_graded(2, 2);
  EXPECT_EQ(c.partition().sizes(), (V{1, 2, 2}));
  EXPECT_TRUE(c.is_complete_cobweb());
  EXPECT_EQ(complete_graded(5, 1), fan(5, 1));
  EXPECT_EQ(adjacency(complete_graded(3, 3)).count(), 3u + 9u + 9u);
}

TEST(BinaryTreeTest, Examples) {
  const auto t1 = binary_tree(1);
  EXPECT_EQ(t1.partition().sizes(), (V{1, 2}));
  EXPECT_EQ(t1.block(0).matrix(), ones_block(1, 2));
  EXPECT_EQ(binary_tree(2).block(1).matrix(), (BoolMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}}));
  const auto t = binary_tree(5);
  for (Vertex v = 1; v < t.total(); ++v) EXPECT_EQ(t.covered_by(v).size(), 1u);
}

TEST(StaircaseTest, Examples) {
  EXPECT_TRUE(staircase_check(GradedPoset(cobweb(FSequence::naturals(6), 6))));
  EXPECT_TRUE(staircase_check(GradedPoset(cobweb(FSequence({1, 1, 1, 2, 3, 5, 8}), 7))));

  // Deleted arcs: weak form holds, extra zeros above the staircase.
  const auto g = cobweb(FSequence::naturals(4), 4);
  const auto sub = apply_deletions(g, {{1, 0, 0}, {2, 2, 3}}).digraph;
  const GradedPoset ps(sub);
  EXPECT_TRUE(staircase_check(ps));
  EXPECT_FALSE(staircase_check(ps.zeta(), sub.partition(), true));

  BoolMatrix bad = ps.zeta();
  bad.set(4, 1);
  EXPECT_FALSE(staircase_check(bad, sub.partition(), false));
  BoolMatrix same_level = ps.zeta();
  same_level.set(1, 2);
  EXPECT_FALSE(staircase_check(same_level, sub.partition(), false));
}

TEST(DeletionTest, ParseAndApply) {
  const auto dels = parse_deletions("# comment\n0 0 1\n\n1 2 0\n");
  ASSERT_EQ(dels.size(), 2u);
  EXPECT_EQ(dels[1].block, 1u);
  EXPECT_EQ(dels[1].row, 2u);

  try {
    parse_deletions("0 0 1\n0 x 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_deletions("0 0\n"), ParseError);
  EXPECT_THROW(parse_deletions("0 0 1 4\n"), ParseError);
  EXPECT_THROW(parse_deletions("-1 0 1\n"), ParseError);

  const auto g = cobweb(FSequence::naturals(3), 3);
  const auto r = apply_deletions(g, parse_deletions("0 0 1\n0 0 1\n"));
  EXPECT_FALSE(r.digraph.block(0).matrix().get(0, 1));
  EXPECT_EQ(adjacency(r.digraph).count(), adjacency(g).count() - 1);
  EXPECT_EQ(r.already_zero, (V{1}));
  EXPECT_THROW(apply_deletions(g, {{2, 0, 0}}), RangeError);
  EXPECT_THROW(apply_deletions(g, {{0, 0, 2}}), RangeError);
}

}  // namespace
}  // namespace cobweb
