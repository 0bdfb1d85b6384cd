#include "cobweb/io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cobweb/error.hpp"
#include "oracles.hpp"

namespace cobweb {
namespace {

TEST(TextFormatTest, Layout) {
  EXPECT_EQ(io::to_text(BoolMatrix{{1, 0}, {0, 1}}), "1 0\n0 1\n");
  EXPECT_EQ(io::bool_matrix_from_text("1 0 1\n0 0 1\n"), (BoolMatrix{{1, 0, 1}, {0, 0, 1}}));
  EXPECT_THROW(io::bool_matrix_from_text("1  0\n"), ParseError);
  EXPECT_THROW(io::bool_matrix_from_text("1 2\n"), ParseError);
  EXPECT_THROW(io::bool_matrix_from_text("1 0\n1\n"), ParseError);
  EXPECT_THROW(io::bool_matrix_from_text("1 0 \n"), ParseError);
}

TEST(JsonFormatTest, Layout) {
  const auto j = io::to_json(BoolMatrix{{0, 1, 1}});
  EXPECT_EQ(j.dump(), R"({"cols":3,"data":[[0,1,1]],"rows":1})");
  EXPECT_THROW(io::bool_matrix_from_json(io::parse_json(R"({"rows":1,"cols":2,"data":[[0,1,1]]})")), ParseError);
  EXPECT_THROW(io::bool_matrix_from_json(io::parse_json(R"({"rows":1,"cols":1,"data":[[2]]})")), ParseError);
  EXPECT_THROW(io::parse_json("{"), ParseError);
}

TEST(MatrixFormatsTest, RoundTripExactly) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::size_t> dim(1, 90);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = oracle::random_matrix(rng, dim(rng), dim(rng), 0.4);
    const auto text = io::to_text(m);
    ASSERT_EQ(io::bool_matrix_from_text(text), m);
    ASSERT_EQ(io::to_text(io::bool_matrix_from_text(text)), text);
    ASSERT_EQ(io::bool_matrix_from_json(io::to_json(m)), m);
    ASSERT_EQ(io::parse_bool_matrix(io::to_json(m).dump()), m);
  }
}

TEST(BlockChainJsonTest, RoundTripAndSchema) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graded(rng);
    ASSERT_EQ(io::graded_digraph_from_json(io::parse_json(io::to_json(g).dump())), g);
  }
  const auto j = io::to_json(GradedDigraph(LevelPartition({1, 2}), {BipartiteBlock(BoolMatrix{{1, 1}})}));
  EXPECT_EQ(j.dump(), R"({"blocks":[[[1,1]]],"sizes":[1,2]})");
  EXPECT_THROW(io::graded_digraph_from_json(io::parse_json(R"({"sizes":[1,2],"blocks":[]})")), ChainError);
  EXPECT_THROW(io::graded_digraph_from_json(io::parse_json(R"({"sizes":[1,2],"blocks":[[[1]]]})")), ParseError);
  EXPECT_THROW(io::graded_digraph_from_json(io::parse_json(R"({"sizes":[0]})")), ParseError);
  EXPECT_EQ(io::graded_digraph_from_json(io::parse_json(R"({"sizes":[3]})")).total(), 3u);
}

TEST(FSequenceJsonTest, Array) {
  const FSequence f({1, 1, 2, 3});
  EXPECT_EQ(io::to_json(f).dump(), "[1,1,2,3]");
  EXPECT_EQ(io::fsequence_from_json(io::to_json(f)), f);
  EXPECT_THROW(io::fsequence_from_json(io::parse_json("[1,0]")), InvalidSequenceError);
  EXPECT_THROW(io::fsequence_from_json(io::parse_json("[1,-2]")), InvalidSequenceError);
}

TEST(RationalJsonTest, PQStrings) {
  RationalMatrix m(1, 3);
  m(0, 0) = Rational(3, 6);
  m(0, 0).canonicalize();
  m(0, 1) = -2;
  const auto j = io::to_json(m);
  EXPECT_EQ(j["data"][0][0], "1/2");
  EXPECT_EQ(j["data"][0][1], "-2/1");
  EXPECT_EQ(j["data"][0][2], "0/1");
  EXPECT_EQ(io::rational_matrix_from_json(j), m);
  EXPECT_EQ(parse_rational("5"), 5);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(ReportJsonTest, CommonFields) {
  const auto y = young_lattice(3);
  const auto ghw = io::to_json(is_r_differential(y, 1));
  for (const char* key : {"check", "holds", "first_counterexample", "per_level"}) EXPECT_TRUE(ghw.contains(key)) << key;
  EXPECT_EQ(ghw["check"], "ghw");
  EXPECT_TRUE(ghw["holds"].get<bool>());
  EXPECT_TRUE(ghw["first_counterexample"].is_null());

  const auto delta = io::to_json(check_delta_relation(cobweb(FSequence({1, 2, 3}), 3), FSequence({1, 2, 3})));
  EXPECT_FALSE(delta["holds"].get<bool>());
  EXPECT_EQ(delta["first_counterexample"]["actual"], "2/1");
  EXPECT_EQ(delta["per_level"][0]["level_sum_eigenvalue"], "2/1");

  const auto fer = io::to_json(is_ferrers_dim_one(fan(2, 2)));
  EXPECT_EQ(fer["first_counterexample"]["block"], 1);

  for (const auto& j : {io::to_json(fomin_relation_check(cobweb(FSequence({1, 2, 3}), 3), FSequence({1, 2, 3}))),
                        io::to_json(check_power_identity(y, 2, false)),
                        io::to_json(f_differential_check(y, FSequence({1, 1, 2, 3, 4})))}) {
    for (const char* key : {"check", "holds", "first_counterexample", "per_level"}) EXPECT_TRUE(j.contains(key)) << key;
  }
}

}  // namespace
}  // namespace cobweb
