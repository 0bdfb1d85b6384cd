#pragma once

#include <vector>

#include "cobweb/boolmat.hpp"
#include "cobweb/fseq.hpp"

namespace cobweb {

/// Biadjacency matrix of a bipartite digraph from a k-set to an m-set, k,m >= 1.
class BipartiteBlock {
 public:
  explicit BipartiteBlock(BoolMatrix biadjacency);

  const BoolMatrix& matrix() const noexcept { return b_; }
  BoolMatrix& matrix() noexcept { return b_; }
  std::size_t sources() const noexcept { return b_.rows(); }
  std::size_t targets() const noexcept { return b_.cols(); }

  friend bool operator==(const BipartiteBlock&, const BipartiteBlock&) = default;

 private:
  BoolMatrix b_;
};

/// Hasse digraph of a graded poset: a level partition plus the chain of
/// biadjacency blocks, blocks[k] mapping level k to level k+1.
///
/// The full adjacency matrix is not stored; see adjacency().
class GradedDigraph {
 public:
  /// Throws ChainError when block shapes disagree with the partition.
  GradedDigraph(LevelPartition partition, std::vector<BipartiteBlock> blocks);

  const LevelPartition& partition() const noexcept { return partition_; }
  const std::vector<BipartiteBlock>& blocks() const noexcept { return blocks_; }
  const BipartiteBlock& block(Level k) const { return blocks_.at(k); }
  std::size_t total() const noexcept { return partition_.total(); }
  std::size_t levels() const noexcept { return partition_.levels(); }

  /// True when every block is all-ones.
  bool is_complete_cobweb() const;

  /// Global vertex ids of the upper / lower covers of v.
  std::vector<Vertex> covers_of(Vertex v) const;
  std::vector<Vertex> covered_by(Vertex v) const;

  friend bool operator==(const GradedDigraph&, const GradedDigraph&) = default;

 private:
  LevelPartition partition_;
  std::vector<BipartiteBlock> blocks_;
};

/// Places blocks[k] at rows of level k and columns of level k+1.
BoolMatrix adjacency(const GradedDigraph& g);

}  // namespace cobweb
