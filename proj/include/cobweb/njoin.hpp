#pragma once

#include <utility>
#include <vector>

#include "cobweb/boolmat.hpp"
#include "cobweb/graded_digraph.hpp"

namespace cobweb {

/// Square adjacency matrix of a bipartite digraph together with its split
/// (k, m). Well-formed iff only the upper-right k x m block carries ones.
class EmbeddedAdjacency {
 public:
  /// No block-form validation; only checks that `a` is (k+m) x (k+m).
  EmbeddedAdjacency(BoolMatrix a, std::size_t k, std::size_t m);

  const BoolMatrix& matrix() const noexcept { return a_; }
  std::pair<std::size_t, std::size_t> split() const noexcept { return {k_, m_}; }
  std::size_t sources() const noexcept { return k_; }
  std::size_t targets() const noexcept { return m_; }

  bool is_well_formed() const;
  /// The upper-right k x m block.
  BipartiteBlock block() const;

  friend bool operator==(const EmbeddedAdjacency&, const EmbeddedAdjacency&) = default;

 private:
  BoolMatrix a_;
  std::size_t k_;
  std::size_t m_;
};

EmbeddedAdjacency embed_bipartite(const BipartiteBlock& b);

bool satisfies_njoin_condition(const EmbeddedAdjacency& a1, const EmbeddedAdjacency& a2);

/// Composition: the k x s block is B1 (c) B2. Throws JoinConditionError.
EmbeddedAdjacency cjoin(const EmbeddedAdjacency& a1, const EmbeddedAdjacency& a2);

/// Natural join: the (k+m+s) square three-band matrix. Throws JoinConditionError.
BoolMatrix njoin(const EmbeddedAdjacency& a1, const EmbeddedAdjacency& a2);

/// Glues two square adjacency matrices that share `shared` vertices: the last
/// `shared` vertices of a1 are identified with the first `shared` of a2.
BoolMatrix glue(const BoolMatrix& a1, const BoolMatrix& a2, std::size_t shared);

/// Throws ChainError when consecutive blocks are not dimension compatible.
GradedDigraph njoin_chain(const std::vector<BipartiteBlock>& blocks);

/// Left and right folds of glue() over the embedded blocks.
BoolMatrix fold_left(const std::vector<BipartiteBlock>& blocks);
BoolMatrix fold_right(const std::vector<BipartiteBlock>& blocks);

/// Inverse of adjacency(): throws NotGradedError on a 1 outside the
/// super-diagonal level blocks.
std::vector<BipartiteBlock> biadjacency_of(const BoolMatrix& a, const LevelPartition& p);

/// Block-diagonal matrix of the blocks in order.
BoolMatrix direct_sum(const std::vector<BipartiteBlock>& blocks);

}  // namespace cobweb
