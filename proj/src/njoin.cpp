#include "cobweb/njoin.hpp"

#include <string>

#include "cobweb/error.hpp"

namespace cobweb {

namespace {

std::string split_str(const EmbeddedAdjacency& a) {
  return "(" + std::to_string(a.sources()) + "," + std::to_string(a.targets()) + ")";
}

void require_condition(const EmbeddedAdjacency& a1, const EmbeddedAdjacency& a2) {
  if (!satisfies_njoin_condition(a1, a2)) {
    throw JoinConditionError("natural join condition fails for splits " + split_str(a1) + " and " +
                             split_str(a2));
  }
}

}  // namespace

EmbeddedAdjacency::EmbeddedAdjacency(BoolMatrix a, std::size_t k, std::size_t m)
    : a_(std::move(a)), k_(k), m_(m) {
  if (a_.rows() != k + m || a_.cols() != k + m) {
    throw ShapeError("embedded adjacency must be " + std::to_string(k + m) + " square");
  }
}

bool EmbeddedAdjacency::is_well_formed() const {
  BoolMatrix only_block(a_.rows(), a_.cols());
  only_block.paste(a_.slice(0, k_, k_, m_), 0, k_);
  return only_block == a_;
}

BipartiteBlock EmbeddedAdjacency::block() const { return BipartiteBlock(a_.slice(0, k_, k_, m_)); }

EmbeddedAdjacency embed_bipartite(const BipartiteBlock& b) {
  const std::size_t k = b.sources(), m = b.targets();
  BoolMatrix a(k + m, k + m);
  a.paste(b.matrix(), 0, k);
  return EmbeddedAdjacency(std::move(a), k, m);
}

bool satisfies_njoin_condition(const EmbeddedAdjacency& a1, const EmbeddedAdjacency& a2) {
  return a1.targets() == a2.sources() && a1.is_well_formed() && a2.is_well_formed();
}

EmbeddedAdjacency cjoin(const EmbeddedAdjacency& a1, const EmbeddedAdjacency& a2) {
  require_condition(a1, a2);
  return embed_bipartite(BipartiteBlock(bool_product(a1.block().matrix(), a2.block().matrix())));
}

BoolMatrix njoin(const EmbeddedAdjacency& a1, const EmbeddedAdjacency& a2) {
  require_condition(a1, a2);
  return glue(a1.matrix(), a2.matrix(), a1.targets());
}

BoolMatrix glue(const BoolMatrix& a1, const BoolMatrix& a2, std::size_t shared) {
  if (!a1.is_square() || !a2.is_square()) throw ShapeError("glue needs square matrices");
  if (shared > a1.rows() || shared > a2.rows()) throw ShapeError("shared part exceeds an operand");
  const std::size_t n = a1.rows() + a2.rows() - shared;
  BoolMatrix out(n, n);
  out.paste(a1, 0, 0);
  out.paste(a2, a1.rows() - shared, a1.rows() - shared);
  return out;
}

GradedDigraph njoin_chain(const std::vector<BipartiteBlock>& blocks) {
  if (blocks.empty()) throw ChainError("empty block chain");
  std::vector<std::size_t> sizes{blocks.front().sources()};
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k > 0 && blocks[k].sources() != blocks[k - 1].targets()) {
      throw ChainError("block " + std::to_string(k - 1) + " has " +
                       std::to_string(blocks[k - 1].targets()) + " columns but block " +
                       std::to_string(k) + " has " + std::to_string(blocks[k].sources()) + " rows");
    }
    sizes.push_back(blocks[k].targets());
  }
  return GradedDigraph(LevelPartition(std::move(sizes)), blocks);
}

BoolMatrix fold_left(const std::vector<BipartiteBlock>& blocks) {
  if (blocks.empty()) throw ChainError("empty block chain");
  BoolMatrix acc = embed_bipartite(blocks.front()).matrix();
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    if (blocks[k].sources() != blocks[k - 1].targets()) throw ChainError("incompatible blocks");
    acc = glue(acc, embed_bipartite(blocks[k]).matrix(), blocks[k].sources());
  }
  return acc;
}

BoolMatrix fold_right(const std::vector<BipartiteBlock>& blocks) {
  if (blocks.empty()) throw ChainError("empty block chain");
  BoolMatrix acc = embed_bipartite(blocks.back()).matrix();
  for (std::size_t k = blocks.size() - 1; k-- > 0;) {
    if (blocks[k].targets() != blocks[k + 1].sources()) throw ChainError("incompatible blocks");
    acc = glue(embed_bipartite(blocks[k]).matrix(), acc, blocks[k].targets());
  }
  return acc;
}

std::vector<BipartiteBlock> biadjacency_of(const BoolMatrix& a, const LevelPartition& p) {
  if (!a.is_square() || a.rows() != p.total()) {
    throw ShapeError("adjacency size " + std::to_string(a.rows()) + " does not match partition total " +
                     std::to_string(p.total()));
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.get(i, j) && p.level_of(j) != p.level_of(i) + 1) {
        throw NotGradedError("arc (" + std::to_string(i) + "," + std::to_string(j) +
                             ") does not join consecutive levels");
      }
  std::vector<BipartiteBlock> blocks;
  for (std::size_t k = 0; k + 1 < p.levels(); ++k)
    blocks.emplace_back(a.slice(p.offset(k), p.offset(k + 1), p.size(k), p.size(k + 1)));
  return blocks;
}

BoolMatrix direct_sum(const std::vector<BipartiteBlock>& blocks) {
  if (blocks.empty()) throw ShapeError("direct sum of no blocks");
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.sources();
    cols += b.targets();
  }
  BoolMatrix out(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.paste(b.matrix(), r, c);
    r += b.sources();
    c += b.targets();
  }
  return out;
}

}  // namespace cobweb
