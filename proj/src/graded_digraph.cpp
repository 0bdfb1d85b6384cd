#include "cobweb/graded_digraph.hpp"

#include <string>

#include "cobweb/error.hpp"

namespace cobweb {

BipartiteBlock::BipartiteBlock(BoolMatrix biadjacency) : b_(std::move(biadjacency)) {
  if (b_.rows() == 0 || b_.cols() == 0) throw ShapeError("bipartite block needs k, m >= 1");
}

GradedDigraph::GradedDigraph(LevelPartition partition, std::vector<BipartiteBlock> blocks)
    : partition_(std::move(partition)), blocks_(std::move(blocks)) {
  if (partition_.levels() == 0) throw ChainError("graded digraph needs at least one level");
  if (blocks_.size() + 1 != partition_.levels()) {
    throw ChainError(std::to_string(partition_.levels()) + " levels need " +
                     std::to_string(partition_.levels() - 1) + " blocks, got " +
                     std::to_string(blocks_.size()));
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const auto& b = blocks_[k].matrix();
    if (b.rows() != partition_.size(k) || b.cols() != partition_.size(k + 1)) {
      throw ChainError("block " + std::to_string(k) + " is " + std::to_string(b.rows()) + "x" +
                       std::to_string(b.cols()) + ", levels need " +
                       std::to_string(partition_.size(k)) + "x" +
                       std::to_string(partition_.size(k + 1)));
    }
  }
}

bool GradedDigraph::is_complete_cobweb() const {
  for (const auto& b : blocks_)
    if (b.matrix().count() != b.sources() * b.targets()) return false;
  return true;
}

std::vector<Vertex> GradedDigraph::covers_of(Vertex v) const {
  const Level k = partition_.level_of(v);
  std::vector<Vertex> out;
  if (k + 1 >= partition_.levels()) return out;
  const auto& b = blocks_[k].matrix();
  const std::size_t r = v - partition_.offset(k);
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (b.get(r, j)) out.push_back(partition_.offset(k + 1) + j);
  return out;
}

std::vector<Vertex> GradedDigraph::covered_by(Vertex v) const {
  const Level k = partition_.level_of(v);
  std::vector<Vertex> out;
  if (k == 0) return out;
  const auto& b = blocks_[k - 1].matrix();
  const std::size_t c = v - partition_.offset(k);
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (b.get(i, c)) out.push_back(partition_.offset(k - 1) + i);
  return out;
}

BoolMatrix adjacency(const GradedDigraph& g) {
  const auto& p = g.partition();
  BoolMatrix a(p.total(), p.total());
  for (std::size_t k = 0; k < g.blocks().size(); ++k)
    a.paste(g.block(k).matrix(), p.offset(k), p.offset(k + 1));
  return a;
}

}  // namespace cobweb
