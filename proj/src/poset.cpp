#include "cobweb/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <string>

#include "cobweb/error.hpp"

namespace cobweb {

GradedDigraph cobweb(const FSequence& f, std::size_t levels) {
  if (levels == 0) throw RangeError("a cobweb needs at least one level");
  LevelPartition p = partition_of(f, levels);
  std::vector<BipartiteBlock> blocks;
  for (std::size_t k = 0; k + 1 < levels; ++k) blocks.emplace_back(ones_block(f[k], f[k + 1]));
  return GradedDigraph(std::move(p), std::move(blocks));
}

GradedDigraph from_blocks(const std::vector<std::size_t>& sizes, std::vector<BipartiteBlock> blocks,
                          bool strict) {
  LevelPartition p;
  try {
    p = LevelPartition(sizes);
  } catch (const InvalidSequenceError& e) {
    throw ChainError(e.what());
  }
  GradedDigraph g(std::move(p), std::move(blocks));
  if (!strict) return g;
  const auto& bs = g.blocks();
  for (std::size_t k = 0; k < bs.size(); ++k) {
    const BoolMatrix t = bs[k].matrix().transpose();
    for (std::size_t c = 0; c < t.rows(); ++c)
      if (!t.row_any(c)) {
        throw DomRanError("vertex " + std::to_string(g.partition().offset(k + 1) + c) +
                          " of level " + std::to_string(k + 1) + " covers nothing");
      }
    if (k + 1 == bs.size()) continue;
    for (std::size_t r = 0; r < bs[k].sources(); ++r)
      if (!bs[k].matrix().row_any(r)) {
        throw DomRanError("vertex " + std::to_string(g.partition().offset(k) + r) + " of level " +
                          std::to_string(k) + " is covered by nothing");
      }
  }
  return g;
}

BoolMatrix cover_matrix(const GradedDigraph& g) { return adjacency(g); }

BoolMatrix zeta_closed_form(const GradedDigraph& g) {
  if (!g.is_complete_cobweb()) throw PreconditionError("closed-form zeta needs a complete cobweb");
  const auto& p = g.partition();
  BoolMatrix z(p.total(), p.total());
  for (std::size_t k = 0; k < p.levels(); ++k) {
    const std::size_t above = p.offset(k) + p.size(k);
    z.paste(BoolMatrix::identity(p.size(k)), p.offset(k), p.offset(k));
    if (above < p.total()) z.paste(BoolMatrix::ones(p.size(k), p.total() - above), p.offset(k), above);
  }
  return z;
}

GradedPoset::GradedPoset(GradedDigraph digraph)
    : digraph_(std::move(digraph)), zeta_(reflexive_transitive_closure(adjacency(digraph_))) {}

bool GradedPoset::leq(Vertex x, Vertex y) const {
  const auto& p = digraph_.partition();
  const Level lx = p.level_of(x);
  const Level ly = p.level_of(y);
  if (x == y) return true;
  if (lx >= ly) return false;
  // Row x of B_lx (c) ... (c) B_{ly-1}.
  BoolMatrix reach(1, p.size(lx));
  reach.set(0, x - p.offset(lx));
  for (Level k = lx; k < ly; ++k) {
    reach = bool_product(reach, digraph_.block(k).matrix());
    if (!reach.any()) return false;
  }
  return reach.get(0, y - p.offset(ly));
}

std::optional<FerrersWitness> find_permutation_submatrix(const BoolMatrix& b) {
  // Rows r1, r2 yield a 2x2 permutation submatrix iff each has a one where the
  // other has a zero.
  for (std::size_t r1 = 0; r1 < b.rows(); ++r1) {
    auto a = b.row(r1);
    for (std::size_t r2 = r1 + 1; r2 < b.rows(); ++r2) {
      auto c = b.row(r2);
      std::optional<std::size_t> only1, only2;
      for (std::size_t w = 0; w < a.size(); ++w) {
        const auto d1 = a[w] & ~c[w];
        const auto d2 = c[w] & ~a[w];
        if (d1 && !only1) only1 = w * BoolMatrix::kWordBits + std::countr_zero(d1);
        if (d2 && !only2) only2 = w * BoolMatrix::kWordBits + std::countr_zero(d2);
      }
      if (only1 && only2) return FerrersWitness{0, r1, r2, *only1, *only2};
    }
  }
  return std::nullopt;
}

FerrersResult is_ferrers_dim_one(const GradedDigraph& g) {
  for (std::size_t k = 0; k < g.blocks().size(); ++k) {
    if (auto w = find_permutation_submatrix(g.block(k).matrix())) {
      w->block = k;
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

namespace {

void partitions_rec(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> partitions_of(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

GradedDigraph young_lattice(std::size_t max_rank) {
  std::vector<std::vector<std::vector<std::size_t>>> ranks;
  std::vector<std::size_t> sizes;
  for (std::size_t n = 0; n <= max_rank; ++n) {
    ranks.push_back(partitions_of(n));
    sizes.push_back(ranks.back().size());
  }
  std::vector<BipartiteBlock> blocks;
  for (std::size_t n = 0; n < max_rank; ++n) {
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t j = 0; j < ranks[n + 1].size(); ++j) index[ranks[n + 1][j]] = j;
    BoolMatrix b(sizes[n], sizes[n + 1]);
    for (std::size_t i = 0; i < ranks[n].size(); ++i) {
      const auto& lambda = ranks[n][i];
      // A box can go at the end of row r when the row above is strictly longer.
      for (std::size_t r = 0; r <= lambda.size(); ++r) {
        const std::size_t len = r < lambda.size() ? lambda[r] : 0;
        if (r > 0 && lambda[r - 1] <= len) continue;
        auto mu = lambda;
        if (r < mu.size())
          ++mu[r];
        else
          mu.push_back(1);
        b.set(i, index.at(mu));
      }
    }
    blocks.emplace_back(std::move(b));
  }
  return GradedDigraph(LevelPartition(std::move(sizes)), std::move(blocks));
}

GradedDigraph fan(std::size_t k, std::size_t depth) {
  if (k == 0 || depth == 0) throw RangeError("fan needs k >= 1 and depth >= 1");
  std::vector<std::size_t> sizes{1};
  sizes.insert(sizes.end(), depth, k);
  std::vector<BipartiteBlock> blocks{BipartiteBlock(ones_block(1, k))};
  for (std::size_t d = 1; d < depth; ++d) blocks.emplace_back(BoolMatrix::identity(k));
  return GradedDigraph(LevelPartition(std::move(sizes)), std::move(blocks));
}

GradedDigraph complete_graded(std::size_t k, std::size_t depth) {
  if (k == 0 || depth == 0) throw RangeError("complete graded digraph needs k >= 1 and depth >= 1");
  std::vector<std::size_t> sizes{1};
  sizes.insert(sizes.end(), depth, k);
  return cobweb(FSequence(sizes), sizes.size());
}

GradedDigraph binary_tree(std::size_t depth) {
  if (depth >= 20) throw RangeError("binary tree depth too large");
  std::vector<std::size_t> sizes;
  std::vector<BipartiteBlock> blocks;
  for (std::size_t d = 0; d <= depth; ++d) sizes.push_back(std::size_t{1} << d);
  for (std::size_t d = 0; d < depth; ++d) {
    BoolMatrix b(sizes[d], sizes[d + 1]);
    for (std::size_t i = 0; i < sizes[d]; ++i) {
      b.set(i, 2 * i);
      b.set(i, 2 * i + 1);
    }
    blocks.emplace_back(std::move(b));
  }
  return GradedDigraph(LevelPartition(std::move(sizes)), std::move(blocks));
}

bool staircase_check(const BoolMatrix& zeta, const LevelPartition& p, bool require_full) {
  if (!zeta.is_square() || zeta.rows() != p.total()) return false;
  for (std::size_t i = 0; i < zeta.rows(); ++i) {
    const Level li = p.level_of(i);
    for (std::size_t j = 0; j < zeta.cols(); ++j) {
      const Level lj = p.level_of(j);
      const bool v = zeta.get(i, j);
      if (i == j) {
        if (!v) return false;
      } else if (lj <= li) {
        if (v) return false;
      } else if (require_full && !v) {
        return false;
      }
    }
  }
  return true;
}

bool staircase_check(const GradedPoset& p) {
  return staircase_check(p.zeta(), p.digraph().partition(), p.digraph().is_complete_cobweb());
}

std::vector<ArcDeletion> parse_deletions(const std::string& text) {
  std::vector<ArcDeletion> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long k, i, j;
    std::string extra;
    if (!(fields >> k >> i >> j) || (fields >> extra) || k < 0 || i < 0 || j < 0) {
      throw ParseError("expected three non-negative integers 'k i j', got '" + line + "'", lineno);
    }
    out.push_back({static_cast<Level>(k), static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
  }
  return out;
}

DeletionResult apply_deletions(const GradedDigraph& g, const std::vector<ArcDeletion>& dels) {
  std::vector<BipartiteBlock> blocks = g.blocks();
  DeletionResult result{g, {}};
  for (std::size_t n = 0; n < dels.size(); ++n) {
    const auto& d = dels[n];
    if (d.block >= blocks.size() || d.row >= blocks[d.block].sources() ||
        d.col >= blocks[d.block].targets()) {
      throw RangeError("deletion " + std::to_string(n + 1) + " (" + std::to_string(d.block) + " " +
                       std::to_string(d.row) + " " + std::to_string(d.col) + ") is outside the chain");
    }
    auto& m = blocks[d.block].matrix();
    if (!m.get(d.row, d.col)) result.already_zero.push_back(n);
    m.set(d.row, d.col, false);
  }
  result.digraph = GradedDigraph(g.partition(), std::move(blocks));
  return result;
}

}  // namespace cobweb
