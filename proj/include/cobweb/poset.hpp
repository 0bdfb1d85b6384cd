#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobweb/boolmat.hpp"
#include "cobweb/fseq.hpp"
#include "cobweb/graded_digraph.hpp"

namespace cobweb {

/// Complete graded digraph: every block all-ones, sizes F_0..F_{levels-1}.
GradedDigraph cobweb(const FSequence& f, std::size_t levels);

/// Validates shapes against `sizes`. In strict mode every block must have no
/// all-zero column, and every block but the last no all-zero row.
GradedDigraph from_blocks(const std::vector<std::size_t>& sizes,
                          std::vector<BipartiteBlock> blocks, bool strict = false);

BoolMatrix cover_matrix(const GradedDigraph& g);

/// Zeta matrix assembled from the level structure alone: identity blocks on the
/// diagonal, all-ones above. Throws PreconditionError on a non-cobweb.
BoolMatrix zeta_closed_form(const GradedDigraph& g);

/// Graded digraph together with its zeta matrix (the reflexive-transitive
/// closure of its adjacency).
class GradedPoset {
 public:
  explicit GradedPoset(GradedDigraph digraph);

  const GradedDigraph& digraph() const noexcept { return digraph_; }
  const BoolMatrix& zeta() const noexcept { return zeta_; }
  std::size_t total() const noexcept { return digraph_.total(); }

  /// x <= y via the product of the blocks between their levels; independent of zeta().
  bool leq(Vertex x, Vertex y) const;

 private:
  GradedDigraph digraph_;
  BoolMatrix zeta_;
};

inline bool leq(const GradedPoset& p, Vertex x, Vertex y) { return p.leq(x, y); }

struct FerrersWitness {
  Level block;
  std::size_t r1, r2, c1, c2;
};

struct FerrersResult {
  bool dim_one;
  std::optional<FerrersWitness> witness;
};

/// Scans every block for a 2x2 permutation submatrix.
FerrersResult is_ferrers_dim_one(const GradedDigraph& g);
std::optional<FerrersWitness> find_permutation_submatrix(const BoolMatrix& b);

/// Levels are the partitions of n in reverse-lexicographic order.
GradedDigraph young_lattice(std::size_t max_rank);
std::vector<std::vector<std::size_t>> partitions_of(std::size_t n);

GradedDigraph fan(std::size_t k, std::size_t depth);
GradedDigraph complete_graded(std::size_t k, std::size_t depth);
GradedDigraph binary_tree(std::size_t depth);

/// Checks the zero staircase of a zeta matrix: ones on the diagonal, zeros at
/// same-level off-diagonal entries and below the diagonal level blocks. With
/// `require_full`, every entry above the staircase must be one.
bool staircase_check(const BoolMatrix& zeta, const LevelPartition& p, bool require_full);

/// Full form for complete cobwebs, weak form otherwise.
bool staircase_check(const GradedPoset& p);

/// One "k i j" deletion: clear bit (i, j) of block k.
struct ArcDeletion {
  Level block;
  std::size_t row;
  std::size_t col;
};

/// Parses the deletion-list format; blank lines and lines starting with '#'
/// are skipped. Throws ParseError with the offending line number.
std::vector<ArcDeletion> parse_deletions(const std::string& text);

struct DeletionResult {
  GradedDigraph digraph;
  /// Indices into the deletion list of entries that hit an already-zero bit.
  std::vector<std::size_t> already_zero;
};

/// Applies deletions in order. Throws RangeError on a bit outside the chain.
DeletionResult apply_deletions(const GradedDigraph& g, const std::vector<ArcDeletion>& dels);

}  // namespace cobweb
