#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobweb/fseq.hpp"
#include "cobweb/graded_digraph.hpp"
#include "cobweb/rational_matrix.hpp"

namespace cobweb {

// Operators act on column vectors indexed by vertex: column x of U holds Ux.

/// Entry (w, x) = 1 iff w is covered by x.
RationalMatrix down_operator(const GradedDigraph& g);
/// Entry (y, x) = 1 iff y covers x.
RationalMatrix up_operator(const GradedDigraph& g);
/// DU - UD.
RationalMatrix commutator(const GradedDigraph& g);

/// Diagonal with F_{n+1} - F_n on every vertex of level n. Needs F to cover
/// every level of g; the top level gets 0 when F has no entry beyond it.
RationalMatrix delta_F(const GradedDigraph& g, const FSequence& f);

struct MatrixMismatch {
  Vertex row;
  Vertex col;
  Rational expected;
  Rational actual;
};

struct LevelSummary {
  Level level;
  bool holds;
  Rational max_abs_discrepancy;
  /// Eigenvalue of the operator on the level sum s_n, when s_n is an eigenvector.
  std::optional<Rational> level_sum_eigenvalue;
  /// Value the checked identity predicts on level n.
  Rational expected;
};

/// Outcome of checking DU - UD against a diagonal target on non-top levels.
struct GhwReport {
  std::string check;
  bool holds_elementwise = true;
  std::optional<Rational> r_if_uniform;
  Rational max_abs_discrepancy;
  std::vector<LevelSummary> per_level;
  std::optional<MatrixMismatch> first_counterexample;
  RationalMatrix commutator;
};

GhwReport is_r_differential(const GradedDigraph& g, const Rational& r);

/// DU - UD against delta_F, plus the level-sum eigenvalues.
GhwReport check_delta_relation(const GradedDigraph& g, const FSequence& f);

enum class IdentityStatus { holds, fails, not_applicable };
std::string to_string(IdentityStatus s);

struct PowerStep {
  std::size_t n;
  IdentityStatus status;
  /// Whether both sides agree, computed even when not applicable.
  bool sides_equal;
  std::optional<MatrixMismatch> first_counterexample;
};

struct PowerIdentityReport {
  bool weighted;
  bool base_holds;
  std::optional<Level> failing_base_level;
  std::vector<PowerStep> steps;
  bool holds() const;
};

/// DU^n = n U^{n-1} + U^n D (or n delta_F U^{n-1} + U^n D when weighted),
/// compared on columns of levels <= top - n.
PowerIdentityReport check_power_identity(const GradedDigraph& g, std::size_t n_max,
                                         bool weighted_by_delta,
                                         const std::optional<FSequence>& f = std::nullopt);

struct FominStep {
  std::size_t n;
  Rational q;
  Rational r;
  bool holds;
  Rational max_abs_residual;
};

struct FominReport {
  std::vector<FominStep> steps;
  bool holds() const;
};

/// Level-restricted operators: U_n maps level n to n+1, D_n maps n to n-1.
RationalMatrix restricted_up(const GradedDigraph& g, Level n);
RationalMatrix restricted_down(const GradedDigraph& g, Level n);

/// D_{n+1} U_n = q_n U_{n-1} D_n + r_n I_n with q_n = F_{n+1}/F_{n-1}, r_n = 0
/// for n >= 1 and q_0 = 0, r_0 = F_1. Complete cobwebs only.
FominReport fomin_relation_check(const GradedDigraph& g, const FSequence& f);

struct FDiffViolation {
  int condition;  // 1 or 2
  Vertex x;
  std::optional<Vertex> y;
  std::size_t observed;      // common covers (1) or covers of x (2)
  std::size_t counterpart;   // commonly covered (1) or upper covers of x (2)
};

struct FDiffLevel {
  Level level;
  bool condition1;
  bool condition2;
};

struct FDifferentialReport {
  bool condition1 = true;
  bool condition2 = true;
  std::optional<FDiffViolation> first_counterexample;
  std::vector<FDiffLevel> per_level;
  bool holds() const { return condition1 && condition2; }
};

/// Both covering conditions, read literally with an existential index
/// resolution. Throws PreconditionError when F_0 != 1.
FDifferentialReport f_differential_check(const GradedDigraph& g, const FSequence& f);

}  // namespace cobweb
