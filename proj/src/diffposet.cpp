#include "cobweb/diffposet.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cobweb/error.hpp"

namespace cobweb {

namespace {

Rational abs_of(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

// Compares operator M against the diagonal operator with value target(n) on
// level n, column by column over non-top levels.
GhwReport compare_to_level_diagonal(std::string check, RationalMatrix m, const GradedDigraph& g,
                                    const std::function<Rational(Level)>& target) {
  const auto& p = g.partition();
  GhwReport report;
  report.check = std::move(check);
  report.max_abs_discrepancy = 0;
  bool uniform = true;
  std::optional<Rational> seen_diag;

  for (Level n = 0; n + 1 < p.levels(); ++n) {
    LevelSummary summary{n, true, 0, std::nullopt, target(n)};
    for (Vertex x = p.offset(n); x < p.offset(n) + p.size(n); ++x) {
      for (Vertex i = 0; i < p.total(); ++i) {
        const Rational expected = i == x ? summary.expected : Rational(0);
        const Rational& actual = m(i, x);
        if (i == x) {
          if (!seen_diag) seen_diag = actual;
          if (actual != *seen_diag) uniform = false;
        } else if (sgn(actual) != 0) {
          uniform = false;
        }
        if (actual == expected) continue;
        const Rational d = abs_of(actual - expected);
        summary.holds = false;
        if (d > summary.max_abs_discrepancy) summary.max_abs_discrepancy = d;
        if (!report.first_counterexample) report.first_counterexample = MatrixMismatch{i, x, expected, actual};
      }
    }
    // M s_n is a multiple of s_n iff it vanishes off level n and is constant on it.
    std::vector<Rational> image(p.total());
    for (Vertex i = 0; i < p.total(); ++i)
      for (Vertex x = p.offset(n); x < p.offset(n) + p.size(n); ++x) image[i] += m(i, x);
    bool eigen = true;
    for (Vertex i = 0; i < p.total() && eigen; ++i) {
      const bool in_level = i >= p.offset(n) && i < p.offset(n) + p.size(n);
      if (!in_level && sgn(image[i]) != 0) eigen = false;
      if (in_level && image[i] != image[p.offset(n)]) eigen = false;
    }
    if (eigen) summary.level_sum_eigenvalue = image[p.offset(n)];

    if (!summary.holds) report.holds_elementwise = false;
    if (summary.max_abs_discrepancy > report.max_abs_discrepancy) {
      report.max_abs_discrepancy = summary.max_abs_discrepancy;
    }
    report.per_level.push_back(std::move(summary));
  }
  if (uniform && seen_diag) report.r_if_uniform = seen_diag;
  report.commutator = std::move(m);
  return report;
}

bool columns_agree(const RationalMatrix& lhs, const RationalMatrix& rhs, Vertex col_end,
                   std::optional<MatrixMismatch>& first) {
  for (Vertex x = 0; x < col_end; ++x)
    for (Vertex i = 0; i < lhs.rows(); ++i)
      if (lhs(i, x) != rhs(i, x)) {
        first = MatrixMismatch{i, x, rhs(i, x), lhs(i, x)};
        return false;
      }
  return true;
}

Rational max_abs_entry(const RationalMatrix& m) {
  Rational best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, abs_of(m(i, j)));
  return best;
}

}  // namespace

RationalMatrix down_operator(const GradedDigraph& g) {
  const BoolMatrix a = adjacency(g);
  RationalMatrix d(a.rows(), a.cols());
  for (std::size_t w = 0; w < a.rows(); ++w)
    for (std::size_t x = 0; x < a.cols(); ++x)
      if (a.get(w, x)) d(w, x) = 1;
  return d;
}

RationalMatrix up_operator(const GradedDigraph& g) {
  const BoolMatrix a = adjacency(g);
  RationalMatrix u(a.rows(), a.cols());
  for (std::size_t y = 0; y < a.rows(); ++y)
    for (std::size_t x = 0; x < a.cols(); ++x)
      if (a.get(x, y)) u(y, x) = 1;
  return u;
}

RationalMatrix commutator(const GradedDigraph& g) {
  const RationalMatrix u = up_operator(g);
  const RationalMatrix d = down_operator(g);
  return d * u - u * d;
}

RationalMatrix delta_F(const GradedDigraph& g, const FSequence& f) {
  const auto& p = g.partition();
  if (f.size() < p.levels()) {
    throw RangeError("F has " + std::to_string(f.size()) + " entries, digraph has " +
                     std::to_string(p.levels()) + " levels");
  }
  RationalMatrix m(p.total(), p.total());
  for (Level n = 0; n < p.levels(); ++n) {
    if (n + 1 >= f.size()) continue;
    const Rational delta = Rational(static_cast<unsigned long>(f[n + 1])) -
                           Rational(static_cast<unsigned long>(f[n]));
    for (Vertex x = p.offset(n); x < p.offset(n) + p.size(n); ++x) m(x, x) = delta;
  }
  return m;
}

GhwReport is_r_differential(const GradedDigraph& g, const Rational& r) {
  return compare_to_level_diagonal("ghw", commutator(g), g, [&](Level) { return r; });
}

GhwReport check_delta_relation(const GradedDigraph& g, const FSequence& f) {
  const RationalMatrix delta = delta_F(g, f);
  const auto& p = g.partition();
  return compare_to_level_diagonal("delta", commutator(g), g,
                                   [&](Level n) { return delta(p.offset(n), p.offset(n)); });
}

std::string to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::holds:
      return "holds";
    case IdentityStatus::fails:
      return "fails";
    case IdentityStatus::not_applicable:
      return "not-applicable";
  }
  return "unknown";
}

bool PowerIdentityReport::holds() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const PowerStep& s) { return s.status == IdentityStatus::holds; });
}

PowerIdentityReport check_power_identity(const GradedDigraph& g, std::size_t n_max,
                                         bool weighted_by_delta, const std::optional<FSequence>& f) {
  if (n_max == 0) throw PreconditionError("n_max must be at least 1");
  if (weighted_by_delta && !f) throw PreconditionError("weighted power identity needs F");

  const GhwReport base = weighted_by_delta ? check_delta_relation(g, *f) : is_r_differential(g, 1);
  PowerIdentityReport report{weighted_by_delta, base.holds_elementwise, std::nullopt, {}};
  for (const auto& lvl : base.per_level)
    if (!lvl.holds) {
      report.failing_base_level = lvl.level;
      break;
    }

  const auto& p = g.partition();
  const RationalMatrix u = up_operator(g);
  const RationalMatrix d = down_operator(g);
  const RationalMatrix weight =
      weighted_by_delta ? delta_F(g, *f) : RationalMatrix::identity(p.total());
  RationalMatrix u_prev = RationalMatrix::identity(p.total());  // U^{n-1}
  for (std::size_t n = 1; n <= n_max; ++n) {
    const RationalMatrix u_n = u_prev * u;
    const RationalMatrix lhs = d * u_n;
    const RationalMatrix rhs = Rational(static_cast<unsigned long>(n)) * (weight * u_prev) + u_n * d;
    // Columns of levels <= top - n keep U^n x inside the truncation.
    const Vertex col_end = n <= p.top() ? p.offset(p.top() - n) + p.size(p.top() - n) : 0;
    PowerStep step{n, IdentityStatus::holds, true, std::nullopt};
    step.sides_equal = columns_agree(lhs, rhs, col_end, step.first_counterexample);
    if (!report.base_holds)
      step.status = IdentityStatus::not_applicable;
    else if (!step.sides_equal)
      step.status = IdentityStatus::fails;
    report.steps.push_back(std::move(step));
    u_prev = u_n;
  }
  return report;
}

RationalMatrix restricted_up(const GradedDigraph& g, Level n) {
  if (n + 1 >= g.levels()) throw RangeError("U_n needs level n+1");
  const BoolMatrix& b = g.block(n).matrix();
  RationalMatrix m(b.cols(), b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b.get(i, j)) m(j, i) = 1;
  return m;
}

RationalMatrix restricted_down(const GradedDigraph& g, Level n) {
  if (n == 0 || n >= g.levels()) throw RangeError("D_n needs levels n-1 and n");
  const BoolMatrix& b = g.block(n - 1).matrix();
  RationalMatrix m(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b.get(i, j)) m(i, j) = 1;
  return m;
}

bool FominReport::holds() const {
  return std::all_of(steps.begin(), steps.end(), [](const FominStep& s) { return s.holds; });
}

FominReport fomin_relation_check(const GradedDigraph& g, const FSequence& f) {
  if (!g.is_complete_cobweb()) throw PreconditionError("Fomin relation is checked on complete cobwebs only");
  const auto& p = g.partition();
  if (f.size() < p.levels()) throw PreconditionError("F is shorter than the level count");
  for (Level k = 0; k < p.levels(); ++k)
    if (f[k] != p.size(k)) {
      throw PreconditionError("level " + std::to_string(k) + " has " + std::to_string(p.size(k)) +
                              " vertices but F_" + std::to_string(k) + " = " + std::to_string(f[k]));
    }
  auto fr = [&](Level k) { return Rational(static_cast<unsigned long>(f[k])); };

  FominReport report;
  if (p.levels() >= 2) {
    const RationalMatrix lhs = restricted_down(g, 1) * restricted_up(g, 0);
    const RationalMatrix rhs = fr(1) * RationalMatrix::identity(p.size(0));
    const Rational residual = max_abs_entry(lhs - rhs);
    report.steps.push_back({0, 0, fr(1), sgn(residual) == 0, residual});
  }
  for (Level n = 1; n + 1 < p.levels(); ++n) {
    const Rational q = fr(n + 1) / fr(n - 1);
    const RationalMatrix lhs = restricted_down(g, n + 1) * restricted_up(g, n);
    const RationalMatrix rhs = q * (restricted_up(g, n - 1) * restricted_down(g, n));
    const Rational residual = max_abs_entry(lhs - rhs);
    report.steps.push_back({n, q, 0, sgn(residual) == 0, residual});
  }
  return report;
}

FDifferentialReport f_differential_check(const GradedDigraph& g, const FSequence& f) {
  if (f[0] != 1) throw PreconditionError("F-differential check needs F_0 = 1");
  const auto& p = g.partition();
  std::vector<std::vector<Vertex>> up(p.total()), down(p.total());
  for (Vertex v = 0; v < p.total(); ++v) {
    up[v] = g.covers_of(v);
    down[v] = g.covered_by(v);
  }
  auto common = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out.size();
  };
  auto successor_matches = [&](std::size_t c, std::size_t u) {
    for (std::size_t k = 0; k + 1 < f.size(); ++k)
      if (f[k] == c && f[k + 1] == u) return true;
    return false;
  };

  FDifferentialReport report;
  for (Level n = 0; n < p.levels(); ++n) report.per_level.push_back({n, true, true});

  for (Vertex x = 0; x < p.total(); ++x)
    for (Vertex y = x + 1; y < p.total(); ++y) {
      const std::size_t above = common(up[x], up[y]);
      if (!f.contains(above)) continue;
      const std::size_t below = common(down[x], down[y]);
      if (below == above) continue;
      report.condition1 = false;
      report.per_level[p.level_of(x)].condition1 = false;
      if (!report.first_counterexample) report.first_counterexample = FDiffViolation{1, x, y, above, below};
    }

  for (Vertex x = 0; x < p.total(); ++x) {
    if (p.level_of(x) == p.top()) continue;
    const std::size_t c = down[x].size();
    if (!f.contains(c) || successor_matches(c, up[x].size())) continue;
    report.condition2 = false;
    report.per_level[p.level_of(x)].condition2 = false;
    if (!report.first_counterexample) {
      report.first_counterexample = FDiffViolation{2, x, std::nullopt, c, up[x].size()};
    }
  }
  return report;
}

}  // namespace cobweb
