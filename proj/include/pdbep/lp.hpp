#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdbep/instance.hpp"
#include "pdbep/rational.hpp"

namespace pdbep::lp {

struct Variable {
  std::string label;
  Rational lower;                  // finite
  std::optional<Rational> upper;   // empty = unbounded above
  Rational objective;
};

struct ConstraintRow {
  std::string label;
  // (variable index, coefficient); indices unique within a row.
  std::vector<std::pair<int, Rational>> terms;
  Rational rhs;  // sum of terms <= rhs
};

// Maximization LP over box-bounded variables and <= rows.
class LinearProgram {
 public:
  int add_variable(std::string label, Rational lower,
                   std::optional<Rational> upper, Rational objective = 0);
  int add_constraint(std::string label,
                     std::vector<std::pair<int, Rational>> terms,
                     Rational rhs);

  std::size_t variable_count() const { return variables_.size(); }
  std::size_t constraint_count() const { return rows_.size(); }
  const Variable& variable(int j) const { return variables_[j]; }
  const ConstraintRow& row(int i) const { return rows_[i]; }

 private:
  std::vector<Variable> variables_;
  std::vector<ConstraintRow> rows_;
};

enum class VarStatus : std::uint8_t { kBasic = 0, kAtLower = 1, kAtUpper = 2 };

enum class PivotRule {
  kBland,         // smallest eligible index; never cycles
  kDantzigBland,  // steepest reduced cost, falling back to Bland to
                  // break long degenerate runs
};

// An optimal corner (basic solution): the tight constraint rows plus tight
// variable bounds always have full column rank.
struct ExtremeSolution {
  std::vector<Rational> values;          // per variable
  Rational objective;
  std::vector<VarStatus> status;         // per variable
  std::vector<bool> row_tight;           // per row: holds with equality
  // Per row, the basic column: variable index, or (variable_count + i) for
  // the slack of row i.
  std::vector<int> basis;
  std::uint64_t pivots;
};

// Exact primal simplex with variable bounds. Throws ParameterError when a
// variable lacks a finite lower bound or has crossed bounds, StructureError
// when infeasible or unbounded.
ExtremeSolution solve_extreme(const LinearProgram& lp,
                              PivotRule rule = PivotRule::kDantzigBland);

// Human-readable dump (LP-format style).
std::string to_lp_format(const LinearProgram& lp);

// Relaxation with a selection variable x_v per vertex and y_e per edge:
//   maximize sum y_e
//   y_e <= x_u + x_v                    for every edge
//   sum_{e at v} y_e <= c_v x_v + d_v (1 - x_v)   for every vertex
//   0 <= x, y <= 1
struct Lp1Model {
  LinearProgram lp;
  std::vector<int> x_var;     // per vertex
  std::vector<int> y_var;     // per edge
  std::vector<int> edge_row;  // per edge
  std::vector<int> vertex_row;
};

Lp1Model build_lp1(const Instance& inst);

// Penalized relaxation used by the rounding solver:
//   maximize 2 sum y_e - (1 + eps) sum z_v
//   sum_{e at v} y_e <= f_v + z_v   for v outside committed
//   sum_{e at v} y_e <= f_v         for v in committed
//   0 <= y_e <= 1,  z_v >= 0
// Only edges/vertices flagged active take part; inactive ones get index -1
// in the maps below. z_v carries an internal upper bound of the active edge
// count, which no optimum ever reaches.
struct Lp2Model {
  LinearProgram lp;
  std::vector<int> y_var;      // per edge, -1 when inactive
  std::vector<int> z_var;      // per vertex, -1 when committed or inactive
  std::vector<int> vertex_row; // per vertex, -1 when inactive
};

Lp2Model build_lp2(const Instance& inst, const std::vector<bool>& committed,
                   const std::vector<long long>& capacity,
                   const Rational& eps);

Lp2Model build_lp2_sub(const Instance& inst,
                       const std::vector<bool>& committed,
                       const std::vector<long long>& capacity,
                       const Rational& eps,
                       const std::vector<bool>& edge_active,
                       const std::vector<bool>& vertex_active);

// Fractional-vs-integral gap on K_n with unit bounds. The fractional value
// grows as n^2/4 while no integral packing beats n, so the ratio grows
// linearly in n. ip_exact marks whether ip_bound came from exhaustive
// search (small n) or the additive bound n.
struct GapDemoResult {
  Rational lp1_value;
  Rational ip_bound;
  bool ip_exact;
};

GapDemoResult gap_demo(int n, std::size_t oracle_limit = 24);

}  // namespace pdbep::lp
