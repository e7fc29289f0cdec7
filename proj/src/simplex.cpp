#include <cassert>
#include <vector>

#include "pdbep/errors.hpp"
#include "pdbep/lp.hpp"

namespace pdbep::lp {

namespace {

// Bounded-variable primal simplex over exact rationals.
//
// Columns are [structural | row slacks | phase-1 artificials]. The tableau
// is kept fully row-reduced (each basic column is a unit vector), and
// beta_[i] holds the current value of the variable basic in row i. Values
// of nonbasic columns sit on one of their bounds, so the operating point is
// always a primal-feasible corner.
class Simplex {
 public:
  Simplex(const LinearProgram& lp, PivotRule rule)
      : lp_(lp), rule_(rule), nv_(static_cast<int>(lp.variable_count())),
        nr_(static_cast<int>(lp.constraint_count())) {}

  ExtremeSolution solve() {
    init();
    if (needs_phase1()) run_phase1();
    load_real_objective();
    optimize();
    return extract();
  }

 private:
  enum class Limit { kNone, kFlip, kRow };

  void init() {
    ncols_ = nv_ + nr_;
    tab_.assign(nr_, std::vector<Rational>(ncols_, Rational(0)));
    lower_.resize(ncols_);
    upper_.resize(ncols_);
    status_.assign(ncols_, VarStatus::kAtLower);
    basic_.resize(nr_);
    beta_.assign(nr_, Rational(0));

    for (int j = 0; j < nv_; ++j) {
      lower_[j] = lp_.variable(j).lower;
      upper_[j] = lp_.variable(j).upper;
    }
    for (int i = 0; i < nr_; ++i) {
      const int sj = nv_ + i;
      lower_[sj] = 0;
      upper_[sj] = std::nullopt;
      tab_[i][sj] = 1;
      basic_[i] = sj;
      status_[sj] = VarStatus::kBasic;

      beta_[i] = lp_.row(i).rhs;
      for (const auto& [j, coef] : lp_.row(i).terms) {
        tab_[i][j] = coef;
        if (!lower_[j].is_zero()) beta_[i] -= coef * lower_[j];
      }
    }
  }

  bool needs_phase1() const {
    for (int i = 0; i < nr_; ++i) {
      if (beta_[i] < 0) return true;
    }
    return false;
  }

  // Rows starting below the slack's lower bound get an artificial variable
  // carrying the deficit; driving the artificials to zero restores
  // feasibility or proves there is none.
  void run_phase1() {
    std::vector<int> artificial_of_row(nr_, -1);
    for (int i = 0; i < nr_; ++i) {
      if (beta_[i] >= 0) continue;
      const int aj = ncols_++;
      artificial_of_row[i] = aj;
      lower_.push_back(Rational(0));
      upper_.push_back(std::nullopt);
      status_.push_back(VarStatus::kBasic);
      for (int r = 0; r < nr_; ++r) {
        tab_[r].push_back(Rational(r == i ? 1 : 0));
      }
      // Negate the row so the artificial's basic column is +1.
      for (int c = 0; c + 1 < ncols_; ++c) {
        if (!tab_[i][c].is_zero()) tab_[i][c] = -tab_[i][c];
      }
      status_[basic_[i]] = VarStatus::kAtLower;  // old slack, value 0
      basic_[i] = aj;
      beta_[i] = -beta_[i];
    }

    cost_.assign(ncols_, Rational(0));
    for (int aj : artificial_of_row) {
      if (aj >= 0) cost_[aj] = -1;
    }
    compute_duals();
    optimize();

    Rational deficit = 0;
    for (int i = 0; i < nr_; ++i) {
      if (cost_[basic_[i]] != 0) deficit += beta_[i];
    }
    if (deficit != 0) {
      throw StructureError("linear program is infeasible");
    }

    // Degenerate-pivot any artificial still in the basis onto a real
    // column; rows without one are redundant and keep a zero artificial.
    for (int i = 0; i < nr_; ++i) {
      if (basic_[i] < nv_ + nr_) continue;
      for (int j = 0; j < nv_ + nr_; ++j) {
        if (status_[j] == VarStatus::kBasic || tab_[i][j].is_zero()) continue;
        assert(beta_[i].is_zero());
        status_[basic_[i]] = VarStatus::kAtLower;
        status_[j] = VarStatus::kBasic;
        basic_[i] = j;
        beta_[i] = value_at_bound(j);
        reduce_on(i, j);
        break;
      }
    }
    // Freeze every artificial at zero.
    for (int aj : artificial_of_row) {
      if (aj >= 0) upper_[aj] = Rational(0);
    }
  }

  void load_real_objective() {
    cost_.assign(ncols_, Rational(0));
    for (int j = 0; j < nv_; ++j) cost_[j] = lp_.variable(j).objective;
    compute_duals();
  }

  void compute_duals() {
    dual_ = cost_;
    for (int i = 0; i < nr_; ++i) {
      const Rational& cb = cost_[basic_[i]];
      if (cb.is_zero()) continue;
      for (int c = 0; c < ncols_; ++c) {
        if (!tab_[i][c].is_zero()) dual_[c] -= cb * tab_[i][c];
      }
    }
  }

  bool eligible(int j) const {
    if (status_[j] == VarStatus::kBasic) return false;
    if (upper_[j] && *upper_[j] == lower_[j]) return false;  // frozen
    if (status_[j] == VarStatus::kAtLower) return dual_[j] > 0;
    return dual_[j] < 0;
  }

  int choose_entering(bool bland) const {
    if (bland) {
      for (int j = 0; j < ncols_; ++j) {
        if (eligible(j)) return j;
      }
      return -1;
    }
    int best = -1;
    Rational best_mag;
    for (int j = 0; j < ncols_; ++j) {
      if (!eligible(j)) continue;
      Rational mag = dual_[j] < 0 ? Rational(-dual_[j]) : dual_[j];
      if (best < 0 || mag > best_mag) {
        best = j;
        best_mag = std::move(mag);
      }
    }
    return best;
  }

  Rational value_at_bound(int j) const {
    return status_[j] == VarStatus::kAtUpper ? *upper_[j] : lower_[j];
  }

  void reduce_on(int r, int jin) {
    std::vector<Rational>& prow = tab_[r];
    const Rational inv = Rational(1) / prow[jin];
    if (inv != 1) {
      for (int c = 0; c < ncols_; ++c) {
        if (!prow[c].is_zero()) prow[c] *= inv;
      }
    }
    for (int i = 0; i < nr_; ++i) {
      if (i == r) continue;
      const Rational f = tab_[i][jin];
      if (f.is_zero()) continue;
      std::vector<Rational>& row = tab_[i];
      for (int c = 0; c < ncols_; ++c) {
        if (!prow[c].is_zero()) row[c] -= f * prow[c];
      }
    }
    const Rational fd = dual_[jin];
    if (!fd.is_zero()) {
      for (int c = 0; c < ncols_; ++c) {
        if (!prow[c].is_zero()) dual_[c] -= fd * prow[c];
      }
    }
    ++pivots_;
  }

  void optimize() {
    const std::uint64_t degen_limit =
        64 + 2 * static_cast<std::uint64_t>(nr_ + ncols_);
    const std::uint64_t pivot_cap =
        10000 + 60ull * static_cast<std::uint64_t>(nr_ + 1) *
                    static_cast<std::uint64_t>(ncols_ + 1);
    std::uint64_t degen_streak = 0;
    bool bland = rule_ == PivotRule::kBland;

    while (true) {
      if (pivots_ > pivot_cap) {
        throw SolverError("pivot cap exceeded; simplex is stuck");
      }
      const int jin = choose_entering(bland);
      if (jin < 0) return;
      const int dir = status_[jin] == VarStatus::kAtLower ? 1 : -1;

      // Ratio test: the entering move stops at its own far bound or at the
      // first basic variable pushed onto one of its bounds.
      Limit limit = Limit::kNone;
      Rational step;
      int leave_row = -1;
      bool leave_at_upper = false;
      if (upper_[jin]) {
        limit = Limit::kFlip;
        step = *upper_[jin] - lower_[jin];
      }
      for (int i = 0; i < nr_; ++i) {
        const Rational& a = tab_[i][jin];
        if (a.is_zero()) continue;
        // Basic value moves at -dir * a per unit step.
        const bool decreasing = (dir > 0) == (a > 0);
        const int k = basic_[i];
        Rational room;
        bool hits_upper;
        if (decreasing) {
          room = beta_[i] - lower_[k];
          hits_upper = false;
        } else {
          if (!upper_[k]) continue;
          room = *upper_[k] - beta_[i];
          hits_upper = true;
        }
        Rational rate = a < 0 ? Rational(-a) : a;
        Rational t = room / rate;
        // Ties prefer a bound flip over a pivot, and among tied rows the
        // smallest basic index (Bland-compatible).
        bool take = limit == Limit::kNone || t < step ||
                    (t == step && limit == Limit::kRow &&
                     k < basic_[leave_row]);
        if (take) {
          limit = Limit::kRow;
          step = std::move(t);
          leave_row = i;
          leave_at_upper = hits_upper;
        }
      }
      if (limit == Limit::kNone) {
        throw StructureError("linear program is unbounded");
      }

      if (!step.is_zero()) {
        degen_streak = 0;
        if (rule_ == PivotRule::kDantzigBland) bland = false;
        for (int i = 0; i < nr_; ++i) {
          const Rational& a = tab_[i][jin];
          if (a.is_zero()) continue;
          if (dir > 0) {
            beta_[i] -= step * a;
          } else {
            beta_[i] += step * a;
          }
        }
      } else {
        ++degen_streak;
        if (rule_ == PivotRule::kDantzigBland && degen_streak > degen_limit) {
          bland = true;
        }
      }

      if (limit == Limit::kFlip) {
        status_[jin] = status_[jin] == VarStatus::kAtLower
                           ? VarStatus::kAtUpper
                           : VarStatus::kAtLower;
        continue;
      }

      const int k = basic_[leave_row];
      assert(beta_[leave_row] ==
             (leave_at_upper ? *upper_[k] : lower_[k]));
      Rational entering_value = value_at_bound(jin) + Rational(dir) * step;
      status_[k] = leave_at_upper ? VarStatus::kAtUpper : VarStatus::kAtLower;
      status_[jin] = VarStatus::kBasic;
      basic_[leave_row] = jin;
      beta_[leave_row] = std::move(entering_value);
      reduce_on(leave_row, jin);
    }
  }

  ExtremeSolution extract() const {
    ExtremeSolution out;
    out.values.resize(nv_);
    out.status.resize(nv_);
    out.basis.assign(nr_, -1);
    out.row_tight.assign(nr_, false);
    out.pivots = pivots_;

    std::vector<Rational> all(ncols_);
    for (int j = 0; j < ncols_; ++j) {
      if (status_[j] != VarStatus::kBasic) {
        all[j] = status_[j] == VarStatus::kAtUpper ? *upper_[j] : lower_[j];
      }
    }
    for (int i = 0; i < nr_; ++i) all[basic_[i]] = beta_[i];

    out.objective = 0;
    for (int j = 0; j < nv_; ++j) {
      out.values[j] = all[j];
      out.status[j] = status_[j];
      out.objective += lp_.variable(j).objective * all[j];
    }
    for (int i = 0; i < nr_; ++i) {
      // Redundant rows dropped by phase 1 report their own slack.
      out.basis[i] = basic_[i] < nv_ + nr_ ? basic_[i] : nv_ + i;
      out.row_tight[i] = all[nv_ + i].is_zero();
    }
    return out;
  }

  const LinearProgram& lp_;
  PivotRule rule_;
  int nv_;
  int nr_;
  int ncols_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> lower_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<VarStatus> status_;
  std::vector<int> basic_;
  std::vector<Rational> beta_;
  std::vector<Rational> cost_;
  std::vector<Rational> dual_;
  std::uint64_t pivots_ = 0;
};

}  // namespace

ExtremeSolution solve_extreme(const LinearProgram& lp, PivotRule rule) {
  return Simplex(lp, rule).solve();
}

}  // namespace pdbep::lp
