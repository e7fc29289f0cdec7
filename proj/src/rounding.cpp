#include "pdbep/rounding.hpp"

#include <algorithm>

#include "pdbep/errors.hpp"

namespace pdbep::rounding {

Rational phi_value(const Instance& inst, const EdgePacking& p,
                   const Rational& eps) {
  if (eps <= 0) throw ParameterError("eps must be positive");
  std::vector<long long> deg = packing_degrees(inst, p);
  long long excess = 0;
  for (std::size_t v = 0; v < inst.vertex_count(); ++v) {
    excess += std::max(0ll, deg[v] - inst.bound(v));
  }
  return Rational(2) * Rational(static_cast<long long>(p.size())) -
         (Rational(1) + eps) * Rational(excess);
}

EdgePacking make_maximal(const Instance& inst, const EdgePacking& start,
                         const Rational& eps) {
  if (eps <= 0) throw ParameterError("eps must be positive");
  std::vector<char> in(inst.edge_count(), 0);
  for (EdgeId e : start) {
    if (e >= inst.edge_count()) {
      throw ParameterError("packing references edge outside instance");
    }
    in[e] = 1;
  }
  std::vector<long long> deg(inst.vertex_count(), 0);
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (in[e]) {
      ++deg[inst.edge(e).u];
      ++deg[inst.edge(e).v];
    }
  }

  const Rational unit_gain = Rational(1) + eps;
  // Potential delta of adding e: 2 - (1+eps) * (#endpoints already at or
  // over bound); of removing e: -2 + (1+eps) * (#endpoints strictly over).
  bool changed = true;
  while (changed) {
    changed = false;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
      const Edge& ed = inst.edge(e);
      if (!in[e]) {
        int saturated = (deg[ed.u] >= inst.bound(ed.u) ? 1 : 0) +
                        (deg[ed.v] >= inst.bound(ed.v) ? 1 : 0);
        if (Rational(2) > unit_gain * saturated) {
          in[e] = 1;
          ++deg[ed.u];
          ++deg[ed.v];
          changed = true;
        }
      } else {
        int over = (deg[ed.u] > inst.bound(ed.u) ? 1 : 0) +
                   (deg[ed.v] > inst.bound(ed.v) ? 1 : 0);
        if (unit_gain * over > Rational(2)) {
          in[e] = 0;
          --deg[ed.u];
          --deg[ed.v];
          changed = true;
        }
      }
    }
  }

  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (in[e]) ids.push_back(e);
  }
  return EdgePacking(ids);
}

std::pair<EdgePacking, RoundingState> solve_ip2(const Instance& inst,
                                                const Rational& eps,
                                                lp::PivotRule rule) {
  if (eps <= 0) throw ParameterError("eps must be positive");

  const std::size_t n = inst.vertex_count();
  const std::size_t m = inst.edge_count();

  RoundingState state;
  state.committed.assign(n, false);
  state.capacity.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) state.capacity[v] = inst.bound(v);

  std::vector<bool> alive(m, true);
  std::size_t alive_count = m;
  std::vector<EdgeId> accepted;
  const Rational half(1, 2);

  std::size_t rounds = 0;
  while (alive_count > 0) {
    if (++rounds > m + 1) {
      throw SolverError("rounding loop failed to shrink the residual graph");
    }
    IterationRecord rec;
    rec.residual_edges = alive_count;

    // Capacity already exhausted at a committed endpoint forces y = 0 in
    // every feasible relaxation point; drop those edges without a solve.
    for (EdgeId e = 0; e < m; ++e) {
      if (!alive[e]) continue;
      const Edge& ed = inst.edge(e);
      bool dead_u = state.committed[ed.u] && state.capacity[ed.u] == 0;
      bool dead_v = state.committed[ed.v] && state.capacity[ed.v] == 0;
      if (dead_u || dead_v) rec.zeroed.push_back(e);
    }
    if (!rec.zeroed.empty()) {
      rec.forced = true;
      for (EdgeId e : rec.zeroed) alive[e] = false;
      alive_count -= rec.zeroed.size();
      state.log.push_back(std::move(rec));
      continue;
    }

    std::vector<bool> vertex_active(n, false);
    for (EdgeId e = 0; e < m; ++e) {
      if (alive[e]) {
        vertex_active[inst.edge(e).u] = true;
        vertex_active[inst.edge(e).v] = true;
      }
    }
    lp::Lp2Model model = lp::build_lp2_sub(inst, state.committed,
                                           state.capacity, eps, alive,
                                           vertex_active);
    lp::ExtremeSolution sol = lp::solve_extreme(model.lp, rule);
    rec.lp_index = state.lp_solves;
    if (state.lp_solves == 0) state.root_lp_value = sol.objective;
    ++state.lp_solves;

    for (EdgeId e = 0; e < m; ++e) {
      if (alive[e] && sol.values[model.y_var[e]].is_zero()) {
        rec.zeroed.push_back(e);
      }
    }
    if (!rec.zeroed.empty()) {
      for (EdgeId e : rec.zeroed) alive[e] = false;
      alive_count -= rec.zeroed.size();
      state.log.push_back(std::move(rec));
      continue;
    }

    // No zero edge: a corner of this relaxation must offer one with
    // y >= 1/2, and such an edge has an endpoint with spare capacity and
    // no slack. Round the smallest.
    EdgeId pick = static_cast<EdgeId>(m);
    for (EdgeId e = 0; e < m; ++e) {
      if (alive[e] && sol.values[model.y_var[e]] >= half) {
        pick = e;
        break;
      }
    }
    if (pick == m) {
      throw SolverError("no zero or half-integral edge in corner solution");
    }
    const Edge& ed = inst.edge(pick);
    auto relax_of = [&](VertexId v) {
      return model.z_var[v] >= 0 ? sol.values[model.z_var[v]] : Rational(0);
    };
    const Rational zu = relax_of(ed.u);
    const Rational zv = relax_of(ed.v);
    bool u_ok = state.capacity[ed.u] > 0 && zu.is_zero();
    bool v_ok = state.capacity[ed.v] > 0 && zv.is_zero();
    if (!u_ok && !v_ok) {
      throw SolverError("rounded edge lacks a tight endpoint with capacity");
    }
    VertexId chosen;
    if (u_ok && v_ok) {
      // Larger residual capacity first, smaller id on ties.
      if (state.capacity[ed.u] != state.capacity[ed.v]) {
        chosen = state.capacity[ed.u] > state.capacity[ed.v] ? ed.u : ed.v;
      } else {
        chosen = std::min(ed.u, ed.v);
      }
    } else {
      chosen = u_ok ? ed.u : ed.v;
    }
    const VertexId other = chosen == ed.u ? ed.v : ed.u;

    rec.rounded = pick;
    rec.chosen_endpoint = chosen;
    rec.y_value = sol.values[model.y_var[pick]];
    rec.capacity_chosen = state.capacity[chosen];
    rec.relax_chosen = chosen == ed.u ? zu : zv;
    rec.capacity_other = state.capacity[other];
    rec.relax_other = chosen == ed.u ? zv : zu;
    state.log.push_back(std::move(rec));

    accepted.push_back(pick);
    alive[pick] = false;
    --alive_count;
    state.capacity[chosen] -= 1;
    state.committed[chosen] = true;
    state.capacity[other] = std::max(0ll, state.capacity[other] - 1);
  }

  state.long_run = state.lp_solves > static_cast<int>(n) + 1;
  state.rounded = EdgePacking(accepted);
  EdgePacking result = make_maximal(inst, state.rounded, eps);
  return {std::move(result), std::move(state)};
}

}  // namespace pdbep::rounding
