#include "pdbep/lp.hpp"

#include <set>
#include <sstream>

#include "pdbep/errors.hpp"
#include "pdbep/oracle.hpp"

namespace pdbep::lp {

int LinearProgram::add_variable(std::string label, Rational lower,
                                std::optional<Rational> upper,
                                Rational objective) {
  if (upper && *upper < lower) {
    throw ParameterError("variable '" + label + "' has crossed bounds");
  }
  for (const Variable& v : variables_) {
    if (v.label == label) {
      throw ParameterError("duplicate variable label '" + label + "'");
    }
  }
  variables_.push_back(
      {std::move(label), std::move(lower), std::move(upper),
       std::move(objective)});
  return static_cast<int>(variables_.size()) - 1;
}

int LinearProgram::add_constraint(std::string label,
                                  std::vector<std::pair<int, Rational>> terms,
                                  Rational rhs) {
  std::set<int> seen;
  for (const auto& [j, coef] : terms) {
    if (j < 0 || j >= static_cast<int>(variables_.size())) {
      throw ParameterError("constraint '" + label +
                           "' references unknown variable");
    }
    if (!seen.insert(j).second) {
      throw ParameterError("constraint '" + label +
                           "' repeats a variable");
    }
    (void)coef;
  }
  rows_.push_back({std::move(label), std::move(terms), std::move(rhs)});
  return static_cast<int>(rows_.size()) - 1;
}

Lp1Model build_lp1(const Instance& inst) {
  Lp1Model model;
  const std::size_t n = inst.vertex_count();
  const std::size_t m = inst.edge_count();
  model.x_var.resize(n);
  model.y_var.resize(m);
  model.edge_row.resize(m);
  model.vertex_row.resize(n);

  for (std::size_t v = 0; v < n; ++v) {
    model.x_var[v] = model.lp.add_variable("x" + std::to_string(v),
                                           Rational(0), Rational(1));
  }
  for (std::size_t e = 0; e < m; ++e) {
    model.y_var[e] = model.lp.add_variable("y" + std::to_string(e),
                                           Rational(0), Rational(1),
                                           Rational(1));
  }
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = inst.edge(e);
    model.edge_row[e] = model.lp.add_constraint(
        "cov" + std::to_string(e),
        {{model.y_var[e], Rational(1)},
         {model.x_var[ed.u], Rational(-1)},
         {model.x_var[ed.v], Rational(-1)}},
        Rational(0));
  }
  for (VertexId v = 0; v < n; ++v) {
    std::vector<std::pair<int, Rational>> terms;
    for (EdgeId e : inst.incident(v)) {
      terms.emplace_back(model.y_var[e], Rational(1));
    }
    const long long slackness = inst.degree(v) - inst.bound(v);
    if (slackness != 0) {
      terms.emplace_back(model.x_var[v], Rational(slackness));
    }
    model.vertex_row[v] = model.lp.add_constraint(
        "cap" + std::to_string(v), std::move(terms),
        Rational(inst.degree(v)));
  }
  return model;
}

Lp2Model build_lp2_sub(const Instance& inst,
                       const std::vector<bool>& committed,
                       const std::vector<long long>& capacity,
                       const Rational& eps,
                       const std::vector<bool>& edge_active,
                       const std::vector<bool>& vertex_active) {
  const std::size_t n = inst.vertex_count();
  const std::size_t m = inst.edge_count();
  if (committed.size() != n || capacity.size() != n ||
      vertex_active.size() != n || edge_active.size() != m) {
    throw ParameterError("mask sizes do not match instance");
  }
  if (eps <= 0) throw ParameterError("eps must be positive");
  for (std::size_t v = 0; v < n; ++v) {
    if (capacity[v] < 0) {
      throw ParameterError("negative capacity at vertex " + std::to_string(v));
    }
  }

  Lp2Model model;
  model.y_var.assign(m, -1);
  model.z_var.assign(n, -1);
  model.vertex_row.assign(n, -1);

  long long active_edges = 0;
  for (EdgeId e = 0; e < m; ++e) {
    if (!edge_active[e]) continue;
    const Edge& ed = inst.edge(e);
    if (!vertex_active[ed.u] || !vertex_active[ed.v]) {
      throw ParameterError("active edge " + std::to_string(e) +
                           " touches an inactive vertex");
    }
    ++active_edges;
    model.y_var[e] = model.lp.add_variable("y" + std::to_string(e),
                                           Rational(0), Rational(1),
                                           Rational(2));
  }
  const Rational penalty = -(Rational(1) + eps);
  for (std::size_t v = 0; v < n; ++v) {
    if (!vertex_active[v] || committed[v]) continue;
    // The cap keeps z boxed; sum of y already cannot exceed the active
    // edge count, so no optimum is cut off.
    model.z_var[v] = model.lp.add_variable("z" + std::to_string(v),
                                           Rational(0),
                                           Rational(active_edges), penalty);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!vertex_active[v]) continue;
    std::vector<std::pair<int, Rational>> terms;
    for (EdgeId e : inst.incident(v)) {
      if (model.y_var[e] >= 0) terms.emplace_back(model.y_var[e], Rational(1));
    }
    if (model.z_var[v] >= 0) {
      terms.emplace_back(model.z_var[v], Rational(-1));
    }
    model.vertex_row[v] = model.lp.add_constraint(
        "cap" + std::to_string(v), std::move(terms), Rational(capacity[v]));
  }
  return model;
}

Lp2Model build_lp2(const Instance& inst, const std::vector<bool>& committed,
                   const std::vector<long long>& capacity,
                   const Rational& eps) {
  return build_lp2_sub(inst, committed, capacity, eps,
                       std::vector<bool>(inst.edge_count(), true),
                       std::vector<bool>(inst.vertex_count(), true));
}

namespace {

void append_term(std::ostringstream& out, bool first, const Rational& coef,
                 const std::string& label) {
  Rational mag = coef < 0 ? Rational(-coef) : coef;
  if (first) {
    if (coef < 0) out << "- ";
  } else {
    out << (coef < 0 ? " - " : " + ");
  }
  if (mag != 1) out << format_rational(mag) << " ";
  out << label;
}

}  // namespace

std::string to_lp_format(const LinearProgram& lp) {
  std::ostringstream out;
  out << "Maximize\n obj:";
  bool first = true;
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    const Variable& var = lp.variable(j);
    if (var.objective == 0) continue;
    out << " ";
    append_term(out, first, var.objective, var.label);
    first = false;
  }
  if (first) out << " 0";
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < lp.constraint_count(); ++i) {
    const ConstraintRow& row = lp.row(i);
    out << " " << row.label << ":";
    bool row_first = true;
    for (const auto& [j, coef] : row.terms) {
      if (coef == 0) continue;
      out << " ";
      append_term(out, row_first, coef, lp.variable(j).label);
      row_first = false;
    }
    if (row_first) out << " 0";
    out << " <= " << format_rational(row.rhs) << "\n";
  }
  out << "Bounds\n";
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    const Variable& var = lp.variable(j);
    if (var.upper && *var.upper == var.lower) {
      out << " " << var.label << " = " << format_rational(var.lower) << "\n";
    } else if (var.upper) {
      out << " " << format_rational(var.lower) << " <= " << var.label
          << " <= " << format_rational(*var.upper) << "\n";
    } else {
      out << " " << var.label << " >= " << format_rational(var.lower) << "\n";
    }
  }
  out << "End\n";
  return out.str();
}

GapDemoResult gap_demo(int n, std::size_t oracle_limit) {
  if (n < 4) throw ParameterError("gap demo needs n >= 4");
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < static_cast<VertexId>(n); ++i) {
    for (VertexId j = i + 1; j < static_cast<VertexId>(n); ++j) {
      edges.push_back({i, j});
    }
  }
  Instance inst = Instance::create(
      static_cast<std::size_t>(n), std::move(edges),
      std::vector<long long>(static_cast<std::size_t>(n), 1));

  GapDemoResult result;
  result.lp1_value = solve_extreme(build_lp1(inst).lp).objective;
  if (inst.edge_count() <= oracle_limit) {
    result.ip_bound = oracle::exact_opt(inst, {oracle_limit, true}).value;
    result.ip_exact = true;
  } else {
    result.ip_bound = Rational(upper_bound(inst));
    result.ip_exact = false;
  }
  return result;
}

}  // namespace pdbep::lp
