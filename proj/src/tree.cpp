#include "pdbep/tree.hpp"

#include <algorithm>
#include <array>

#include "pdbep/errors.hpp"

namespace pdbep::tree {

RootedTree root_tree(const Instance& inst, std::optional<VertexId> root) {
  const std::size_t n = inst.vertex_count();
  if (inst.edge_count() + 1 != n) {
    throw StructureError("not a tree: n=" + std::to_string(n) + ", m=" +
                         std::to_string(inst.edge_count()));
  }
  RootedTree rt;
  rt.root = root.value_or(0);
  if (rt.root >= n) {
    throw ParameterError("root " + std::to_string(rt.root) +
                         " out of range");
  }
  rt.parent.assign(n, 0);
  rt.parent_edge.assign(n, 0);
  rt.children.resize(n);
  rt.order.reserve(n);

  std::vector<char> seen(n, 0);
  std::vector<VertexId> queue{rt.root};
  seen[rt.root] = 1;
  rt.parent[rt.root] = rt.root;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (EdgeId e : inst.incident(v)) {
      const Edge& ed = inst.edge(e);
      const VertexId w = ed.u == v ? ed.v : ed.u;
      if (seen[w]) continue;
      seen[w] = 1;
      rt.parent[w] = v;
      rt.parent_edge[w] = e;
      rt.children[v].push_back(w);
      queue.push_back(w);
    }
  }
  if (queue.size() != n) {
    throw StructureError("not a tree: graph is disconnected");
  }
  rt.order.assign(queue.rbegin(), queue.rend());
  return rt;
}

namespace {

enum Kind : unsigned char { kH = 0, kG = 1, kB = 2 };

// h/g/b value of one vertex plus, per child, which state it consumes and
// whether its parent edge joins the packing. nullopt marks an unreachable
// state; it loses every comparison.
struct Cell {
  std::optional<long long> value;
  std::vector<Kind> child_kind;
  std::vector<char> attached;
};

long long finite(const std::optional<long long>& v) {
  return v.value_or(0);
}

bool ge(const std::optional<long long>& a, const std::optional<long long>& b) {
  if (!a) return !b;
  if (!b) return true;
  return *a >= *b;
}

std::optional<long long> omax(const std::optional<long long>& a,
                              const std::optional<long long>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

}  // namespace

TreeDpResult tree_dp(const Instance& inst, std::optional<VertexId> root) {
  const RootedTree rt = root_tree(inst, root);
  const std::size_t n = inst.vertex_count();

  std::vector<std::array<Cell, 3>> cells(n);
  TreeDpResult result;
  TreeLabels& labels = result.labels;
  labels.h.assign(n, 0);
  labels.g.assign(n, 0);
  labels.b.assign(n, 0);
  labels.part_h.resize(n);
  labels.part_g.resize(n);
  labels.part_b.resize(n);
  labels.sel_low.resize(n);
  labels.sel_high.resize(n);

  for (VertexId v : rt.order) {
    const std::vector<VertexId>& ch = rt.children[v];
    const long long cap = inst.bound(v);
    const std::size_t deg = ch.size();

    // Classify children by their strongest state: h wins ties, then the
    // heavy states fall through to part_b.
    std::vector<std::size_t> part_h, part_g, part_b;
    std::vector<Kind> default_kind(deg);
    long long default_sum = 0;
    for (std::size_t idx = 0; idx < deg; ++idx) {
      const auto& cc = cells[ch[idx]];
      const auto& hv = cc[kH].value;
      const auto& gv = cc[kG].value;
      const auto& bv = cc[kB].value;
      if (ge(hv, omax(gv, bv))) {
        part_h.push_back(idx);
        default_kind[idx] = kH;
        default_sum += *hv;
      } else if (gv && !ge(omax(hv, bv), gv)) {
        part_g.push_back(idx);
        default_kind[idx] = kG;
        default_sum += *gv;
      } else {
        part_b.push_back(idx);
        default_kind[idx] = kB;
        default_sum += *bv;
      }
    }
    for (std::size_t idx : part_h) labels.part_h[v].push_back(ch[idx]);
    for (std::size_t idx : part_g) labels.part_g[v].push_back(ch[idx]);
    for (std::size_t idx : part_b) labels.part_b[v].push_back(ch[idx]);

    // Heavy children (h or b default) sorted by vertex id: attachment is
    // free for them, so id order just keeps reconstruction deterministic.
    std::vector<std::size_t> heavy;
    for (std::size_t idx = 0; idx < deg; ++idx) {
      if (default_kind[idx] != kG) heavy.push_back(idx);
    }
    std::sort(heavy.begin(), heavy.end(),
              [&](std::size_t a, std::size_t b) { return ch[a] < ch[b]; });

    Cell& hcell = cells[v][kH];
    Cell& gcell = cells[v][kG];
    Cell& bcell = cells[v][kB];

    // h: strictly under the bound, so the parent edge can land later.
    if (cap == 0) {
      hcell.value.reset();
    } else {
      const std::size_t attach =
          std::min<std::size_t>(static_cast<std::size_t>(cap - 1),
                                heavy.size());
      hcell.value = default_sum + static_cast<long long>(attach);
      hcell.child_kind.assign(default_kind.begin(), default_kind.end());
      hcell.attached.assign(deg, 0);
      for (std::size_t i = 0; i < attach; ++i) {
        hcell.attached[heavy[i]] = 1;
      }
    }

    // g: exactly at the bound. Light children pulled in to reach the count
    // switch to their best heavy state and pay for it.
    if (cap > static_cast<long long>(deg)) {
      gcell.value.reset();
    } else {
      gcell.child_kind.assign(default_kind.begin(), default_kind.end());
      gcell.attached.assign(deg, 0);
      const long long short_of =
          cap - static_cast<long long>(heavy.size());
      if (short_of <= 0) {
        for (long long i = 0; i < cap; ++i) {
          gcell.attached[heavy[static_cast<std::size_t>(i)]] = 1;
        }
        gcell.value = default_sum + cap;
      } else {
        // Cost of attaching a light child: its g minus max(h, b) >= 1.
        std::vector<std::pair<long long, std::size_t>> cost;
        for (std::size_t idx : part_g) {
          const auto& cc = cells[ch[idx]];
          cost.emplace_back(*cc[kG].value -
                                *omax(cc[kH].value, cc[kB].value),
                            idx);
        }
        std::sort(cost.begin(), cost.end(),
                  [&](const auto& a, const auto& b) {
                    if (a.first != b.first) return a.first < b.first;
                    return ch[a.second] < ch[b.second];
                  });
        long long total = default_sum + cap;
        for (std::size_t i = 0;
             i < static_cast<std::size_t>(short_of); ++i) {
          const std::size_t idx = cost[i].second;
          total -= cost[i].first;
          const auto& cc = cells[ch[idx]];
          gcell.child_kind[idx] = ge(cc[kH].value, cc[kB].value) ? kH : kB;
          gcell.attached[idx] = 1;
          labels.sel_low[v].push_back(ch[idx]);
        }
        for (std::size_t idx : heavy) gcell.attached[idx] = 1;
        gcell.value = total;
      }
    }

    // b: at or over the bound; every attached child must absorb its parent
    // edge, hence must offer an h state.
    if (cap > static_cast<long long>(deg)) {
      bcell.value.reset();
    } else {
      bcell.child_kind.assign(default_kind.begin(), default_kind.end());
      bcell.attached.assign(deg, 0);
      long long total = default_sum;
      bool ok = true;
      for (std::size_t idx : part_h) bcell.attached[idx] = 1;
      const long long short_of = cap - static_cast<long long>(part_h.size());
      if (short_of > 0) {
        // Demotion cost to h for children outside part_h.
        std::vector<std::pair<long long, std::size_t>> cost;
        for (std::size_t idx = 0; idx < deg; ++idx) {
          if (default_kind[idx] == kH) continue;
          const auto& cc = cells[ch[idx]];
          if (!cc[kH].value) continue;
          const long long def = default_kind[idx] == kG
                                    ? *cc[kG].value
                                    : *cc[kB].value;
          cost.emplace_back(def - *cc[kH].value, idx);
        }
        if (cost.size() < static_cast<std::size_t>(short_of)) {
          ok = false;
        } else {
          std::sort(cost.begin(), cost.end(),
                    [&](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first < b.first;
                      return ch[a.second] < ch[b.second];
                    });
          for (std::size_t i = 0;
               i < static_cast<std::size_t>(short_of); ++i) {
            const std::size_t idx = cost[i].second;
            total -= cost[i].first;
            bcell.child_kind[idx] = kH;
            bcell.attached[idx] = 1;
            labels.sel_high[v].push_back(ch[idx]);
          }
        }
      }
      if (!ok) {
        bcell.value.reset();
        bcell.child_kind.clear();
        bcell.attached.clear();
        labels.sel_high[v].clear();
      } else {
        bcell.value =
            total + std::max(cap, static_cast<long long>(part_h.size()));
      }
    }

    labels.h[v] = finite(hcell.value);
    labels.g[v] = finite(gcell.value);
    labels.b[v] = finite(bcell.value);
  }

  // Best root state; h preferred on ties, then g.
  const auto& rc = cells[rt.root];
  Kind best = kH;
  std::optional<long long> best_value = rc[kH].value;
  for (Kind k : {kG, kB}) {
    if (!ge(best_value, rc[k].value)) {
      best = k;
      best_value = rc[k].value;
    }
  }
  if (!best_value) {
    throw SolverError("no feasible root state in tree dp");
  }
  result.value = *best_value;

  // Emit the packing top-down.
  std::vector<EdgeId> chosen;
  std::vector<std::pair<VertexId, Kind>> stack{{rt.root, best}};
  while (!stack.empty()) {
    auto [v, kind] = stack.back();
    stack.pop_back();
    const Cell& cell = cells[v][kind];
    if (!cell.value) {
      throw SolverError("reconstruction reached an unreachable state");
    }
    const std::vector<VertexId>& ch = rt.children[v];
    for (std::size_t idx = 0; idx < ch.size(); ++idx) {
      if (!cell.attached.empty() && cell.attached[idx]) {
        chosen.push_back(rt.parent_edge[ch[idx]]);
      }
      stack.emplace_back(ch[idx],
                         static_cast<Kind>(cell.child_kind[idx]));
    }
  }
  result.witness = EdgePacking(chosen);
  return result;
}

}  // namespace pdbep::tree
