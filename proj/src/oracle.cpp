#include "pdbep/oracle.hpp"

#include <vector>

#include "pdbep/errors.hpp"

namespace pdbep::oracle {

namespace {

// Depth-first search over edges in id order, include branch first. Chosen
// degrees only ever grow along a branch, so an already-violated chosen edge
// (both endpoints strictly over bound) can never recover: prune. A running
// suffix-weight bound prunes branches that cannot strictly beat the
// incumbent; ties are kept alive so the lexicographically smallest optimum
// survives.
class Search {
 public:
  Search(const Instance& inst, const OracleConfig& config)
      : inst_(inst),
        prune_(config.prune),
        deg_(inst.vertex_count(), 0),
        over_(inst.vertex_count(), 0),
        chosen_at_(inst.vertex_count()),
        suffix_(inst.edge_count() + 1, Rational(0)) {
    for (std::size_t e = inst.edge_count(); e > 0; --e) {
      suffix_[e - 1] = suffix_[e] + inst.weight(static_cast<EdgeId>(e - 1));
    }
  }

  OracleResult run() {
    best_value_ = 0;
    best_ = {};  // empty packing is always feasible
    have_best_ = true;
    explored_ = 0;
    walk(0);
    return {best_value_, EdgePacking(best_), explored_};
  }

 private:
  void walk(EdgeId index) {
    ++explored_;
    if (prune_ && violated_ > 0) return;
    if (index == inst_.edge_count()) {
      if (violated_ > 0) return;
      if (current_value_ > best_value_ ||
          (current_value_ == best_value_ && chosen_ < best_)) {
        best_value_ = current_value_;
        best_ = chosen_;
      }
      return;
    }
    if (prune_ && current_value_ + suffix_[index] < best_value_) return;

    include(index);
    walk(index + 1);
    exclude(index);

    walk(index + 1);
  }

  // Crossing bookkeeping: when a vertex first exceeds its bound, every
  // chosen edge whose other endpoint is already over becomes violated.
  void bump(VertexId v) {
    ++deg_[v];
    if (deg_[v] == inst_.bound(v) + 1) {
      for (EdgeId f : chosen_at_[v]) {
        if (over_[other(f, v)]) ++violated_;
      }
      over_[v] = 1;
    }
  }

  void drop(VertexId v) {
    if (deg_[v] == inst_.bound(v) + 1) {
      over_[v] = 0;
      for (EdgeId f : chosen_at_[v]) {
        if (over_[other(f, v)]) --violated_;
      }
    }
    --deg_[v];
  }

  void include(EdgeId e) {
    const Edge& ed = inst_.edge(e);
    bump(ed.u);
    bump(ed.v);
    if (over_[ed.u] && over_[ed.v]) ++violated_;
    chosen_at_[ed.u].push_back(e);
    chosen_at_[ed.v].push_back(e);
    chosen_.push_back(e);
    current_value_ += inst_.weight(e);
  }

  void exclude(EdgeId e) {
    const Edge& ed = inst_.edge(e);
    current_value_ -= inst_.weight(e);
    chosen_.pop_back();
    chosen_at_[ed.u].pop_back();
    chosen_at_[ed.v].pop_back();
    if (over_[ed.u] && over_[ed.v]) --violated_;
    drop(ed.v);
    drop(ed.u);
  }

  VertexId other(EdgeId e, VertexId v) const {
    const Edge& ed = inst_.edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  const Instance& inst_;
  bool prune_;
  std::vector<long long> deg_;
  std::vector<char> over_;
  std::vector<std::vector<EdgeId>> chosen_at_;
  std::vector<Rational> suffix_;
  std::vector<EdgeId> chosen_;
  Rational current_value_ = 0;
  long long violated_ = 0;
  Rational best_value_ = 0;
  std::vector<EdgeId> best_;
  bool have_best_ = false;
  std::uint64_t explored_ = 0;
};

}  // namespace

OracleResult exact_opt(const Instance& inst, const OracleConfig& config) {
  if (inst.edge_count() > config.max_edges) {
    throw RefusalError("exhaustive search refused: instance has " +
                       std::to_string(inst.edge_count()) +
                       " edges, limit is " + std::to_string(config.max_edges));
  }
  return Search(inst, config).run();
}

}  // namespace pdbep::oracle
