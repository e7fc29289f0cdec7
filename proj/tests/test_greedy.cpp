#include "doctest.h"

#include <algorithm>

#include "pdbep/errors.hpp"
#include "pdbep/generator.hpp"
#include "pdbep/greedy.hpp"
#include "pdbep/oracle.hpp"
#include "pdbep/rng.hpp"
#include "testutil.hpp"

using namespace pdbep;

namespace {

Instance random_instance(SplitMix64& rng, std::size_t n_max, bool weighted) {
  harness::GeneratorSpec spec;
  spec.family = harness::Family::kUniform;
  spec.n = 2 + rng.below(n_max - 1);
  spec.m = rng.below(2 * spec.n + 1);
  spec.multigraph = rng.below(4) == 0;
  if (!spec.multigraph) {
    spec.m = std::min(spec.m, spec.n * (spec.n - 1) / 2);
  }
  spec.bounds = harness::BoundPolicy::kUniform;
  if (weighted) spec.weights = {{0, 9}};
  spec.seed = rng.next();
  return harness::generate(spec);
}

// Maximality of Y: no unused edge can join without breaking feasibility.
bool is_maximal(const Instance& inst, const EdgePacking& p) {
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (p.contains(e)) continue;
    std::vector<EdgeId> extended = p.ids();
    extended.push_back(e);
    if (testutil::feasible_by_definition(inst, extended)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("addition on the triangle keeps the first two edges") {
  Instance tri = Instance::parse(testutil::kTriText);
  auto [packing, trace] = greedy::edge_addition(tri);
  CHECK(packing.ids() == std::vector<EdgeId>{0, 1});
  CHECK(trace.visit_order == std::vector<EdgeId>{0, 1, 2});
  CHECK(trace.maximal.ids() == std::vector<EdgeId>{0, 1});
  CHECK(trace.deficient.empty());
  CHECK(trace.supplement.ids().empty());
  CHECK(trace.chose_maximal);
  CHECK(4 * static_cast<long long>(packing.ids().size()) >= upper_bound(tri));
}

TEST_CASE("addition padding can win") {
  // Vertex 0 wants two edges but the greedy pass saturates its only
  // neighbour first, so the supplement {1,2} beats the maximal set {0}.
  Instance inst =
      Instance::create(3, {{1, 2}, {0, 1}, {0, 1}}, {2, 1, 0});
  auto [packing, trace] = greedy::edge_addition(inst);
  CHECK(trace.maximal.ids() == std::vector<EdgeId>{0});
  CHECK(trace.deficient == std::vector<VertexId>{0});
  CHECK(trace.supplement.ids() == std::vector<EdgeId>{1, 2});
  CHECK_FALSE(trace.chose_maximal);
  CHECK(packing.ids() == std::vector<EdgeId>{1, 2});
  CHECK(is_feasible(inst, packing));
}

TEST_CASE("addition resolves equal sizes toward the maximal set") {
  // Both saturating edges are blocked for vertex 0, leaving a deficit of
  // two; |Y| == |Z| == 2 and Y wins the tie.
  Instance inst = Instance::create(
      5, {{1, 3}, {2, 4}, {0, 1}, {0, 2}}, {2, 1, 1, 0, 0});
  auto [packing, trace] = greedy::edge_addition(inst);
  CHECK(trace.maximal.ids() == std::vector<EdgeId>{0, 1});
  CHECK(trace.deficient == std::vector<VertexId>{0});
  CHECK(trace.supplement.ids() == std::vector<EdgeId>{2, 3});
  CHECK(trace.chose_maximal);
  CHECK(packing.ids() == std::vector<EdgeId>{0, 1});
}

TEST_CASE("zero bounds force empty outputs") {
  Instance inst = Instance::create(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 0, 0});
  auto [added, trace] = greedy::edge_addition(inst);
  CHECK(added.ids().empty());
  CHECK(trace.maximal.ids().empty());
  CHECK(trace.deficient.empty());
  CHECK(greedy::edge_deletion(inst).ids().empty());
}

TEST_CASE("deletion on the triangle drops the first edge") {
  Instance tri = Instance::parse(testutil::kTriText);
  EdgePacking kept = greedy::edge_deletion(tri);
  CHECK(kept.ids() == std::vector<EdgeId>{1, 2});
  CHECK(is_feasible(tri, kept));
  std::vector<long long> deg = packing_degrees(tri, kept);
  for (VertexId v = 0; v < 3; ++v) CHECK(deg[v] >= tri.bound(v));
  CHECK(2 * static_cast<long long>(kept.ids().size()) >= upper_bound(tri));
}

TEST_CASE("deletion keeps every star edge") {
  Instance star = Instance::parse(testutil::kStar4Text);
  CHECK(greedy::edge_deletion(star).ids() ==
        std::vector<EdgeId>{0, 1, 2, 3});
}

TEST_CASE("order arguments must be permutations") {
  Instance tri = Instance::parse(testutil::kTriText);
  CHECK_THROWS_AS(greedy::edge_addition(tri, {0, 1}), ParameterError);
  CHECK_THROWS_AS(greedy::edge_addition(tri, {0, 1, 1}), ParameterError);
  CHECK_THROWS_AS(greedy::edge_addition(tri, {0, 1, 9}), ParameterError);
  CHECK_THROWS_AS(greedy::edge_deletion(tri, {2, 2, 0}), ParameterError);
  CHECK_NOTHROW(greedy::edge_addition(tri, {2, 0, 1}));
}

TEST_CASE("shuffled orders are deterministic permutations") {
  Instance star = Instance::parse(testutil::kStar4Text);
  std::vector<EdgeId> a = greedy::shuffled_order(star, 7);
  std::vector<EdgeId> b = greedy::shuffled_order(star, 7);
  CHECK(a == b);
  std::vector<EdgeId> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<EdgeId>{0, 1, 2, 3});
  CHECK(greedy::shuffled_order(star, 8) != a);  // 1/24 chance of collision
}

TEST_CASE("addition invariants hold across random instances and orders") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    Instance inst = random_instance(rng, 9, trial % 5 == 0);
    std::vector<EdgeId> order;
    if (trial % 3 != 0) order = greedy::shuffled_order(inst, rng.next());

    auto [packing, trace] = greedy::edge_addition(inst, order);
    CHECK(is_feasible(inst, packing));
    CHECK(is_feasible(inst, trace.maximal));
    CHECK(is_feasible(inst, trace.supplement));
    CHECK(is_maximal(inst, trace.maximal));
    if (!order.empty()) CHECK(trace.visit_order == order);

    // The picked side is the larger one.
    const std::size_t y = trace.maximal.ids().size();
    const std::size_t z = trace.supplement.ids().size();
    CHECK(packing.ids().size() == std::max(y, z));
    CHECK(trace.chose_maximal == (y >= z));

    // Deficient vertices are exactly the under-served ones, and the
    // supplement tops every one of them up to its bound.
    std::vector<long long> deg_y = packing_degrees(inst, trace.maximal);
    std::vector<VertexId> expect;
    for (VertexId v = 0; v < inst.vertex_count(); ++v) {
      if (deg_y[v] < inst.bound(v)) expect.push_back(v);
    }
    CHECK(trace.deficient == expect);
    std::size_t deficit = 0;
    for (VertexId v : expect) deficit += inst.bound(v) - deg_y[v];
    CHECK(z == deficit);
    for (EdgeId e : trace.supplement.ids()) CHECK_FALSE(trace.maximal.contains(e));

    // Union covers every bound.
    std::vector<EdgeId> both = trace.maximal.ids();
    both.insert(both.end(), trace.supplement.ids().begin(),
                trace.supplement.ids().end());
    std::vector<long long> deg_union = packing_degrees(inst, EdgePacking(both));
    for (VertexId v = 0; v < inst.vertex_count(); ++v) {
      CHECK(deg_union[v] >= inst.bound(v));
    }

    // Factor guarantee against the bound sum, and the bound sum really
    // caps the optimum on small instances.
    CHECK(4 * static_cast<long long>(packing.ids().size()) >=
          upper_bound(inst));
    if (inst.edge_count() <= 14) {
      oracle::OracleResult opt = oracle::exact_opt(inst);
      if (!inst.weighted()) {
        CHECK(opt.value <= Rational(upper_bound(inst)));
        CHECK(Rational(static_cast<long long>(packing.ids().size())) <=
              opt.value);
      }
    }
  }
}

TEST_CASE("deletion invariants hold across random instances and orders") {
  SplitMix64 rng(4096);
  for (int trial = 0; trial < 120; ++trial) {
    Instance inst = random_instance(rng, 9, trial % 7 == 0);
    std::vector<EdgeId> order;
    if (trial % 2 == 0) order = greedy::shuffled_order(inst, rng.next());

    EdgePacking kept = greedy::edge_deletion(inst, order);
    CHECK(is_feasible(inst, kept));
    std::vector<long long> deg = packing_degrees(inst, kept);
    for (VertexId v = 0; v < inst.vertex_count(); ++v) {
      CHECK(deg[v] >= inst.bound(v));
    }
    CHECK(2 * static_cast<long long>(kept.ids().size()) >=
          upper_bound(inst));
  }
}

TEST_CASE("weights never change the greedy outputs") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    Instance plain = random_instance(rng, 8, false);
    std::vector<Rational> weights;
    for (EdgeId e = 0; e < plain.edge_count(); ++e) {
      weights.push_back(Rational(rng.below(20), 1 + rng.below(4)));
    }
    std::vector<Edge> edges;
    std::vector<long long> bounds;
    for (EdgeId e = 0; e < plain.edge_count(); ++e) {
      edges.push_back(plain.edge(e));
    }
    for (VertexId v = 0; v < plain.vertex_count(); ++v) {
      bounds.push_back(plain.bound(v));
    }
    Instance heavy =
        Instance::create(plain.vertex_count(), edges, bounds, weights);

    CHECK(greedy::edge_addition(plain).first.ids() ==
          greedy::edge_addition(heavy).first.ids());
    CHECK(greedy::edge_deletion(plain).ids() ==
          greedy::edge_deletion(heavy).ids());
  }
}
