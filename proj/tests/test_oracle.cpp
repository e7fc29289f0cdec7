#include "doctest.h"

#include "pdbep/errors.hpp"
#include "pdbep/generator.hpp"
#include "pdbep/oracle.hpp"
#include "pdbep/rng.hpp"
#include "testutil.hpp"

using namespace pdbep;

// Frozen optima for the shared fixtures. These are asserted against literal
// values first and against the independent brute-force sweep second, so a
// regression in either side is caught.

TEST_CASE("triangle fixture: optimum 2, witness {0,1}") {
  Instance tri = Instance::parse(testutil::kTriText);
  testutil::BruteResult brute = testutil::brute_force_opt(tri);
  CHECK(brute.value == Rational(2));
  CHECK(brute.witness == std::vector<EdgeId>{0, 1});

  oracle::OracleResult got = oracle::exact_opt(tri);
  CHECK(got.value == Rational(2));
  CHECK(got.witness.ids() == std::vector<EdgeId>{0, 1});
  CHECK(is_feasible(tri, got.witness));
}

TEST_CASE("four-star fixture: all edges fit") {
  Instance star = Instance::parse(testutil::kStar4Text);
  testutil::BruteResult brute = testutil::brute_force_opt(star);
  CHECK(brute.value == Rational(4));
  CHECK(brute.witness == std::vector<EdgeId>{0, 1, 2, 3});

  oracle::OracleResult got = oracle::exact_opt(star);
  CHECK(got.value == Rational(4));
  CHECK(got.witness.ids() == std::vector<EdgeId>{0, 1, 2, 3});
}

TEST_CASE("weighted path fixture: optimum 4") {
  Instance path = Instance::parse(testutil::kPath3WText);
  testutil::BruteResult brute = testutil::brute_force_opt(path);
  CHECK(brute.value == Rational(4));
  CHECK(brute.witness == std::vector<EdgeId>{0, 1});

  oracle::OracleResult got = oracle::exact_opt(path);
  CHECK(got.value == Rational(4));
  CHECK(got.witness.ids() == std::vector<EdgeId>{0, 1});
}

TEST_CASE("unit-bound complete graph on six vertices yields five") {
  harness::GeneratorSpec spec;
  spec.family = harness::Family::kComplete;
  spec.n = 6;
  spec.bounds = harness::BoundPolicy::kFixed;
  spec.fixed_bound = 1;
  Instance k6 = harness::generate(spec);
  REQUIRE(k6.edge_count() == 15);

  oracle::OracleResult got = oracle::exact_opt(k6);
  CHECK(got.value == Rational(5));
  CHECK(is_feasible(k6, got.witness));
}

TEST_CASE("empty and degenerate instances") {
  Instance empty = Instance::create(1, {}, {0});
  oracle::OracleResult got = oracle::exact_opt(empty);
  CHECK(got.value == Rational(0));
  CHECK(got.witness.ids().empty());

  // All bounds zero still admits nothing on a triangle.
  Instance zero = Instance::create(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 0, 0});
  CHECK(oracle::exact_opt(zero).value == Rational(0));
}

TEST_CASE("oracle refuses oversized instances") {
  harness::GeneratorSpec spec;
  spec.family = harness::Family::kUniform;
  spec.n = 12;
  spec.m = 30;
  spec.seed = 7;
  Instance big = harness::generate(spec);
  REQUIRE(big.edge_count() == 30);
  CHECK_THROWS_AS(oracle::exact_opt(big), RefusalError);

  oracle::OracleConfig wide;
  wide.max_edges = 30;
  CHECK_NOTHROW(oracle::exact_opt(big, wide));
}

TEST_CASE("pruning changes the work, never the answer") {
  SplitMix64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    harness::GeneratorSpec spec;
    spec.family = harness::Family::kUniform;
    spec.n = 2 + rng.below(7);
    spec.m = rng.below(13);
    spec.multigraph = (trial % 3 == 0);
    if (!spec.multigraph) {
      spec.m = std::min(spec.m, spec.n * (spec.n - 1) / 2);
    }
    spec.bounds = harness::BoundPolicy::kUniform;
    spec.seed = derive_seed(555, static_cast<std::uint64_t>(trial));
    if (trial % 4 == 0) {
      spec.weights = {{0, 5}};
    }
    Instance inst = harness::generate(spec);

    oracle::OracleConfig pruned;
    oracle::OracleConfig full;
    full.prune = false;
    oracle::OracleResult a = oracle::exact_opt(inst, pruned);
    oracle::OracleResult b = oracle::exact_opt(inst, full);
    CHECK(a.value == b.value);
    CHECK(a.witness.ids() == b.witness.ids());
    CHECK(a.explored <= b.explored);

    testutil::BruteResult brute = testutil::brute_force_opt(inst);
    CHECK(a.value == brute.value);
    CHECK(a.witness.ids() == brute.witness);
    CHECK(is_feasible(inst, a.witness));
  }
}

TEST_CASE("oracle matches brute force on handcrafted corner cases") {
  // Parallel edges: two of the three copies keep the right endpoint
  // compliant; all three overload both ends. The violation check must not
  // double-count a parallel pair.
  Instance multi = Instance::create(2, {{0, 1}, {0, 1}, {0, 1}}, {1, 2});
  testutil::BruteResult brute = testutil::brute_force_opt(multi);
  oracle::OracleResult got = oracle::exact_opt(multi);
  CHECK(got.value == brute.value);
  CHECK(got.value == Rational(2));
  CHECK(got.witness.ids() == brute.witness);
  CHECK(got.witness.ids() == std::vector<EdgeId>{0, 1});

  // Asymmetric bounds on a path: the middle vertex is the only slack.
  Instance path = Instance::create(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 1, 0, 0});
  brute = testutil::brute_force_opt(path);
  got = oracle::exact_opt(path);
  CHECK(got.value == brute.value);
  CHECK(got.value == Rational(1));
  CHECK(got.witness.ids() == std::vector<EdgeId>{0});
}
