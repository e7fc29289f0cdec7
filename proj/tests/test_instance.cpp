#include "doctest.h"

#include "pdbep/errors.hpp"
#include "pdbep/instance.hpp"
#include "pdbep/rng.hpp"
#include "testutil.hpp"

using namespace pdbep;

TEST_CASE("rational parsing covers integer, fraction and decimal forms") {
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("2.50") == Rational(5, 2));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational(" +12 ") == Rational(12));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(format_rational(Rational(5, 2)) == "5/2");
  CHECK(format_rational(Rational(-8, 4)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("parse reads the triangle fixture") {
  Instance inst = Instance::parse(testutil::kTriText);
  CHECK(inst.vertex_count() == 3);
  CHECK(inst.edge_count() == 3);
  CHECK(inst.bound(0) == 1);
  CHECK(inst.degree(0) == 2);
  CHECK_FALSE(inst.weighted());
  CHECK(inst.edge(1).u == 1);
  CHECK(inst.edge(1).v == 2);
}

TEST_CASE("parse defaults missing bounds to the degree") {
  Instance inst = Instance::parse(
      "p pdbep 3 2\n"
      "c 1 1\n"
      "e 0 1\ne 1 2\n");
  CHECK(inst.bound(0) == 1);  // degree
  CHECK(inst.bound(1) == 1);  // declared
  CHECK(inst.bound(2) == 1);
}

TEST_CASE("parse clamps oversized bounds to the degree") {
  Instance inst = Instance::parse(
      "p pdbep 2 1\n"
      "c 0 5\nc 1 0\n"
      "e 0 1\n");
  CHECK(inst.bound(0) == 1);
  CHECK(inst.bound(1) == 0);
}

TEST_CASE("parse handles comments, blank lines and weights") {
  Instance inst = Instance::parse(
      "# leading comment\n"
      "p pdbep 2 1  # trailing comment\n"
      "\n"
      "e 0 1 2.5\n");
  CHECK(inst.weighted());
  CHECK(inst.weight(0) == Rational(5, 2));
}

TEST_CASE("mixed weighted edges default the missing weights to one") {
  Instance inst = Instance::parse(
      "p pdbep 3 2\n"
      "e 0 1 3\n"
      "e 1 2\n");
  CHECK(inst.weighted());
  CHECK(inst.weight(1) == Rational(1));
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_line = [](const char* text, int line) {
    try {
      Instance::parse(text);
      FAIL_CHECK("expected a parse error");
    } catch (const ParseError& ex) {
      CHECK(ex.line == line);
    }
  };
  expect_line("p pdbep 2 1\ne 0 0\n", 2);                    // self-loop
  expect_line("p pdbep 2 1\ne 0 5\n", 2);                    // out of range
  expect_line("p pdbep 2 0\nc 0 1\nc 0 2\n", 3);             // duplicate c
  expect_line("p pdbep 2 1\ne 0 1 -2\n", 2);                 // negative weight
  expect_line("p pdbep 2 1\nq 0 1\n", 2);                    // unknown kind
  expect_line("p pdbep 2 1\ne 0 1\np pdbep 2 1\n", 3);       // duplicate p
  expect_line("e 0 1\n", 1);                                 // missing p
  expect_line("p pdbep 2 2\ne 0 1\n", 2);                    // edge count
  expect_line("p pdbep 2 1\nc 9 1\ne 0 1\n", 2);             // c out of range
  expect_line("p pdbep x 1\n", 1);                           // bad number
  CHECK_THROWS_AS(Instance::parse(""), ParseError);
}

TEST_CASE("create rejects malformed input") {
  CHECK_THROWS_AS(Instance::create(2, {{0, 0}}, {1, 1}), ParameterError);
  CHECK_THROWS_AS(Instance::create(2, {{0, 5}}, {1, 1}), ParameterError);
  CHECK_THROWS_AS(Instance::create(2, {{0, 1}}, {1}), ParameterError);
  CHECK_THROWS_AS(Instance::create(2, {{0, 1}}, {1, -1}), ParameterError);
  CHECK_THROWS_AS(
      Instance::create(2, {{0, 1}}, {1, 1},
                       std::vector<Rational>{Rational(-1)}),
      ParameterError);
}

TEST_CASE("normalization is idempotent") {
  Instance once = Instance::create(3, {{0, 1}, {1, 2}}, {5, 5, 5});
  std::vector<long long> bounds;
  for (VertexId v = 0; v < 3; ++v) bounds.push_back(once.bound(v));
  Instance twice = Instance::create(3, {{0, 1}, {1, 2}}, bounds);
  CHECK(once == twice);
}

TEST_CASE("serialization round-trips frozen and random instances") {
  for (const char* text :
       {testutil::kTriText, testutil::kStar4Text, testutil::kPath3WText}) {
    Instance inst = Instance::parse(text);
    Instance again = Instance::parse(inst.serialize());
    CHECK(inst == again);
    CHECK(inst.serialize() == again.serialize());
  }

  SplitMix64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.below(8);
    const std::size_t m = rng.below(12);
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < m; ++e) {
      VertexId u = static_cast<VertexId>(rng.below(n));
      VertexId v = static_cast<VertexId>(rng.below(n - 1));
      if (v >= u) ++v;
      edges.push_back({u, v});
    }
    std::vector<long long> bounds;
    for (std::size_t v = 0; v < n; ++v) {
      bounds.push_back(static_cast<long long>(rng.below(5)));
    }
    std::optional<std::vector<Rational>> weights;
    if (trial % 2 == 0) {
      weights.emplace();
      for (std::size_t e = 0; e < m; ++e) {
        weights->push_back(Rational(rng.below(7), 1 + rng.below(3)));
      }
    }
    Instance inst = Instance::create(n, edges, bounds, weights);
    Instance again = Instance::parse(inst.serialize());
    CHECK(inst == again);
    CHECK(inst.serialize() == again.serialize());
  }
}

TEST_CASE("parallel edges are allowed and counted per id") {
  Instance inst = Instance::parse(
      "p pdbep 2 2\n"
      "e 0 1\ne 0 1\n");
  CHECK(inst.degree(0) == 2);
  CHECK(inst.bound(0) == 2);
  CHECK(inst.incident(0).size() == 2);
}

TEST_CASE("packing degrees and feasibility match the definition") {
  Instance tri = Instance::parse(testutil::kTriText);
  EdgePacking two(std::vector<EdgeId>{0, 1});
  std::vector<long long> deg = packing_degrees(tri, two);
  CHECK(deg == std::vector<long long>{1, 2, 1});
  CHECK(is_feasible(tri, two));
  EdgePacking all(std::vector<EdgeId>{0, 1, 2});
  CHECK_FALSE(is_feasible(tri, all));

  Instance star = Instance::parse(testutil::kStar4Text);
  EdgePacking full(std::vector<EdgeId>{0, 1, 2, 3});
  CHECK(is_feasible(star, full));

  CHECK_THROWS_AS(packing_degrees(tri, EdgePacking(std::vector<EdgeId>{9})),
                  ParameterError);
}

TEST_CASE("feasibility agrees with the definition on random packings") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(6);
    std::vector<Edge> edges;
    const std::size_t m = rng.below(9);
    for (std::size_t e = 0; e < m; ++e) {
      VertexId u = static_cast<VertexId>(rng.below(n));
      VertexId v = static_cast<VertexId>(rng.below(n - 1));
      if (v >= u) ++v;
      edges.push_back({u, v});
    }
    std::vector<long long> bounds;
    for (std::size_t v = 0; v < n; ++v) {
      bounds.push_back(static_cast<long long>(rng.below(4)));
    }
    Instance inst = Instance::create(n, edges, bounds);
    std::vector<EdgeId> chosen;
    for (EdgeId e = 0; e < m; ++e) {
      if (rng.below(2)) chosen.push_back(e);
    }
    CHECK(is_feasible(inst, EdgePacking(chosen)) ==
          testutil::feasible_by_definition(inst, chosen));
  }
}

TEST_CASE("bound sum and packing weight") {
  Instance tri = Instance::parse(testutil::kTriText);
  CHECK(upper_bound(tri) == 3);
  Instance path = Instance::parse(testutil::kPath3WText);
  CHECK(upper_bound(path) == 3);
  CHECK(packing_weight(path, EdgePacking(std::vector<EdgeId>{0, 1})) ==
        Rational(4));
  CHECK(packing_weight(tri, EdgePacking(std::vector<EdgeId>{0, 1})) ==
        Rational(2));
}

TEST_CASE("edge packing keeps ids sorted and unique") {
  EdgePacking p(std::vector<EdgeId>{3, 1, 3, 2});
  CHECK(p.ids() == std::vector<EdgeId>{1, 2, 3});
  CHECK(p.contains(2));
  CHECK_FALSE(p.contains(0));
  EdgePacking shorter(std::vector<EdgeId>{1, 2});
  CHECK(shorter < p);  // prefix compares smaller
}
