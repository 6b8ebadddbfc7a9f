#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "fixtures.hpp"
#include "morsecat/report.hpp"
#include "morsecat/vector_field.hpp"
#include "oracles.hpp"

using namespace morsecat;

namespace {

VectorField field_on(const LoopFreeCategory& cat,
                     const std::vector<std::string>& arrows) {
  return validate_vector_field(cat, compute_grading(cat), arrows);
}

}  // namespace

TEST_CASE("vector field validation accepts the designed fields") {
  CHECK_NOTHROW(field_on(fixtures::fence(), {"ac", "bd"}));
  CHECK_NOTHROW(field_on(fixtures::fence(), {"ac"}));
  CHECK_NOTHROW(field_on(fixtures::parallel_pair(), {"u"}));
  CHECK_NOTHROW(field_on(fixtures::fence(), {}));
}

TEST_CASE("condition 1: no object is both source and target of vectors") {
  try {
    field_on(fixtures::chain2(), {"xy", "yz"});
    FAIL("expected SourceTargetClash");
  } catch (const SourceTargetClash& e) {
    CHECK(e.f == "yz");
    CHECK(e.g == "xy");
  }
}

TEST_CASE("condition 2: singleton-type vectors demand exclusivity") {
  // Two singleton-type vectors out of the same source.
  auto branching = fixtures::poset({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}});
  CHECK_THROWS_AS(field_on(branching, {"x<y", "x<z"}), UniquenessViolation);

  // Two singleton-type vectors into the same target.
  auto merging = fixtures::poset({"x", "y", "z"}, {{"x", "z"}, {"y", "z"}});
  CHECK_THROWS_AS(field_on(merging, {"x<z", "y<z"}), UniquenessViolation);
}

TEST_CASE("condition 3: a parallel class may not be fully used") {
  CHECK_THROWS_AS(field_on(fixtures::parallel_pair(), {"u", "v"}),
                  FullParallelClass);
}

TEST_CASE("vectors must be indecomposable and declared") {
  CHECK_THROWS_AS(field_on(fixtures::chain2(), {"xz"}), NotIndecomposable);
  CHECK_THROWS_AS(field_on(fixtures::fence(), {"nope"}), DanglingReference);
  CHECK_THROWS_AS(field_on(fixtures::fence(), {"ac", "ac"}), DuplicateId);
}

TEST_CASE("subsets of a valid singleton-type field stay valid") {
  for (const auto& [cat, vectors] :
       {std::pair{fixtures::fence(), std::vector<std::string>{"ac", "bd"}},
        std::pair{fixtures::poset({"p", "q", "r", "s"},
                                  {{"p", "q"}, {"r", "s"}}),
                  std::vector<std::string>{"p<q", "r<s"}}}) {
    for (std::size_t mask = 0; mask < (1u << vectors.size()); ++mask) {
      std::vector<std::string> subset;
      for (std::size_t i = 0; i < vectors.size(); ++i)
        if (mask & (1u << i)) subset.push_back(vectors[i]);
      CHECK_NOTHROW(field_on(cat, subset));
    }
  }
}

TEST_CASE("critical objects") {
  auto fence = fixtures::fence();
  CHECK(critical_objects(fence, field_on(fence, {"ac", "bd"})).empty());
  CHECK(critical_objects(fence, field_on(fence, {"ac"})) ==
        std::vector<ObjectId>{"b", "d"});
  CHECK(critical_objects(fence, field_on(fence, {})) ==
        std::vector<ObjectId>{"a", "b", "c", "d"});
}

TEST_CASE("flow graph construction") {
  auto parallel = fixtures::parallel_pair();
  auto flow = build_flow_graph(parallel, field_on(parallel, {"u"}));
  REQUIRE(flow.edges.size() == 2);
  CHECK(flow.edges[0].from == "x");
  CHECK(flow.edges[0].kind == FlowEdge::Kind::forward);
  CHECK(flow.edges[1].from == "y");
  CHECK(flow.edges[1].kind == FlowEdge::Kind::reversed);

  auto fence = fixtures::fence();
  auto fence_flow = build_flow_graph(fence, field_on(fence, {"ac"}));
  // 4 arrow edges plus 2 critical self-loops.
  CHECK(fence_flow.edges.size() == 6);
  int forward = 0, reversed = 0, loops = 0;
  for (const auto& e : fence_flow.edges) {
    forward += e.kind == FlowEdge::Kind::forward;
    reversed += e.kind == FlowEdge::Kind::reversed;
    loops += e.kind == FlowEdge::Kind::critical_loop;
  }
  CHECK(forward == 1);
  CHECK(reversed == 3);
  CHECK(loops == 2);

  auto pt = fixtures::point();
  auto pt_flow = build_flow_graph(pt, field_on(pt, {}));
  REQUIRE(pt_flow.edges.size() == 1);
  CHECK(pt_flow.edges[0].kind == FlowEdge::Kind::critical_loop);
}

TEST_CASE("basic sets of the parallel pair") {
  auto parallel = fixtures::parallel_pair();
  auto decomposition = basic_sets(parallel, compute_grading(parallel),
                                  field_on(parallel, {"u"}));
  REQUIRE(decomposition.basic_sets.size() == 1);
  const auto& lambda = decomposition.basic_sets[0];
  CHECK(lambda.kind == BasicSet::Kind::recurrent);
  CHECK(lambda.objects == std::vector<ObjectId>{"x", "y"});
  CHECK(lambda.index == 0);
  CHECK_FALSE(lambda.mixed_index);
  CHECK(decomposition.gradient_part.empty());
}

TEST_CASE("basic sets of the fence with one vector") {
  auto fence = fixtures::fence();
  auto decomposition =
      basic_sets(fence, compute_grading(fence), field_on(fence, {"ac"}));
  REQUIRE(decomposition.basic_sets.size() == 2);
  CHECK(decomposition.basic_sets[0].objects == std::vector<ObjectId>{"b"});
  CHECK(decomposition.basic_sets[0].kind ==
        BasicSet::Kind::critical_singleton);
  CHECK(decomposition.basic_sets[0].index == 0);
  CHECK(decomposition.basic_sets[1].objects == std::vector<ObjectId>{"d"});
  CHECK(decomposition.basic_sets[1].index == 1);
  CHECK(decomposition.chain_recurrent == std::vector<ObjectId>{"b", "d"});
  CHECK(decomposition.gradient_part == std::vector<std::string>{"ac"});
}

TEST_CASE("basic sets of the fence with two vectors") {
  auto fence = fixtures::fence();
  auto decomposition = basic_sets(fence, compute_grading(fence),
                                  field_on(fence, {"ac", "bd"}));
  REQUIRE(decomposition.basic_sets.size() == 1);
  CHECK(decomposition.basic_sets[0].objects ==
        std::vector<ObjectId>{"a", "b", "c", "d"});
  CHECK(decomposition.basic_sets[0].index == 0);
  CHECK(decomposition.gradient_part.empty());
}

TEST_CASE("basic sets partition the chain recurrent set") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto poset = oracles::random_graded_poset(rng, 9, 3);
    auto cat = fixtures::poset(poset.objects, poset.covers);
    auto grading = compute_grading(cat);
    auto fields = oracles::enumerate_poset_fields(cat);
    for (std::size_t i = 0; i < fields.size(); i += 7) {  // sample
      auto field = field_on(cat, fields[i]);
      auto decomposition = basic_sets(cat, grading, field);
      std::vector<ObjectId> collected;
      for (const auto& b : decomposition.basic_sets) {
        REQUIRE_FALSE(b.objects.empty());
        collected.insert(collected.end(), b.objects.begin(),
                         b.objects.end());
      }
      std::sort(collected.begin(), collected.end());
      CHECK(std::adjacent_find(collected.begin(), collected.end()) ==
            collected.end());  // pairwise disjoint
      CHECK(collected == decomposition.chain_recurrent);

      // Recurrent components span exactly two consecutive degrees.
      for (const auto& b : decomposition.basic_sets) {
        if (b.kind != BasicSet::Kind::recurrent) continue;
        CHECK_FALSE(b.mixed_index);
        for (const auto& o : b.objects) {
          CHECK(grading.degree(o) >= b.index);
          CHECK(grading.degree(o) <= b.index + 1);
        }
      }
    }
  }
}

TEST_CASE("path enumeration and components agree on the recurrent set") {
  auto check = [](const LoopFreeCategory& cat,
                  const std::vector<std::string>& vectors) {
    auto field = field_on(cat, vectors);
    auto decomposition = basic_sets(cat, compute_grading(cat), field);
    auto expected = oracles::recurrent_objects_by_paths(cat, field);
    std::set<ObjectId> actual(decomposition.chain_recurrent.begin(),
                              decomposition.chain_recurrent.end());
    CHECK(actual == expected);
  };

  check(fixtures::parallel_pair(), {"u"});
  check(fixtures::fence(), {"ac"});
  check(fixtures::fence(), {"ac", "bd"});
  check(fixtures::fence(), {});

  std::mt19937 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    auto poset = oracles::random_graded_poset(rng, 8, 3);
    auto cat = fixtures::poset(poset.objects, poset.covers);
    for (const auto& vectors : oracles::enumerate_poset_fields(cat))
      check(cat, vectors);
  }
}

TEST_CASE("random fields on parallel-arrow categories stay coherent") {
  // Greedy random fields on layered categories with duplicated covers:
  // exercise condition 3 and parallel-arrow recurrence against the
  // path-enumeration oracle.
  std::mt19937 rng(424242);
  int fields_tried = 0, with_multi_type = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto cat =
        validate_category(oracles::random_layered_category(rng, 8, 3));
    auto grading = compute_grading(cat);
    auto indec = indecomposable_arrows(cat);

    for (int sample = 0; sample < 3; ++sample) {
      std::vector<std::string> order;
      for (const auto& a : indec) order.push_back(a.id);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<std::string> candidate;
      for (const auto& id : order) {
        candidate.push_back(id);
        try {
          validate_vector_field(cat, grading, candidate);
        } catch (const Error&) {
          candidate.pop_back();
        }
      }
      auto field = validate_vector_field(cat, grading, candidate);
      ++fields_tried;
      for (const auto& f : field.vectors) {
        const Arrow& a = cat.arrow(f);
        if (cat.hom_size(a.src, a.tgt) > 1) ++with_multi_type;
      }

      auto decomposition = basic_sets(cat, grading, field);
      auto expected = oracles::recurrent_objects_by_paths(cat, field);
      std::set<ObjectId> actual(decomposition.chain_recurrent.begin(),
                                decomposition.chain_recurrent.end());
      CHECK(actual == expected);
      CHECK(decomposition.vectors_outside_structure.empty());
      for (const auto& b : decomposition.basic_sets)
        if (b.kind == BasicSet::Kind::recurrent) CHECK_FALSE(b.mixed_index);

      // The report pipeline still produces numbers (the filtration may
      // only dead-end on hypothesis-violating inputs, never silently).
      try {
        auto report = generate_report(cat, candidate);
        CHECK(report.inequalities.m.size() == report.inequalities.b.size());
      } catch (const FiltrationStuck&) {
      }
    }
  }
  CHECK(fields_tried == 60);
  CHECK(with_multi_type > 0);
}

TEST_CASE("admissibility verdicts") {
  auto fence = fixtures::fence();
  auto field = field_on(fence, {"ac"});
  auto decomposition = basic_sets(fence, compute_grading(fence), field);
  CHECK(check_admissibility(fence, field, decomposition).admissible);

  // An interval: the punctured neighborhood of the pair is empty, and the
  // empty category is not homologically trivial.
  auto interval = fixtures::interval();
  auto interval_field = field_on(interval, {"xy"});
  auto interval_decomposition =
      basic_sets(interval, compute_grading(interval), interval_field);
  auto verdict =
      check_admissibility(interval, interval_field, interval_decomposition);
  CHECK_FALSE(verdict.admissible);
  CHECK(verdict.failing_arrows == std::vector<std::string>{"xy"});

  // Empty gradient part passes vacuously.
  auto parallel = fixtures::parallel_pair();
  auto parallel_field = field_on(parallel, {"u"});
  auto parallel_decomposition =
      basic_sets(parallel, compute_grading(parallel), parallel_field);
  CHECK(check_admissibility(parallel, parallel_field, parallel_decomposition)
            .admissible);
}

TEST_CASE("cellularity verdicts") {
  CHECK(check_cellular(fixtures::fence(), compute_grading(fixtures::fence()))
            .cellular);

  auto interval = fixtures::interval();
  auto interval_verdict =
      check_cellular(interval, compute_grading(interval));
  CHECK_FALSE(interval_verdict.cellular);
  bool found = false;
  for (const auto& e : interval_verdict.entries)
    if (e.object == "y") {
      found = true;
      CHECK_FALSE(e.ok);
    }
  CHECK(found);

  auto parallel = fixtures::parallel_pair();
  CHECK_FALSE(check_cellular(parallel, compute_grading(parallel)).cellular);

  // Sphere counts: each top of the fence sits over one 0-sphere.
  auto fence_verdict =
      check_cellular(fixtures::fence(), compute_grading(fixtures::fence()));
  for (const auto& e : fence_verdict.entries)
    if (e.object == "c" || e.object == "d") CHECK(e.sphere_count == 1);
}

TEST_CASE("multi-arrow vectors always land inside a basic set") {
  // A vector of a multi-arrow type leaves at least one parallel arrow out
  // of the field (condition 3); in a graded category that arrow is
  // indecomposable too, its reversal closes a 2-cycle, and the vector's
  // endpoints become recurrent.
  auto parallel = fixtures::parallel_pair();
  auto decomposition = basic_sets(parallel, compute_grading(parallel),
                                  field_on(parallel, {"u"}));
  CHECK(decomposition.vectors_outside_structure.empty());

  // The degenerate alternative, an indecomposable arrow parallel to a
  // composite, cannot occur on graded categories: the two parallel arrows
  // would have to jump by 1 and by 2 at once.
  CategoryData raw;
  raw.objects = {"w", "x", "y"};
  raw.arrows = {{"xy", "x", "y"}, {"yw", "y", "w"}, {"xw", "x", "w"},
                {"xw2", "x", "w"}};
  raw.compositions = {{"yw", "xy", "xw"}};
  auto cat = validate_category(raw);
  CHECK_THROWS_AS(compute_grading(cat), NotGraded);
}
