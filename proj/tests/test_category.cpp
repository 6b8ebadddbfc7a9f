#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "morsecat/category.hpp"

using namespace morsecat;

TEST_CASE("validate_category accepts the fixtures") {
  CHECK(fixtures::empty_category().empty());
  CHECK(fixtures::point().objects() == std::vector<ObjectId>{"p"});
  CHECK(fixtures::chain2().arrows().size() == 3);
  CHECK(fixtures::fence().arrows().size() == 4);
  CHECK(fixtures::parallel_pair().arrows().size() == 2);
}

TEST_CASE("validate_category rejects a directed cycle with a witness") {
  CategoryData raw;
  raw.objects = {"x", "y"};
  raw.arrows = {{"xy", "x", "y"}, {"yx", "y", "x"}};
  try {
    validate_category(raw);
    FAIL("expected CyclicCategory");
  } catch (const CyclicCategory& e) {
    CHECK(e.cycle.size() == 2);
  }
}

TEST_CASE("validate_category rejects a self arrow") {
  CategoryData raw;
  raw.objects = {"x"};
  raw.arrows = {{"loop", "x", "x"}};
  CHECK_THROWS_AS(validate_category(raw), CyclicCategory);
}

TEST_CASE("validate_category demands composition entries") {
  CategoryData raw;
  raw.objects = {"x", "y", "z"};
  raw.arrows = {{"xy", "x", "y"}, {"yz", "y", "z"}, {"xz", "x", "z"}};
  try {
    validate_category(raw);
    FAIL("expected MissingComposition");
  } catch (const MissingComposition& e) {
    CHECK(e.g == "yz");
    CHECK(e.f == "xy");
  }
}

TEST_CASE("validate_category checks composite endpoints") {
  CategoryData raw;
  raw.objects = {"x", "y", "z", "q"};
  raw.arrows = {{"xy", "x", "y"},
                {"yz", "y", "z"},
                {"xz", "x", "z"},
                {"xq", "x", "q"}};
  raw.compositions = {{"yz", "xy", "xq"}};  // wrong target
  CHECK_THROWS_AS(validate_category(raw), BadEndpoints);
}

TEST_CASE("validate_category rejects non-associative tables") {
  // Chain of three arrows with two parallel candidates for the triple
  // composite; the table sends the two bracketings to different arrows.
  CategoryData raw;
  raw.objects = {"o0", "o1", "o2", "o3"};
  raw.arrows = {{"a", "o0", "o1"},   {"b", "o1", "o2"},  {"c", "o2", "o3"},
                {"ab", "o0", "o2"},  {"bc", "o1", "o3"}, {"t1", "o0", "o3"},
                {"t2", "o0", "o3"}};
  raw.compositions = {{"b", "a", "ab"},
                      {"c", "b", "bc"},
                      {"c", "ab", "t1"},
                      {"bc", "a", "t2"}};
  try {
    validate_category(raw);
    FAIL("expected NonAssociative");
  } catch (const NonAssociative& e) {
    CHECK(e.h == "c");
    CHECK(e.g == "b");
    CHECK(e.f == "a");
  }
}

TEST_CASE("duplicate and dangling identifiers are rejected") {
  CategoryData dup;
  dup.objects = {"x", "x"};
  CHECK_THROWS_AS(validate_category(dup), DuplicateId);

  CategoryData dangle;
  dangle.objects = {"x", "y"};
  dangle.arrows = {{"xy", "x", "y"}};
  dangle.compositions = {{"xy", "nope", "xy"}};
  CHECK_THROWS_AS(validate_category(dangle), DanglingReference);
}

TEST_CASE("indecomposable arrows exclude composition values") {
  auto ids = [](const std::vector<Arrow>& arrows) {
    std::vector<std::string> out;
    for (const auto& a : arrows) out.push_back(a.id);
    return out;
  };
  CHECK(ids(indecomposable_arrows(fixtures::chain2())) ==
        std::vector<std::string>{"xy", "yz"});
  CHECK(ids(indecomposable_arrows(fixtures::fence())) ==
        std::vector<std::string>{"ac", "ad", "bc", "bd"});
  CHECK(ids(indecomposable_arrows(fixtures::parallel_pair())) ==
        std::vector<std::string>{"u", "v"});
}

TEST_CASE("every arrow factors through indecomposables") {
  // On fixtures: grow the set of reachable arrows from indecomposables by
  // closing under composition; it must cover all arrows.
  for (const auto& cat : {fixtures::chain2(), fixtures::fence(),
                          fixtures::skip_level()}) {
    std::set<std::string> generated;
    for (const auto& a : indecomposable_arrows(cat)) generated.insert(a.id);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& [pair, h] : cat.compositions()) {
        if (generated.count(pair.first) && generated.count(pair.second) &&
            generated.insert(h).second)
          grew = true;
      }
    }
    CHECK(generated.size() == cat.arrows().size());
  }
}

TEST_CASE("extremal objects") {
  auto fence = extremal_objects(fixtures::fence());
  CHECK(fence.minimal == std::vector<ObjectId>{"a", "b"});
  CHECK(fence.maximal == std::vector<ObjectId>{"c", "d"});

  auto pt = extremal_objects(fixtures::point());
  CHECK(pt.minimal == std::vector<ObjectId>{"p"});
  CHECK(pt.maximal == std::vector<ObjectId>{"p"});

  auto chain = extremal_objects(fixtures::chain2());
  CHECK(chain.minimal == std::vector<ObjectId>{"x"});
  CHECK(chain.maximal == std::vector<ObjectId>{"z"});
}

TEST_CASE("full subcategory keeps composites and stays valid") {
  auto fence = full_subcategory(fixtures::fence(), {"a", "b", "c"});
  CHECK(fence.objects().size() == 3);
  CHECK(fence.arrows().size() == 2);

  auto chain = full_subcategory(fixtures::chain2(), {"x", "z"});
  CHECK(chain.arrows().size() == 1);
  CHECK(chain.arrow("xz").src == "x");

  CHECK(full_subcategory(fixtures::fence(), {}).empty());
  CHECK_THROWS_AS(full_subcategory(fixtures::fence(), {"nope"}),
                  UnknownObject);
}

TEST_CASE("under categories") {
  auto fence_c = under_category(fixtures::fence(), "c", true);
  CHECK(fence_c.objects() == std::vector<ObjectId>{"a", "b"});
  CHECK(fence_c.arrows().empty());

  auto pa_y = under_category(fixtures::parallel_pair(), "y", true);
  CHECK(pa_y.objects() == std::vector<ObjectId>{"x"});

  auto chain_z = under_category(fixtures::chain2(), "z", true);
  CHECK(chain_z.objects() == std::vector<ObjectId>{"x", "y"});
  CHECK(chain_z.arrows().size() == 1);

  CHECK_THROWS_AS(under_category(fixtures::fence(), "nope", true),
                  UnknownObject);
}

TEST_CASE("unpunctured under category has its center as sole maximum") {
  for (const auto& cat : {fixtures::fence(), fixtures::chain2(),
                          fixtures::parallel_pair()}) {
    for (const auto& c : cat.objects()) {
      auto under = under_category(cat, c, false);
      auto extremal = extremal_objects(under);
      REQUIRE(extremal.maximal.size() == 1);
      CHECK(extremal.maximal.front() == c);
      for (const auto& o : under.objects())
        if (o != c) CHECK(under.hom_size(o, c) >= 1);
    }
  }

  // On posets the maximum is genuinely terminal: exactly one arrow in.
  for (const auto& cat : {fixtures::fence(), fixtures::chain2()}) {
    for (const auto& c : cat.objects()) {
      auto under = under_category(cat, c, false);
      for (const auto& o : under.objects())
        if (o != c) CHECK(under.hom_size(o, c) == 1);
    }
  }
}

TEST_CASE("grading on the fixtures") {
  auto fence = compute_grading(fixtures::fence());
  CHECK(fence.degree("a") == 0);
  CHECK(fence.degree("b") == 0);
  CHECK(fence.degree("c") == 1);
  CHECK(fence.degree("d") == 1);

  auto chain = compute_grading(fixtures::chain2());
  CHECK(chain.degree("x") == 0);
  CHECK(chain.degree("y") == 1);
  CHECK(chain.degree("z") == 2);
}

TEST_CASE("grading rejects an indecomposable arrow skipping a level") {
  // Longest-path degrees put w two levels above x, so the extra arrow
  // running parallel to the composite jumps by 2.
  try {
    compute_grading(fixtures::skip_level());
    FAIL("expected NotGraded");
  } catch (const NotGraded& e) {
    CHECK(e.arrow == "xw2");
    CHECK(e.jump == 2);
  }
}

TEST_CASE("minimal objects are exactly the degree-zero objects") {
  for (const auto& cat : {fixtures::fence(), fixtures::chain2(),
                          fixtures::parallel_pair(), fixtures::point()}) {
    auto grading = compute_grading(cat);
    auto extremal = extremal_objects(cat);
    for (const auto& o : cat.objects()) {
      const bool is_minimal =
          std::find(extremal.minimal.begin(), extremal.minimal.end(), o) !=
          extremal.minimal.end();
      CHECK(is_minimal == (grading.degree(o) == 0));
    }
  }
}

TEST_CASE("full subcategories of valid categories validate") {
  // Closure under fullness: restricting to any object subset must succeed.
  auto cat = fixtures::skip_level();
  const auto& objects = cat.objects();
  for (std::size_t mask = 0; mask < (1u << objects.size()); ++mask) {
    std::set<ObjectId> keep;
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (mask & (1u << i)) keep.insert(objects[i]);
    CHECK_NOTHROW(full_subcategory(cat, keep));
  }
}
