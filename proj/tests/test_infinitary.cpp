#include "connectoid/infinitary.hpp"
#include "connectoid/normal_tree.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace connectoid;

namespace {

Instance fixture(const char* name) { return Instance(make_presented(name)); }

NecklaceWitness integer_ray(long step) {
  return path_necklace([step](std::size_t i) { return std::to_string(step * static_cast<long>(i)); }, 6);
}

std::string cell(long i, long j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

TEST_CASE("presented fixtures") {
  auto ray = make_presented("double-ray");
  CHECK(ray->element(0) == "0");
  CHECK(ray->element(1) == "1");
  CHECK(ray->element(2) == "-1");
  CHECK(ray->bonds("3").size() == 2);
  auto grid = make_presented("grid");
  CHECK(grid->contains("(0,0)"));
  CHECK(grid->bonds("(0,0)").size() == 2);
  auto tree = make_presented("binary-tree");
  CHECK(tree->bonds("r").size() == 2);
  CHECK(tree->bonds("r01").size() == 3);
  CHECK_THROWS_AS(make_presented("nope"), Error);
}

TEST_CASE("verify_necklace_prefix") {
  auto inst = fixture("double-ray");
  NecklaceWitness good;
  for (int n = 1; n <= 5; ++n)
    good.beads.push_back({std::to_string(2 * n - 2), std::to_string(2 * n - 1), std::to_string(2 * n)});
  CHECK(verify_necklace_prefix(inst, good).valid);

  NecklaceWitness apart{{{"0", "1"}, {"5", "6"}}, {}};
  CHECK_FALSE(verify_necklace_prefix(inst, apart).valid);

  NecklaceWitness skip{{{"0", "1"}, {"1", "2"}, {"1", "5"}}, {}};
  CHECK_FALSE(verify_necklace_prefix(inst, skip).valid);
}

TEST_CASE("necklace_tail") {
  auto inst = fixture("double-ray");
  auto w = integer_ray(1);
  auto tail = necklace_tail(inst, w, {"2"});
  CHECK(verify_necklace_prefix(inst, extend_prefix(tail, 6)).valid);
  for (const auto& bead : tail.beads) CHECK(std::find(bead.begin(), bead.end(), "2") == bead.end());
  auto same = necklace_tail(inst, w, {});
  CHECK(same.beads == w.beads);

  NecklaceWitness finite{{{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}}, {}};
  try {
    necklace_tail(inst, finite, {"0", "1", "2", "3", "4", "5"});
    FAIL("expected DepthExhausted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDepthExhausted);
  }
}

TEST_CASE("converges_to_bounded") {
  auto inst = fixture("double-ray");
  Names up;
  for (int i = 1; i <= 30; ++i) up.push_back(std::to_string(i));
  CHECK(converges_to_bounded(inst, up, false, 5).converges);
  Names alternating;
  for (int i = 1; i <= 30; ++i) {
    alternating.push_back(std::to_string(i));
    alternating.push_back(std::to_string(-i));
  }
  auto split = converges_to_bounded(inst, alternating, false, 2);
  CHECK_FALSE(split.converges);
  CHECK(split.separator == Names{"0"});
  CHECK(converges_to_bounded(inst, {"1", "-1"}, true, 3).converges);
}

TEST_CASE("end_shadows") {
  CHECK(end_shadows(fixture("double-ray"), {"0"}, 10).size() == 2);
  CHECK(end_shadows(fixture("grid"), {"(0,0)"}, 10).size() == 1);
  CHECK(end_shadows(fixture("binary-tree"), {"r"}, 1).size() == 2);
  CHECK(end_shadows(fixture("binary-tree"), {"r"}, 5).size() == 2);
  CHECK(end_shadows(Instance(fixtures::p3()), {"b"}, 3).empty());
}

TEST_CASE("same_end_bounded") {
  auto ray = fixture("double-ray");
  auto r = same_end_bounded(ray, integer_ray(1), integer_ray(-1), 1);
  CHECK(r.distinguished);
  CHECK(r.separator == Names{"0"});
  auto w = integer_ray(1);
  CHECK_FALSE(same_end_bounded(ray, w, necklace_tail(ray, w, {"3"}), 4).distinguished);

  auto grid = fixture("grid");
  auto row = path_necklace([](std::size_t i) { return cell(static_cast<long>(i), 0); }, 6);
  auto col = path_necklace([](std::size_t i) { return cell(0, static_cast<long>(i)); }, 6);
  CHECK_FALSE(same_end_bounded(grid, row, col, 6).distinguished);
}

TEST_CASE("dispersedness_probe") {
  auto ray = fixture("double-ray");
  auto even = dispersedness_probe(ray, named_targets("even"), 10);
  REQUIRE(even.counterexample);
  CHECK(even.hits >= 10);
  CHECK(verify_necklace_prefix(ray, *even.witness).valid);
  CHECK_FALSE(dispersedness_probe(ray, named_targets("list:0"), 10).counterexample);
  CHECK_FALSE(dispersedness_probe(Instance(fixtures::p3()), named_targets("all"), 10).counterexample);
}

TEST_CASE("named_targets") {
  auto even = named_targets("even");
  CHECK(even.contains("-4"));
  CHECK_FALSE(even.contains("3"));
  CHECK(even.contains("(1,1)"));
  auto list = named_targets("list:(0,1);(2,2)");
  CHECK(list.contains("(0,1)"));
  CHECK(list.members->size() == 2);
  CHECK_THROWS_AS(named_targets("bogus"), Error);
}

TEST_CASE("is_normal_bounded") {
  CHECK(is_normal_bounded(Instance(fixtures::p3()), "a", {{"b", "a"}, {"c", "b"}}, 5).verdict ==
        NormalVerdict::kNormal);
  CHECK(is_normal_bounded(Instance(fixtures::k3()), "a", {{"b", "a"}, {"c", "a"}}, 5).verdict ==
        NormalVerdict::kNotWeakNormal);
  std::vector<std::pair<std::string, std::string>> half;
  for (int i = 1; i <= 12; ++i) half.emplace_back(std::to_string(i), std::to_string(i - 1));
  auto r = is_normal_bounded(fixture("double-ray"), "0", half, 10);
  CHECK(r.verdict == NormalVerdict::kNormal);
}

TEST_CASE("bounded layered rounds on the grid") {
  auto run = layered_normal_tree_presented(make_presented("grid"), "(0,0)", 4);
  const auto& rounds = run.result.state.rounds;
  CHECK(rounds.size() == 4);
  for (const auto& t : rounds) CHECK(is_weak_normal(run.window.connectoid, t).weak_normal);
}

TEST_CASE("bounded_adhesion") {
  auto grid = fixture("grid");
  auto r = bounded_adhesion(grid, named_targets("column:0"), "(1,0)", 3, 6);
  CHECK_FALSE(r.separator.has_value());
  auto k = fixtures::p3();
  auto finite = bounded_adhesion(Instance(k), named_targets("list:a;b"), "c", 2, 3);
  REQUIRE(finite.separator.has_value());
  CHECK(*finite.separator == Names{"b"});
}
