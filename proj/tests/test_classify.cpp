#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "toda/classify.hpp"
#include "toda/graded.hpp"
#include "toda/space.hpp"

using namespace toda::classify;
namespace sp = toda::space;

namespace {

std::vector<FixedSetType> odd_sphere_list(long long n) {
  std::vector<FixedSetType> out;
  out.push_back(FixedSetType{});
  for (long long r = 1; r <= 3 * n; r += 2) out.push_back(FixedSetType::of({comp_sphere(r)}));
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<FixedSetType>& list, const FixedSetType& f) {
  return std::find(list.begin(), list.end(), f) != list.end();
}

}  // namespace

TEST_CASE("component descriptors") {
  CHECK(comp_point().total_rank() == 1);
  CHECK(comp_point().euler() == 1);
  CHECK(comp_sphere(3).total_rank() == 2);
  CHECK(comp_sphere(3).euler() == 0);
  CHECK(comp_sphere(4).euler() == 2);
  CHECK(comp_wedge_spheres({4, 2}).to_string() == "S2vS4");  // dims sort ascending
  CHECK(comp_wedge_spheres({1, 2, 2}).euler() == 2);
  CHECK(comp_p2(2).total_rank() == 3);
  CHECK(comp_p2(2).euler() == 3);
  CHECK(comp_p2_wedge_sphere(2, 6).total_rank() == 4);
  CHECK(comp_p2_wedge_sphere(2, 6).euler() == 4);
  CHECK(comp_p2_wedge_sphere(2, 3).euler() == 2);

  CHECK(comp_point().to_string() == "pt");
  CHECK(comp_sphere(1).to_string() == "S1");
  CHECK(comp_p2(4).to_string() == "P2(4)");
  CHECK(comp_p2_wedge_sphere(2, 4).to_string() == "P2(2)vS4");

  CHECK_THROWS_AS(comp_sphere(0), std::invalid_argument);
  CHECK_THROWS_AS(comp_wedge_spheres({2}), std::invalid_argument);
  CHECK_THROWS_AS(comp_wedge_spheres({1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(comp_p2(0), std::invalid_argument);

  // models evaluate to the advertised ranks; odd P2 degrees have no rational model
  CHECK(toda::graded::total_rank(sp::eval_poincare(comp_p2(2).model())) == 3);
  CHECK_THROWS_AS(comp_p2(3).model(), std::invalid_argument);
}

TEST_CASE("fixed-set types canonicalize") {
  FixedSetType f = FixedSetType::of({comp_sphere(4), comp_point(), comp_sphere(2)});
  CHECK(f.components[0] == comp_point());
  CHECK(f.components[1] == comp_sphere(2));
  CHECK(f.to_string() == "pt u S2 u S4");
  CHECK(f.total_rank() == 5);
  CHECK(FixedSetType{}.to_string() == "empty");
  CHECK(FixedSetType{}.total_rank() == 0);
  CHECK(FixedSetType{}.euler() == 0);
}

TEST_CASE("rank-deficient enumeration matches the odd-sphere list") {
  CHECK(enumerate_fixed_types(3, false) == odd_sphere_list(3));
  CHECK(enumerate_fixed_types(5, false) == odd_sphere_list(5));
  for (long long n = 1; n <= 9; n += 2) CHECK(enumerate_fixed_types(n, false) == odd_sphere_list(n));
}

TEST_CASE("even n admits no rank-deficient fixed set") {
  for (long long n = 2; n <= 10; n += 2) CHECK(enumerate_fixed_types(n, false).empty());
}

TEST_CASE("rank-equality enumeration at n = 2") {
  auto types = enumerate_fixed_types(2, true);
  CHECK(contains(types, FixedSetType::of(
                            {comp_point(), comp_point(), comp_point(), comp_point()})));
  for (long long r : {2, 4, 6})
    CHECK(contains(types, FixedSetType::of({comp_sphere(r), comp_point(), comp_point()})));
  for (long long r : {1, 3, 5})
    CHECK_FALSE(
        contains(types, FixedSetType::of({comp_sphere(r), comp_point(), comp_point()})));
  CHECK(contains(types, FixedSetType::of({comp_p2(2), comp_point()})));
  CHECK(contains(types, FixedSetType::of({comp_wedge_spheres({2, 2, 2})})));
  CHECK_FALSE(contains(types, FixedSetType::of({comp_wedge_spheres({1, 2, 2})})));

  for (const auto& t : types) {
    CHECK(t.total_rank() == 4);
    CHECK(t.euler() == 4);
  }
}

TEST_CASE("rank-equality enumeration at odd n pins parities") {
  auto types = enumerate_fixed_types(3, true);
  for (const auto& t : types) {
    CHECK(t.total_rank() == 4);
    CHECK(t.euler() == 0);
  }
  // two odd spheres
  CHECK(contains(types, FixedSetType::of({comp_sphere(3), comp_sphere(9)})));
  CHECK_FALSE(contains(types, FixedSetType::of({comp_sphere(3), comp_sphere(4)})));
  // three spheres: exactly one even
  CHECK(contains(types, FixedSetType::of({comp_wedge_spheres({2, 3, 3})})));
  CHECK_FALSE(contains(types, FixedSetType::of({comp_wedge_spheres({2, 2, 3})})));
  // no four points (chi would be 4, not 0)
  CHECK_FALSE(contains(types, FixedSetType::of({comp_point(), comp_point(), comp_point(),
                                                comp_point()})));
}

TEST_CASE("theorem reference lists") {
  SUBCASE("n = 2 has exactly one P2-with-point instance") {
    auto ref = theorem_reference_list(2, true);
    int p2pt = 0;
    for (const auto& t : ref) {
      if (t.components.size() == 2 && t.components[0] == comp_point() &&
          t.components[1].kind == ComponentKind::P2)
        ++p2pt;
    }
    CHECK(p2pt == 1);
    CHECK(contains(ref, FixedSetType::of({comp_p2(2), comp_point()})));
  }
  SUBCASE("n = 3 three-sphere wedges carry exactly one even dimension") {
    auto ref = theorem_reference_list(3, true);
    for (const auto& t : ref) {
      if (t.components.size() != 1) continue;
      if (t.components[0].kind != ComponentKind::WedgeSpheres) continue;
      if (t.components[0].params.size() != 3) continue;
      int evens = 0;
      for (long long d : t.components[0].params) evens += d % 2 == 0;
      CHECK(evens == 1);
    }
  }
  SUBCASE("the rank-deficient list is shared between the operations") {
    CHECK(theorem_reference_list(3, false) == enumerate_fixed_types(3, false));
  }
  SUBCASE("even n yields no rank-deficient cases unless read literally") {
    CHECK(theorem_reference_list(2, false).empty());
    CHECK_FALSE(theorem_reference_list(2, false, {}, true).empty());
  }
}

TEST_CASE("enumerator re-derives the theorem lists") {
  for (long long n : {2, 3, 4, 5}) {
    for (bool tnhz : {false, true}) {
      DiffReport diff = compare(enumerate_fixed_types(n, tnhz), theorem_reference_list(n, tnhz));
      CAPTURE(n);
      CAPTURE(tnhz);
      CHECK(diff.empty());
    }
  }
  auto self = enumerate_fixed_types(2, true);
  CHECK(compare(self, self).empty());
}

TEST_CASE("axiom flags apply to both sides symmetrically") {
  SUBCASE("admitting odd P2 degrees") {
    AxiomConfig ax;
    ax.p2_even_only = false;
    auto types = enumerate_fixed_types(3, true, ax);
    CHECK(contains(types, FixedSetType::of({comp_p2_wedge_sphere(1, 1)})));
    CHECK(contains(types, FixedSetType::of({comp_p2_wedge_sphere(3, 9)})));
    CHECK(compare(types, theorem_reference_list(3, true, ax)).empty());
    // the default excludes the odd-degree branch entirely
    CHECK_FALSE(contains(enumerate_fixed_types(3, true), FixedSetType::of(
                             {comp_p2_wedge_sphere(3, 9)})));
  }
  SUBCASE("widening the P2 range to 3n") {
    AxiomConfig ax;
    ax.p2_max_n = false;
    auto types = enumerate_fixed_types(2, true, ax);
    CHECK(contains(types, FixedSetType::of({comp_p2(6), comp_point()})));
    CHECK_FALSE(contains(enumerate_fixed_types(2, true), FixedSetType::of(
                             {comp_p2(6), comp_point()})));
    CHECK(compare(types, theorem_reference_list(2, true, ax)).empty());
  }
}

TEST_CASE("the literal statement differs from the proof-refined list") {
  auto diff = compare(enumerate_fixed_types(3, true),
                      theorem_reference_list(3, true, {}, true));
  CHECK_FALSE(diff.empty());
  CHECK(diff.only_lhs.empty());  // the literal statement is strictly broader
  // mixed parities appear only in the literal reading
  CHECK(contains(diff.only_rhs, FixedSetType::of({comp_sphere(1), comp_sphere(2)})));
}

TEST_CASE("recognition of expressions") {
  CHECK(recognize_component(sp::sphere(3)) == comp_sphere(3));
  CHECK(recognize_component(sp::point()) == comp_point());
  CHECK(recognize_component(sp::ptrunc(2, 2)) == comp_p2(2));
  CHECK(recognize_component(sp::mapping_cone(2, -2)) == comp_p2(2));
  CHECK(recognize_component(sp::mapping_cone(2, 0)) == comp_wedge_spheres({2, 4}));
  CHECK(recognize_component(sp::wedge({sp::ptrunc(2, 2), sp::sphere(4)})) ==
        comp_p2_wedge_sphere(2, 4));
  CHECK(recognize_component(sp::wedge({sp::sphere(2), sp::sphere(2), sp::sphere(2)})) ==
        comp_wedge_spheres({2, 2, 2}));
  CHECK(recognize_component(sp::punctured(sp::product(sp::sphere(2), sp::sphere(5)))) ==
        comp_wedge_spheres({2, 5}));
  CHECK(recognize_component(sp::join(sp::sphere(0), sp::point())) == comp_point());
  CHECK(recognize_component(sp::join(sp::sphere(1), sp::sphere(2))) == comp_sphere(4));

  // the type-(a, b) space itself: squares distinguish the two rank-3 cases
  CHECK(recognize_component(sp::toda_space(2, 1, 0)) == comp_p2_wedge_sphere(2, 6));
  CHECK(recognize_component(sp::toda_space(2, 0, 0)) == comp_wedge_spheres({2, 4, 6}));

  CHECK_THROWS_AS(recognize_component(sp::wedge(
                      {sp::sphere(1), sp::sphere(1), sp::sphere(1), sp::sphere(1)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(recognize_component(sp::sphere(0)), std::invalid_argument);
}

TEST_CASE("fixed-set types from expressions") {
  CHECK(to_fixed_set_type(sp::empty_space()) == FixedSetType{});
  CHECK(to_fixed_set_type(sp::disjoint_union({sp::sphere(2), sp::point(), sp::point()})) ==
        FixedSetType::of({comp_sphere(2), comp_point(), comp_point()}));
  CHECK(to_fixed_set_type(sp::sphere(0)) == FixedSetType::of({comp_point(), comp_point()}));
}

TEST_CASE("emitted types are internally consistent and round-trip") {
  auto check_list = [](const std::vector<FixedSetType>& types, long long expected_chi) {
    for (const auto& t : types) {
      std::string label = t.to_string();
      CAPTURE(label);
      CHECK(t.euler() == expected_chi);
      sp::SpaceExpr model = t.model();
      auto p = sp::eval_poincare(model);
      CHECK(toda::graded::total_rank(p) == t.total_rank());
      CHECK(toda::graded::euler_char(p) == t.euler());
      CHECK(to_fixed_set_type(model) == t);
    }
  };
  check_list(enumerate_fixed_types(2, true), 4);
  check_list(enumerate_fixed_types(3, true), 0);
  check_list(enumerate_fixed_types(3, false), 0);
}
