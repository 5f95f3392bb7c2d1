#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "generators.hpp"
#include "toda/chains.hpp"
#include "toda/dsl.hpp"
#include "toda/graded.hpp"
#include "toda/space.hpp"

using namespace toda::chains;
namespace sp = toda::space;
using toda::graded::make_reduced;

namespace {

using Betti = std::map<int, long long>;

// unreduced chi from reduced Betti numbers of a nonempty complex
long long chi_from_betti(const Betti& betti) {
  long long chi = 1;
  for (const auto& [d, r] : betti) chi += (d % 2 == 0) ? r : -r;
  return chi;
}

SimplicialComplex random_complex(std::mt19937& rng) {
  std::uniform_int_distribution<int> vertex_count(1, 5);
  std::uniform_int_distribution<int> simplex_count(1, 6);
  int nv = vertex_count(rng);
  std::uniform_int_distribution<int> vertex(0, nv - 1);
  SimplicialComplex K;
  int ns = simplex_count(rng);
  for (int i = 0; i < ns; ++i) {
    std::uniform_int_distribution<int> size(1, nv);
    int m = size(rng);
    std::vector<int> simplex;
    for (int j = 0; j < m; ++j) {
      int v = vertex(rng);
      bool dup = false;
      for (int u : simplex) dup = dup || u == v;
      if (!dup) simplex.push_back(v);
    }
    insert_closed(K, simplex);
  }
  return K;
}

}  // namespace

TEST_CASE("sphere complexes") {
  CHECK(sphere_complex(0).vertex_set().size() == 2);
  CHECK(rational_homology(sphere_complex(0)) == Betti{{0, 1}});
  CHECK(rational_homology(sphere_complex(1)) == Betti{{1, 1}});
  CHECK(rational_homology(sphere_complex(2)) == Betti{{2, 1}});
  CHECK(rational_homology(sphere_complex(3)) == Betti{{3, 1}});
  CHECK_THROWS_AS(sphere_complex(-1), std::invalid_argument);
  CHECK_THROWS_AS(sphere_complex(kSphereDimCap + 1), std::invalid_argument);
}

TEST_CASE("joins of complexes") {
  SimplicialComplex square = join_complex(sphere_complex(0), sphere_complex(0));
  CHECK(square.vertex_set().size() == 4);
  CHECK(square.dim() == 1);
  CHECK(rational_homology(square) == Betti{{1, 1}});

  // cone over anything is contractible
  CHECK(rational_homology(join_complex(point_complex(), sphere_complex(2))).empty());
  CHECK(rational_homology(join_complex(sphere_complex(3), point_complex())).empty());

  CHECK(rational_homology(join_complex(sphere_complex(1), sphere_complex(1))) ==
        Betti{{3, 1}});

  // double suspension of S^0
  CHECK(rational_homology(
            join_complex(sphere_complex(0),
                         join_complex(sphere_complex(0), sphere_complex(0)))) ==
        Betti{{2, 1}});

  SUBCASE("an empty factor is the identity") {
    SimplicialComplex empty;
    CHECK(join_complex(empty, sphere_complex(2)).simplices ==
          sphere_complex(2).simplices);
    CHECK(join_complex(sphere_complex(2), empty).simplices ==
          sphere_complex(2).simplices);
  }
}

TEST_CASE("wedges of complexes") {
  CHECK(rational_homology(wedge_complex(sphere_complex(1), sphere_complex(1), 0, 0)) ==
        Betti{{1, 2}});
  CHECK(rational_homology(wedge_complex(sphere_complex(1), sphere_complex(2), 0, 0)) ==
        Betti{{1, 1}, {2, 1}});
  CHECK(rational_homology(wedge_complex(point_complex(), sphere_complex(2), 0, 0)) ==
        Betti{{2, 1}});
  CHECK_THROWS_AS(wedge_complex(sphere_complex(1), sphere_complex(1), 9, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(wedge_complex(sphere_complex(1), sphere_complex(1), 0, 9),
                  std::invalid_argument);
}

TEST_CASE("homology corner cases") {
  CHECK(rational_homology(SimplicialComplex{}) == Betti{{-1, 1}});
  SimplicialComplex two_points;
  two_points.simplices.insert({0});
  two_points.simplices.insert({5});
  CHECK(rational_homology(two_points) == Betti{{0, 1}});
  CHECK(rational_homology(disjoint_union_complex(sphere_complex(1), point_complex())) ==
        Betti{{0, 1}, {1, 1}});
}

TEST_CASE("boundary matrix structure") {
  SimplicialComplex tri = sphere_complex(1);
  auto d0 = boundary_matrix(tri, 0);
  REQUIRE(d0.size() == 3);  // one augmentation column per vertex
  for (const auto& col : d0) CHECK(col == SparseColumn{{0, Int(1)}});
  auto d1 = boundary_matrix(tri, 1);
  CHECK(d1.size() == 3);
  CHECK(rank_of(d1) == 2);
  CHECK(rank_of(d0) == 1);
  CHECK_THROWS_AS(boundary_matrix(tri, -1), std::invalid_argument);
}

TEST_CASE("structural invariants of generated complexes") {
  std::vector<SimplicialComplex> zoo = {
      point_complex(),
      sphere_complex(0),
      sphere_complex(1),
      sphere_complex(2),
      sphere_complex(3),
      join_complex(sphere_complex(0), sphere_complex(1)),
      join_complex(sphere_complex(1), sphere_complex(1)),
      wedge_complex(sphere_complex(1), sphere_complex(2), 0, 0),
      disjoint_union_complex(sphere_complex(1), sphere_complex(0)),
  };
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) zoo.push_back(random_complex(rng));

  for (const auto& K : zoo) {
    std::string listing = dump(K);
    CAPTURE(listing);
    CHECK(is_face_closed(K));
    CHECK(boundary_squared_is_zero(K));
    CHECK(euler_from_counts(K) == chi_from_betti(rational_homology(K)));
  }
}

TEST_CASE("insert_closed and relabel") {
  SimplicialComplex K;
  insert_closed(K, {3, 1, 2});
  CHECK(K.simplices.size() == 7);
  CHECK(is_face_closed(K));
  CHECK_THROWS_AS(insert_closed(K, {1, 1}), std::invalid_argument);

  auto shifted = shift_away(K, 10);
  CHECK(shifted.vertex_set() == std::set<int>{10, 11, 12});
  CHECK_THROWS_AS(relabel(K, {{1, 0}, {2, 0}, {3, 5}}), std::invalid_argument);
}

TEST_CASE("join homology agrees with the polynomial join rule") {
  std::mt19937 rng(2025);
  int performed = 0;
  while (performed < 120) {
    SimplicialComplex A = random_complex(rng);
    SimplicialComplex B = random_complex(rng);
    SimplicialComplex J;
    try {
      J = join_complex(A, B);
    } catch (const std::invalid_argument&) {
      continue;  // cap overrun; resample
    }
    ++performed;
    auto pj = toda::graded::join_poly(make_reduced(rational_homology(A)),
                                      make_reduced(rational_homology(B)));
    Betti expected;
    for (const auto& [d, r] : pj.ranks) expected[d] = r;
    CHECK(rational_homology(J) == expected);
  }
}

TEST_CASE("oracle on the documented examples") {
  auto check_match = [](const sp::SpaceExpr& e, const Betti& expected) {
    OracleVerdict v = oracle_check(e);
    CHECK(v.match);
    CHECK(v.chain_ranks == expected);
    CHECK(v.graded_ranks == expected);
  };
  check_match(sp::susp(sp::sphere(1)), Betti{{2, 1}});
  check_match(sp::wedge({sp::sphere(2), sp::sphere(4)}), Betti{{2, 1}, {4, 1}});
  check_match(sp::join(sp::sphere(1), sp::sphere(2)), Betti{{4, 1}});
  check_match(sp::point(), Betti{});
  check_match(sp::join(sp::point(), sp::sphere(3)), Betti{});
  check_match(sp::sphere(0), Betti{{0, 1}});
}

TEST_CASE("oracle input restrictions") {
  CHECK_THROWS_AS(oracle_check(sp::sphere(kOracleSphereCap + 1)), std::invalid_argument);
  CHECK_THROWS_AS(oracle_check(sp::toda_space(2, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(oracle_check(sp::product(sp::sphere(1), sp::sphere(1))),
                  std::invalid_argument);
  // depth 4 exceeds the cap
  CHECK_THROWS_AS(oracle_check(sp::susp(sp::susp(sp::susp(sp::sphere(1))))),
                  std::invalid_argument);
  CHECK(expr_depth(sp::sphere(3)) == 1);
  CHECK(expr_depth(sp::susp(sp::sphere(3))) == 2);
}

TEST_CASE("oracle agrees on random expressions") {
  toda::degree::CounterRng rng(424242, 17);
  int performed = 0;
  while (performed < 40) {
    sp::SpaceExpr e = testgen::random_oracle_expr(rng, 3);
    try {
      OracleVerdict v = oracle_check(e);
      std::string text = toda::dsl::to_dsl(e);
      CAPTURE(text);
      CHECK(v.match);
      ++performed;
    } catch (const std::invalid_argument&) {
      continue;  // model exceeds a size cap; resample
    }
  }
}
