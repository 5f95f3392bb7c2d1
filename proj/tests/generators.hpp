#pragma once

// Deterministic random generators for property tests: space expressions in
// the oracle fragment (Point/Sphere/Wedge/Join/Susp) and action expressions
// over the full combinator set. The generators resample on invalid
// constructions (e.g. gluing a wedge at an empty fixed set); consistency
// violations inside report() are logic_error and must escape to the test.

#include <stdexcept>
#include <vector>

#include "toda/degree.hpp"
#include "toda/equivariant.hpp"
#include "toda/space.hpp"

namespace testgen {

using toda::degree::CounterRng;
using toda::equivariant::ActionExpr;
using toda::space::SpaceExpr;

inline long long pick(CounterRng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng.next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random expression in the oracle fragment. `need_connected` restricts the
/// output to connected expressions (wedge summands). Depth counts leaves as 1.
inline SpaceExpr random_oracle_expr(CounterRng& rng, int depth_budget,
                                    bool need_connected = false) {
  using toda::space::join;
  using toda::space::point;
  using toda::space::sphere;
  using toda::space::susp;
  using toda::space::wedge;
  if (depth_budget <= 1) {
    long long roll = pick(rng, 0, 5);
    if (roll == 0) return point();
    long long k = pick(rng, need_connected ? 1 : 0, 4);
    return sphere(k);
  }
  switch (pick(rng, 0, 3)) {
    case 0: {  // leaf anyway, keeps depth distribution varied
      return random_oracle_expr(rng, 1, need_connected);
    }
    case 1: {
      std::vector<SpaceExpr> parts;
      long long count = pick(rng, 2, 3);
      for (long long i = 0; i < count; ++i)
        parts.push_back(random_oracle_expr(rng, depth_budget - 1, true));
      return wedge(std::move(parts));
    }
    case 2:
      // joins are never empty here (the fragment has no empty space), and a
      // join of nonempty spaces is connected
      return join(random_oracle_expr(rng, depth_budget - 1),
                  random_oracle_expr(rng, depth_budget - 1));
    default: return susp(random_oracle_expr(rng, depth_budget - 1));
  }
}

/// Random payload spaces for trivial actions: a mix of connected and
/// disconnected, puncturable and not.
inline SpaceExpr random_payload(CounterRng& rng) {
  using namespace toda::space;
  switch (pick(rng, 0, 9)) {
    case 0: return point();
    case 1: return sphere(0);
    case 2: return sphere(pick(rng, 1, 6));
    case 3: return toda_space(2, pick(rng, 0, 2), pick(rng, 0, 2));
    case 4: return toda_space(3, 0, pick(rng, 0, 2));
    case 5: return mapping_cone(2, -2);
    case 6: return ptrunc(2, 2);
    case 7: return product(sphere(2), sphere(pick(rng, 1, 5)));
    case 8: return wedge({sphere(2), sphere(4)});
    default: return points(pick(rng, 2, 4));
  }
}

/// One candidate action tree; may be invalid (the caller resamples).
inline ActionExpr random_action_candidate(CounterRng& rng, int depth_budget) {
  using namespace toda::equivariant;
  if (depth_budget <= 1) {
    switch (pick(rng, 0, 4)) {
      case 0: return act_trivial(random_payload(rng));
      case 1: return act_rotation(2 * pick(rng, 0, 3) + 1);
      case 2: {
        long long n = 2 * pick(rng, 1, 2);
        return act_cone(n, 2 * pick(rng, 0, static_cast<int>(n / 2)));
      }
      case 3: return act_mult_cone(std::vector<long long>{2, 4, 8}[static_cast<std::size_t>(
                  pick(rng, 0, 2))]);
      default: return act_bundle(2 * pick(rng, 1, 2) + 1);
    }
  }
  switch (pick(rng, 0, 4)) {
    case 0: return random_action_candidate(rng, 1);
    case 1: return act_susp(random_action_candidate(rng, depth_budget - 1));
    case 2:
      return act_join(random_action_candidate(rng, depth_budget - 1),
                      random_action_candidate(rng, depth_budget - 1));
    case 3: {
      std::vector<ActionExpr> parts;
      long long count = pick(rng, 2, 3);
      for (long long i = 0; i < count; ++i)
        parts.push_back(random_action_candidate(rng, depth_budget - 1));
      return act_wedge(std::move(parts));
    }
    default: {
      if (pick(rng, 0, 1) == 0) return act_puncture(act_bundle(2 * pick(rng, 1, 2) + 1));
      SpaceExpr payload = random_payload(rng);
      if (!toda::space::is_puncturable(payload) || toda::space::is_empty(payload))
        payload = toda::space::sphere(2);
      return act_puncture(act_trivial(payload));
    }
  }
}

/// Random action expression that evaluates cleanly: construction- or
/// evaluation-level invalid_argument triggers a resample (cap overruns,
/// wedges glued at empty fixed sets); anything else propagates.
inline ActionExpr random_action_expr(CounterRng& rng, int depth_budget) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      ActionExpr a = random_action_candidate(rng, depth_budget);
      toda::equivariant::report(a);  // rejects ill-formed trees, checks invariants
      return a;
    } catch (const std::invalid_argument&) {
      continue;
    } catch (const std::overflow_error&) {
      continue;
    }
  }
  throw std::runtime_error("random_action_expr: generator failed to converge");
}

/// Random space expression over the full grammar, for printer round-trips.
inline SpaceExpr random_space_expr(CounterRng& rng, int depth_budget) {
  using namespace toda::space;
  if (depth_budget <= 1) {
    switch (pick(rng, 0, 7)) {
      case 0: return point();
      case 1: return empty_space();
      case 2: return sphere(pick(rng, 0, 8));
      case 3: return ptrunc(pick(rng, 1, 3), 2);
      case 4: return toda_space(2, pick(rng, -2, 2), pick(rng, -2, 2));
      case 5: return toda_space(3, 0, pick(rng, -2, 2));
      case 6: return mapping_cone(2, pick(rng, -2, 2));
      default: return mapping_cone(3, 0);
    }
  }
  for (int attempt = 0; attempt < 100; ++attempt) {
    try {
      switch (pick(rng, 0, 5)) {
        case 0: return random_space_expr(rng, 1);
        case 1: {
          std::vector<SpaceExpr> parts;
          long long count = pick(rng, 2, 3);
          for (long long i = 0; i < count; ++i)
            parts.push_back(random_space_expr(rng, depth_budget - 1));
          return wedge(std::move(parts));
        }
        case 2:
          return join(random_space_expr(rng, depth_budget - 1),
                      random_space_expr(rng, depth_budget - 1));
        case 3: return susp(random_space_expr(rng, depth_budget - 1));
        case 4:
          return product(random_space_expr(rng, depth_budget - 1),
                         random_space_expr(rng, depth_budget - 1));
        default: {
          std::vector<SpaceExpr> parts;
          long long count = pick(rng, 2, 3);
          for (long long i = 0; i < count; ++i)
            parts.push_back(random_space_expr(rng, depth_budget - 1));
          return disjoint_union(std::move(parts));
        }
      }
    } catch (const std::invalid_argument&) {
      continue;  // e.g. a disconnected wedge summand; try again
    }
  }
  return point();
}

}  // namespace testgen
