#pragma once

// Circle-action expressions and their fixed-point calculus. Composite nodes
// (suspension, join, wedge, puncture) compute fixed sets by rule; the
// declared primitives (ConeA, MultConeA, BundleA) carry their fixed sets as
// axioms, and the report checker verifies every action against the rank
// inequality and the Euler-characteristic equality.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toda/classify.hpp"
#include "toda/graded.hpp"
#include "toda/space.hpp"

namespace toda::equivariant {

using space::SpaceExpr;

enum class ActionKind {
  Trivial,       // payload space, every point fixed
  FreeRotation,  // p1 = odd k: scalar rotation on S^k, no fixed points
  SuspA,         // suspension of the child action; the two poles are fixed
  JoinA,         // join of two actions
  WedgeA,        // children glued at chosen fixed points
  ConeA,         // p1 = even n, p2 = even k <= n: linear-block action on the
                 // Hopf-(-2) cone, fixed cone of the same shape at k (three
                 // points at k = 0)
  MultConeA,     // p1 = n in {2,4,8}: action on the Hopf-(+1) cone of the
                 // unit-algebra multiplication
  BundleA,       // p1 = odd n >= 3: bundle action on S^2 x S^{n+2} fixing S^3
  Puncture       // remove one fixed point from the child
};

struct ActionExpr {
  ActionKind kind = ActionKind::Trivial;
  SpaceExpr payload;  // Trivial only
  long long p1 = 0, p2 = 0;
  std::vector<ActionExpr> children;
  std::vector<std::size_t> basepoints;  // WedgeA: fixed-set component index per child

  bool operator==(const ActionExpr& other) const {
    return kind == other.kind && payload == other.payload && p1 == other.p1 &&
           p2 == other.p2 && children == other.children && basepoints == other.basepoints;
  }
  bool operator!=(const ActionExpr& other) const { return !(*this == other); }
};

// --- factories ---------------------------------------------------------------

inline ActionExpr act_trivial(SpaceExpr x) {
  ActionExpr a{ActionKind::Trivial};
  a.payload = std::move(x);
  return a;
}

inline ActionExpr act_rotation(long long k) {
  if (k < 1 || k % 2 == 0)
    throw std::invalid_argument("free rotation: requires an odd sphere dimension");
  ActionExpr a{ActionKind::FreeRotation};
  a.p1 = k;
  return a;
}

inline ActionExpr act_susp(ActionExpr child) {
  ActionExpr a{ActionKind::SuspA};
  a.children.push_back(std::move(child));
  return a;
}

inline ActionExpr act_join(ActionExpr left, ActionExpr right) {
  ActionExpr a{ActionKind::JoinA};
  a.children.push_back(std::move(left));
  a.children.push_back(std::move(right));
  return a;
}

/// basepoints[i] selects the fixed-set component of child i that carries the
/// gluing point; defaults to component 0 for every child.
inline ActionExpr act_wedge(std::vector<ActionExpr> children,
                            std::vector<std::size_t> basepoints = {}) {
  if (children.size() < 2) throw std::invalid_argument("wedge action: needs two or more children");
  if (basepoints.empty()) basepoints.assign(children.size(), 0);
  if (basepoints.size() != children.size())
    throw std::invalid_argument("wedge action: one basepoint selector per child");
  ActionExpr a{ActionKind::WedgeA};
  a.children = std::move(children);
  a.basepoints = std::move(basepoints);
  return a;
}

inline ActionExpr act_cone(long long n, long long k) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("cone action: requires even n >= 2");
  if (k < 0 || k > n) throw std::invalid_argument("cone action: requires 0 <= k <= n");
  if (k % 2 != 0)
    throw std::invalid_argument(
        "cone action: the fixed shape exists only for even k (rotation blocks come in pairs)");
  ActionExpr a{ActionKind::ConeA};
  a.p1 = n;
  a.p2 = k;
  return a;
}

inline ActionExpr act_mult_cone(long long n) {
  if (n != 2 && n != 4 && n != 8)
    throw std::invalid_argument("multiplication cone action: n must be 2, 4 or 8");
  ActionExpr a{ActionKind::MultConeA};
  a.p1 = n;
  return a;
}

inline ActionExpr act_bundle(long long n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("bundle action: requires odd n >= 3");
  ActionExpr a{ActionKind::BundleA};
  a.p1 = n;
  return a;
}

inline ActionExpr act_puncture(ActionExpr child) {
  bool ok = false;
  if (child.kind == ActionKind::Trivial)
    ok = space::is_puncturable(child.payload) && !space::is_empty(child.payload);
  else if (child.kind == ActionKind::BundleA)
    ok = true;
  if (!ok)
    throw std::invalid_argument(
        "puncture action: child must be a trivial action on a puncturable space or a "
        "bundle action");
  ActionExpr a{ActionKind::Puncture};
  a.children.push_back(std::move(child));
  return a;
}

// --- evaluation --------------------------------------------------------------

inline SpaceExpr total_space(const ActionExpr& a) {
  switch (a.kind) {
    case ActionKind::Trivial: return a.payload;
    case ActionKind::FreeRotation: return space::sphere(a.p1);
    case ActionKind::SuspA: return space::susp(total_space(a.children[0]));
    case ActionKind::JoinA:
      return space::join(total_space(a.children[0]), total_space(a.children[1]));
    case ActionKind::WedgeA: {
      std::vector<SpaceExpr> parts;
      parts.reserve(a.children.size());
      for (const auto& c : a.children) parts.push_back(total_space(c));
      return space::wedge(std::move(parts));
    }
    case ActionKind::ConeA: return space::mapping_cone(a.p1, -2);
    case ActionKind::MultConeA: return space::mapping_cone(a.p1, 1);
    case ActionKind::BundleA:
      return space::product(space::sphere(2), space::sphere(a.p1 + 2));
    case ActionKind::Puncture: return space::remove_point(total_space(a.children[0]));
  }
  throw std::logic_error("total_space: unhandled action");
}

inline SpaceExpr fixed_set(const ActionExpr& a) {
  switch (a.kind) {
    case ActionKind::Trivial: return a.payload;
    case ActionKind::FreeRotation: return space::empty_space();
    case ActionKind::SuspA: {
      SpaceExpr f = fixed_set(a.children[0]);
      // the two poles are always fixed; a nonempty fixed set gets suspended
      if (space::is_empty(f)) return space::sphere(0);
      return space::join(space::sphere(0), f);
    }
    case ActionKind::JoinA:
      // the rule is literal: the fixed set of a join is the join of the
      // fixed sets, with emptiness resolved at evaluation time
      return space::join(fixed_set(a.children[0]), fixed_set(a.children[1]));
    case ActionKind::WedgeA: {
      std::vector<SpaceExpr> selected;
      std::vector<SpaceExpr> leftovers;
      for (std::size_t i = 0; i < a.children.size(); ++i) {
        SpaceExpr f = fixed_set(a.children[i]);
        std::vector<SpaceExpr> comps = space::split_components(f);
        if (comps.empty())
          throw std::invalid_argument(
              "wedge action: child has no fixed point to glue at");
        std::size_t sel = a.basepoints[i];
        if (sel >= comps.size())
          throw std::invalid_argument(
              "wedge action: basepoint selector is not a fixed-set component");
        for (std::size_t j = 0; j < comps.size(); ++j)
          (j == sel ? selected : leftovers).push_back(comps[j]);
      }
      SpaceExpr glued = space::wedge(std::move(selected));
      if (leftovers.empty()) return glued;
      std::vector<SpaceExpr> parts;
      parts.push_back(std::move(glued));
      for (auto& l : leftovers) parts.push_back(std::move(l));
      return space::disjoint_union(std::move(parts));
    }
    case ActionKind::ConeA:
      if (a.p2 == 0) return space::points(3);
      return space::mapping_cone(a.p2, -2);
    case ActionKind::MultConeA:
      // the n = 8 action fixes S^5 on the source sphere; the cone's fixed
      // set is taken as stated, one dimension up plus the cone point
      return space::disjoint_union(
          {space::sphere(a.p1 == 8 ? 6 : a.p1), space::point()});
    case ActionKind::BundleA: return space::sphere(3);
    case ActionKind::Puncture: return space::remove_point(fixed_set(a.children[0]));
  }
  throw std::logic_error("fixed_set: unhandled action");
}

// --- reporting ---------------------------------------------------------------

struct FixedSetReport {
  SpaceExpr total;
  SpaceExpr fixed;
  long long rank_total = 0;
  long long rank_fixed = 0;
  long long chi_total = 0;
  long long chi_fixed = 0;
  bool tnhz = false;
};

/// Evaluates both spaces and checks the two structural theorems on the way:
/// rank(F) <= rank(X) and chi(F) = chi(X). A violation is a defect in a rule
/// or axiom, never a user error, hence logic_error.
inline FixedSetReport report(const ActionExpr& a) {
  FixedSetReport r;
  r.total = total_space(a);
  r.fixed = fixed_set(a);
  graded::PoincarePolynomial pt = space::eval_poincare(r.total);
  graded::PoincarePolynomial pf = space::eval_poincare(r.fixed);
  r.rank_total = graded::total_rank(pt);
  r.rank_fixed = graded::total_rank(pf);
  r.chi_total = graded::euler_char(pt);
  r.chi_fixed = graded::euler_char(pf);
  r.tnhz = r.rank_fixed == r.rank_total;
  if (r.rank_fixed > r.rank_total)
    throw std::logic_error("fixed-set rank exceeds total rank: a rule or axiom is inconsistent");
  if (r.chi_fixed != r.chi_total)
    throw std::logic_error(
        "fixed-set Euler characteristic differs from the total space: a rule or axiom is "
        "inconsistent");
  return r;
}

// --- gallery -----------------------------------------------------------------

struct GalleryCase {
  std::string id;
  long long n = 0;
  std::string description;
  ActionExpr action;
  classify::FixedSetType claimed;
  bool tnhz_expected = false;
};

namespace detail {

inline ActionExpr iterated_susp(ActionExpr a, long long times) {
  for (long long i = 0; i < times; ++i) a = act_susp(std::move(a));
  return a;
}

/// An action on S^{dim} (dim >= 1) whose fixed set is S^r, 0 <= r <= dim,
/// with dim - r even so a free rotation fills the complement: the (r+1)-fold
/// suspension of the rotation on S^{dim-r-1}, or the trivial action at
/// r = dim.
inline ActionExpr sphere_action_fixing(long long dim, long long r) {
  if (r < 0 || r > dim) throw std::invalid_argument("sphere_action_fixing: 0 <= r <= dim");
  if (r == dim) return act_trivial(space::sphere(dim));
  if ((dim - r) % 2 != 0)
    throw std::invalid_argument("sphere_action_fixing: dim - r must be even");
  return iterated_susp(act_rotation(dim - r - 1), r + 1);
}

}  // namespace detail

inline std::vector<GalleryCase> gallery_catalog() {
  using classify::comp_p2;
  using classify::comp_p2_wedge_sphere;
  using classify::comp_point;
  using classify::comp_sphere;
  using classify::comp_wedge_spheres;
  using classify::FixedSetType;
  using detail::sphere_action_fixing;
  std::vector<GalleryCase> out;

  // Four acyclic components, n = 2, on S^2 v S^4 v S^6: two-fixed-point
  // actions on each sphere, glued at one fixed point apiece.
  out.push_back({"1-wedge", 2,
                 "four fixed points on the wedge of three spheres",
                 act_wedge({sphere_action_fixing(2, 0), sphere_action_fixing(4, 0),
                            sphere_action_fixing(6, 0)}),
                 FixedSetType::of({comp_point(), comp_point(), comp_point(), comp_point()}),
                 true});

  // Same fixed-set type on the cone side: the k = 0 cone action has three
  // fixed points, the S^6 action adds two more, one of which is glued.
  out.push_back({"1-cone", 2,
                 "four fixed points on the Hopf-(-2) cone wedged with S^6",
                 act_wedge({act_cone(2, 0), sphere_action_fixing(6, 0)}),
                 FixedSetType::of({comp_point(), comp_point(), comp_point(), comp_point()}),
                 true});

  // Three components S^2 u pt u pt, n = 2.
  out.push_back({"2-wedge", 2,
                 "an even sphere and two points on the wedge of three spheres",
                 act_wedge({sphere_action_fixing(2, 0), sphere_action_fixing(4, 0),
                            sphere_action_fixing(6, 2)}),
                 FixedSetType::of({comp_sphere(2), comp_point(), comp_point()}),
                 true});

  out.push_back({"2-cone", 2,
                 "an even sphere and two points on the cone side",
                 act_wedge({act_cone(2, 0), sphere_action_fixing(6, 2)}),
                 FixedSetType::of({comp_sphere(2), comp_point(), comp_point()}),
                 true});

  // Two components S^2 u S^2, n = 2: trivial action on S^2 wedged with the
  // join of a free circle and the multiplication-cone action, glued at the
  // cone's isolated fixed point.
  out.push_back({"3-sphere-pair", 2,
                 "two even spheres, glued at the isolated fixed point",
                 act_wedge({act_trivial(space::sphere(2)),
                            act_join(act_rotation(1), act_mult_cone(2))},
                           {0, 1}),
                 FixedSetType::of({comp_sphere(2), comp_sphere(2)}),
                 true});

  // Same pieces glued along the sphere components instead: (S^2 v S^2) u pt.
  out.push_back({"3-wedge-point", 2,
                 "a wedge of two even spheres plus the leftover point",
                 act_wedge({act_trivial(space::sphere(2)),
                            act_join(act_rotation(1), act_mult_cone(2))},
                           {0, 0}),
                 FixedSetType::of({comp_wedge_spheres({2, 2}), comp_point()}),
                 true});

  // P2(2) u pt at n = 4: the cone action fixing the k = 2 cone, joined with
  // a free circle, wedged with a two-fixed-point action on S^4.
  out.push_back({"3-P2-point", 4,
                 "a P2 component plus a point",
                 act_wedge({sphere_action_fixing(4, 0),
                            act_join(act_rotation(3), act_cone(4, 2))}),
                 FixedSetType::of({comp_p2(2), comp_point()}),
                 true});

  // One component S^2 v S^2 v S^2, n = 2.
  out.push_back({"4-three-spheres", 2,
                 "a single wedge-of-three-spheres component",
                 act_wedge({act_trivial(space::sphere(2)), sphere_action_fixing(4, 2),
                            sphere_action_fixing(6, 2)}),
                 FixedSetType::of({comp_wedge_spheres({2, 2, 2})}),
                 true});

  // One component P2(2) v S^4 at n = 4.
  out.push_back({"4-P2-sphere", 4,
                 "a single P2-wedge-sphere component",
                 act_wedge({act_trivial(space::sphere(4)),
                            act_join(act_rotation(3), act_cone(4, 2))}),
                 FixedSetType::of({comp_p2_wedge_sphere(2, 4)}),
                 true});

  // Rank-deficient cases at n = 3: W = S^0 * Z with Z the punctured bundle
  // (contractible fixed set), wedged with an action on S^9 fixing S^r for
  // each odd r. The fixed set is a single odd sphere and the rank equality
  // fails.
  for (long long r = 1; r <= 9; r += 2) {
    out.push_back({"thm2-S" + std::to_string(r), 3,
                   "rank-deficient fixed set, an odd sphere of dimension " + std::to_string(r),
                   act_wedge({act_join(act_trivial(space::sphere(0)),
                                       act_puncture(act_bundle(3))),
                              sphere_action_fixing(9, r)}),
                   FixedSetType::of({comp_sphere(r)}),
                   false});
  }
  return out;
}

inline GalleryCase gallery_case(const std::string& id) {
  for (auto& c : gallery_catalog())
    if (c.id == id) return c;
  throw std::invalid_argument("gallery: unknown case id '" + id + "'");
}

}  // namespace toda::equivariant
