#pragma once

// Space expressions at the rational-homotopy level: an immutable tree of
// the constructions the calculus knows about (spheres, truncated projective
// ranks, Toda spaces, wedge/join/suspension/product, mapping cones,
// punctures, disjoint unions), their evaluation to Poincare polynomials,
// and the type-(a,b) classification.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toda/graded.hpp"

namespace toda::space {

using graded::PoincarePolynomial;
using graded::RingPresentation;

enum class SpaceKind {
  Empty,
  Point,
  Sphere,        // p1 = dimension k >= 0
  PTrunc,        // p1 = height h >= 1, p2 = generator degree n >= 1
  Toda,          // p1 = n, p2 = a, p3 = b
  Wedge,         // children, each connected
  Join,          // two children
  Susp,          // one child
  Product,       // two children
  MappingCone,   // p1 = n >= 1, p2 = Hopf invariant of the attaching map
  Punctured,     // one child, one point removed
  DisjointUnion  // children
};

struct SpaceExpr {
  SpaceKind kind = SpaceKind::Empty;
  long long p1 = 0, p2 = 0, p3 = 0;
  std::vector<SpaceExpr> children;

  bool operator==(const SpaceExpr& other) const {
    return kind == other.kind && p1 == other.p1 && p2 == other.p2 && p3 == other.p3 &&
           children == other.children;
  }
  bool operator!=(const SpaceExpr& other) const { return !(*this == other); }
};

// --- predicates -------------------------------------------------------------

inline bool is_empty(const SpaceExpr& e) {
  switch (e.kind) {
    case SpaceKind::Empty: return true;
    case SpaceKind::Point:
    case SpaceKind::Sphere:
    case SpaceKind::PTrunc:
    case SpaceKind::Toda:
    case SpaceKind::MappingCone:
    case SpaceKind::Wedge:
    case SpaceKind::Susp: return false;  // Susp(X) contains the two poles
    case SpaceKind::Join: return is_empty(e.children[0]) && is_empty(e.children[1]);
    case SpaceKind::Product: return is_empty(e.children[0]) || is_empty(e.children[1]);
    case SpaceKind::Punctured: return e.children[0].kind == SpaceKind::Point;
    case SpaceKind::DisjointUnion: {
      for (const auto& c : e.children)
        if (!is_empty(c)) return false;
      return true;
    }
  }
  return false;
}

inline bool is_connected(const SpaceExpr& e) {
  switch (e.kind) {
    case SpaceKind::Empty: return false;
    case SpaceKind::Point: return true;
    case SpaceKind::Sphere: return e.p1 >= 1;
    case SpaceKind::PTrunc:
    case SpaceKind::Toda:
    case SpaceKind::MappingCone:
    case SpaceKind::Wedge: return true;
    case SpaceKind::Join:
      // A join of two nonempty spaces is path connected; joining with the
      // empty space is the identity.
      if (is_empty(e.children[0])) return is_connected(e.children[1]);
      if (is_empty(e.children[1])) return is_connected(e.children[0]);
      return true;
    case SpaceKind::Susp: return !is_empty(e.children[0]);
    case SpaceKind::Product:
      return !is_empty(e.children[0]) && !is_empty(e.children[1]) &&
             is_connected(e.children[0]) && is_connected(e.children[1]);
    case SpaceKind::Punctured: {
      const SpaceExpr& c = e.children[0];
      if (c.kind == SpaceKind::Product) return true;  // factory admits spheres >= 1 only
      if (c.kind == SpaceKind::Sphere) return true;   // sphere minus a point
      // point collections: connected iff exactly one point remains
      return false;
    }
    case SpaceKind::DisjointUnion: {
      int nonempty = 0;
      const SpaceExpr* last = nullptr;
      for (const auto& c : e.children)
        if (!is_empty(c)) {
          ++nonempty;
          last = &c;
        }
      return nonempty == 1 && is_connected(*last);
    }
  }
  return false;
}

// --- factories (validate invariants at construction) ------------------------

inline SpaceExpr empty_space() { return SpaceExpr{}; }

inline SpaceExpr point() { return SpaceExpr{SpaceKind::Point}; }

inline SpaceExpr sphere(long long k) {
  if (k < 0) throw std::invalid_argument("sphere: dimension must be >= 0");
  SpaceExpr e{SpaceKind::Sphere};
  e.p1 = k;
  return e;
}

inline SpaceExpr ptrunc(long long h, long long n) {
  if (h < 1 || n < 1) throw std::invalid_argument("ptrunc: requires h >= 1 and n >= 1");
  if (n % 2 != 0 && h != 1)
    throw std::invalid_argument(
        "ptrunc: odd generator degree forces height 1 (z^2 = 0 over Q)");
  SpaceExpr e{SpaceKind::PTrunc};
  e.p1 = h;
  e.p2 = n;
  return e;
}

inline SpaceExpr toda_space(long long n, long long a, long long b) {
  if (n < 1) throw std::invalid_argument("toda: requires n >= 1");
  if (n % 2 != 0 && a != 0)
    throw std::invalid_argument("toda: odd n forces a = 0 (u1 has odd degree, so u1^2 = 0)");
  SpaceExpr e{SpaceKind::Toda};
  e.p1 = n;
  e.p2 = a;
  e.p3 = b;
  return e;
}

inline SpaceExpr wedge(std::vector<SpaceExpr> parts) {
  if (parts.empty()) throw std::invalid_argument("wedge: needs at least one summand");
  for (const auto& part : parts)
    if (!is_connected(part))
      throw std::invalid_argument("wedge: summand is not connected");
  if (parts.size() == 1) return parts[0];
  SpaceExpr e{SpaceKind::Wedge};
  e.children = std::move(parts);
  return e;
}

inline SpaceExpr join(SpaceExpr left, SpaceExpr right) {
  SpaceExpr e{SpaceKind::Join};
  e.children.push_back(std::move(left));
  e.children.push_back(std::move(right));
  return e;
}

inline SpaceExpr susp(SpaceExpr child) {
  SpaceExpr e{SpaceKind::Susp};
  e.children.push_back(std::move(child));
  return e;
}

inline SpaceExpr product(SpaceExpr left, SpaceExpr right) {
  SpaceExpr e{SpaceKind::Product};
  e.children.push_back(std::move(left));
  e.children.push_back(std::move(right));
  return e;
}

inline SpaceExpr mapping_cone(long long n, long long hopf) {
  if (n < 1) throw std::invalid_argument("mapping cone: requires n >= 1");
  if (n % 2 != 0 && hopf != 0)
    throw std::invalid_argument(
        "mapping cone: odd n forces Hopf invariant 0 (x has odd degree, so x^2 = 0)");
  SpaceExpr e{SpaceKind::MappingCone};
  e.p1 = n;
  e.p2 = hopf;
  return e;
}

inline SpaceExpr disjoint_union(std::vector<SpaceExpr> parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint union: needs at least one part");
  if (parts.size() == 1) return parts[0];
  SpaceExpr e{SpaceKind::DisjointUnion};
  e.children = std::move(parts);
  return e;
}

inline SpaceExpr points(long long count) {
  if (count < 0) throw std::invalid_argument("points: negative count");
  if (count == 0) return empty_space();
  if (count == 1) return point();
  std::vector<SpaceExpr> parts(static_cast<std::size_t>(count), point());
  return disjoint_union(std::move(parts));
}

/// True for the shapes the puncture operator knows how to evaluate:
/// products of two positive-dimensional spheres (remove the top class),
/// spheres (leaves a contractible space), and finite point collections.
inline bool is_puncturable(const SpaceExpr& e) {
  switch (e.kind) {
    case SpaceKind::Point: return true;
    case SpaceKind::Sphere: return true;
    case SpaceKind::Product:
      return e.children[0].kind == SpaceKind::Sphere && e.children[0].p1 >= 1 &&
             e.children[1].kind == SpaceKind::Sphere && e.children[1].p1 >= 1;
    case SpaceKind::DisjointUnion:
      for (const auto& c : e.children)
        if (c.kind != SpaceKind::Point) return false;
      return true;
    default: return false;
  }
}

inline SpaceExpr punctured(SpaceExpr child) {
  if (!is_puncturable(child))
    throw std::invalid_argument(
        "punctured: only products of two spheres, spheres, and point collections "
        "have a rank-determined puncture");
  SpaceExpr e{SpaceKind::Punctured};
  e.children.push_back(std::move(child));
  return e;
}

/// Removes one point from a puncturable expression: a point vanishes, a
/// sphere becomes a point, a product of spheres loses its top class, a point
/// collection shrinks by one.
inline SpaceExpr remove_point(const SpaceExpr& e) {
  if (!is_puncturable(e))
    throw std::invalid_argument("remove_point: expression has no rank-determined puncture");
  switch (e.kind) {
    case SpaceKind::Point: return empty_space();
    case SpaceKind::Sphere: return point();
    case SpaceKind::Product: return punctured(e);
    case SpaceKind::DisjointUnion:
      return points(static_cast<long long>(e.children.size()) - 1);
    default: throw std::logic_error("remove_point: unhandled puncturable kind");
  }
}

// --- evaluation --------------------------------------------------------------

/// Unreduced Poincare polynomial of the expression.
inline PoincarePolynomial eval_poincare(const SpaceExpr& e,
                                        int degree_cap = graded::kDefaultDegreeCap) {
  using graded::join_poly;
  using graded::product_poly;
  using graded::reduce;
  using graded::unreduce;
  using graded::wedge_poly;
  switch (e.kind) {
    case SpaceKind::Empty: return PoincarePolynomial{};
    case SpaceKind::Point: return graded::make_unreduced({{0, 1}});
    case SpaceKind::Sphere: {
      PoincarePolynomial p;
      p.add(0, 1, degree_cap);
      p.add(static_cast<int>(e.p1), 1, degree_cap);  // k = 0 lands on degree 0 again
      return p;
    }
    case SpaceKind::PTrunc: {
      PoincarePolynomial p;
      for (long long i = 0; i <= e.p1; ++i) p.add(static_cast<int>(i * e.p2), 1, degree_cap);
      return p;
    }
    case SpaceKind::Toda: {
      PoincarePolynomial p;
      for (int i = 0; i <= 3; ++i) p.add(static_cast<int>(i * e.p1), 1, degree_cap);
      return p;
    }
    case SpaceKind::MappingCone: {
      PoincarePolynomial p;
      p.add(0, 1, degree_cap);
      p.add(static_cast<int>(e.p1), 1, degree_cap);
      p.add(static_cast<int>(2 * e.p1), 1, degree_cap);
      return p;
    }
    case SpaceKind::Wedge: {
      std::vector<PoincarePolynomial> parts;
      parts.reserve(e.children.size());
      for (const auto& c : e.children) parts.push_back(eval_poincare(c, degree_cap));
      return wedge_poly(parts, degree_cap);
    }
    case SpaceKind::Join: {
      // Joining with the empty space is the identity; otherwise the shifted
      // product of reduced polynomials.
      if (is_empty(e.children[0])) return eval_poincare(e.children[1], degree_cap);
      if (is_empty(e.children[1])) return eval_poincare(e.children[0], degree_cap);
      PoincarePolynomial l = reduce(eval_poincare(e.children[0], degree_cap));
      PoincarePolynomial r = reduce(eval_poincare(e.children[1], degree_cap));
      return unreduce(join_poly(l, r, degree_cap));
    }
    case SpaceKind::Susp: return eval_poincare(join(sphere(0), e.children[0]), degree_cap);
    case SpaceKind::Product:
      return product_poly(eval_poincare(e.children[0], degree_cap),
                          eval_poincare(e.children[1], degree_cap), degree_cap);
    case SpaceKind::Punctured: {
      const SpaceExpr& c = e.children[0];
      PoincarePolynomial p = eval_poincare(c, degree_cap);
      if (p.is_zero()) throw std::invalid_argument("punctured: cannot puncture the empty space");
      int top = p.ranks.rbegin()->first;
      if (c.kind == SpaceKind::Product) {
        // remove the fundamental class
        if (--p.ranks[top] == 0) p.ranks.erase(top);
        return p;
      }
      if (c.kind == SpaceKind::Sphere && c.p1 >= 1) return graded::make_unreduced({{0, 1}});
      // point collections: one point fewer
      long long pts = p.rank(0);
      PoincarePolynomial out;
      out.add(0, pts - 1, degree_cap);
      return out;
    }
    case SpaceKind::DisjointUnion: {
      PoincarePolynomial out;
      for (const auto& c : e.children) {
        PoincarePolynomial part = eval_poincare(c, degree_cap);
        for (const auto& [d, r] : part.ranks) out.add(d, r, degree_cap);
      }
      return out;
    }
  }
  throw std::logic_error("eval_poincare: unhandled node");
}

// --- component splitting -----------------------------------------------------

/// Splits an expression into its connected components, simplifying each to a
/// representative of the same rational type. Contractible joins collapse to
/// Point; joins with the empty space pass through; products distribute.
inline std::vector<SpaceExpr> split_components(const SpaceExpr& e) {
  std::vector<SpaceExpr> out;
  switch (e.kind) {
    case SpaceKind::Empty: return out;
    case SpaceKind::Point: out.push_back(point()); return out;
    case SpaceKind::Sphere:
      if (e.p1 == 0) {
        out.push_back(point());
        out.push_back(point());
      } else {
        out.push_back(e);
      }
      return out;
    case SpaceKind::PTrunc:
    case SpaceKind::Toda:
    case SpaceKind::MappingCone:
    case SpaceKind::Wedge: out.push_back(e); return out;
    case SpaceKind::Join: {
      if (is_empty(e.children[0])) return split_components(e.children[1]);
      if (is_empty(e.children[1])) return split_components(e.children[0]);
      out.push_back(e);
      return out;
    }
    case SpaceKind::Susp: return split_components(join(sphere(0), e.children[0]));
    case SpaceKind::Product: {
      if (is_empty(e.children[0]) || is_empty(e.children[1])) return out;
      for (const auto& a : split_components(e.children[0]))
        for (const auto& b : split_components(e.children[1])) {
          if (a.kind == SpaceKind::Point)
            out.push_back(b);
          else if (b.kind == SpaceKind::Point)
            out.push_back(a);
          else
            out.push_back(product(a, b));
        }
      return out;
    }
    case SpaceKind::Punctured: {
      const SpaceExpr& c = e.children[0];
      if (c.kind == SpaceKind::Product) {
        out.push_back(e);
        return out;
      }
      if (c.kind == SpaceKind::Sphere && c.p1 >= 1) {
        out.push_back(point());
        return out;
      }
      // point collection loses one point
      long long pts = eval_poincare(c).rank(0);
      for (long long i = 1; i < pts; ++i) out.push_back(point());
      return out;
    }
    case SpaceKind::DisjointUnion: {
      for (const auto& c : e.children) {
        auto parts = split_components(c);
        out.insert(out.end(), parts.begin(), parts.end());
      }
      return out;
    }
  }
  return out;
}

// --- type-(a,b) classification -------------------------------------------------

enum class RationalTypeKind { ProductSpheres, P3, WedgeThreeSpheres, P2WedgeSphere };

struct RationalTypeLabel {
  RationalTypeKind kind;
  long long n;

  bool operator==(const RationalTypeLabel& other) const {
    return kind == other.kind && n == other.n;
  }

  std::string to_string() const {
    switch (kind) {
      case RationalTypeKind::ProductSpheres:
        return "S" + std::to_string(n) + " x S" + std::to_string(2 * n);
      case RationalTypeKind::P3: return "P3(" + std::to_string(n) + ")";
      case RationalTypeKind::WedgeThreeSpheres:
        return "S" + std::to_string(n) + " v S" + std::to_string(2 * n) + " v S" +
               std::to_string(3 * n);
      case RationalTypeKind::P2WedgeSphere:
        return "P2(" + std::to_string(n) + ") v S" + std::to_string(3 * n);
    }
    return "?";
  }

  /// A model expression with the same rational cohomology.
  SpaceExpr model() const {
    switch (kind) {
      case RationalTypeKind::ProductSpheres: return product(sphere(n), sphere(2 * n));
      case RationalTypeKind::P3: return ptrunc(3, n);
      case RationalTypeKind::WedgeThreeSpheres:
        return wedge({sphere(n), sphere(2 * n), sphere(3 * n)});
      case RationalTypeKind::P2WedgeSphere: return wedge({ptrunc(2, n), sphere(3 * n)});
    }
    throw std::logic_error("RationalTypeLabel::model");
  }
};

/// The four-way split of type-(a,b) spaces by the vanishing pattern of (a,b).
inline RationalTypeLabel classify_type(long long n, long long a, long long b) {
  if (n < 1) throw std::invalid_argument("classify_type: requires n >= 1");
  if (n % 2 != 0 && a != 0)
    throw std::invalid_argument("classify_type: odd n forces a = 0");
  RationalTypeKind kind;
  if (b != 0)
    kind = (a == 0) ? RationalTypeKind::ProductSpheres : RationalTypeKind::P3;
  else
    kind = (a == 0) ? RationalTypeKind::WedgeThreeSpheres : RationalTypeKind::P2WedgeSphere;
  return RationalTypeLabel{kind, n};
}

// --- ring presentations --------------------------------------------------------

/// Ring of a type-(a,b) space: generators u1, u2, u3 in degrees n, 2n, 3n
/// with u1^2 = a*u2, u1*u2 = b*u3 and all products above degree 3n zero.
inline RingPresentation toda_ring(long long n, long long a, long long b) {
  if (n < 1) throw std::invalid_argument("toda_ring: requires n >= 1");
  if (n % 2 != 0 && a != 0)
    throw std::invalid_argument("toda_ring: odd n forces a = 0 (u1^2 = 0 in odd degree)");
  RingPresentation ring;
  ring.generators = {{"u1", static_cast<int>(n)},
                     {"u2", static_cast<int>(2 * n)},
                     {"u3", static_cast<int>(3 * n)}};
  ring.relations.push_back({{0, 0}, a, {1}});
  ring.relations.push_back({{0, 1}, b, {2}});
  ring.relations.push_back({{0, 2}, 0, {}});
  ring.relations.push_back({{1, 1}, 0, {}});
  ring.relations.push_back({{1, 2}, 0, {}});
  ring.relations.push_back({{2, 2}, 0, {}});
  ring.basis_degrees = {0, static_cast<int>(n), static_cast<int>(2 * n),
                        static_cast<int>(3 * n)};
  ring.params = {{"n", n}, {"a", a}, {"b", b}};
  ring.iso_class = classify_type(n, a, b).to_string();
  ring.validate();
  return ring;
}

/// Ring of the cone of a map S^{2n-1} -> S^n with the given Hopf invariant:
/// x^2 = h*y. Nonzero h gives the rank data and ring of P2(n); zero h the
/// wedge of two spheres.
inline RingPresentation mapping_cone_ring(long long n, long long hopf) {
  if (n < 1) throw std::invalid_argument("mapping_cone_ring: requires n >= 1");
  if (n % 2 != 0 && hopf != 0)
    throw std::invalid_argument("mapping_cone_ring: odd n forces Hopf invariant 0");
  RingPresentation ring;
  ring.generators = {{"x", static_cast<int>(n)}, {"y", static_cast<int>(2 * n)}};
  ring.relations.push_back({{0, 0}, hopf, {1}});
  ring.relations.push_back({{0, 1}, 0, {}});
  ring.relations.push_back({{1, 1}, 0, {}});
  ring.basis_degrees = {0, static_cast<int>(n), static_cast<int>(2 * n)};
  ring.params = {{"n", n}, {"h", hopf}};
  ring.iso_class = hopf != 0 ? "P2(" + std::to_string(n) + ")"
                             : "S" + std::to_string(n) + " v S" + std::to_string(2 * n);
  ring.validate();
  return ring;
}

/// Truncated polynomial ring Q[z]/z^{h+1} with deg z = n.
inline RingPresentation ptrunc_ring(long long h, long long n) {
  if (h < 1 || n < 1) throw std::invalid_argument("ptrunc_ring: requires h >= 1 and n >= 1");
  if (n % 2 != 0 && h != 1)
    throw std::invalid_argument("ptrunc_ring: odd generator degree forces height 1");
  RingPresentation ring;
  ring.generators = {{"z", static_cast<int>(n)}};
  ring.relations.push_back({std::vector<int>(static_cast<std::size_t>(h + 1), 0), 0, {}});
  for (long long i = 0; i <= h; ++i) ring.basis_degrees.push_back(static_cast<int>(i * n));
  ring.params = {{"h", h}, {"n", n}};
  ring.iso_class = "P" + std::to_string(h) + "(" + std::to_string(n) + ")";
  ring.validate();
  return ring;
}

}  // namespace toda::space
