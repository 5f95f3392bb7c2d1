#pragma once

// Independent oracle for the rank calculus: finite simplicial models of
// spheres, wedges, joins and suspensions, with reduced rational Betti
// numbers computed from exact boundary-matrix ranks (arbitrary-precision
// integers, content-stripped column reduction). Nothing here reuses the
// polynomial formulas it is meant to check.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "toda/graded.hpp"
#include "toda/space.hpp"

namespace toda::chains {

using Int = boost::multiprecision::cpp_int;

inline constexpr int kVertexCap = 20;
inline constexpr std::size_t kSimplexCap = 200000;
inline constexpr int kSphereDimCap = 8;

/// Face-closed set of nonempty simplices; each simplex is a strictly
/// increasing list of vertex ids.
struct SimplicialComplex {
  std::set<std::vector<int>> simplices;

  bool empty() const { return simplices.empty(); }

  int dim() const {
    int d = -1;
    for (const auto& s : simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
  }

  std::set<int> vertex_set() const {
    std::set<int> out;
    for (const auto& s : simplices) out.insert(s.begin(), s.end());
    return out;
  }

  std::vector<std::vector<int>> simplices_of_dim(int d) const {
    std::vector<std::vector<int>> out;
    for (const auto& s : simplices)
      if (static_cast<int>(s.size()) == d + 1) out.push_back(s);
    return out;
  }

  bool has_vertex(int v) const { return simplices.count({v}) > 0; }
};

inline void check_caps(const SimplicialComplex& K) {
  if (K.vertex_set().size() > static_cast<std::size_t>(kVertexCap))
    throw std::invalid_argument("simplicial complex exceeds the vertex cap");
  if (K.simplices.size() > kSimplexCap)
    throw std::invalid_argument("simplicial complex exceeds the simplex cap");
}

/// True when every nonempty proper subset of every stored simplex is stored.
inline bool is_face_closed(const SimplicialComplex& K) {
  for (const auto& s : K.simplices) {
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end())
      return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.size() == 1) break;
      std::vector<int> face;
      face.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      if (!K.simplices.count(face)) return false;
    }
  }
  return true;
}

/// Inserts the simplex together with all of its faces.
inline void insert_closed(SimplicialComplex& K, std::vector<int> simplex) {
  std::sort(simplex.begin(), simplex.end());
  if (std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end())
    throw std::invalid_argument("insert_closed: repeated vertex in simplex");
  std::size_t m = simplex.size();
  if (m == 0) return;
  if (m > 25) throw std::invalid_argument("insert_closed: simplex too large");
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> face;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) face.push_back(simplex[i]);
    K.simplices.insert(std::move(face));
    if (K.simplices.size() > kSimplexCap)
      throw std::invalid_argument("insert_closed: simplex cap exceeded");
  }
}

/// Boundary of the (k+1)-simplex: all proper faces of {0,...,k+1}.
inline SimplicialComplex sphere_complex(int k) {
  if (k < 0) throw std::invalid_argument("sphere_complex: dimension must be >= 0");
  if (k > kSphereDimCap) throw std::invalid_argument("sphere_complex: dimension above cap");
  SimplicialComplex K;
  std::vector<int> top(static_cast<std::size_t>(k) + 2);
  std::iota(top.begin(), top.end(), 0);
  for (std::size_t drop = 0; drop < top.size(); ++drop) {
    std::vector<int> facet;
    for (std::size_t i = 0; i < top.size(); ++i)
      if (i != drop) facet.push_back(top[i]);
    insert_closed(K, facet);
  }
  check_caps(K);
  return K;
}

inline SimplicialComplex point_complex() {
  SimplicialComplex K;
  K.simplices.insert({0});
  return K;
}

/// Applies a vertex relabeling; re-sorts each simplex.
inline SimplicialComplex relabel(const SimplicialComplex& K, const std::map<int, int>& to) {
  SimplicialComplex out;
  for (const auto& s : K.simplices) {
    std::vector<int> t;
    t.reserve(s.size());
    for (int v : s) t.push_back(to.at(v));
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
      throw std::invalid_argument("relabel: map identifies vertices within a simplex");
    out.simplices.insert(std::move(t));
  }
  return out;
}

/// Relabels K's vertices onto offset, offset+1, ... (order preserving),
/// optionally pinning one vertex to a fixed id first.
inline SimplicialComplex shift_away(const SimplicialComplex& K, int offset,
                                    const std::map<int, int>& pinned = {}) {
  std::map<int, int> to = pinned;
  int next = offset;
  for (int v : K.vertex_set())
    if (!to.count(v)) to[v] = next++;
  return relabel(K, to);
}

/// Simplicial join: simplices are all unions of a (possibly empty) simplex of
/// A with a (possibly empty) simplex of B, minus the empty set. Vertex ids of
/// B are shifted away from A's. Joining with an empty complex returns the
/// other factor.
inline SimplicialComplex join_complex(const SimplicialComplex& A, const SimplicialComplex& B) {
  int offset = 0;
  auto va = A.vertex_set();
  if (!va.empty()) offset = *va.rbegin() + 1;
  SimplicialComplex Bs = shift_away(B, offset);
  std::size_t predicted = (A.simplices.size() + 1) * (Bs.simplices.size() + 1) - 1;
  if (predicted > kSimplexCap) throw std::invalid_argument("join_complex: simplex cap exceeded");
  SimplicialComplex out;
  out.simplices = A.simplices;
  for (const auto& t : Bs.simplices) out.simplices.insert(t);
  for (const auto& s : A.simplices)
    for (const auto& t : Bs.simplices) {
      std::vector<int> u;
      u.reserve(s.size() + t.size());
      std::merge(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
      out.simplices.insert(std::move(u));
    }
  check_caps(out);
  return out;
}

/// One-point union: b0 in B is identified with a0 in A, the rest of B is
/// shifted away from A's vertex ids.
inline SimplicialComplex wedge_complex(const SimplicialComplex& A, const SimplicialComplex& B,
                                       int a0, int b0) {
  if (!A.has_vertex(a0)) throw std::invalid_argument("wedge_complex: basepoint not in left part");
  if (!B.has_vertex(b0)) throw std::invalid_argument("wedge_complex: basepoint not in right part");
  int offset = 0;
  auto va = A.vertex_set();
  if (!va.empty()) offset = *va.rbegin() + 1;
  SimplicialComplex Bs = shift_away(B, offset, {{b0, a0}});
  SimplicialComplex out;
  out.simplices = A.simplices;
  for (const auto& t : Bs.simplices) out.simplices.insert(t);
  check_caps(out);
  return out;
}

inline SimplicialComplex disjoint_union_complex(const SimplicialComplex& A,
                                                const SimplicialComplex& B) {
  int offset = 0;
  auto va = A.vertex_set();
  if (!va.empty()) offset = *va.rbegin() + 1;
  SimplicialComplex Bs = shift_away(B, offset);
  SimplicialComplex out;
  out.simplices = A.simplices;
  for (const auto& t : Bs.simplices) out.simplices.insert(t);
  check_caps(out);
  return out;
}

/// One simplex per line, vertex ids space-separated, sorted.
inline std::string dump(const SimplicialComplex& K) {
  std::string out;
  for (const auto& s : K.simplices) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(s[i]);
    }
    out += '\n';
  }
  return out;
}

// --- boundary matrices and exact rank ---------------------------------------

/// Sparse column: row index -> coefficient, nonzero entries only.
using SparseColumn = std::map<int, Int>;

/// Boundary matrix of the augmented chain complex in dimension d >= 0,
/// one sparse column per d-simplex. For d = 0 this is the augmentation row
/// (every vertex maps to the generator of the coefficient field).
inline std::vector<SparseColumn> boundary_matrix(const SimplicialComplex& K, int d) {
  if (d < 0) throw std::invalid_argument("boundary_matrix: dimension must be >= 0");
  auto cols_simplices = K.simplices_of_dim(d);
  std::vector<SparseColumn> cols;
  cols.reserve(cols_simplices.size());
  if (d == 0) {
    for (std::size_t c = 0; c < cols_simplices.size(); ++c) cols.push_back({{0, Int(1)}});
    return cols;
  }
  auto rows_simplices = K.simplices_of_dim(d - 1);
  std::map<std::vector<int>, int> row_index;
  for (std::size_t r = 0; r < rows_simplices.size(); ++r)
    row_index[rows_simplices[r]] = static_cast<int>(r);
  for (const auto& s : cols_simplices) {
    SparseColumn col;
    int sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<int> face;
      face.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      col[row_index.at(face)] = Int(sign);
      sign = -sign;
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

inline void strip_content(SparseColumn& col) {
  Int g = 0;
  for (const auto& [row, v] : col) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& [row, v] : col) v /= g;
}

/// Exact rank by column reduction: repeatedly cancels the lowest nonzero row
/// of each column against an already-reduced column with the same pivot.
inline long long rank_of(std::vector<SparseColumn> cols) {
  std::map<int, const SparseColumn*> pivot_owner;
  long long rank = 0;
  for (auto& col : cols) {
    while (!col.empty()) {
      int low = col.rbegin()->first;
      auto it = pivot_owner.find(low);
      if (it == pivot_owner.end()) break;
      const SparseColumn& other = *it->second;
      Int a = other.rbegin()->second;
      Int b = col.rbegin()->second;
      // col <- a*col - b*other, eliminating row `low` exactly
      for (auto& [row, v] : col) v *= a;
      for (const auto& [row, v] : other) {
        Int& slot = col[row];
        slot -= b * v;
        if (slot == 0) col.erase(row);
      }
      strip_content(col);
    }
    if (!col.empty()) {
      ++rank;
      pivot_owner[col.rbegin()->first] = &col;
    }
  }
  return rank;
}

/// Reduced rational Betti numbers by degree. The empty complex reports rank 1
/// in degree -1 (the augmentation survives); nonempty complexes report only
/// degrees >= 0.
inline std::map<int, long long> rational_homology(const SimplicialComplex& K) {
  check_caps(K);
  if (K.empty()) return {{-1, 1}};
  int top = K.dim();
  std::vector<long long> counts(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& s : K.simplices) ++counts[s.size() - 1];
  std::vector<long long> ranks(static_cast<std::size_t>(top) + 2, 0);  // ranks[d] = rk boundary_d
  for (int d = 0; d <= top; ++d) ranks[static_cast<std::size_t>(d)] = rank_of(boundary_matrix(K, d));
  std::map<int, long long> betti;
  for (int d = 0; d <= top; ++d) {
    long long b = counts[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d)] -
                  ranks[static_cast<std::size_t>(d) + 1];
    if (b < 0) throw std::logic_error("rational_homology: negative rank");
    if (b > 0) betti[d] = b;
  }
  return betti;
}

/// Alternating sum of simplex counts (unreduced Euler characteristic).
inline long long euler_from_counts(const SimplicialComplex& K) {
  long long chi = 0;
  for (const auto& s : K.simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

/// Exact check that consecutive boundary matrices compose to zero.
inline bool boundary_squared_is_zero(const SimplicialComplex& K) {
  int top = K.dim();
  for (int d = 1; d <= top; ++d) {
    auto upper = boundary_matrix(K, d);      // C_d -> C_{d-1}
    auto lower = boundary_matrix(K, d - 1);  // C_{d-1} -> C_{d-2}
    for (const auto& col : upper) {
      SparseColumn composed;
      for (const auto& [mid, coeff] : col)
        for (const auto& [row, v] : lower[static_cast<std::size_t>(mid)]) {
          Int& slot = composed[row];
          slot += coeff * v;
          if (slot == 0) composed.erase(row);
        }
      if (!composed.empty()) return false;
    }
  }
  return true;
}

// --- oracle ------------------------------------------------------------------

inline constexpr int kOracleSphereCap = 4;
inline constexpr int kOracleDepthCap = 3;

inline int expr_depth(const space::SpaceExpr& e) {
  int child_max = 0;
  for (const auto& c : e.children) child_max = std::max(child_max, expr_depth(c));
  return 1 + child_max;
}

namespace detail {

inline SimplicialComplex build_model(const space::SpaceExpr& e) {
  using space::SpaceKind;
  switch (e.kind) {
    case SpaceKind::Point: return point_complex();
    case SpaceKind::Sphere:
      if (e.p1 > kOracleSphereCap)
        throw std::invalid_argument("oracle_check: sphere dimension above oracle cap");
      return sphere_complex(static_cast<int>(e.p1));
    case SpaceKind::Wedge: {
      // every model built here carries vertex 0, which all factories place in
      // the basepoint component, so fold with basepoint 0 throughout
      SimplicialComplex acc = build_model(e.children[0]);
      for (std::size_t i = 1; i < e.children.size(); ++i)
        acc = wedge_complex(acc, build_model(e.children[i]), 0, 0);
      return acc;
    }
    case SpaceKind::Join:
      return join_complex(build_model(e.children[0]), build_model(e.children[1]));
    case SpaceKind::Susp: return join_complex(sphere_complex(0), build_model(e.children[0]));
    default:
      throw std::invalid_argument(
          "oracle_check: only Point, Sphere, Wedge, Join and Susp nodes have simplicial models");
  }
}

}  // namespace detail

struct OracleVerdict {
  bool match = false;
  std::map<int, long long> chain_ranks;   // reduced Betti numbers of the model
  std::map<int, long long> graded_ranks;  // reduced ranks from eval_poincare
};

/// Builds the simplicial model of the expression compositionally and compares
/// its reduced Betti numbers with the polynomial evaluation.
inline OracleVerdict oracle_check(const space::SpaceExpr& e) {
  if (expr_depth(e) > kOracleDepthCap)
    throw std::invalid_argument("oracle_check: expression deeper than the oracle cap");
  SimplicialComplex K = detail::build_model(e);
  OracleVerdict v;
  v.chain_ranks = rational_homology(K);
  graded::PoincarePolynomial reduced = graded::reduce(space::eval_poincare(e));
  for (const auto& [d, r] : reduced.ranks) v.graded_ranks[d] = r;
  v.match = v.chain_ranks == v.graded_ranks;
  return v;
}

}  // namespace toda::chains
