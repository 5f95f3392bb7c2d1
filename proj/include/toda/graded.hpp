#pragma once

// Exact arithmetic on graded rational rank data: Poincare polynomials,
// Euler characteristics, and the combination rules for wedge, join,
// suspension and product. Ranks are exact integers throughout; no
// floating point enters this module.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace toda::graded {

// Degrees above this are treated as runaway expressions and rejected.
inline constexpr int kDefaultDegreeCap = 256;

/// Finitely supported rank-per-degree vector over Q.
///
/// `reduced` marks whether degree 0 has the basepoint contribution removed.
/// Stored ranks are always >= 1; absent degrees have rank 0. The zero
/// polynomial in unreduced form is the empty space; in reduced form it is
/// any rationally contractible space.
struct PoincarePolynomial {
  std::map<int, long long> ranks;
  bool reduced = false;

  long long rank(int degree) const {
    auto it = ranks.find(degree);
    return it == ranks.end() ? 0 : it->second;
  }

  /// Adds `count` to the rank in `degree`, dropping zero entries.
  void add(int degree, long long count, int degree_cap = kDefaultDegreeCap) {
    if (degree < 0) throw std::invalid_argument("PoincarePolynomial: negative degree");
    if (degree > degree_cap)
      throw std::overflow_error("PoincarePolynomial: degree " + std::to_string(degree) +
                                " exceeds cap " + std::to_string(degree_cap));
    if (count < 0) throw std::invalid_argument("PoincarePolynomial: negative rank");
    if (count == 0) return;
    ranks[degree] += count;
  }

  bool is_zero() const { return ranks.empty(); }

  bool operator==(const PoincarePolynomial& other) const {
    return reduced == other.reduced && ranks == other.ranks;
  }
  bool operator!=(const PoincarePolynomial& other) const { return !(*this == other); }

  std::string to_string() const {
    std::string out = reduced ? "~{" : "{";
    bool first = true;
    for (const auto& [d, r] : ranks) {
      if (!first) out += ", ";
      out += std::to_string(d) + ":" + std::to_string(r);
      first = false;
    }
    return out + "}";
  }
};

inline PoincarePolynomial make_unreduced(std::map<int, long long> ranks) {
  PoincarePolynomial p;
  for (const auto& [d, r] : ranks) p.add(d, r);
  return p;
}

inline PoincarePolynomial make_reduced(std::map<int, long long> ranks) {
  PoincarePolynomial p = make_unreduced(std::move(ranks));
  p.reduced = true;
  return p;
}

/// Sum of all ranks.
inline long long total_rank(const PoincarePolynomial& p) {
  long long total = 0;
  for (const auto& [d, r] : p.ranks) total += r;
  return total;
}

/// Alternating sum of ranks (the polynomial evaluated at -1).
/// Rejects reduced input: the basepoint convention would make the value
/// ambiguous. The empty polynomial gives 0, i.e. chi of the empty space.
inline long long euler_char(const PoincarePolynomial& p) {
  if (p.reduced)
    throw std::invalid_argument("euler_char: requires an unreduced polynomial");
  long long chi = 0;
  for (const auto& [d, r] : p.ranks) chi += (d % 2 == 0) ? r : -r;
  return chi;
}

/// Strips one unit of rank from degree 0. Requires a nonempty unreduced input.
inline PoincarePolynomial reduce(const PoincarePolynomial& p) {
  if (p.reduced) throw std::invalid_argument("reduce: input already reduced");
  if (p.rank(0) < 1)
    throw std::invalid_argument("reduce: no degree-0 class to remove (empty space?)");
  PoincarePolynomial q = p;
  q.reduced = true;
  if (--q.ranks[0] == 0) q.ranks.erase(0);
  return q;
}

/// Restores the basepoint contribution in degree 0.
inline PoincarePolynomial unreduce(const PoincarePolynomial& p) {
  if (!p.reduced) throw std::invalid_argument("unreduce: input already unreduced");
  PoincarePolynomial q = p;
  q.reduced = false;
  q.ranks[0] += 1;
  return q;
}

/// Reduced ranks of the join: degree d+1 of the result collects all
/// products of reduced ranks in degrees summing to d, i.e. t*P(t)*Q(t).
/// A zero factor (contractible space) therefore yields zero ranks: joining
/// with a point cones everything off. Genuinely empty spaces never reach
/// this formula; the expression layer resolves them before evaluating.
inline PoincarePolynomial join_poly(const PoincarePolynomial& p, const PoincarePolynomial& q,
                                    int degree_cap = kDefaultDegreeCap) {
  if (!p.reduced || !q.reduced)
    throw std::invalid_argument("join_poly: both inputs must be reduced");
  PoincarePolynomial out;
  out.reduced = true;
  for (const auto& [dp, rp] : p.ranks)
    for (const auto& [dq, rq] : q.ranks) out.add(dp + dq + 1, rp * rq, degree_cap);
  return out;
}

/// Wedge of connected spaces: rank 1 in degree 0, positive degrees add up.
inline PoincarePolynomial wedge_poly(const std::vector<PoincarePolynomial>& parts,
                                     int degree_cap = kDefaultDegreeCap) {
  if (parts.empty()) throw std::invalid_argument("wedge_poly: no summands");
  PoincarePolynomial out;
  out.add(0, 1);
  for (const auto& part : parts) {
    if (part.reduced) throw std::invalid_argument("wedge_poly: inputs must be unreduced");
    if (part.rank(0) != 1)
      throw std::invalid_argument(
          "wedge_poly: summand is not connected (degree-0 rank != 1), basepoint "
          "component would be ambiguous");
    for (const auto& [d, r] : part.ranks)
      if (d > 0) out.add(d, r, degree_cap);
  }
  return out;
}

/// Kunneth product over a field: coefficient-wise polynomial product.
inline PoincarePolynomial product_poly(const PoincarePolynomial& p, const PoincarePolynomial& q,
                                       int degree_cap = kDefaultDegreeCap) {
  if (p.reduced || q.reduced)
    throw std::invalid_argument("product_poly: inputs must be unreduced");
  PoincarePolynomial out;
  for (const auto& [dp, rp] : p.ranks)
    for (const auto& [dq, rq] : q.ranks) out.add(dp + dq, rp * rq, degree_cap);
  return out;
}

// ---------------------------------------------------------------------------
// Ring presentations

struct Generator {
  std::string name;
  int degree = 0;
};

/// One monomial relation: product of the generators in `lhs` equals
/// `coeff` times the product of the generators in `rhs`. An empty `rhs`
/// with zero `coeff` states that the left side vanishes.
struct Relation {
  std::vector<int> lhs;
  long long coeff = 0;
  std::vector<int> rhs;
};

/// Generators-and-relations description of a truncated graded ring,
/// together with its additive Q-basis (degree 0 included).
struct RingPresentation {
  std::vector<Generator> generators;
  std::vector<Relation> relations;
  std::vector<int> basis_degrees;
  std::map<std::string, long long> params;
  std::string iso_class;

  PoincarePolynomial poincare() const {
    PoincarePolynomial p;
    for (int d : basis_degrees) p.add(d, 1);
    return p;
  }

  std::string monomial_string(const std::vector<int>& mono) const {
    if (mono.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < mono.size();) {
      std::size_t j = i;
      while (j < mono.size() && mono[j] == mono[i]) ++j;
      if (!out.empty()) out += "*";
      out += generators.at(static_cast<std::size_t>(mono[i])).name;
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }

  std::string relation_string(const Relation& rel) const {
    std::string rhs;
    if (rel.coeff == 0 || rel.rhs.empty()) {
      rhs = rel.coeff == 0 ? "0" : std::to_string(rel.coeff);
    } else {
      rhs = (rel.coeff == 1 ? "" : std::to_string(rel.coeff) + "*") + monomial_string(rel.rhs);
    }
    return monomial_string(rel.lhs) + " = " + rhs;
  }

  /// Checks the structural invariants: relations only reference declared
  /// generators, and every odd-degree generator carries an explicit
  /// square-zero relation (graded commutativity over Q).
  void validate() const {
    auto check_mono = [&](const std::vector<int>& mono) {
      for (int g : mono)
        if (g < 0 || g >= static_cast<int>(generators.size()))
          throw std::invalid_argument("RingPresentation: relation references undeclared generator");
    };
    for (const auto& rel : relations) {
      check_mono(rel.lhs);
      check_mono(rel.rhs);
    }
    for (int g = 0; g < static_cast<int>(generators.size()); ++g) {
      if (generators[static_cast<std::size_t>(g)].degree % 2 == 0) continue;
      bool square_zero = false;
      for (const auto& rel : relations) {
        if (rel.lhs == std::vector<int>{g, g}) {
          if (rel.coeff != 0 && !rel.rhs.empty())
            throw std::invalid_argument("RingPresentation: odd-degree generator " +
                                        generators[static_cast<std::size_t>(g)].name +
                                        " has nonzero square");
          square_zero = true;
        }
      }
      if (!square_zero)
        throw std::invalid_argument("RingPresentation: odd-degree generator " +
                                    generators[static_cast<std::size_t>(g)].name +
                                    " lacks a square-zero relation");
    }
  }
};

}  // namespace toda::graded
