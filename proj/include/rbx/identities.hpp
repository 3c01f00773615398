#ifndef RBX_IDENTITIES_HPP
#define RBX_IDENTITIES_HPP

// Bohnenblust-Spitzer identities: the symmetrized nested-R sums, the
// noncommutative cut-permutation form, and the classical commutative
// set-partition and cycle forms.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rbx/combinatorics.hpp"
#include "rbx/rb_core.hpp"

namespace rbx {

enum class Side { Left, Right };

std::string to_string(Side side);
/// "left" / "right"; throws std::invalid_argument otherwise.
Side parse_side(const std::string& text);

struct CutDecomposition {
  Perm perm;
  /// bars[i] is true when a bar sits between positions i+1 and i+2.
  std::vector<bool> bars;
  /// Maximal barless runs, as lists of permutation values.
  std::vector<std::vector<unsigned>> segments;

  /// One-line notation with bars, e.g. "(21|3)".
  std::string str() const;
};

/// Bar to the left of sigma(i+1) iff it exceeds every value to its left.
CutDecomposition cut_left(const Perm& sigma);
/// Bar to the right of sigma(i) iff it is smaller than every value to its right.
CutDecomposition cut_right(const Perm& sigma);
CutDecomposition cut(const Perm& sigma, Side side);

/// Within each segment combine by the pre-Lie product (left-nested, left
/// side) or by the mirror product (right-nested, right side); join the
/// segments by *_R in order. elems holds a_1..a_n, indexed by value.
template <RotaBaxterAlgebra A>
ElementOf<A> diamond_eval(const A& alg, const CutDecomposition& c,
                          std::span<const ElementOf<A>> elems, Side side) {
  if (elems.size() != c.perm.size())
    throw std::invalid_argument("diamond_eval: expected " + std::to_string(c.perm.size()) +
                                " elements, got " + std::to_string(elems.size()));
  auto element = [&](unsigned v) -> const ElementOf<A>& { return elems[v - 1]; };
  ElementOf<A> result = alg.zero();
  bool first = true;
  for (const auto& seg : c.segments) {
    ElementOf<A> part;
    if (side == Side::Left) {
      part = element(seg.front());
      for (std::size_t i = 1; i < seg.size(); ++i)
        part = prelie(alg, part, element(seg[i]));
    } else {
      part = element(seg.back());
      for (std::size_t i = seg.size() - 1; i-- > 0;)
        part = prelie_mirror(alg, element(seg[i]), part);
    }
    result = first ? part : double_product(alg, result, part);
    first = false;
  }
  return result;
}

/// R(R(...R(a_s1) a_s2 ...) a_sn) (left) or R(a_s1 R(a_s2 ... R(a_sn))) (right).
template <RotaBaxterAlgebra A>
ElementOf<A> nested_R(const A& alg, const Perm& sigma, std::span<const ElementOf<A>> elems,
                      Side side) {
  auto element = [&](unsigned v) -> const ElementOf<A>& { return elems[v - 1]; };
  const std::size_t n = sigma.size();
  if (side == Side::Left) {
    ElementOf<A> acc = alg.R(element(sigma[0]));
    for (std::size_t i = 1; i < n; ++i)
      acc = alg.R(alg.mul(acc, element(sigma[i])));
    return acc;
  }
  ElementOf<A> acc = alg.R(element(sigma[n - 1]));
  for (std::size_t i = n - 1; i-- > 0;)
    acc = alg.R(alg.mul(element(sigma[i]), acc));
  return acc;
}

/// Symmetrized nested sum over all n! permutations.
template <RotaBaxterAlgebra A>
ElementOf<A> bs_lhs(const A& alg, std::span<const ElementOf<A>> elems, Side side) {
  if (elems.empty())
    throw std::invalid_argument("bs_lhs needs at least one element");
  ElementOf<A> sum = alg.zero();
  for (const auto& sigma : permutations(elems.size()))
    sum = alg.add(sum, nested_R(alg, sigma, elems, side));
  return sum;
}

/// sum over sigma of R(diamond_eval(cut(sigma))).
template <RotaBaxterAlgebra A>
ElementOf<A> bs_rhs_cut(const A& alg, std::span<const ElementOf<A>> elems, Side side) {
  if (elems.empty())
    throw std::invalid_argument("bs_rhs_cut needs at least one element");
  ElementOf<A> sum = alg.zero();
  for (const auto& sigma : permutations(elems.size()))
    sum = alg.add(sum, alg.R(diamond_eval(alg, cut(sigma, side), elems, side)));
  return sum;
}

namespace detail {

template <RotaBaxterAlgebra A>
void require_commutative(const A& alg, const char* what) {
  if (!alg.is_commutative())
    throw std::invalid_argument(std::string(what) + " needs a commutative carrier");
}

template <RotaBaxterAlgebra A>
ElementOf<A> block_product(const A& alg, const std::vector<unsigned>& block,
                           std::span<const ElementOf<A>> elems) {
  ElementOf<A> acc = elems[block[0] - 1];
  for (std::size_t i = 1; i < block.size(); ++i)
    acc = alg.mul(acc, elems[block[i] - 1]);
  return acc;
}

} // namespace detail

/// sum over set partitions pi of (-1)^(n-|pi|) prod_i (m_i - 1)! R(prod_{j in pi_i} a_j).
template <RotaBaxterAlgebra A>
ElementOf<A> bs_classical_partitions(const A& alg, std::span<const ElementOf<A>> elems) {
  detail::require_commutative(alg, "bs_classical_partitions");
  const std::size_t n = elems.size();
  ElementOf<A> sum = alg.zero();
  for (const auto& blocks : set_partitions(n)) {
    Rational weight((n - blocks.size()) % 2 == 0 ? 1 : -1);
    ElementOf<A> term;
    bool first = true;
    for (const auto& block : blocks) {
      weight *= factorial(static_cast<unsigned>(block.size() - 1));
      ElementOf<A> r = alg.R(detail::block_product(alg, block, elems));
      term = first ? r : alg.mul(term, r);
      first = false;
    }
    sum = alg.add(sum, alg.scale(weight, term));
  }
  return sum;
}

/// sum over sigma of (-1)^(n-k(sigma)) prod over cycles tau of R(prod_{j in tau} a_j).
template <RotaBaxterAlgebra A>
ElementOf<A> bs_classical_cycles(const A& alg, std::span<const ElementOf<A>> elems) {
  detail::require_commutative(alg, "bs_classical_cycles");
  const std::size_t n = elems.size();
  ElementOf<A> sum = alg.zero();
  for (const auto& sigma : permutations(n)) {
    auto cs = cycles(sigma);
    ElementOf<A> term;
    bool first = true;
    for (const auto& cycle : cs) {
      ElementOf<A> r = alg.R(detail::block_product(alg, cycle, elems));
      term = first ? r : alg.mul(term, r);
      first = false;
    }
    Rational sign((n - cs.size()) % 2 == 0 ? 1 : -1);
    sum = alg.add(sum, alg.scale(sign, term));
  }
  return sum;
}

struct BsReport {
  std::size_t n = 0;
  Side side = Side::Left;
  std::string carrier;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::size_t cases = 0;
  bool residual_is_zero = false;
  double elapsed_ms = 0;
  /// Description of the first failing case, empty when all passed.
  std::string counterexample;

  nlohmann::json to_json(bool with_timing = true) const;
};

/// Runs bs_lhs against bs_rhs_cut. carrier "standard": a distinct fixed
/// tuple of standard-RBA elements plus `trials` random tuples; carrier
/// "ratseq": `trials` random commutative tuples, where the classical
/// partition form is checked as well.
BsReport verify_bs(std::size_t n, Side side, std::size_t trials,
                   const std::string& carrier = "standard", unsigned long seed = 7);

} // namespace rbx

#endif
