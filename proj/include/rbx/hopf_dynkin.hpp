#ifndef RBX_HOPF_DYNKIN_HPP
#define RBX_HOPF_DYNKIN_HPP

// The Spitzer Hopf algebra S (generators E_n = (RX)^[n]) and the double
// Spitzer Hopf algebra C (generators F_n = (RX)^[n]X), both free on a
// sequence of divided powers. Antipode, convolution, Dynkin operator,
// its inverse Gamma, and evaluation into a Rota-Baxter algebra.

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rbx/ncpoly.hpp"
#include "rbx/rb_core.hpp"

namespace rbx {

enum class HopfTag {
  Spitzer,       ///< generators E_n, n >= 1, of degree n
  DoubleSpitzer, ///< generators F_n, n >= 0, of degree n + 1
};

/// A word in the generators, stored by generator degree: {2, 1} is E_2 E_1
/// in S and F_1 F_0 in C. The empty word is the unit.
using GenWord = std::vector<unsigned>;

std::size_t word_degree(const GenWord& w);

class HopfWord {
public:
  using Terms = std::map<GenWord, Rational>;

  explicit HopfWord(HopfTag tag = HopfTag::Spitzer) : tag_(tag) {}
  HopfWord(HopfTag tag, Terms terms);

  static HopfWord unit(HopfTag tag);
  static HopfWord monomial(HopfTag tag, GenWord w, Rational c = 1);
  /// E_n (n >= 1) or F_n (n >= 0) by the natural index n.
  static HopfWord generator(HopfTag tag, unsigned n);

  HopfTag tag() const { return tag_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const GenWord& w) const;
  /// Coefficient of the empty word.
  Rational counit() const { return coeff({}); }
  std::size_t max_degree() const;
  HopfWord component(std::size_t degree) const;

  void add_term(const GenWord& w, const Rational& c);

  HopfWord& operator+=(const HopfWord& o);
  HopfWord& operator-=(const HopfWord& o);
  HopfWord& operator*=(const Rational& c);
  friend HopfWord operator+(HopfWord a, const HopfWord& b) { return a += b; }
  friend HopfWord operator-(HopfWord a, const HopfWord& b) { return a -= b; }
  friend HopfWord operator*(const Rational& c, HopfWord a) { return a *= c; }
  /// Concatenation product; both operands must carry the same tag.
  friend HopfWord operator*(const HopfWord& a, const HopfWord& b);

  friend bool operator==(const HopfWord&, const HopfWord&) = default;

  /// "-1/2*[E1 E1] + [E2]"; terms by degree then word; unit as "1".
  std::string str() const;
  nlohmann::json to_json() const;

private:
  HopfTag tag_;
  Terms terms_;
};

std::string render_word(HopfTag tag, const GenWord& w);

/// Element of H (x) H.
class TensorElem {
public:
  using Key = std::pair<GenWord, GenWord>;
  using Terms = std::map<Key, Rational>;

  explicit TensorElem(HopfTag tag = HopfTag::Spitzer) : tag_(tag) {}

  HopfTag tag() const { return tag_; }
  const Terms& terms() const { return terms_; }
  void add_term(const GenWord& left, const GenWord& right, const Rational& c);
  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  friend bool operator==(const TensorElem&, const TensorElem&) = default;

  std::string str() const;

private:
  HopfTag tag_;
  Terms terms_;
};

/// a (x) b for elements of H.
TensorElem tensor(const HopfWord& a, const HopfWord& b);

/// Multiplicative extension of Delta(g_d) = sum_{i=0}^{d} g_i (x) g_{d-i}.
TensorElem coproduct(const HopfWord& w);
/// (Delta (x) id) Delta and (id (x) Delta) Delta agree; checked term by term.
bool coassociative_on(const HopfWord& w);

using LinearMap = std::function<HopfWord(const HopfWord&)>;

/// product o (phi (x) psi) o Delta.
HopfWord convolution(const LinearMap& phi, const LinearMap& psi, const HopfWord& w);

/// Antipode by the recursion S(w) = -sum S(w') w'' over the terms of Delta(w)
/// with w'' nonempty; memoized per basis word.
HopfWord antipode(const HopfWord& w);
/// Grading operator N.
HopfWord grading(const HopfWord& w);
HopfWord identity_map(const HopfWord& w);
/// unit o counit.
HopfWord unit_counit(const HopfWord& w);
/// D = S * N.
HopfWord dynkin(const HopfWord& w);
bool is_primitive(const HopfWord& w);

/// Graded components of sum_{n>=1} g_n up to degree N in either algebra.
std::vector<HopfWord> group_like_components(HopfTag tag, std::size_t max_degree);

// ---------------------------------------------------------------------------
// Gamma, the inverse of the Dynkin operator on group-like series.

/// Anything with zero, add, scale and an associative (not necessarily
/// unital) product.
template <class A>
concept NonUnitalRing = requires(const A& alg, const typename A::Element& a, const Rational& c) {
  { alg.zero() } -> std::convertible_to<typename A::Element>;
  { alg.add(a, a) } -> std::convertible_to<typename A::Element>;
  { alg.scale(c, a) } -> std::convertible_to<typename A::Element>;
  { alg.mul(a, a) } -> std::convertible_to<typename A::Element>;
};

/// Components 1..N of Gamma(h) = sum over compositions (i_1..i_k) of n of
/// h_{i_1} ... h_{i_k} / (i_1 (i_1+i_2) ... (i_1+...+i_k)).
/// h[0] is h_1; out[n-1] is the degree-n component. Computed through
/// P_m = (h_m + sum_{j<m} P_{m-j} h_j) / m.
template <NonUnitalRing A>
std::vector<typename A::Element> gamma_components(const A& alg,
                                                  std::span<const typename A::Element> h) {
  std::vector<typename A::Element> P;
  P.reserve(h.size());
  for (std::size_t m = 1; m <= h.size(); ++m) {
    typename A::Element acc = h[m - 1];
    for (std::size_t j = 1; j < m; ++j)
      acc = alg.add(acc, alg.mul(P[m - j - 1], h[j - 1]));
    P.push_back(alg.scale(Rational(1, static_cast<long>(m)), acc));
  }
  return P;
}

/// Ring structure on HopfWord for gamma_components.
struct HopfRing {
  using Element = HopfWord;
  HopfTag tag;
  HopfWord zero() const { return HopfWord(tag); }
  HopfWord add(const HopfWord& a, const HopfWord& b) const { return a + b; }
  HopfWord scale(const Rational& c, const HopfWord& a) const { return c * a; }
  HopfWord mul(const HopfWord& a, const HopfWord& b) const { return a * b; }
};

/// 1 + sum of gamma_components, as a single HopfWord.
HopfWord gamma(HopfTag tag, std::span<const HopfWord> h);

// ---------------------------------------------------------------------------
// Evaluation morphisms into a Rota-Baxter algebra with generator a.

namespace detail {

// Evaluates sum c_w g_{w1} ... g_{wk} by factoring out the last generator:
// sum_d (sum over words ending in d of c_w g_{w1}..g_{w(k-1)}) g_d. Nonempty
// words only; gen(d) is the image of g_d and mul the target product.
template <class E, class Alg, class Gen, class Mul>
E horner(const Alg& alg, const std::map<GenWord, Rational>& terms, Gen& gen, Mul& mul) {
  std::map<unsigned, std::map<GenWord, Rational>> by_last;
  for (const auto& [w, c] : terms) {
    GenWord prefix(w.begin(), w.end() - 1);
    by_last[w.back()].emplace(std::move(prefix), c);
  }
  E result = alg.zero();
  for (auto& [d, rest] : by_last) {
    Rational c0;
    if (auto it = rest.find(GenWord{}); it != rest.end()) {
      c0 = it->second;
      rest.erase(it);
    }
    E g = gen(d); // gen may grow its cache during the recursion
    if (!c0.is_zero())
      result = alg.add(result, alg.scale(c0, g));
    if (!rest.empty())
      result = alg.add(result, mul(horner<E>(alg, rest, gen, mul), g));
  }
  return result;
}

} // namespace detail

/// E_d -> (Ra)^[d] with the algebra's own product.
template <UnitalRotaBaxterAlgebra A>
ElementOf<A> eval_S(const A& alg, const ElementOf<A>& a, const HopfWord& w) {
  using E = ElementOf<A>;
  if (w.tag() != HopfTag::Spitzer)
    throw std::invalid_argument("eval_S expects an element of the Spitzer algebra");
  std::vector<E> gens{alg.one()};
  auto gen = [&](unsigned d) -> const E& {
    while (gens.size() <= d)
      gens.push_back(alg.R(alg.mul(gens.back(), a)));
    return gens[d];
  };
  auto mul = [&](const E& x, const E& y) { return alg.mul(x, y); };
  std::map<GenWord, Rational> rest = w.terms();
  rest.erase(GenWord{});
  E result = detail::horner<E>(alg, rest, gen, mul);
  if (!w.counit().is_zero())
    result = alg.add(result, alg.scale(w.counit(), alg.one()));
  return result;
}

/// F_n -> (Ra)^[n] a with *_R as the product. *_R has no unit, so a nonzero
/// coefficient on the empty word is rejected.
template <UnitalRotaBaxterAlgebra A>
ElementOf<A> eval_C(const A& alg, const ElementOf<A>& a, const HopfWord& w) {
  using E = ElementOf<A>;
  if (w.tag() != HopfTag::DoubleSpitzer)
    throw std::invalid_argument("eval_C expects an element of the double Spitzer algebra");
  if (!w.counit().is_zero())
    throw std::domain_error("eval_C: the *_R product has no unit; constant term " +
                            w.counit().str() + " cannot be evaluated");
  std::vector<E> iter{alg.one()};
  std::vector<E> gens;
  auto gen = [&](unsigned d) -> const E& {
    while (gens.size() < d) {
      while (iter.size() <= gens.size())
        iter.push_back(alg.R(alg.mul(iter.back(), a)));
      gens.push_back(alg.mul(iter[gens.size()], a));
    }
    return gens[d - 1];
  };
  auto mul = [&](const E& x, const E& y) { return double_product(alg, x, y); };
  return detail::horner<E>(alg, w.terms(), gen, mul);
}

// ---------------------------------------------------------------------------

/// Linear extension of x_{i1}...x_{in} -> [...[[x_{i1}, x_{i2}], x_{i3}]..., x_{in}].
NcPoly dynkin_bracket(const NcPoly& p);

} // namespace rbx

#endif
