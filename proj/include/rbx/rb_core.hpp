#ifndef RBX_RB_CORE_HPP
#define RBX_RB_CORE_HPP

// Generic Rota-Baxter algebra machinery. Everything here is written against
// the RotaBaxterAlgebra concept so it runs unchanged over every carrier:
// truncated sequences, rational sequences, the double-product algebra, ...

#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rbx/rational.hpp"

namespace rbx {

/// A carrier with an associative product, a linear operator R and a weight
/// theta. The algebra object owns the equality test so truncated carriers
/// can compare at their truncation level.
template <class A>
concept RotaBaxterAlgebra =
    requires(const A& alg, const typename A::Element& a, const Rational& c) {
      typename A::Element;
      { alg.zero() } -> std::convertible_to<typename A::Element>;
      { alg.add(a, a) } -> std::convertible_to<typename A::Element>;
      { alg.sub(a, a) } -> std::convertible_to<typename A::Element>;
      { alg.scale(c, a) } -> std::convertible_to<typename A::Element>;
      { alg.mul(a, a) } -> std::convertible_to<typename A::Element>;
      { alg.R(a) } -> std::convertible_to<typename A::Element>;
      { alg.equal(a, a) } -> std::convertible_to<bool>;
      { alg.theta() } -> std::convertible_to<Rational>;
      { alg.is_commutative() } -> std::convertible_to<bool>;
    };

template <class A>
concept UnitalRotaBaxterAlgebra = RotaBaxterAlgebra<A> && requires(const A& alg) {
  { alg.one() } -> std::convertible_to<typename A::Element>;
};

template <RotaBaxterAlgebra A>
using ElementOf = typename A::Element;

template <RotaBaxterAlgebra A>
bool is_zero(const A& alg, const ElementOf<A>& a) {
  return alg.equal(a, alg.zero());
}

/// R~(a) = -theta a - R(a).
template <RotaBaxterAlgebra A>
ElementOf<A> R_tilde(const A& alg, const ElementOf<A>& a) {
  return alg.sub(alg.scale(-alg.theta(), a), alg.R(a));
}

/// R(a)R(b) - R(R(a)b + aR(b)) - theta R(ab); zero iff the Rota-Baxter
/// relation holds on (a, b).
template <RotaBaxterAlgebra A>
ElementOf<A> rb_check(const A& alg, const ElementOf<A>& a, const ElementOf<A>& b) {
  auto Ra = alg.R(a);
  auto Rb = alg.R(b);
  auto inner = alg.add(alg.mul(Ra, b), alg.mul(a, Rb));
  auto rhs = alg.add(alg.R(inner), alg.scale(alg.theta(), alg.R(alg.mul(a, b))));
  return alg.sub(alg.mul(Ra, Rb), rhs);
}

/// a *_R b = R(a)b + aR(b) + theta ab.
template <RotaBaxterAlgebra A>
ElementOf<A> double_product(const A& alg, const ElementOf<A>& a, const ElementOf<A>& b) {
  auto s = alg.add(alg.mul(alg.R(a), b), alg.mul(a, alg.R(b)));
  return alg.add(s, alg.scale(alg.theta(), alg.mul(a, b)));
}

/// Left pre-Lie product a .R b = R(a)b - bR(a) - theta ba = R(a)b + bR~(a).
template <RotaBaxterAlgebra A>
ElementOf<A> prelie(const A& alg, const ElementOf<A>& a, const ElementOf<A>& b) {
  auto Ra = alg.R(a);
  auto s = alg.sub(alg.mul(Ra, b), alg.mul(b, Ra));
  return alg.sub(s, alg.scale(alg.theta(), alg.mul(b, a)));
}

/// Mirror product aR(b) - R(b)a - theta ba used by the right cut rule.
template <RotaBaxterAlgebra A>
ElementOf<A> prelie_mirror(const A& alg, const ElementOf<A>& a, const ElementOf<A>& b) {
  auto Rb = alg.R(b);
  auto s = alg.sub(alg.mul(a, Rb), alg.mul(Rb, a));
  return alg.sub(s, alg.scale(alg.theta(), alg.mul(b, a)));
}

/// ab - ba.
template <RotaBaxterAlgebra A>
ElementOf<A> commutator(const A& alg, const ElementOf<A>& a, const ElementOf<A>& b) {
  return alg.sub(alg.mul(a, b), alg.mul(b, a));
}

template <class E>
struct DendriformPair {
  E left;  ///< a < b = -a R~(b)
  E right; ///< a > b = R(a) b
};

template <RotaBaxterAlgebra A>
DendriformPair<ElementOf<A>> dendriform(const A& alg, const ElementOf<A>& a,
                                        const ElementOf<A>& b) {
  return {alg.scale(Rational(-1), alg.mul(a, R_tilde(alg, b))), alg.mul(alg.R(a), b)};
}

/// Left Spitzer iterate (Ra)^[n]: (Ra)^[0] = 1, (Ra)^[n+1] = R((Ra)^[n] a).
template <UnitalRotaBaxterAlgebra A>
ElementOf<A> iterate_left(const A& alg, const ElementOf<A>& a, std::size_t n) {
  ElementOf<A> acc = alg.one();
  for (std::size_t i = 0; i < n; ++i)
    acc = alg.R(alg.mul(acc, a));
  return acc;
}

/// Right Spitzer iterate (Ra)^{n}: (Ra)^{n+1} = R(a (Ra)^{n}).
template <UnitalRotaBaxterAlgebra A>
ElementOf<A> iterate_right(const A& alg, const ElementOf<A>& a, std::size_t n) {
  ElementOf<A> acc = alg.one();
  for (std::size_t i = 0; i < n; ++i)
    acc = alg.R(alg.mul(a, acc));
  return acc;
}

/// c^(n)(a_1, ..., a_n), left-nested pre-Lie word; c^(1)(a) = a.
template <RotaBaxterAlgebra A>
ElementOf<A> c_word(const A& alg, std::span<const ElementOf<A>> elems) {
  if (elems.empty())
    throw std::invalid_argument("c_word needs at least one element");
  ElementOf<A> acc = elems[0];
  for (std::size_t i = 1; i < elems.size(); ++i)
    acc = prelie(alg, acc, elems[i]);
  return acc;
}

/// c^(n)(a, ..., a).
template <RotaBaxterAlgebra A>
ElementOf<A> c_word(const A& alg, const ElementOf<A>& a, std::size_t n) {
  if (n < 1)
    throw std::invalid_argument("c_word needs n >= 1");
  ElementOf<A> acc = a;
  for (std::size_t i = 1; i < n; ++i)
    acc = prelie(alg, acc, a);
  return acc;
}

/// C^(n)(a) = R(c^(n)(a)).
template <RotaBaxterAlgebra A>
ElementOf<A> C_word(const A& alg, const ElementOf<A>& a, std::size_t n) {
  if (n < 1)
    throw std::invalid_argument("C_word needs n >= 1");
  return alg.R(c_word(alg, a, n));
}

// ---------------------------------------------------------------------------
// Derived algebras. Each wraps a base algebra by value.

/// Same carrier and product, operator replaced by R~ = -theta id - R.
template <RotaBaxterAlgebra A>
class ConjugateAlgebra {
public:
  using Element = ElementOf<A>;
  explicit ConjugateAlgebra(A base) : base_(std::move(base)) {}

  Element zero() const { return base_.zero(); }
  Element one() const requires UnitalRotaBaxterAlgebra<A> { return base_.one(); }
  Element add(const Element& a, const Element& b) const { return base_.add(a, b); }
  Element sub(const Element& a, const Element& b) const { return base_.sub(a, b); }
  Element scale(const Rational& c, const Element& a) const { return base_.scale(c, a); }
  Element mul(const Element& a, const Element& b) const { return base_.mul(a, b); }
  Element R(const Element& a) const { return R_tilde(base_, a); }
  bool equal(const Element& a, const Element& b) const { return base_.equal(a, b); }
  Rational theta() const { return base_.theta(); }
  bool is_commutative() const { return base_.is_commutative(); }

  const A& base() const { return base_; }

private:
  A base_;
};

/// (A_R, R): same carrier and operator, product replaced by *_R. Not
/// unital in general.
template <RotaBaxterAlgebra A>
class DoubleProductAlgebra {
public:
  using Element = ElementOf<A>;
  explicit DoubleProductAlgebra(A base) : base_(std::move(base)) {}

  Element zero() const { return base_.zero(); }
  Element add(const Element& a, const Element& b) const { return base_.add(a, b); }
  Element sub(const Element& a, const Element& b) const { return base_.sub(a, b); }
  Element scale(const Rational& c, const Element& a) const { return base_.scale(c, a); }
  Element mul(const Element& a, const Element& b) const { return double_product(base_, a, b); }
  Element R(const Element& a) const { return base_.R(a); }
  bool equal(const Element& a, const Element& b) const { return base_.equal(a, b); }
  Rational theta() const { return base_.theta(); }
  bool is_commutative() const { return base_.is_commutative(); }

  const A& base() const { return base_; }

private:
  A base_;
};

/// Operator scaled by lambda: (A, lambda R) has weight lambda * theta.
template <RotaBaxterAlgebra A>
class ScaledAlgebra {
public:
  using Element = ElementOf<A>;
  ScaledAlgebra(A base, Rational lambda) : base_(std::move(base)), lambda_(std::move(lambda)) {}

  Element zero() const { return base_.zero(); }
  Element one() const requires UnitalRotaBaxterAlgebra<A> { return base_.one(); }
  Element add(const Element& a, const Element& b) const { return base_.add(a, b); }
  Element sub(const Element& a, const Element& b) const { return base_.sub(a, b); }
  Element scale(const Rational& c, const Element& a) const { return base_.scale(c, a); }
  Element mul(const Element& a, const Element& b) const { return base_.mul(a, b); }
  Element R(const Element& a) const { return base_.scale(lambda_, base_.R(a)); }
  bool equal(const Element& a, const Element& b) const { return base_.equal(a, b); }
  Rational theta() const { return lambda_ * base_.theta(); }
  bool is_commutative() const { return base_.is_commutative(); }

private:
  A base_;
  Rational lambda_;
};

} // namespace rbx

#endif
