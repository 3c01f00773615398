#ifndef RBX_FREE_RBA_HPP
#define RBX_FREE_RBA_HPP

// Expressions over one generator Z and an operator symbol T (the free
// End-algebra), rewriting to elementary monomials, and evaluation into any
// Rota-Baxter algebra.

#include <cstddef>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbx/rational.hpp"
#include "rbx/rb_core.hpp"

namespace rbx {

/// Expression tree. Products and sums are kept flat: a Product never has a
/// Product child, a Sum never has a Sum child or a zero coefficient.
class LTerm {
public:
  enum class Kind { Generator, Unit, Apply, Product, Sum };

  static LTerm generator();
  static LTerm unit();
  static LTerm apply(LTerm arg);
  static LTerm apply(LTerm arg, unsigned times);
  /// Flattens nested products and drops unit factors.
  static LTerm product(std::vector<LTerm> factors);
  /// Flattens nested sums and drops zero coefficients. An empty sum is zero.
  static LTerm sum(std::vector<std::pair<Rational, LTerm>> terms);
  static LTerm zero() { return sum({}); }

  Kind kind() const { return kind_; }
  const std::vector<LTerm>& children() const { return children_; }
  /// Sum nodes only: coefficient of children()[i].
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend bool operator==(const LTerm&, const LTerm&) = default;

  /// Renders in the input grammar; parse(str()) reproduces the term.
  std::string str() const;

private:
  explicit LTerm(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Unit;
  std::vector<LTerm> children_;
  std::vector<Rational> coeffs_;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset), message_(message) {}
  std::size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }

private:
  std::size_t offset_;
  std::string message_;
};

/// Grammar:
///   expr     := ['+'|'-'] sumterm { ('+' | '-') sumterm }
///   sumterm  := [rational] product | rational
///   product  := atom { atom }
///   atom     := 'Z' ['^' nat] | '1' | 'T' ['^' nat] '(' expr ')' | '(' expr ')'
///   rational := nat ['/' nat]
/// Juxtaposition is the product; whitespace between tokens is ignored.
LTerm parse(std::string_view text);

// ---------------------------------------------------------------------------
// Canonical linear form: T is linear, so every expression is a unique
// rational combination of monomials whose T-arguments are themselves
// monomials.

struct Factor;
using Monomial = std::vector<Factor>;

/// Z (is_op == false) or T(arg).
struct Factor {
  bool is_op = false;
  Monomial arg;

  static Factor z() { return {}; }
  static Factor op(Monomial m) { return {true, std::move(m)}; }
};

/// Structural order: factor by factor, Z < T(.), T-arguments compared
/// recursively, proper prefix first.
int compare(const Monomial& a, const Monomial& b);
bool operator==(const Factor& a, const Factor& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

/// Number of T symbols in a monomial.
std::size_t t_count(const Monomial& m);
/// Number of Z symbols in a monomial.
std::size_t z_degree(const Monomial& m);

/// Canonical output order: by T count, then degree, then structure.
bool canonical_less(const Monomial& a, const Monomial& b);

class LinComb {
public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  LinComb() = default;
  static LinComb monomial(Monomial m, Rational c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);
  LinComb& operator+=(const LinComb& o);
  LinComb& operator*=(const Rational& c);
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
  friend LinComb operator*(const LinComb& a, const LinComb& b);
  friend bool operator==(const LinComb&, const LinComb&) = default;

  /// Terms in descending canonical order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  LTerm to_term() const;
  std::string str() const { return to_term().str(); }

private:
  Terms terms_;
};

/// T applied linearly.
LinComb apply_op(const LinComb& l);
LinComb expand(const LTerm& t);
LTerm to_term(const Monomial& m);

/// Maximal number of T's over the monomials of the expanded term.
std::size_t max_T(const LTerm& t);
std::size_t max_T(const LinComb& l);

/// True iff the monomial has the shape Z^i1 T(b1) Z^i2 ... T(bk) Z^i(k+1)
/// with elementary b_j and no two adjacent T factors.
bool is_elementary(const Monomial& m);
/// Throws std::invalid_argument unless t expands to a single monomial.
bool is_elementary(const LTerm& t);

/// Rewrites T(c)T(d) -> T(T(c)d) + T(cT(d)) + theta T(cd) until every
/// monomial is elementary. Leftmost-innermost: T-arguments are normalized
/// first, then the leftmost adjacent pair at the current level is replaced.
LinComb normal_form(const LinComb& l, const Rational& theta);
LinComb normal_form(const LTerm& t, const Rational& theta);

/// All elementary monomials with at most `max_t` T's and at most
/// `max_degree` Z's, T-arguments nonempty, in ascending canonical order.
std::vector<Monomial> elementary_basis(std::size_t max_t, std::size_t max_degree);

/// Random monomial with at most `max_t` T's and between 1 and `max_degree`
/// Z's; T-arguments are never empty.
Monomial random_monomial(std::mt19937_64& rng, std::size_t max_t, std::size_t max_degree);
/// Random expression: a small rational combination of random monomials.
LTerm random_lterm(std::mt19937_64& rng, std::size_t max_t, std::size_t max_degree,
                   std::size_t max_terms = 3);

// ---------------------------------------------------------------------------
// Universal evaluation: Z -> a, T -> R, product -> product.

namespace detail {

template <RotaBaxterAlgebra A>
ElementOf<A> unit_of(const A& alg) {
  if constexpr (UnitalRotaBaxterAlgebra<A>)
    return alg.one();
  else
    throw std::invalid_argument("expression uses the unit but the carrier is not unital");
}

} // namespace detail

template <RotaBaxterAlgebra A>
ElementOf<A> eval_hom(const LTerm& t, const A& alg, const ElementOf<A>& a) {
  switch (t.kind()) {
  case LTerm::Kind::Generator:
    return a;
  case LTerm::Kind::Unit:
    return detail::unit_of(alg);
  case LTerm::Kind::Apply:
    return alg.R(eval_hom(t.children()[0], alg, a));
  case LTerm::Kind::Product: {
    ElementOf<A> acc = eval_hom(t.children()[0], alg, a);
    for (std::size_t i = 1; i < t.children().size(); ++i)
      acc = alg.mul(acc, eval_hom(t.children()[i], alg, a));
    return acc;
  }
  case LTerm::Kind::Sum: {
    ElementOf<A> acc = alg.zero();
    for (std::size_t i = 0; i < t.children().size(); ++i)
      acc = alg.add(acc, alg.scale(t.coefficients()[i], eval_hom(t.children()[i], alg, a)));
    return acc;
  }
  }
  throw std::logic_error("unknown LTerm kind");
}

template <RotaBaxterAlgebra A>
ElementOf<A> eval_hom(const Monomial& m, const A& alg, const ElementOf<A>& a) {
  if (m.empty())
    return detail::unit_of(alg);
  auto image = [&](const Factor& f) {
    return f.is_op ? alg.R(eval_hom(f.arg, alg, a)) : a;
  };
  ElementOf<A> acc = image(m[0]);
  for (std::size_t i = 1; i < m.size(); ++i)
    acc = alg.mul(acc, image(m[i]));
  return acc;
}

template <RotaBaxterAlgebra A>
ElementOf<A> eval_hom(const LinComb& l, const A& alg, const ElementOf<A>& a) {
  ElementOf<A> acc = alg.zero();
  for (const auto& [m, c] : l.terms())
    acc = alg.add(acc, alg.scale(c, eval_hom(m, alg, a)));
  return acc;
}

} // namespace rbx

#endif
