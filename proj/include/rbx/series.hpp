#ifndef RBX_SERIES_HPP
#define RBX_SERIES_HPP

// Truncated formal power series in a central variable t over any carrier
// algebra, plus Atkinson's factorization and the Magnus coefficients.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbx/rb_core.hpp"

namespace rbx {

/// sum_{n=0}^{order} coeffs[n] t^n, exact modulo t^(order+1).
template <class E>
struct FormalSeries {
  std::vector<E> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const E& operator[](std::size_t n) const { return coeffs[n]; }
};

enum class SeriesErrc {
  constant_not_unit,    ///< inverse / log need coefficient 0 equal to 1
  constant_not_zero,    ///< exp needs coefficient 0 equal to 0
  empty_series,
};

class series_error : public std::domain_error {
public:
  series_error(SeriesErrc code, const std::string& what)
      : std::domain_error(what), code_(code) {}
  SeriesErrc code() const { return code_; }

private:
  SeriesErrc code_;
};

template <RotaBaxterAlgebra A>
using SeriesOf = FormalSeries<ElementOf<A>>;

template <RotaBaxterAlgebra A>
SeriesOf<A> series_constant(const A& alg, const ElementOf<A>& c, std::size_t order) {
  SeriesOf<A> s{std::vector<ElementOf<A>>(order + 1, alg.zero())};
  s.coeffs[0] = c;
  return s;
}

template <UnitalRotaBaxterAlgebra A>
SeriesOf<A> series_one(const A& alg, std::size_t order) {
  return series_constant(alg, alg.one(), order);
}

template <RotaBaxterAlgebra A>
SeriesOf<A> series_add(const A& alg, const SeriesOf<A>& x, const SeriesOf<A>& y) {
  std::size_t order = std::min(x.order(), y.order());
  SeriesOf<A> out;
  out.coeffs.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n)
    out.coeffs.push_back(alg.add(x[n], y[n]));
  return out;
}

template <RotaBaxterAlgebra A>
SeriesOf<A> series_sub(const A& alg, const SeriesOf<A>& x, const SeriesOf<A>& y) {
  std::size_t order = std::min(x.order(), y.order());
  SeriesOf<A> out;
  out.coeffs.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n)
    out.coeffs.push_back(alg.sub(x[n], y[n]));
  return out;
}

template <RotaBaxterAlgebra A>
SeriesOf<A> series_scale(const A& alg, const Rational& c, const SeriesOf<A>& x) {
  SeriesOf<A> out;
  out.coeffs.reserve(x.coeffs.size());
  for (const auto& e : x.coeffs)
    out.coeffs.push_back(alg.scale(c, e));
  return out;
}

/// Cauchy product, truncated at the smaller of the two orders.
template <RotaBaxterAlgebra A>
SeriesOf<A> series_mul(const A& alg, const SeriesOf<A>& x, const SeriesOf<A>& y) {
  std::size_t order = std::min(x.order(), y.order());
  SeriesOf<A> out{std::vector<ElementOf<A>>(order + 1, alg.zero())};
  for (std::size_t i = 0; i <= order; ++i) {
    if (is_zero(alg, x[i]))
      continue;
    for (std::size_t j = 0; i + j <= order; ++j)
      out.coeffs[i + j] = alg.add(out.coeffs[i + j], alg.mul(x[i], y[j]));
  }
  return out;
}

/// Coefficientwise image under a linear map (e.g. R applied to each t^n).
template <RotaBaxterAlgebra A, class F>
SeriesOf<A> series_map(const A&, const SeriesOf<A>& x, F&& f) {
  SeriesOf<A> out;
  out.coeffs.reserve(x.coeffs.size());
  for (const auto& e : x.coeffs)
    out.coeffs.push_back(f(e));
  return out;
}

template <RotaBaxterAlgebra A>
bool series_equal(const A& alg, const SeriesOf<A>& x, const SeriesOf<A>& y) {
  std::size_t order = std::min(x.order(), y.order());
  for (std::size_t n = 0; n <= order; ++n)
    if (!alg.equal(x[n], y[n]))
      return false;
  return true;
}

/// Two-sided inverse of a series with constant coefficient 1.
template <UnitalRotaBaxterAlgebra A>
SeriesOf<A> series_inverse(const A& alg, const SeriesOf<A>& x) {
  if (x.coeffs.empty())
    throw series_error(SeriesErrc::empty_series, "inverse of an empty series");
  if (!alg.equal(x[0], alg.one()))
    throw series_error(SeriesErrc::constant_not_unit,
                       "series inverse needs constant coefficient 1");
  std::size_t order = x.order();
  SeriesOf<A> inv{std::vector<ElementOf<A>>(order + 1, alg.zero())};
  inv.coeffs[0] = alg.one();
  // x * inv = 1  =>  inv_n = -sum_{k=1}^{n} x_k inv_{n-k}
  for (std::size_t n = 1; n <= order; ++n) {
    ElementOf<A> acc = alg.zero();
    for (std::size_t k = 1; k <= n; ++k)
      acc = alg.add(acc, alg.mul(x[k], inv[n - k]));
    inv.coeffs[n] = alg.scale(Rational(-1), acc);
  }
  return inv;
}

/// d/dt; the result is known modulo t^order.
template <RotaBaxterAlgebra A>
SeriesOf<A> series_derivative(const A& alg, const SeriesOf<A>& x) {
  SeriesOf<A> out;
  if (x.order() == 0) {
    out.coeffs.push_back(alg.zero());
    return out;
  }
  for (std::size_t n = 1; n <= x.order(); ++n)
    out.coeffs.push_back(alg.scale(Rational(static_cast<long>(n)), x[n]));
  return out;
}

/// Formal antiderivative with zero constant term; known modulo t^(order+2).
template <RotaBaxterAlgebra A>
SeriesOf<A> series_integral(const A& alg, const SeriesOf<A>& x) {
  SeriesOf<A> out;
  out.coeffs.push_back(alg.zero());
  for (std::size_t n = 0; n <= x.order(); ++n)
    out.coeffs.push_back(alg.scale(Rational(1, static_cast<long>(n + 1)), x[n]));
  return out;
}

/// exp(x) = sum x^k / k! for x with zero constant term.
template <UnitalRotaBaxterAlgebra A>
SeriesOf<A> series_exp(const A& alg, const SeriesOf<A>& x) {
  if (x.coeffs.empty())
    throw series_error(SeriesErrc::empty_series, "exp of an empty series");
  if (!is_zero(alg, x[0]))
    throw series_error(SeriesErrc::constant_not_zero, "series exp needs constant coefficient 0");
  std::size_t order = x.order();
  SeriesOf<A> result = series_one(alg, order);
  SeriesOf<A> power = series_one(alg, order);
  for (std::size_t k = 1; k <= order; ++k) {
    power = series_scale(alg, Rational(1, static_cast<long>(k)), series_mul(alg, power, x));
    result = series_add(alg, result, power);
  }
  return result;
}

/// log(x) = sum_{k>=1} (-1)^(k+1) (x-1)^k / k for x with constant coefficient 1.
template <UnitalRotaBaxterAlgebra A>
SeriesOf<A> series_log(const A& alg, const SeriesOf<A>& x) {
  if (x.coeffs.empty())
    throw series_error(SeriesErrc::empty_series, "log of an empty series");
  if (!alg.equal(x[0], alg.one()))
    throw series_error(SeriesErrc::constant_not_unit, "series log needs constant coefficient 1");
  std::size_t order = x.order();
  SeriesOf<A> u = x;
  u.coeffs[0] = alg.zero();
  SeriesOf<A> result = series_constant(alg, alg.zero(), order);
  SeriesOf<A> power = series_one(alg, order);
  for (std::size_t k = 1; k <= order; ++k) {
    power = series_mul(alg, power, u);
    Rational c(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    result = series_add(alg, result, series_scale(alg, c, power));
  }
  return result;
}

// ---------------------------------------------------------------------------

template <class E>
struct AtkinsonSeries {
  FormalSeries<E> x;     ///< x = 1 + t R(x a)
  FormalSeries<E> y;     ///< y = 1 + t R~(a y)
  FormalSeries<E> x_inv; ///< 1 - t R(a y)
  FormalSeries<E> y_inv; ///< 1 - t R~(x a)
};

/// Solves Atkinson's recursions by coefficient recursion up to t^order and
/// returns the closed-form inverses alongside.
template <UnitalRotaBaxterAlgebra A>
AtkinsonSeries<ElementOf<A>> atkinson(const A& alg, const ElementOf<A>& a, std::size_t order) {
  if (order < 1)
    throw std::invalid_argument("atkinson needs order >= 1");
  AtkinsonSeries<ElementOf<A>> s;
  s.x = series_one(alg, order);
  s.y = series_one(alg, order);
  s.x_inv = series_one(alg, order);
  s.y_inv = series_one(alg, order);
  for (std::size_t n = 1; n <= order; ++n) {
    s.x.coeffs[n] = alg.R(alg.mul(s.x[n - 1], a));
    s.y.coeffs[n] = R_tilde(alg, alg.mul(a, s.y[n - 1]));
    s.x_inv.coeffs[n] = alg.scale(Rational(-1), alg.R(alg.mul(a, s.y[n - 1])));
    s.y_inv.coeffs[n] = alg.scale(Rational(-1), R_tilde(alg, alg.mul(s.x[n - 1], a)));
  }
  return s;
}

/// x (1 + theta a t) y; equals 1 when the factorization holds. For
/// theta = 1 this is the familiar x (1 + a t) y.
template <UnitalRotaBaxterAlgebra A>
SeriesOf<A> atkinson_product(const A& alg, const ElementOf<A>& a,
                             const AtkinsonSeries<ElementOf<A>>& s) {
  SeriesOf<A> middle = series_one(alg, s.x.order());
  middle.coeffs[1] = alg.scale(alg.theta(), a);
  return series_mul(alg, series_mul(alg, s.x, middle), s.y);
}

/// X_a(t) = sum t^n (Ra)^[n].
template <UnitalRotaBaxterAlgebra A>
SeriesOf<A> spitzer_series(const A& alg, const ElementOf<A>& a, std::size_t order) {
  SeriesOf<A> x = series_one(alg, order);
  for (std::size_t n = 1; n <= order; ++n)
    x.coeffs[n] = alg.R(alg.mul(x[n - 1], a));
  return x;
}

/// psi_a(t) = sum_{n>0} t^(n-1) C^(n)(a).
template <RotaBaxterAlgebra A>
SeriesOf<A> psi_series(const A& alg, const ElementOf<A>& a, std::size_t order) {
  SeriesOf<A> psi;
  ElementOf<A> c = a;
  for (std::size_t n = 1; n <= order + 1; ++n) {
    if (n > 1)
      c = prelie(alg, c, a);
    psi.coeffs.push_back(alg.R(c));
  }
  return psi;
}

/// exp(R log(1 + a t)), R applied coefficientwise.
template <UnitalRotaBaxterAlgebra A>
SeriesOf<A> spitzer_exponential(const A& alg, const ElementOf<A>& a, std::size_t order) {
  SeriesOf<A> one_plus_at = series_one(alg, order);
  one_plus_at.coeffs[1] = a;
  auto logged = series_log(alg, one_plus_at);
  auto mapped = series_map(alg, logged, [&](const ElementOf<A>& e) { return alg.R(e); });
  return series_exp(alg, mapped);
}

template <class E>
struct MagnusCoefficients {
  /// d/dt log X_a(t) = sum_m derivative[m] t^m, m = 0..order-1.
  FormalSeries<E> derivative;

  /// K_n as the coefficient of t^n (literal reading), n = 1..order-1.
  /// Index 0 of the returned vector holds K_1.
  std::vector<E> coefficient_of_t_n() const {
    return {derivative.coeffs.begin() + std::min<std::size_t>(1, derivative.coeffs.size()),
            derivative.coeffs.end()};
  }
  /// K_n as the coefficient of t^(n-1) (conventional Magnus indexing),
  /// n = 1..order. Index 0 holds K_1.
  std::vector<E> coefficient_of_t_n_minus_1() const { return derivative.coeffs; }
};

/// Reads K_n off d/dt log X_a(t), X_a(t) = sum t^n (Ra)^[n], to order t^order.
template <UnitalRotaBaxterAlgebra A>
MagnusCoefficients<ElementOf<A>> magnus_coeffs(const A& alg, const ElementOf<A>& a,
                                               std::size_t order) {
  if (order < 1)
    throw std::invalid_argument("magnus_coeffs needs order >= 1");
  auto x = spitzer_series(alg, a, order);
  return {series_derivative(alg, series_log(alg, x))};
}

} // namespace rbx

#endif
