#ifndef RBX_SEQ_RBA_HPP
#define RBX_SEQ_RBA_HPP

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rbx/ncpoly.hpp"
#include "rbx/rational.hpp"

namespace rbx {

/// Prefix (y_1, ..., y_L) of a sequence of noncommutative polynomials.
/// Stored 0-based: entries[p-1] holds y_p.
struct PolySeq {
  std::vector<NcPoly> entries;

  PolySeq() = default;
  explicit PolySeq(std::vector<NcPoly> e) : entries(std::move(e)) {}
  static PolySeq constant(std::size_t length, const NcPoly& value);

  std::size_t length() const { return entries.size(); }
  /// 1-based access matching the usual (y_1, y_2, ...) notation.
  const NcPoly& entry(std::size_t p) const { return entries.at(p - 1); }
  bool is_zero() const;

  friend bool operator==(const PolySeq&, const PolySeq&) = default;

  /// One line per entry, at most `max_entries` of them (0 = all).
  std::string str(std::size_t max_entries = 0) const;
  nlohmann::json to_json() const;
};

PolySeq operator+(const PolySeq& a, const PolySeq& b);
PolySeq operator-(const PolySeq& a, const PolySeq& b);
PolySeq operator*(const PolySeq& a, const PolySeq& b);
PolySeq operator*(const Rational& c, const PolySeq& a);

/// Partial-sum operator: rho(y)_1 = 0, rho(y)_{p+1} = y_1 + ... + y_p.
PolySeq rho(const PolySeq& s);
/// Left inverse of rho: (delta y)_p = y_{p+1} - y_p, length L-1.
PolySeq delta(const PolySeq& s);
/// X = (x1, ..., xL).
PolySeq generator(std::size_t length);
/// Truncation length that decides identities of degree n: n + 2.
std::size_t required_length(std::size_t identity_degree);

/// The standard Rota-Baxter algebra truncated to L entries, with operator
/// theta * rho of weight theta (theta = 1 is the standard case).
class SeqAlgebra {
public:
  using Element = PolySeq;

  explicit SeqAlgebra(std::size_t length, Rational theta = 1);

  std::size_t length() const { return length_; }

  PolySeq zero() const;
  PolySeq one() const;
  PolySeq generator() const { return rbx::generator(length_); }
  PolySeq add(const PolySeq& a, const PolySeq& b) const;
  PolySeq sub(const PolySeq& a, const PolySeq& b) const;
  PolySeq scale(const Rational& c, const PolySeq& a) const;
  PolySeq mul(const PolySeq& a, const PolySeq& b) const;
  PolySeq R(const PolySeq& a) const;
  bool equal(const PolySeq& a, const PolySeq& b) const;
  Rational theta() const { return theta_; }
  bool is_commutative() const { return false; }

private:
  void check(const PolySeq& a) const;

  std::size_t length_;
  Rational theta_;
};

/// Prefix of a sequence of rationals: the commutative analogue.
struct RatSeq {
  std::vector<Rational> entries;

  std::size_t length() const { return entries.size(); }
  friend bool operator==(const RatSeq&, const RatSeq&) = default;
  std::string str() const;
};

/// Commutative Rota-Baxter algebra of rational sequences with operator
/// theta * (partial sums).
class RatSeqAlgebra {
public:
  using Element = RatSeq;

  explicit RatSeqAlgebra(std::size_t length, Rational theta = 1);

  std::size_t length() const { return length_; }

  RatSeq zero() const;
  RatSeq one() const;
  RatSeq add(const RatSeq& a, const RatSeq& b) const;
  RatSeq sub(const RatSeq& a, const RatSeq& b) const;
  RatSeq scale(const Rational& c, const RatSeq& a) const;
  RatSeq mul(const RatSeq& a, const RatSeq& b) const;
  RatSeq R(const RatSeq& a) const;
  bool equal(const RatSeq& a, const RatSeq& b) const;
  Rational theta() const { return theta_; }
  bool is_commutative() const { return true; }

private:
  void check(const RatSeq& a) const;

  std::size_t length_;
  Rational theta_;
};

/// Polynomials in a central variable t with T(X) coefficients, truncated
/// above t^max_degree. coeffs[k] multiplies t^k.
struct TPoly {
  std::vector<NcPoly> coeffs;
  friend bool operator==(const TPoly&, const TPoly&) = default;
};

/// Weight-zero carrier: R(f)(t) = integral of f from 0 to t.
class IntegralAlgebra {
public:
  using Element = TPoly;

  explicit IntegralAlgebra(std::size_t max_degree);

  TPoly zero() const;
  TPoly one() const;
  TPoly add(const TPoly& a, const TPoly& b) const;
  TPoly sub(const TPoly& a, const TPoly& b) const;
  TPoly scale(const Rational& c, const TPoly& a) const;
  TPoly mul(const TPoly& a, const TPoly& b) const;
  TPoly R(const TPoly& a) const;
  bool equal(const TPoly& a, const TPoly& b) const { return a == b; }
  Rational theta() const { return 0; }
  bool is_commutative() const { return false; }

private:
  std::size_t max_degree_;
};

// ---------------------------------------------------------------------------
// Random elements for property checks.

struct RandomPolyOptions {
  unsigned variables = 3;    ///< letters drawn from x1..x_variables
  std::size_t max_degree = 2;
  std::size_t max_terms = 3;
  long max_abs_numerator = 4;
  long max_denominator = 3;
};

Rational random_rational(std::mt19937_64& rng, long max_abs_numerator, long max_denominator);
NcPoly random_ncpoly(std::mt19937_64& rng, const RandomPolyOptions& opts = {});
PolySeq random_polyseq(std::mt19937_64& rng, std::size_t length,
                       const RandomPolyOptions& opts = {});
RatSeq random_ratseq(std::mt19937_64& rng, std::size_t length);
TPoly random_tpoly(std::mt19937_64& rng, std::size_t max_degree,
                   const RandomPolyOptions& opts = {});

// ---------------------------------------------------------------------------

/// Rank over Q of the given sequences viewed as vectors of monomial
/// coefficients across all entries. Exact sparse row reduction.
std::size_t linear_rank(std::span<const PolySeq> rows);

} // namespace rbx

#endif
