#ifndef RBX_NCPOLY_HPP
#define RBX_NCPOLY_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rbx/rational.hpp"

namespace rbx {

/// Noncommutative monomial x_{i1} x_{i2} ... x_{ik} over the ordered
/// variables x1, x2, ...  The empty word is the unit monomial.
///
/// Letters are stored one byte each, so variable indices are limited to
/// 1..255. Comparison is the lexicographic order <_L: letter by letter,
/// and a proper prefix is smaller than any of its extensions.
class Word {
public:
  static constexpr unsigned max_variable = 255;

  Word() = default;
  Word(std::initializer_list<unsigned> letters);
  explicit Word(std::span<const unsigned> letters);

  static Word letter(unsigned index);

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  unsigned operator[](std::size_t i) const {
    return static_cast<unsigned char>(letters_[i]);
  }
  unsigned max_letter() const;
  std::vector<unsigned> letters() const;

  Word& operator*=(const Word& o) { letters_ += o.letters_; return *this; }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    int c = a.letters_.compare(b.letters_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "x1*x3*x3*x2"; the empty word renders as "1".
  std::string str() const;

  const std::string& bytes() const { return letters_; }

private:
  std::string letters_;
};

/// u <_L v.
bool lex_less(const Word& u, const Word& v);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string>{}(w.bytes());
  }
};

/// Element of the tensor algebra T(X) with exact rational coefficients.
/// Zero coefficients are never stored; terms are kept sorted by <_L.
class NcPoly {
public:
  using Term = std::pair<Word, Rational>;
  using Terms = std::vector<Term>;

  NcPoly() = default;
  NcPoly(const Rational& c); // NOLINT: scalars embed as constants

  static NcPoly monomial(Word w, Rational c = 1);
  static NcPoly variable(unsigned i) { return monomial(Word::letter(i)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Word& w) const;

  /// True for the zero polynomial too.
  bool is_homogeneous() const;
  /// Largest word length in the support (0 for constants and zero).
  std::size_t degree() const;
  /// Homogeneous component of the given degree.
  NcPoly component(std::size_t degree) const;
  /// Image under x_i -> 0 for i > l.
  NcPoly truncate_variables(unsigned l) const;

  void add_term(const Word& w, const Rational& c);

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Rational& c);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

  /// Signed sum, terms in <_L-descending order, e.g. "x2*x1 - 1/2*x1*x2".
  std::string str() const;
  /// [{"coeff": "p/q", "word": [i, j, ...]}, ...] in <_L-descending order.
  nlohmann::json to_json() const;

private:
  Terms terms_;
};

/// <_L-maximal word of the support. Throws std::domain_error on zero.
Word sup(const NcPoly& p);

} // namespace rbx

#endif
