#ifndef RBX_RATIONAL_HPP
#define RBX_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace rbx {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Values whose numerator and denominator fit in 64 bits are
/// stored inline; anything larger moves to a GMP mpq_class.
class Rational {
public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) { // NOLINT: integers embed implicitly
    if constexpr (sizeof(I) >= sizeof(std::int64_t)) {
      bool too_big = std::is_unsigned_v<I> ? value > static_cast<I>(INT64_MAX)
                                           : value == std::numeric_limits<I>::min();
      if (too_big) {
        big_ = std::make_unique<mpq_class>(mpz_class(std::to_string(value)));
        return;
      }
    }
    num_ = static_cast<std::int64_t>(value);
  }

  Rational(long num, long den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& o)
      : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  /// Accepts "p", "-p", "p/q" and "-p/q" (decimal, no spaces).
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Always "p/q" (denominator printed even when it is 1).
  std::string fraction_str() const;

  mpq_class to_mpq() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
      return a.num_ == b.num_ && a.den_ == b.den_;
    return a.big_ && b.big_ && *a.big_ == *b.big_; // the two forms never overlap
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  // Sets the value from a reduced big rational, shrinking to the inline
  // form when it fits.
  void assign(const mpq_class& v);
  void assign_reduced(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// n! as an exact rational.
Rational factorial(unsigned n);

} // namespace rbx

#endif
