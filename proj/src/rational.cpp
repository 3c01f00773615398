#include "rbx/rational.hpp"

#include <cctype>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace rbx {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

mpz_class mpz_from(i128 v) {
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return v < 0 ? mpz_class(-out) : out;
}

constexpr i128 small_max = INT64_MAX;

} // namespace

Rational::Rational(long num, long den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  assign_reduced(num, den);
}

Rational::Rational(const mpq_class& value) {
  mpq_class v(value);
  v.canonicalize();
  assign(v);
}

void Rational::assign_reduced(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num == 0)
    den = 1;
  if (num <= small_max && num >= -small_max && den <= small_max) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(mpz_from(num), mpz_from(den));
  num_ = 0;
  den_ = 1;
}

void Rational::assign(const mpq_class& v) {
  const mpz_class& n = v.get_num();
  const mpz_class& d = v.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != LONG_MIN) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(v);
  num_ = 0;
  den_ = 1;
}

mpq_class Rational::to_mpq() const {
  if (big_)
    return *big_;
  return mpq_class(mpz_from(num_), mpz_from(den_));
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
      ++end;
    return end;
  };
  std::size_t num_end = digits(pos);
  if (num_end == pos)
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  mpz_class num(std::string(text.substr(pos, num_end - pos)));
  mpz_class den(1);
  pos = num_end;
  if (pos < text.size() && text[pos] == '/') {
    std::size_t den_end = digits(pos + 1);
    if (den_end == pos + 1)
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    den = mpz_class(std::string(text.substr(pos + 1, den_end - pos - 1)));
    pos = den_end;
  }
  if (pos != text.size())
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  if (negative)
    num = -num;
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (big_)
    return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::fraction_str() const {
  if (big_)
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t sum;
      if (!__builtin_add_overflow(num_, o.num_, &sum) && sum != INT64_MIN) {
        num_ = sum;
        return *this;
      }
      assign_reduced(static_cast<i128>(num_) + o.num_, 1);
      return *this;
    }
    if (den_ == o.den_) {
      assign_reduced(static_cast<i128>(num_) + o.num_, den_);
      return *this;
    }
    assign_reduced(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                   static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t prod;
      if (!__builtin_mul_overflow(num_, o.num_, &prod) && prod != INT64_MIN) {
        num_ = prod;
        return *this;
      }
      assign_reduced(static_cast<i128>(num_) * o.num_, 1);
      return *this;
    }
    // Cross-cancel first; the result is then already in lowest terms.
    std::int64_t g1 = std::gcd(num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_, den_);
    if (g1 == 0)
      g1 = 1;
    if (g2 == 0)
      g2 = 1;
    i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    assign_reduced(n, d);
    return *this;
  }
  assign(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  if (!big_ && !o.big_) {
    assign_reduced(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
  }
  assign(to_mpq() / o.to_mpq());
  return *this;
}

Rational operator-(const Rational& a) {
  Rational out;
  if (a.big_)
    out.assign(mpq_class(-*a.big_));
  else {
    out.num_ = -a.num_;
    out.den_ = a.den_;
  }
  return out;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

} // namespace rbx
