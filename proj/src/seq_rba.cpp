#include "rbx/seq_rba.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace rbx {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b)
    throw std::invalid_argument("sequence length mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
}

} // namespace

PolySeq PolySeq::constant(std::size_t length, const NcPoly& value) {
  return PolySeq(std::vector<NcPoly>(length, value));
}

bool PolySeq::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const NcPoly& p) { return p.is_zero(); });
}

std::string PolySeq::str(std::size_t max_entries) const {
  std::size_t shown = max_entries == 0 ? length() : std::min(max_entries, length());
  std::string out;
  for (std::size_t p = 0; p < shown; ++p)
    out += "[" + std::to_string(p + 1) + "] " + entries[p].str() + "\n";
  if (shown < length())
    out += "... (" + std::to_string(length() - shown) + " more entries)\n";
  return out;
}

nlohmann::json PolySeq::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& e : entries)
    arr.push_back(e.to_json());
  return arr;
}

PolySeq operator+(const PolySeq& a, const PolySeq& b) {
  require_same_length(a.length(), b.length());
  PolySeq out = a;
  for (std::size_t p = 0; p < a.length(); ++p)
    out.entries[p] += b.entries[p];
  return out;
}

PolySeq operator-(const PolySeq& a, const PolySeq& b) {
  require_same_length(a.length(), b.length());
  PolySeq out = a;
  for (std::size_t p = 0; p < a.length(); ++p)
    out.entries[p] -= b.entries[p];
  return out;
}

PolySeq operator*(const PolySeq& a, const PolySeq& b) {
  require_same_length(a.length(), b.length());
  PolySeq out;
  out.entries.reserve(a.length());
  for (std::size_t p = 0; p < a.length(); ++p)
    out.entries.push_back(a.entries[p] * b.entries[p]);
  return out;
}

PolySeq operator*(const Rational& c, const PolySeq& a) {
  PolySeq out = a;
  for (auto& e : out.entries)
    e *= c;
  return out;
}

PolySeq rho(const PolySeq& s) {
  PolySeq out;
  out.entries.reserve(s.length());
  NcPoly running;
  for (std::size_t p = 0; p < s.length(); ++p) {
    out.entries.push_back(running);
    running += s.entries[p];
  }
  return out;
}

PolySeq delta(const PolySeq& s) {
  if (s.length() < 2)
    throw std::invalid_argument("delta needs a sequence of length >= 2");
  PolySeq out;
  out.entries.reserve(s.length() - 1);
  for (std::size_t p = 0; p + 1 < s.length(); ++p)
    out.entries.push_back(s.entries[p + 1] - s.entries[p]);
  return out;
}

PolySeq generator(std::size_t length) {
  if (length < 1)
    throw std::invalid_argument("generator needs length >= 1");
  PolySeq out;
  out.entries.reserve(length);
  for (std::size_t p = 1; p <= length; ++p)
    out.entries.push_back(NcPoly::variable(static_cast<unsigned>(p)));
  return out;
}

std::size_t required_length(std::size_t identity_degree) { return identity_degree + 2; }

// ---------------------------------------------------------------------------

SeqAlgebra::SeqAlgebra(std::size_t length, Rational theta)
    : length_(length), theta_(std::move(theta)) {
  if (length_ < 1)
    throw std::invalid_argument("SeqAlgebra needs length >= 1");
  if (theta_.is_zero())
    throw std::invalid_argument("SeqAlgebra needs nonzero weight (use IntegralAlgebra for 0)");
}

void SeqAlgebra::check(const PolySeq& a) const { require_same_length(a.length(), length_); }

PolySeq SeqAlgebra::zero() const { return PolySeq::constant(length_, NcPoly{}); }
PolySeq SeqAlgebra::one() const { return PolySeq::constant(length_, NcPoly(Rational(1))); }

PolySeq SeqAlgebra::add(const PolySeq& a, const PolySeq& b) const {
  check(a);
  return a + b;
}
PolySeq SeqAlgebra::sub(const PolySeq& a, const PolySeq& b) const {
  check(a);
  return a - b;
}
PolySeq SeqAlgebra::scale(const Rational& c, const PolySeq& a) const {
  check(a);
  return c * a;
}
PolySeq SeqAlgebra::mul(const PolySeq& a, const PolySeq& b) const {
  check(a);
  return a * b;
}
PolySeq SeqAlgebra::R(const PolySeq& a) const {
  check(a);
  return theta_.is_one() ? rho(a) : theta_ * rho(a);
}
bool SeqAlgebra::equal(const PolySeq& a, const PolySeq& b) const {
  check(a);
  check(b);
  return a == b;
}

// ---------------------------------------------------------------------------

std::string RatSeq::str() const {
  std::string out = "(";
  for (std::size_t p = 0; p < entries.size(); ++p)
    out += (p ? ", " : "") + entries[p].str();
  return out + ")";
}

RatSeqAlgebra::RatSeqAlgebra(std::size_t length, Rational theta)
    : length_(length), theta_(std::move(theta)) {
  if (length_ < 1)
    throw std::invalid_argument("RatSeqAlgebra needs length >= 1");
  if (theta_.is_zero())
    throw std::invalid_argument("RatSeqAlgebra needs nonzero weight");
}

void RatSeqAlgebra::check(const RatSeq& a) const { require_same_length(a.length(), length_); }

RatSeq RatSeqAlgebra::zero() const { return {std::vector<Rational>(length_)}; }
RatSeq RatSeqAlgebra::one() const { return {std::vector<Rational>(length_, Rational(1))}; }

RatSeq RatSeqAlgebra::add(const RatSeq& a, const RatSeq& b) const {
  check(a);
  check(b);
  RatSeq out = a;
  for (std::size_t p = 0; p < length_; ++p)
    out.entries[p] += b.entries[p];
  return out;
}
RatSeq RatSeqAlgebra::sub(const RatSeq& a, const RatSeq& b) const {
  check(a);
  check(b);
  RatSeq out = a;
  for (std::size_t p = 0; p < length_; ++p)
    out.entries[p] -= b.entries[p];
  return out;
}
RatSeq RatSeqAlgebra::scale(const Rational& c, const RatSeq& a) const {
  check(a);
  RatSeq out = a;
  for (auto& e : out.entries)
    e *= c;
  return out;
}
RatSeq RatSeqAlgebra::mul(const RatSeq& a, const RatSeq& b) const {
  check(a);
  check(b);
  RatSeq out = a;
  for (std::size_t p = 0; p < length_; ++p)
    out.entries[p] *= b.entries[p];
  return out;
}
RatSeq RatSeqAlgebra::R(const RatSeq& a) const {
  check(a);
  RatSeq out = zero();
  Rational running;
  for (std::size_t p = 0; p < length_; ++p) {
    out.entries[p] = theta_ * running;
    running += a.entries[p];
  }
  return out;
}
bool RatSeqAlgebra::equal(const RatSeq& a, const RatSeq& b) const {
  check(a);
  check(b);
  return a == b;
}

// ---------------------------------------------------------------------------

IntegralAlgebra::IntegralAlgebra(std::size_t max_degree) : max_degree_(max_degree) {}

TPoly IntegralAlgebra::zero() const { return {std::vector<NcPoly>(max_degree_ + 1)}; }

TPoly IntegralAlgebra::one() const {
  TPoly out = zero();
  out.coeffs[0] = NcPoly(Rational(1));
  return out;
}

TPoly IntegralAlgebra::add(const TPoly& a, const TPoly& b) const {
  TPoly out = a;
  for (std::size_t k = 0; k <= max_degree_; ++k)
    out.coeffs[k] += b.coeffs[k];
  return out;
}

TPoly IntegralAlgebra::sub(const TPoly& a, const TPoly& b) const {
  TPoly out = a;
  for (std::size_t k = 0; k <= max_degree_; ++k)
    out.coeffs[k] -= b.coeffs[k];
  return out;
}

TPoly IntegralAlgebra::scale(const Rational& c, const TPoly& a) const {
  TPoly out = a;
  for (auto& e : out.coeffs)
    e *= c;
  return out;
}

TPoly IntegralAlgebra::mul(const TPoly& a, const TPoly& b) const {
  TPoly out = zero();
  for (std::size_t i = 0; i <= max_degree_; ++i) {
    if (a.coeffs[i].is_zero())
      continue;
    for (std::size_t j = 0; i + j <= max_degree_; ++j)
      out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

TPoly IntegralAlgebra::R(const TPoly& a) const {
  TPoly out = zero();
  for (std::size_t k = 0; k < max_degree_; ++k)
    out.coeffs[k + 1] = a.coeffs[k] * Rational(1, static_cast<long>(k + 1));
  return out;
}

// ---------------------------------------------------------------------------

Rational random_rational(std::mt19937_64& rng, long max_abs_numerator, long max_denominator) {
  std::uniform_int_distribution<long> num(-max_abs_numerator, max_abs_numerator);
  std::uniform_int_distribution<long> den(1, std::max(1L, max_denominator));
  long n = num(rng);
  while (n == 0)
    n = num(rng);
  return Rational(n, den(rng));
}

NcPoly random_ncpoly(std::mt19937_64& rng, const RandomPolyOptions& opts) {
  std::uniform_int_distribution<std::size_t> terms(1, opts.max_terms);
  std::uniform_int_distribution<std::size_t> degree(0, opts.max_degree);
  std::uniform_int_distribution<unsigned> letter(1, opts.variables);
  NcPoly p;
  std::size_t count = terms(rng);
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<unsigned> letters(degree(rng));
    for (auto& l : letters)
      l = letter(rng);
    p.add_term(Word(std::span<const unsigned>(letters)),
               random_rational(rng, opts.max_abs_numerator, opts.max_denominator));
  }
  return p;
}

PolySeq random_polyseq(std::mt19937_64& rng, std::size_t length, const RandomPolyOptions& opts) {
  PolySeq s;
  s.entries.reserve(length);
  for (std::size_t p = 0; p < length; ++p)
    s.entries.push_back(random_ncpoly(rng, opts));
  return s;
}

RatSeq random_ratseq(std::mt19937_64& rng, std::size_t length) {
  RatSeq s;
  s.entries.reserve(length);
  for (std::size_t p = 0; p < length; ++p)
    s.entries.push_back(random_rational(rng, 5, 4));
  return s;
}

TPoly random_tpoly(std::mt19937_64& rng, std::size_t max_degree, const RandomPolyOptions& opts) {
  TPoly out;
  for (std::size_t k = 0; k <= max_degree; ++k)
    out.coeffs.push_back(random_ncpoly(rng, opts));
  return out;
}

// ---------------------------------------------------------------------------

std::size_t linear_rank(std::span<const PolySeq> rows) {
  using Key = std::pair<std::size_t, Word>;
  using Row = std::map<Key, Rational>;
  std::map<Key, Row> pivots; // leading key -> row normalized to 1 there

  for (const auto& seq : rows) {
    Row row;
    for (std::size_t p = 0; p < seq.length(); ++p)
      for (const auto& [w, c] : seq.entries[p].terms())
        row.emplace(Key{p, w}, c);

    while (!row.empty()) {
      auto lead = row.begin();
      auto pivot = pivots.find(lead->first);
      if (pivot == pivots.end()) {
        Rational inv = Rational(1) / lead->second;
        for (auto& [k, c] : row)
          c *= inv;
        Key key = row.begin()->first;
        pivots.emplace(std::move(key), std::move(row));
        break;
      }
      Rational factor = lead->second;
      for (const auto& [k, c] : pivot->second) {
        auto [it, inserted] = row.try_emplace(k, -(factor * c));
        if (!inserted) {
          it->second -= factor * c;
          if (it->second.is_zero())
            row.erase(it);
        }
      }
    }
  }
  return pivots.size();
}

} // namespace rbx
