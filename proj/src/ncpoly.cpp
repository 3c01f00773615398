#include "rbx/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rbx {

namespace {

char encode_letter(unsigned index) {
  if (index == 0 || index > Word::max_variable)
    throw std::out_of_range("variable index " + std::to_string(index) +
                            " outside 1.." + std::to_string(Word::max_variable));
  return static_cast<char>(static_cast<unsigned char>(index));
}

} // namespace

Word::Word(std::initializer_list<unsigned> letters) {
  letters_.reserve(letters.size());
  for (unsigned i : letters)
    letters_.push_back(encode_letter(i));
}

Word::Word(std::span<const unsigned> letters) {
  letters_.reserve(letters.size());
  for (unsigned i : letters)
    letters_.push_back(encode_letter(i));
}

Word Word::letter(unsigned index) {
  Word w;
  w.letters_.push_back(encode_letter(index));
  return w;
}

unsigned Word::max_letter() const {
  unsigned m = 0;
  for (std::size_t i = 0; i < degree(); ++i)
    m = std::max(m, (*this)[i]);
  return m;
}

std::vector<unsigned> Word::letters() const {
  std::vector<unsigned> out(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    out[i] = (*this)[i];
  return out;
}

std::string Word::str() const {
  if (empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (i)
      out += '*';
    out += 'x';
    out += std::to_string((*this)[i]);
  }
  return out;
}

bool lex_less(const Word& u, const Word& v) { return u < v; }

NcPoly::NcPoly(const Rational& c) {
  if (!c.is_zero())
    terms_.emplace_back(Word{}, c);
}

NcPoly NcPoly::monomial(Word w, Rational c) {
  NcPoly p;
  if (!c.is_zero())
    p.terms_.emplace_back(std::move(w), std::move(c));
  return p;
}

namespace {

template <class Terms>
auto find_word(Terms& t, const Word& w) {
  return std::lower_bound(t.begin(), t.end(), w,
                          [](const NcPoly::Term& a, const Word& b) { return a.first < b; });
}

// Sorted union of two sorted term lists, adding coefficients; sign is +1 or -1
// and applies to b.
NcPoly::Terms merge_terms(const NcPoly::Terms& a, const NcPoly::Terms& b, int sign) {
  NcPoly::Terms out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      out.push_back(*i++);
    } else if (j->first < i->first) {
      out.push_back(*j++);
      if (sign < 0)
        out.back().second = -out.back().second;
    } else {
      Rational c = sign < 0 ? i->second - j->second : i->second + j->second;
      if (!c.is_zero())
        out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  for (; j != b.end(); ++j) {
    out.push_back(*j);
    if (sign < 0)
      out.back().second = -out.back().second;
  }
  return out;
}

} // namespace

Rational NcPoly::coeff(const Word& w) const {
  auto it = find_word(terms_, w);
  return it != terms_.end() && it->first == w ? it->second : Rational{};
}

bool NcPoly::is_homogeneous() const {
  if (terms_.empty())
    return true;
  std::size_t d = terms_.front().first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::size_t NcPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_)
    d = std::max(d, w.degree());
  return d;
}

NcPoly NcPoly::component(std::size_t degree) const {
  NcPoly out;
  for (const auto& t : terms_)
    if (t.first.degree() == degree)
      out.terms_.push_back(t);
  return out;
}

NcPoly NcPoly::truncate_variables(unsigned l) const {
  NcPoly out;
  for (const auto& t : terms_)
    if (t.first.max_letter() <= l)
      out.terms_.push_back(t);
  return out;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
  if (c.is_zero())
    return;
  auto it = find_word(terms_, w);
  if (it == terms_.end() || it->first != w) {
    terms_.emplace(it, w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  if (terms_.empty())
    terms_ = o.terms_;
  else if (!o.terms_.empty())
    terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  if (!o.terms_.empty())
    terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_)
    coeff *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  // For left factors of one fixed length, u*v is ordered by (u, v); each such
  // block therefore yields a sorted run with no repeated words.
  std::vector<std::vector<const NcPoly::Term*>> by_degree;
  for (const auto& t : a.terms_) {
    std::size_t d = t.first.degree();
    if (by_degree.size() <= d)
      by_degree.resize(d + 1);
    by_degree[d].push_back(&t);
  }
  NcPoly::Terms acc;
  for (const auto& block : by_degree) {
    if (block.empty())
      continue;
    NcPoly::Terms run;
    run.reserve(block.size() * b.terms_.size());
    for (const NcPoly::Term* u : block)
      for (const auto& [v, cv] : b.terms_)
        run.emplace_back(u->first * v, u->second * cv);
    acc = acc.empty() ? std::move(run) : merge_terms(acc, run, 1);
  }
  NcPoly out;
  out.terms_ = std::move(acc);
  return out;
}

std::string NcPoly::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    first = false;
    if (w.empty()) {
      out += mag.str();
    } else {
      if (!mag.is_one())
        out += mag.str() + "*";
      out += w.str();
    }
  }
  return out;
}

nlohmann::json NcPoly::to_json() const {
  auto arr = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    arr.push_back({{"coeff", it->second.fraction_str()}, {"word", it->first.letters()}});
  return arr;
}

Word sup(const NcPoly& p) {
  if (p.is_zero())
    throw std::domain_error("sup of the zero polynomial");
  return p.terms().back().first;
}

} // namespace rbx
