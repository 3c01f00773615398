#include "rbx/hopf_dynkin.hpp"

#include <algorithm>
#include <numeric>

namespace rbx {

std::size_t word_degree(const GenWord& w) {
  return std::accumulate(w.begin(), w.end(), std::size_t{0});
}

namespace {

void require_same_tag(HopfTag a, HopfTag b) {
  if (a != b)
    throw std::invalid_argument("cannot combine elements of the Spitzer and double Spitzer algebras");
}

std::string coeff_prefix(const Rational& c, bool first, const std::string& body) {
  std::string out;
  Rational mag = c;
  if (c.sign() < 0) {
    out += first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    out += " + ";
  }
  if (body == "1")
    return out + mag.str();
  if (!mag.is_one())
    out += mag.str() + "*";
  return out + body;
}

bool by_degree(const GenWord& a, const GenWord& b) {
  std::size_t da = word_degree(a), db = word_degree(b);
  if (da != db)
    return da < db;
  return a < b;
}

} // namespace

HopfWord::HopfWord(HopfTag tag, Terms terms) : tag_(tag) {
  for (auto& [w, c] : terms)
    add_term(w, c);
}

HopfWord HopfWord::unit(HopfTag tag) { return monomial(tag, {}); }

HopfWord HopfWord::monomial(HopfTag tag, GenWord w, Rational c) {
  for (unsigned d : w)
    if (d == 0)
      throw std::invalid_argument("generator degrees must be positive");
  HopfWord out(tag);
  out.add_term(w, c);
  return out;
}

HopfWord HopfWord::generator(HopfTag tag, unsigned n) {
  if (tag == HopfTag::Spitzer) {
    if (n == 0)
      return unit(tag);
    return monomial(tag, {n});
  }
  return monomial(tag, {n + 1});
}

Rational HopfWord::coeff(const GenWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t HopfWord::max_degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_)
    d = std::max(d, word_degree(w));
  return d;
}

HopfWord HopfWord::component(std::size_t degree) const {
  HopfWord out(tag_);
  for (const auto& [w, c] : terms_)
    if (word_degree(w) == degree)
      out.terms_.emplace(w, c);
  return out;
}

void HopfWord::add_term(const GenWord& w, const Rational& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

HopfWord& HopfWord::operator+=(const HopfWord& o) {
  require_same_tag(tag_, o.tag_);
  for (const auto& [w, c] : o.terms_)
    add_term(w, c);
  return *this;
}

HopfWord& HopfWord::operator-=(const HopfWord& o) {
  require_same_tag(tag_, o.tag_);
  for (const auto& [w, c] : o.terms_)
    add_term(w, -c);
  return *this;
}

HopfWord& HopfWord::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_)
    v *= c;
  return *this;
}

HopfWord operator*(const HopfWord& a, const HopfWord& b) {
  require_same_tag(a.tag_, b.tag_);
  HopfWord out(a.tag_);
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) {
      GenWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, cu * cv);
    }
  return out;
}

std::string render_word(HopfTag tag, const GenWord& w) {
  if (w.empty())
    return "1";
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0)
      out += ' ';
    if (tag == HopfTag::Spitzer)
      out += "E" + std::to_string(w[i]);
    else
      out += "F" + std::to_string(w[i] - 1);
  }
  return out + "]";
}

std::string HopfWord::str() const {
  if (terms_.empty())
    return "0";
  std::vector<GenWord> words;
  for (const auto& [w, c] : terms_)
    words.push_back(w);
  std::sort(words.begin(), words.end(), by_degree);
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i)
    out += coeff_prefix(terms_.at(words[i]), i == 0, render_word(tag_, words[i]));
  return out;
}

nlohmann::json HopfWord::to_json() const {
  std::vector<GenWord> words;
  for (const auto& [w, c] : terms_)
    words.push_back(w);
  std::sort(words.begin(), words.end(), by_degree);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& w : words) {
    nlohmann::json gens = nlohmann::json::array();
    for (unsigned d : w)
      gens.push_back(tag_ == HopfTag::Spitzer ? d : d - 1);
    terms.push_back({{"coeff", terms_.at(w).fraction_str()}, {"word", gens}});
  }
  return {{"algebra", tag_ == HopfTag::Spitzer ? "S" : "C"}, {"terms", terms}};
}

// ---------------------------------------------------------------------------

void TensorElem::add_term(const GenWord& left, const GenWord& right, const Rational& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.emplace(Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  require_same_tag(tag_, o.tag_);
  for (const auto& [k, c] : o.terms_)
    add_term(k.first, k.second, c);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  require_same_tag(tag_, o.tag_);
  for (const auto& [k, c] : o.terms_)
    add_term(k.first, k.second, -c);
  return *this;
}

std::string TensorElem::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string body = render_word(tag_, k.first) + " (x) " + render_word(tag_, k.second);
    Rational mag = c.sign() < 0 ? -c : c;
    out += c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    if (!mag.is_one())
      out += mag.str() + "*";
    out += body;
    first = false;
  }
  return out;
}

TensorElem tensor(const HopfWord& a, const HopfWord& b) {
  require_same_tag(a.tag(), b.tag());
  TensorElem out(a.tag());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms())
      out.add_term(u, v, cu * cv);
  return out;
}

namespace {

// Delta of one basis word: choose, for each letter g_d, a split i + (d - i).
void split_word(const GenWord& w, std::size_t pos, GenWord& left, GenWord& right,
                const Rational& c, TensorElem& out) {
  if (pos == w.size()) {
    out.add_term(left, right, c);
    return;
  }
  unsigned d = w[pos];
  for (unsigned i = 0; i <= d; ++i) {
    if (i > 0)
      left.push_back(i);
    if (i < d)
      right.push_back(d - i);
    split_word(w, pos + 1, left, right, c, out);
    if (i > 0)
      left.pop_back();
    if (i < d)
      right.pop_back();
  }
}

TensorElem coproduct_word(HopfTag tag, const GenWord& w, const Rational& c) {
  TensorElem out(tag);
  GenWord left, right;
  split_word(w, 0, left, right, c, out);
  return out;
}

// (Delta (x) id) or (id (x) Delta) applied to a tensor, as triples.
using Triple = std::map<std::vector<GenWord>, Rational>;

void add_triple(Triple& t, std::vector<GenWord> key, const Rational& c) {
  auto [it, inserted] = t.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      t.erase(it);
  }
}

} // namespace

TensorElem coproduct(const HopfWord& w) {
  TensorElem out(w.tag());
  for (const auto& [word, c] : w.terms())
    out += coproduct_word(w.tag(), word, c);
  return out;
}

bool coassociative_on(const HopfWord& w) {
  TensorElem d = coproduct(w);
  Triple left_first, right_first;
  for (const auto& [k, c] : d.terms()) {
    TensorElem dl = coproduct_word(w.tag(), k.first, c);
    for (const auto& [k2, c2] : dl.terms())
      add_triple(left_first, {k2.first, k2.second, k.second}, c2);
    TensorElem dr = coproduct_word(w.tag(), k.second, c);
    for (const auto& [k2, c2] : dr.terms())
      add_triple(right_first, {k.first, k2.first, k2.second}, c2);
  }
  return left_first == right_first;
}

HopfWord convolution(const LinearMap& phi, const LinearMap& psi, const HopfWord& w) {
  HopfWord out(w.tag());
  TensorElem delta = coproduct(w);
  for (const auto& [k, c] : delta.terms()) {
    HopfWord a = phi(HopfWord::monomial(w.tag(), k.first));
    if (a.is_zero())
      continue;
    HopfWord b = psi(HopfWord::monomial(w.tag(), k.second));
    out += c * (a * b);
  }
  return out;
}

namespace {

// The recursion never mixes tags, so one memo per basis word serves both.
const HopfWord::Terms& antipode_word(const GenWord& w) {
  static std::map<GenWord, HopfWord::Terms> memo;
  if (auto it = memo.find(w); it != memo.end())
    return it->second;
  HopfWord result(HopfTag::Spitzer);
  if (w.empty()) {
    result.add_term({}, 1);
  } else {
    TensorElem delta = coproduct_word(HopfTag::Spitzer, w, 1);
    for (const auto& [k, c] : delta.terms()) {
      if (k.second.empty())
        continue; // the w (x) 1 term carries S(w) itself
      HopfWord left(HopfTag::Spitzer, antipode_word(k.first));
      result -= c * (left * HopfWord::monomial(HopfTag::Spitzer, k.second));
    }
  }
  return memo.emplace(w, result.terms()).first->second;
}

} // namespace

HopfWord antipode(const HopfWord& w) {
  HopfWord out(w.tag());
  for (const auto& [word, c] : w.terms())
    out += c * HopfWord(w.tag(), antipode_word(word));
  return out;
}

HopfWord grading(const HopfWord& w) {
  HopfWord out(w.tag());
  for (const auto& [word, c] : w.terms())
    out.add_term(word, c * Rational(static_cast<long>(word_degree(word))));
  return out;
}

HopfWord identity_map(const HopfWord& w) { return w; }

HopfWord unit_counit(const HopfWord& w) { return w.counit() * HopfWord::unit(w.tag()); }

HopfWord dynkin(const HopfWord& w) { return convolution(antipode, grading, w); }

bool is_primitive(const HopfWord& w) {
  HopfWord one = HopfWord::unit(w.tag());
  TensorElem expected = tensor(w, one);
  expected += tensor(one, w);
  return coproduct(w) == expected;
}

std::vector<HopfWord> group_like_components(HopfTag tag, std::size_t max_degree) {
  std::vector<HopfWord> out;
  for (unsigned d = 1; d <= max_degree; ++d)
    out.push_back(HopfWord::monomial(tag, {d}));
  return out;
}

HopfWord gamma(HopfTag tag, std::span<const HopfWord> h) {
  HopfRing ring{tag};
  HopfWord out = HopfWord::unit(tag);
  for (const auto& part : gamma_components(ring, h))
    out += part;
  return out;
}

NcPoly dynkin_bracket(const NcPoly& p) {
  NcPoly out;
  for (const auto& [w, c] : p.terms()) {
    if (w.empty())
      continue;
    NcPoly acc = NcPoly::variable(w[0]);
    for (std::size_t i = 1; i < w.degree(); ++i) {
      NcPoly x = NcPoly::variable(w[i]);
      acc = acc * x - x * acc;
    }
    out += c * acc;
  }
  return out;
}

} // namespace rbx
