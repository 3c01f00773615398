#include "rbx/ncqsym.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rbx/rb_core.hpp"
#include "rbx/seq_rba.hpp"

namespace rbx {

Surjection::Surjection(std::vector<unsigned> values) : values_(std::move(values)) {
  if (values_.empty())
    throw std::invalid_argument("surjection needs at least one value");
  unsigned k = *std::max_element(values_.begin(), values_.end());
  std::vector<bool> hit(k + 1, false);
  for (unsigned v : values_) {
    if (v == 0)
      throw std::invalid_argument("surjection values must be positive");
    hit[v] = true;
  }
  for (unsigned j = 1; j <= k; ++j)
    if (!hit[j])
      throw std::invalid_argument("value " + std::to_string(j) + " missing from the image");
  image_size_ = k;
}

Surjection Surjection::parse(std::string_view text) {
  std::vector<unsigned> values;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad surjection value '" + item + "'");
    }
    if (used != item.size() || v > Word::max_variable)
      throw std::invalid_argument("bad surjection value '" + item + "'");
    values.push_back(static_cast<unsigned>(v));
  }
  return Surjection(std::move(values));
}

Surjection Surjection::identity(std::size_t n) {
  std::vector<unsigned> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<unsigned>(i + 1);
  return Surjection(std::move(v));
}

Surjection Surjection::reversal(std::size_t n) {
  std::vector<unsigned> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<unsigned>(n - i);
  return Surjection(std::move(v));
}

NcPoly expand(const Surjection& f, unsigned l) {
  const std::size_t k = f.image_size();
  NcPoly out;
  if (l < k)
    return out;
  // s holds the current k-subset s_1 < ... < s_k in lexicographic order.
  std::vector<unsigned> s(k);
  for (std::size_t j = 0; j < k; ++j)
    s[j] = static_cast<unsigned>(j + 1);
  std::vector<unsigned> letters(f.size());
  for (;;) {
    for (std::size_t i = 0; i < f.size(); ++i)
      letters[i] = s[f.values()[i] - 1];
    out.add_term(Word(std::span<const unsigned>(letters)), Rational(1));

    std::size_t j = k;
    while (j > 0 && s[j - 1] == l - k + j)
      --j;
    if (j == 0)
      break;
    ++s[j - 1];
    for (std::size_t m = j; m < k; ++m)
      s[m] = s[m - 1] + 1;
  }
  return out;
}

NcPoly elementary(std::size_t n, unsigned l) { return expand(Surjection::identity(n), l); }
NcPoly omega(std::size_t n, unsigned l) { return expand(Surjection::reversal(n), l); }

bool check_bridge(std::size_t n, std::size_t length) {
  SeqAlgebra alg(length);
  PolySeq X = alg.generator();
  PolySeq left = iterate_left(alg, X, n);
  PolySeq right = iterate_right(alg, X, n);
  for (std::size_t l = 0; l + 1 <= length; ++l) {
    if (left.entry(l + 1) != elementary(n, static_cast<unsigned>(l)))
      return false;
    if (right.entry(l + 1) != omega(n, static_cast<unsigned>(l)))
      return false;
  }
  return true;
}

} // namespace rbx
