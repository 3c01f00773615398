#include <doctest.h>

#include <random>
#include <vector>

#include "rbx/combinatorics.hpp"
#include "rbx/hopf_dynkin.hpp"
#include "rbx/seq_rba.hpp"

using namespace rbx;

namespace {

const HopfTag S = HopfTag::Spitzer;
const HopfTag C = HopfTag::DoubleSpitzer;

HopfWord E(unsigned n) { return HopfWord::generator(S, n); }
HopfWord F(unsigned n) { return HopfWord::generator(C, n); }

HopfWord random_word(std::mt19937_64& rng, HopfTag tag, std::size_t max_degree) {
  std::uniform_int_distribution<unsigned> deg(1, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  HopfWord out(tag);
  for (int t = 0; t < 3; ++t) {
    GenWord w;
    std::size_t total = 0;
    while (true) {
      unsigned d = deg(rng);
      if (total + d > max_degree || coeff(rng) == 0)
        break;
      w.push_back(d);
      total += d;
    }
    out.add_term(w, coeff(rng));
  }
  return out;
}

// Every word of degree <= n over generator degrees 1..n.
std::vector<GenWord> words_up_to(std::size_t n) {
  std::vector<GenWord> out;
  for (std::size_t d = 0; d <= n; ++d)
    for (const auto& comp : compositions(d))
      out.emplace_back(comp.begin(), comp.end());
  return out;
}

// Gamma by the composition sum, term by term.
template <class Ring>
typename Ring::Element gamma_by_compositions(const Ring& ring, std::span<const typename Ring::Element> h,
                                              std::size_t n) {
  auto acc = ring.zero();
  for (const auto& comp : compositions(n)) {
    Rational denom(1);
    std::size_t partial = 0;
    auto term = h[comp[0] - 1];
    for (std::size_t i = 0; i < comp.size(); ++i) {
      partial += comp[i];
      denom *= Rational(static_cast<long>(partial));
      if (i > 0)
        term = ring.mul(term, h[comp[i] - 1]);
    }
    acc = ring.add(acc, ring.scale(Rational(1) / denom, term));
  }
  return acc;
}

} // namespace

TEST_SUITE("hopf_dynkin") {

TEST_CASE("generators and rendering") {
  CHECK(E(0) == HopfWord::unit(S));
  CHECK(E(2).str() == "[E2]");
  CHECK(F(1).str() == "[F1]");
  CHECK(F(0).coeff({1}) == Rational(1));
  CHECK(HopfWord::unit(C).str() == "1");
  CHECK(HopfWord(S).str() == "0");
  HopfWord h = E(2) - Rational(1, 2) * (E(1) * E(1));
  CHECK(h.str() == "-1/2*[E1 E1] + [E2]");
  CHECK(h.max_degree() == 2);
  CHECK(h.component(2) == h);
  CHECK(h.to_json()["terms"][0]["coeff"] == "-1/2");
  CHECK_THROWS_AS(HopfWord::monomial(S, {0}), std::invalid_argument);
  CHECK_THROWS_AS(E(1) + F(1), std::invalid_argument);
  CHECK_THROWS_AS(E(1) * F(1), std::invalid_argument);
}

TEST_CASE("coproduct on generators") {
  TensorElem expected(S);
  expected.add_term({}, {2}, 1);
  expected.add_term({1}, {1}, 1);
  expected.add_term({2}, {}, 1);
  CHECK(coproduct(E(2)) == expected);
  CHECK(coproduct(E(2)).str() == "1 (x) [E2] + [E1] (x) [E1] + [E2] (x) 1");

  TensorElem expected_c(C);
  expected_c.add_term({}, {2}, 1);
  expected_c.add_term({1}, {1}, 1);
  expected_c.add_term({2}, {}, 1);
  CHECK(coproduct(F(1)) == expected_c);
  CHECK(coproduct(F(1)).str() == "1 (x) [F1] + [F0] (x) [F0] + [F1] (x) 1");
}

TEST_CASE("bialgebra axioms") {
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(coassociative_on(E(n)));
    CHECK(coassociative_on(F(n)));
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    HopfWord a = random_word(rng, S, 5), b = random_word(rng, S, 5);
    CHECK(coassociative_on(a));
    // Delta is multiplicative.
    TensorElem da = coproduct(a), db = coproduct(b);
    TensorElem prod(S);
    for (const auto& [ka, ca] : da.terms())
      for (const auto& [kb, cb] : db.terms()) {
        GenWord l = ka.first, r = ka.second;
        l.insert(l.end(), kb.first.begin(), kb.first.end());
        r.insert(r.end(), kb.second.begin(), kb.second.end());
        prod.add_term(l, r, ca * cb);
      }
    CHECK(coproduct(a * b) == prod);
  }
  // Cocommutative on generators.
  for (unsigned n = 1; n <= 6; ++n) {
    TensorElem d = coproduct(E(n)), flipped(S);
    for (const auto& [k, c] : d.terms())
      flipped.add_term(k.second, k.first, c);
    CHECK(flipped == d);
  }
}

TEST_CASE("antipode") {
  CHECK(antipode(HopfWord::unit(S)) == HopfWord::unit(S));
  CHECK(antipode(E(1)) == Rational(-1) * E(1));
  CHECK(antipode(E(2)) == E(1) * E(1) - E(2));
  for (const auto& w : words_up_to(6)) {
    HopfWord h = HopfWord::monomial(S, w);
    HopfWord expected = unit_counit(h);
    CHECK(convolution(antipode, identity_map, h) == expected);
    CHECK(convolution(identity_map, antipode, h) == expected);
  }
  // Anti-multiplicative.
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    HopfWord a = random_word(rng, C, 4), b = random_word(rng, C, 4);
    CHECK(antipode(a * b) == antipode(b) * antipode(a));
  }
}

TEST_CASE("convolution is associative") {
  std::mt19937_64 rng(5);
  LinearMap maps[] = {antipode, grading, identity_map};
  for (int i = 0; i < 10; ++i) {
    HopfWord w = random_word(rng, S, 5);
    auto left = [&](const HopfWord& x) {
      return convolution([&](const HopfWord& y) { return convolution(maps[0], maps[1], y); },
                         maps[2], x);
    };
    auto right = [&](const HopfWord& x) {
      return convolution(maps[0],
                         [&](const HopfWord& y) { return convolution(maps[1], maps[2], y); }, x);
    };
    CHECK(left(w) == right(w));
  }
}

TEST_CASE("Dynkin operator") {
  CHECK(dynkin(F(0)) == F(0));
  CHECK(dynkin(E(1)) == E(1));
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(is_primitive(dynkin(E(n))));
    CHECK(is_primitive(dynkin(F(n - 1))));
    // (id * D) on the group-like series is the grading.
    CHECK(convolution(identity_map, dynkin, E(n)) == Rational(static_cast<long>(n)) * E(n));
  }
  CHECK_FALSE(is_primitive(E(2)));
  CHECK_FALSE(is_primitive(HopfWord::unit(S)));
  CHECK(is_primitive(E(1)));
  for (const auto& w : words_up_to(5)) {
    HopfWord h = HopfWord::monomial(S, w);
    CHECK(dynkin(dynkin(h)) == Rational(static_cast<long>(word_degree(w))) * dynkin(h));
  }
}

TEST_CASE("Gamma") {
  HopfRing ring{S};
  // Only h_1: the exponential.
  std::vector<HopfWord> h{E(1), HopfWord(S), HopfWord(S), HopfWord(S)};
  auto parts = gamma_components(ring, std::span<const HopfWord>(h));
  HopfWord power = HopfWord::unit(S);
  for (std::size_t k = 1; k <= 4; ++k) {
    power = power * E(1);
    CHECK(parts[k - 1] == (Rational(1) / factorial(static_cast<unsigned>(k))) * power);
  }
  // General h against the composition sum.
  std::mt19937_64 rng(6);
  std::vector<HopfWord> g;
  for (unsigned i = 1; i <= 5; ++i)
    g.push_back(random_word(rng, S, i).component(i) + E(i));
  auto fast = gamma_components(ring, std::span<const HopfWord>(g));
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(fast[n - 1] == gamma_by_compositions(ring, std::span<const HopfWord>(g), n));

  // Round trip on the group-like series.
  std::vector<HopfWord> d;
  for (unsigned n = 1; n <= 6; ++n)
    d.push_back(dynkin(E(n)));
  HopfWord expected = HopfWord::unit(S);
  for (unsigned n = 1; n <= 6; ++n)
    expected += E(n);
  CHECK(gamma(S, d) == expected);
}

TEST_CASE("evaluation") {
  SeqAlgebra alg(5);
  PolySeq X = alg.generator();
  CHECK(eval_S(alg, X, E(2)).entry(3) == NcPoly::monomial({1, 2}));
  CHECK(eval_S(alg, X, E(2)) == iterate_left(alg, X, 2));
  CHECK(eval_S(alg, X, HopfWord::unit(S) + E(1)) == alg.add(alg.one(), alg.R(X)));
  CHECK(eval_C(alg, X, F(0)) == X);
  CHECK(eval_C(alg, X, F(1) * F(0)) ==
        double_product(alg, alg.mul(alg.R(X), X), X));
  CHECK_THROWS_AS(eval_C(alg, X, HopfWord::unit(C)), std::domain_error);
  CHECK_THROWS_AS(eval_C(alg, X, E(1)), std::invalid_argument);
  CHECK_THROWS_AS(eval_S(alg, X, F(1)), std::invalid_argument);

  // R carries C onto S.
  SeqAlgebra big(7);
  PolySeq Y = big.generator();
  for (const auto& w : words_up_to(5)) {
    if (w.empty())
      continue;
    // F_i and E_(i+1) share the stored degree i + 1.
    HopfWord in_c = HopfWord::monomial(C, w);
    HopfWord in_s = HopfWord::monomial(S, w);
    CHECK(big.R(eval_C(big, Y, in_c)) == eval_S(big, Y, in_s));
  }
}

TEST_CASE("evaluated antipode closed forms") {
  SeqAlgebra alg(8);
  PolySeq X = alg.generator();
  for (unsigned n = 1; n <= 6; ++n) {
    // X (R~X)^{n-1} built right to left.
    PolySeq right_iter = alg.one();
    for (unsigned k = 1; k < n; ++k)
      right_iter = R_tilde(alg, alg.mul(X, right_iter));
    PolySeq expected = alg.scale(Rational(-1), alg.R(alg.mul(X, right_iter)));
    CHECK(eval_S(alg, X, antipode(E(n))) == expected);
  }
}

TEST_CASE("dynkin bracket") {
  NcPoly x1 = NcPoly::variable(1), x2 = NcPoly::variable(2);
  CHECK(dynkin_bracket(NcPoly::monomial({1, 2})) == x1 * x2 - x2 * x1);
  CHECK(dynkin_bracket(NcPoly(Rational(3))).is_zero());
  NcPoly w = NcPoly::monomial({1, 2, 1, 1});
  CHECK(dynkin_bracket(dynkin_bracket(w)) == Rational(4) * dynkin_bracket(w));
}

}
