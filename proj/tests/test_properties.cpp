#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "rbx/free_rba.hpp"
#include "rbx/hopf_dynkin.hpp"
#include "rbx/identities.hpp"
#include "rbx/ncqsym.hpp"
#include "rbx/rb_core.hpp"
#include "rbx/seq_rba.hpp"

using namespace rbx;

namespace {

HopfWord random_hopf(std::mt19937_64& rng, HopfTag tag) {
  std::uniform_int_distribution<unsigned> deg(1, 3), len(0, 3);
  HopfWord out(tag);
  for (int t = 0; t < 3; ++t) {
    GenWord w;
    for (unsigned i = len(rng); i > 0; --i)
      w.push_back(deg(rng));
    out.add_term(w, random_rational(rng, 3, 2));
  }
  return out;
}

} // namespace

TEST_SUITE("properties") {

TEST_CASE("polynomial ring laws") {
  std::mt19937_64 rng(11);
  RandomPolyOptions opts;
  opts.max_degree = 3;
  for (int i = 0; i < 100; ++i) {
    NcPoly a = random_ncpoly(rng, opts), b = random_ncpoly(rng, opts), c = random_ncpoly(rng, opts);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("Rota-Baxter relation survives the derived constructions") {
  std::mt19937_64 rng(12);
  for (Rational theta : {Rational(1), Rational(1, 2), Rational(-3)}) {
    SeqAlgebra alg(6, theta);
    ConjugateAlgebra<SeqAlgebra> conj(alg);
    DoubleProductAlgebra<SeqAlgebra> dbl(alg);
    for (int i = 0; i < 10; ++i) {
      PolySeq a = random_polyseq(rng, 6), b = random_polyseq(rng, 6), c = random_polyseq(rng, 6);
      CHECK(rb_check(alg, a, b) == alg.zero());
      CHECK(rb_check(conj, a, b) == alg.zero());
      CHECK(rb_check(dbl, a, b) == alg.zero());
      CHECK(double_product(alg, double_product(alg, a, b), c) ==
            double_product(alg, a, double_product(alg, b, c)));
      auto d = dendriform(alg, a, b);
      CHECK(alg.add(d.left, d.right) ==
            alg.add(alg.add(alg.mul(alg.R(a), b), alg.mul(a, alg.R(b))),
                    alg.scale(theta, alg.mul(a, b))));
    }
  }
}

TEST_CASE("normal form is compatible with products and T") {
  std::mt19937_64 rng(13);
  for (Rational theta : {Rational(1), Rational(0), Rational(2, 3)}) {
    for (int i = 0; i < 15; ++i) {
      LTerm s = random_lterm(rng, 2, 2), t = random_lterm(rng, 2, 2);
      LinComb ns = normal_form(s, theta), nt = normal_form(t, theta);
      CHECK(normal_form(LTerm::product({s, t}), theta) == normal_form(ns * nt, theta));
      CHECK(normal_form(LTerm::apply(s), theta) == normal_form(apply_op(ns), theta));
      CHECK(normal_form(ns + nt, theta) == ns + nt);
    }
  }
}

TEST_CASE("evaluation agrees across weights") {
  std::mt19937_64 rng(14);
  for (Rational theta : {Rational(1, 2), Rational(-1)}) {
    SeqAlgebra alg(7, theta);
    PolySeq X = alg.generator();
    for (int i = 0; i < 10; ++i) {
      LTerm t = random_lterm(rng, 3, 3);
      CHECK(eval_hom(t, alg, X) == eval_hom(normal_form(t, theta), alg, X));
    }
  }
}

TEST_CASE("antipode is an involution and D is linear") {
  std::mt19937_64 rng(15);
  for (HopfTag tag : {HopfTag::Spitzer, HopfTag::DoubleSpitzer}) {
    for (int i = 0; i < 15; ++i) {
      HopfWord a = random_hopf(rng, tag), b = random_hopf(rng, tag);
      CHECK(antipode(antipode(a)) == a);
      CHECK(antipode(a + b) == antipode(a) + antipode(b));
      CHECK(dynkin(a + b) == dynkin(a) + dynkin(b));
      CHECK(coassociative_on(a * b));
    }
  }
}

TEST_CASE("random surjections are stable under truncation") {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<unsigned> pick(1, 3);
  for (int i = 0; i < 20; ++i) {
    std::vector<unsigned> v;
    for (unsigned k = pick(rng); k > 0; --k)
      v.push_back(pick(rng));
    // Normalize the values to a surjection onto 1..k.
    std::vector<unsigned> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& x : v)
      x = static_cast<unsigned>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1;
    Surjection f(v);
    for (unsigned l = 1; l <= 6; ++l) {
      NcPoly p = expand(f, l);
      NcPoly q = expand(f, l + 1);
      CHECK(q.truncate_variables(l) == p);
    }
  }
}

TEST_CASE("cut identity at other weights") {
  std::mt19937_64 rng(17);
  for (Rational theta : {Rational(1, 2), Rational(-2)}) {
    SeqAlgebra alg(6, theta);
    for (std::size_t n = 2; n <= 4; ++n) {
      std::vector<PolySeq> a;
      for (std::size_t i = 0; i < n; ++i)
        a.push_back(random_polyseq(rng, 6));
      for (Side side : {Side::Left, Side::Right})
        CHECK(bs_lhs<SeqAlgebra>(alg, a, side) == bs_rhs_cut<SeqAlgebra>(alg, a, side));
    }
  }
}

}
