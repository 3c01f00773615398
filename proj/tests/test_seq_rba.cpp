#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "rbx/rb_core.hpp"
#include "rbx/seq_rba.hpp"

using namespace rbx;

namespace {

NcPoly x(unsigned i) { return NcPoly::variable(i); }

} // namespace

TEST_SUITE("seq_rba") {

TEST_CASE("generator and rho") {
  PolySeq X = generator(4);
  REQUIRE(X.length() == 4);
  CHECK(X.entry(1) == x(1));
  CHECK(X.entry(4) == x(4));
  for (std::size_t p = 1; p <= 4; ++p)
    CHECK(X.entry(p).degree() == 1);

  PolySeq r = rho(X);
  CHECK(r.entry(1).is_zero());
  CHECK(r.entry(2) == x(1));
  CHECK(r.entry(3) == x(1) + x(2));
  CHECK(r.entry(4) == x(1) + x(2) + x(3));
  CHECK(rho(PolySeq::constant(5, NcPoly{})).is_zero());
}

TEST_CASE("delta is a left inverse of rho") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    PolySeq s = random_polyseq(rng, 7);
    PolySeq d = delta(rho(s));
    REQUIRE(d.length() == 6);
    for (std::size_t p = 1; p <= 6; ++p)
      CHECK(d.entry(p) == s.entry(p));
  }
  CHECK(delta(PolySeq::constant(4, x(1))).is_zero());
  CHECK_THROWS_AS(delta(generator(1)), std::invalid_argument);
}

TEST_CASE("delta is a weight-one skewderivation") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    PolySeq a = random_polyseq(rng, 6), b = random_polyseq(rng, 6);
    PolySeq da = delta(a), db = delta(b);
    auto cut = [](const PolySeq& s) {
      return PolySeq(std::vector<NcPoly>(s.entries.begin(), s.entries.end() - 1));
    };
    PolySeq residual = delta(a * b) - da * cut(b) - cut(a) * db - da * db;
    CHECK(residual.is_zero());
  }
}

TEST_CASE("required length") {
  CHECK(required_length(1) == 3);
  CHECK(required_length(2) == 4);
  SeqAlgebra alg(required_length(2));
  PolySeq it = iterate_left(alg, alg.generator(), 2);
  CHECK(it.entry(1).is_zero());
  CHECK(it.entry(2).is_zero());
  CHECK(it.entry(3) == x(1) * x(2));
}

TEST_CASE("algebra operations reject mismatched lengths") {
  SeqAlgebra alg(4);
  CHECK_THROWS_AS(alg.add(generator(4), generator(5)), std::invalid_argument);
  CHECK_THROWS_AS(alg.R(generator(3)), std::invalid_argument);
  CHECK_THROWS_AS(generator(4) * generator(3), std::invalid_argument);
  CHECK_THROWS_AS(SeqAlgebra(0), std::invalid_argument);
}

TEST_CASE("weight theta scales the operator") {
  SeqAlgebra half(5, Rational(1, 2));
  PolySeq X = half.generator();
  CHECK(half.R(X) == Rational(1, 2) * rho(X));
  CHECK(half.theta() == Rational(1, 2));
  CHECK(is_zero(half, rb_check(half, X, half.mul(X, X))));
}

TEST_CASE("rational sequences") {
  RatSeqAlgebra alg(5);
  RatSeq a{{1, 2, 3, 4, 5}};
  RatSeq r = alg.R(a);
  CHECK(r == RatSeq{{0, 1, 3, 6, 10}});
  CHECK(alg.one() == RatSeq{{1, 1, 1, 1, 1}});
  CHECK(alg.is_commutative());
  CHECK(r.str() == "(0, 1, 3, 6, 10)");
  CHECK_THROWS_AS(alg.mul(a, RatSeq{{1}}), std::invalid_argument);
}

TEST_CASE("integral algebra") {
  IntegralAlgebra alg(4);
  TPoly one = alg.one();
  TPoly t = alg.R(one);
  REQUIRE(t.coeffs.size() == 5);
  CHECK(t.coeffs[1] == NcPoly(Rational(1)));
  TPoly t2 = alg.R(t);
  CHECK(t2.coeffs[2] == NcPoly(Rational(1, 2)));
  CHECK(alg.theta().is_zero());
}

TEST_CASE("rendering") {
  PolySeq X = generator(3);
  CHECK(X.str() == "[1] x1\n[2] x2\n[3] x3\n");
  CHECK(X.str(2) == "[1] x1\n[2] x2\n... (1 more entries)\n");
  auto j = X.to_json();
  REQUIRE(j.size() == 3);
  CHECK(j[1][0]["word"] == nlohmann::json::array({2}));
}

TEST_CASE("linear rank") {
  PolySeq X = generator(4);
  std::vector<PolySeq> rows{X, rho(X), X + rho(X)};
  CHECK(linear_rank(rows) == 2);
  rows.push_back(X * X);
  CHECK(linear_rank(rows) == 3);
  rows.push_back(Rational(3) * (X * X) - rho(X));
  CHECK(linear_rank(rows) == 3);
  CHECK(linear_rank(std::vector<PolySeq>{}) == 0);
  CHECK(linear_rank(std::vector<PolySeq>{PolySeq::constant(3, NcPoly{})}) == 0);
}

}
