#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rbx/combinatorics.hpp"
#include "rbx/identities.hpp"
#include "rbx/seq_rba.hpp"

using namespace rbx;

namespace {

// Unsigned Stirling numbers of the first kind by their recurrence.
std::vector<std::vector<long>> stirling_first(std::size_t n) {
  std::vector<std::vector<long>> c(n + 1, std::vector<long>(n + 1, 0));
  c[0][0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = 1; k <= m; ++k)
      c[m][k] = c[m - 1][k - 1] + static_cast<long>(m - 1) * c[m - 1][k];
  return c;
}

std::vector<PolySeq> distinct_three(const SeqAlgebra& alg) {
  PolySeq X = alg.generator();
  return {X, alg.R(X), alg.mul(X, X)};
}

} // namespace

TEST_SUITE("identities") {

TEST_CASE("left cut table for n = 3") {
  const std::vector<Perm> order{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}, {1, 3, 2}, {3, 2, 1}, {2, 3, 1}};
  const std::vector<std::string> left{"(1|2|3)", "(21|3)", "(312)", "(1|32)", "(321)", "(2|31)"};
  const std::vector<std::string> right{"(1|2|3)", "(21|3)", "(31|2)", "(1|32)", "(321)", "(231)"};
  for (std::size_t i = 0; i < order.size(); ++i) {
    CHECK(cut_left(order[i]).str() == left[i]);
    CHECK(cut_right(order[i]).str() == right[i]);
    CHECK(cut(order[i], Side::Left).str() == left[i]);
    CHECK(cut(order[i], Side::Right).str() == right[i]);
  }
}

TEST_CASE("identity and reversal") {
  for (std::size_t n = 1; n <= 6; ++n) {
    Perm id(n), rev(n);
    for (std::size_t i = 0; i < n; ++i) {
      id[i] = static_cast<unsigned>(i + 1);
      rev[i] = static_cast<unsigned>(n - i);
    }
    for (Side side : {Side::Left, Side::Right}) {
      CutDecomposition a = cut(id, side), b = cut(rev, side);
      CHECK(a.segments.size() == n);
      CHECK(std::all_of(a.bars.begin(), a.bars.end(), [](bool x) { return x; }));
      CHECK(b.segments.size() == 1);
      CHECK(std::none_of(b.bars.begin(), b.bars.end(), [](bool x) { return x; }));
    }
  }
  CHECK(cut_left({1}).str() == "(1)");
}

TEST_CASE("segment counts follow the Stirling numbers") {
  auto c = stirling_first(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::map<std::size_t, long> left_counts, right_counts;
    for (const auto& sigma : permutations(n)) {
      auto lc = cut_left(sigma);
      CHECK(lc.segments.size() == left_to_right_maxima(sigma));
      // Direct rule: a bar before position i+1 iff it is a new maximum.
      unsigned best = sigma[0];
      for (std::size_t i = 1; i < n; ++i) {
        CHECK(lc.bars[i - 1] == (sigma[i] > best));
        best = std::max(best, sigma[i]);
      }
      ++left_counts[lc.segments.size()];
      ++right_counts[cut_right(sigma).segments.size()];
    }
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK(left_counts[k] == c[n][k]);
      CHECK(right_counts[k] == c[n][k]);
    }
  }
}

TEST_CASE("diamond evaluation") {
  SeqAlgebra alg(5);
  auto a = distinct_three(alg);
  std::span<const PolySeq> s(a);
  const PolySeq &a1 = a[0], &a2 = a[1], &a3 = a[2];
  auto star = [&](const PolySeq& x, const PolySeq& y) { return double_product(alg, x, y); };
  auto pre = [&](const PolySeq& x, const PolySeq& y) { return prelie(alg, x, y); };

  CHECK(diamond_eval(alg, cut_left({2, 1, 3}), s, Side::Left) == star(pre(a2, a1), a3));
  CHECK(diamond_eval(alg, cut_left({3, 2, 1}), s, Side::Left) == pre(pre(a3, a2), a1));
  CHECK(diamond_eval(alg, cut_left({1, 2, 3}), s, Side::Left) == star(star(a1, a2), a3));
  CHECK(diamond_eval(alg, cut_right({3, 2, 1}), s, Side::Right) ==
        prelie_mirror(alg, a3, prelie_mirror(alg, a2, a1)));
  CHECK_THROWS_AS(diamond_eval(alg, cut_left({1, 2}), s, Side::Left), std::invalid_argument);
}

TEST_CASE("n = 1 and n = 2") {
  SeqAlgebra alg(5);
  auto a = distinct_three(alg);
  std::vector<PolySeq> one{a[0]}, two{a[0], a[1]};
  CHECK(bs_lhs<SeqAlgebra>(alg, one, Side::Left) == alg.R(a[0]));

  const PolySeq &a1 = a[0], &a2 = a[1];
  PolySeq lhs = alg.add(alg.R(alg.mul(alg.R(a1), a2)), alg.R(alg.mul(alg.R(a2), a1)));
  CHECK(bs_lhs<SeqAlgebra>(alg, two, Side::Left) == lhs);
  PolySeq display = alg.add(alg.mul(alg.R(a1), alg.R(a2)), alg.R(prelie(alg, a2, a1)));
  CHECK(lhs == display);
  CHECK(alg.R(alg.add(double_product(alg, a1, a2), prelie(alg, a2, a1))) == lhs);
  CHECK(alg.R(alg.add(double_product(alg, a2, a1), prelie(alg, a1, a2))) == lhs);
  CHECK(bs_rhs_cut<SeqAlgebra>(alg, two, Side::Left) == lhs);
  CHECK(bs_rhs_cut<SeqAlgebra>(alg, two, Side::Right) ==
        bs_lhs<SeqAlgebra>(alg, two, Side::Right));
  CHECK_THROWS_AS(bs_lhs<SeqAlgebra>(alg, std::vector<PolySeq>{}, Side::Left),
                  std::invalid_argument);
}

TEST_CASE("n = 3 term by term") {
  SeqAlgebra alg(5);
  auto a = distinct_three(alg);
  std::span<const PolySeq> s(a);
  const PolySeq &a1 = a[0], &a2 = a[1], &a3 = a[2];
  auto R = [&](const PolySeq& x) { return alg.R(x); };
  auto pre = [&](const PolySeq& x, const PolySeq& y) { return prelie(alg, x, y); };
  auto mul = [&](const PolySeq& x, const PolySeq& y) { return alg.mul(x, y); };

  // Each cut permutation against its term of the six-term display.
  std::vector<std::pair<Perm, PolySeq>> terms{
      {{1, 2, 3}, mul(mul(R(a1), R(a2)), R(a3))},
      {{1, 3, 2}, mul(R(a1), R(pre(a3, a2)))},
      {{2, 3, 1}, mul(R(a2), R(pre(a3, a1)))},
      {{2, 1, 3}, mul(R(pre(a2, a1)), R(a3))},
      {{3, 2, 1}, R(pre(pre(a3, a2), a1))},
      {{3, 1, 2}, R(pre(pre(a3, a1), a2))},
  };
  PolySeq display = alg.zero();
  for (const auto& [sigma, term] : terms) {
    CHECK(R(diamond_eval(alg, cut_left(sigma), s, Side::Left)) == term);
    display = alg.add(display, term);
  }
  CHECK(bs_lhs(alg, s, Side::Left) == display);
  CHECK(bs_rhs_cut(alg, s, Side::Left) == display);
  CHECK(bs_rhs_cut(alg, s, Side::Right) == bs_lhs(alg, s, Side::Right));
}

TEST_CASE("bs_lhs is symmetric") {
  std::mt19937_64 rng(3);
  SeqAlgebra alg(6);
  std::vector<PolySeq> a;
  for (int i = 0; i < 4; ++i)
    a.push_back(random_polyseq(rng, 6));
  for (Side side : {Side::Left, Side::Right}) {
    PolySeq base = bs_lhs<SeqAlgebra>(alg, a, side);
    for (const auto& sigma : permutations(4)) {
      std::vector<PolySeq> b;
      for (unsigned v : sigma)
        b.push_back(a[v - 1]);
      CHECK(bs_lhs<SeqAlgebra>(alg, b, side) == base);
    }
  }
}

TEST_CASE("classical forms") {
  std::mt19937_64 rng(4);
  RatSeqAlgebra alg(8);
  RatSeq a1 = random_ratseq(rng, 8), a2 = random_ratseq(rng, 8);
  std::vector<RatSeq> two{a1, a2};
  RatSeq expected = alg.sub(alg.mul(alg.R(a1), alg.R(a2)), alg.R(alg.mul(a1, a2)));
  CHECK(bs_classical_partitions<RatSeqAlgebra>(alg, two) == expected);
  CHECK(bs_classical_cycles<RatSeqAlgebra>(alg, two) == expected);
  CHECK(bs_lhs<RatSeqAlgebra>(alg, two, Side::Left) == expected);

  for (std::size_t n = 3; n <= 6; ++n) {
    std::vector<RatSeq> a;
    for (std::size_t i = 0; i < n; ++i)
      a.push_back(random_ratseq(rng, 8));
    RatSeq parts = bs_classical_partitions<RatSeqAlgebra>(alg, a);
    CHECK(bs_classical_cycles<RatSeqAlgebra>(alg, a) == parts);
    CHECK(bs_lhs<RatSeqAlgebra>(alg, a, Side::Left) == parts);
    CHECK(bs_lhs<RatSeqAlgebra>(alg, a, Side::Right) == parts);
    CHECK(bs_rhs_cut<RatSeqAlgebra>(alg, a, Side::Left) == parts);
    CHECK(bs_rhs_cut<RatSeqAlgebra>(alg, a, Side::Right) == parts);

    std::vector<RatSeq> same(n, a[0]);
    RatSeq nfact = alg.scale(factorial(static_cast<unsigned>(n)), iterate_left(alg, a[0], n));
    CHECK(bs_lhs<RatSeqAlgebra>(alg, same, Side::Left) == nfact);
    CHECK(bs_classical_cycles<RatSeqAlgebra>(alg, same) == nfact);
  }

  SeqAlgebra nc(4);
  std::vector<PolySeq> x{nc.generator()};
  CHECK_THROWS_AS(bs_classical_partitions<SeqAlgebra>(nc, x), std::invalid_argument);
  CHECK_THROWS_AS(bs_classical_cycles<SeqAlgebra>(nc, x), std::invalid_argument);
}

TEST_CASE("commutative degeneration of the segments") {
  std::mt19937_64 rng(5);
  RatSeqAlgebra alg(7);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<RatSeq> a;
    for (std::size_t i = 0; i < n; ++i)
      a.push_back(random_ratseq(rng, 7));
    for (const auto& sigma : permutations(n)) {
      for (Side side : {Side::Left, Side::Right}) {
        CutDecomposition c = cut(sigma, side);
        for (const auto& seg : c.segments) {
          CutDecomposition single{Perm(seg.size()), {}, {{}}};
          std::vector<RatSeq> elems;
          for (std::size_t i = 0; i < seg.size(); ++i) {
            single.perm[i] = static_cast<unsigned>(i + 1);
            single.segments[0].push_back(static_cast<unsigned>(i + 1));
            elems.push_back(a[seg[i] - 1]);
          }
          single.bars.assign(seg.size() - 1, false);
          RatSeq product = elems[0];
          for (std::size_t i = 1; i < elems.size(); ++i)
            product = alg.mul(product, elems[i]);
          Rational sign(seg.size() % 2 == 1 ? 1 : -1);
          CHECK(diamond_eval<RatSeqAlgebra>(alg, single, elems, side) == alg.scale(sign, product));
        }
      }
    }
  }
}

TEST_CASE("verify_bs reports") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (Side side : {Side::Left, Side::Right}) {
      BsReport r = verify_bs(n, side, 1);
      CHECK(r.residual_is_zero);
      CHECK(r.counterexample.empty());
      CHECK(r.lhs_terms == r.rhs_terms);
      auto j = r.to_json(false);
      CHECK(j["n"] == n);
      CHECK(j["side"] == to_string(side));
      CHECK_FALSE(j.contains("elapsed_ms"));
      CHECK(r.to_json(true).contains("elapsed_ms"));
    }
  BsReport rat = verify_bs(4, Side::Right, 2, "ratseq");
  CHECK(rat.residual_is_zero);
  CHECK(rat.carrier == "ratseq");
  CHECK_THROWS_AS(verify_bs(3, Side::Left, 1, "matrices"), std::invalid_argument);
  CHECK(parse_side("right") == Side::Right);
  CHECK_THROWS_AS(parse_side("up"), std::invalid_argument);
}

}
