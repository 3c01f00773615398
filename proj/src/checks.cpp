#include "rbx/checks.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "rbx/combinatorics.hpp"
#include "rbx/hopf_dynkin.hpp"
#include "rbx/identities.hpp"
#include "rbx/rb_core.hpp"
#include "rbx/seq_rba.hpp"
#include "rbx/series.hpp"

namespace rbx {

bool CheckReport::passed() const {
  for (const auto& item : items_)
    if (!item.passed)
      return false;
  return true;
}

void CheckReport::expect(const std::string& name, bool ok,
                         const std::function<std::string()>& detail) {
  CheckItem* item = nullptr;
  for (auto& it : items_)
    if (it.name == name)
      item = &it;
  if (!item) {
    items_.push_back({name, 0, true});
    item = &items_.back();
  }
  ++item->cases;
  if (!ok) {
    if (passed() && counterexample_.empty())
      counterexample_ = name + (detail ? ": " + detail() : std::string());
    item->passed = false;
  }
}

nlohmann::json CheckReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["check"] = check_;
  for (const auto& [k, v] : params_.items())
    j[k] = v;
  nlohmann::json items = nlohmann::json::array();
  for (const auto& item : items_)
    items.push_back({{"name", item.name}, {"cases", item.cases}, {"passed", item.passed}});
  j["items"] = items;
  j["residual_is_zero"] = passed();
  if (!counterexample_.empty())
    j["counterexample"] = counterexample_;
  if (with_timing)
    j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string CheckReport::str(bool with_timing) const {
  std::ostringstream os;
  os << "check: " << check_ << "\n";
  for (const auto& [k, v] : params_.items())
    os << k << ": " << v.dump() << "\n";
  for (const auto& item : items_)
    os << (item.passed ? "  ok    " : "  FAIL  ") << item.name << " (" << item.cases
       << (item.cases == 1 ? " case" : " cases") << ")\n";
  os << "residual_is_zero: " << (passed() ? "true" : "false") << "\n";
  if (!counterexample_.empty())
    os << "counterexample: " << counterexample_ << "\n";
  if (with_timing)
    os << "elapsed_ms: " << elapsed_ms << "\n";
  return os.str();
}

namespace {

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

std::size_t pick_length(std::size_t len, std::size_t degree) {
  return len != 0 ? len : required_length(degree);
}

std::string tag_name(std::size_t m) { return " n=" + std::to_string(m); }

template <class E>
std::function<std::string()> show_diff(const E& a, const E& b) {
  return [a, b] {
    std::ostringstream os;
    os << "difference\n" << (a - b).str(4);
    return os.str();
  };
}

// Every basis word of degree d in the free algebra on generators of
// degrees 1, 2, ...: one per composition of d.
std::vector<GenWord> words_of_degree(std::size_t d) {
  std::vector<GenWord> out;
  for (const auto& comp : compositions(d))
    out.emplace_back(comp.begin(), comp.end());
  return out;
}

} // namespace

// ---------------------------------------------------------------------------

CheckReport check_spitzer(std::size_t n, std::size_t len) {
  Timer timer;
  CheckReport report("spitzer");
  const std::size_t L = pick_length(len, n);
  report.params()["n"] = n;
  report.params()["len"] = L;
  SeqAlgebra alg(L);
  PolySeq X = alg.generator();

  std::vector<PolySeq> C;
  for (std::size_t q = 1; q <= n; ++q)
    C.push_back(C_word(alg, X, q));
  auto G = gamma_components(alg, std::span<const PolySeq>(C));
  for (std::size_t m = 1; m <= n; ++m) {
    PolySeq iter = iterate_left(alg, X, m);
    report.expect("(RX)^[n] from C^(1..n)" + tag_name(m), alg.equal(G[m - 1], iter), show_diff(G[m - 1], iter));

    PolySeq sum = alg.zero();
    for (std::size_t q = 1; q <= m; ++q)
      sum = alg.add(sum, alg.mul(iterate_left(alg, X, m - q), C[q - 1]));
    PolySeq lhs = alg.scale(Rational(static_cast<long>(m)), iter);
    report.expect("grading" + tag_name(m), alg.equal(lhs, sum), show_diff(lhs, sum));
  }

  auto Xs = spitzer_series(alg, X, n);
  auto psi = psi_series(alg, X, n);
  auto lhs = series_derivative(alg, Xs);
  auto rhs = series_mul(alg, Xs, psi);
  report.expect("psi", series_equal(alg, lhs, rhs));

  std::mt19937_64 rng(11);
  RatSeqAlgebra comm(L);
  for (int t = 0; t < 5; ++t) {
    RatSeq a = random_ratseq(rng, L);
    auto left = spitzer_series(comm, a, n);
    auto right = spitzer_exponential(comm, a, n);
    report.expect("commutative exp(R log(1+at))", series_equal(comm, left, right));
  }
  report.elapsed_ms = timer.ms();
  return report;
}

CheckReport check_double_spitzer(std::size_t n, std::size_t len) {
  Timer timer;
  CheckReport report("double-spitzer");
  const std::size_t L = pick_length(len, n);
  report.params()["n"] = n;
  report.params()["len"] = L;
  SeqAlgebra alg(L);
  DoubleProductAlgebra<SeqAlgebra> dp(alg);
  PolySeq X = alg.generator();

  std::vector<PolySeq> c;
  for (std::size_t q = 1; q <= n; ++q)
    c.push_back(c_word(alg, X, q));
  auto G = gamma_components(dp, std::span<const PolySeq>(c));
  for (std::size_t m = 1; m <= n; ++m) {
    PolySeq expected = alg.mul(iterate_left(alg, X, m - 1), X);
    report.expect("(RX)^[n-1] X from c^(1..n)" + tag_name(m), alg.equal(G[m - 1], expected),
                  show_diff(G[m - 1], expected));
  }

  std::vector<HopfWord> d;
  HopfWord series(HopfTag::DoubleSpitzer);
  series += HopfWord::unit(HopfTag::DoubleSpitzer);
  for (const auto& g : group_like_components(HopfTag::DoubleSpitzer, n)) {
    d.push_back(dynkin(g));
    series += g;
  }
  HopfWord back = gamma(HopfTag::DoubleSpitzer, d);
  report.expect("abstract gamma o D", back == series, [&] { return back.str(); });
  report.elapsed_ms = timer.ms();
  return report;
}

CheckReport check_classical(std::size_t n, std::size_t trials) {
  Timer timer;
  CheckReport report("classical");
  const std::size_t L = required_length(n);
  report.params()["n"] = n;
  report.params()["trials"] = trials;
  RatSeqAlgebra alg(L);
  std::mt19937_64 rng(13);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<RatSeq> elems;
    for (std::size_t i = 0; i < n; ++i)
      elems.push_back(random_ratseq(rng, L));
    std::span<const RatSeq> view(elems);
    RatSeq lhs = bs_lhs(alg, view, Side::Left);
    RatSeq partitions = bs_classical_partitions(alg, view);
    RatSeq cyc = bs_classical_cycles(alg, view);
    auto detail = [&] { return "lhs " + lhs.str() + ", partitions " + partitions.str(); };
    report.expect("lhs = partitions", alg.equal(lhs, partitions), detail);
    report.expect("partitions = cycles", alg.equal(partitions, cyc));
    report.expect("left lhs = right lhs", alg.equal(lhs, bs_lhs(alg, view, Side::Right)));
    report.expect("left cut rule", alg.equal(lhs, bs_rhs_cut(alg, view, Side::Left)));
    report.expect("right cut rule", alg.equal(lhs, bs_rhs_cut(alg, view, Side::Right)));

    std::vector<RatSeq> same(n, elems[0]);
    std::span<const RatSeq> same_view(same);
    RatSeq nfact = alg.scale(factorial(static_cast<unsigned>(n)), iterate_left(alg, elems[0], n));
    report.expect("n! (Ra)^[n] = cycle sum", alg.equal(nfact, bs_classical_cycles(alg, same_view)));
  }
  report.elapsed_ms = timer.ms();
  return report;
}

CheckReport check_antipode(std::size_t n, std::size_t len) {
  Timer timer;
  CheckReport report("antipode");
  const std::size_t L = pick_length(len, n + 1);
  report.params()["n"] = n;
  report.params()["len"] = L;

  for (HopfTag tag : {HopfTag::Spitzer, HopfTag::DoubleSpitzer}) {
    std::string suffix = tag == HopfTag::Spitzer ? " (S)" : " (C)";
    for (std::size_t d = 0; d <= n; ++d) {
      for (const auto& w : words_of_degree(d)) {
        HopfWord word = HopfWord::monomial(tag, w);
        HopfWord expected = unit_counit(word);
        report.expect("S * id = unit o counit" + suffix,
                      convolution(antipode, identity_map, word) == expected);
        report.expect("id * S = unit o counit" + suffix,
                      convolution(identity_map, antipode, word) == expected);
      }
    }
    // The antipode images of the generators are again divided powers.
    for (unsigned d = 1; d <= n; ++d) {
      TensorElem expected(tag);
      for (unsigned i = 0; i <= d; ++i) {
        HopfWord left = i == 0 ? HopfWord::unit(tag) : antipode(HopfWord::monomial(tag, {i}));
        HopfWord right =
            i == d ? HopfWord::unit(tag) : antipode(HopfWord::monomial(tag, {d - i}));
        expected += tensor(left, right);
      }
      report.expect("antipode images are divided powers" + suffix,
                    coproduct(antipode(HopfWord::monomial(tag, {d}))) == expected);
    }
  }

  SeqAlgebra alg(L);
  ConjugateAlgebra<SeqAlgebra> conj(alg);
  PolySeq X = alg.generator();
  for (unsigned m = 1; m <= n; ++m) {
    PolySeq got = eval_S(alg, X, antipode(HopfWord::generator(HopfTag::Spitzer, m)));
    PolySeq closed = alg.scale(-1, alg.R(alg.mul(X, iterate_right(conj, X, m - 1))));
    report.expect("S(E_n) = -R(X (R~X)^{n-1})", alg.equal(got, closed), show_diff(got, closed));
  }
  for (unsigned m = 0; m <= n; ++m) {
    PolySeq got = eval_C(alg, X, antipode(HopfWord::generator(HopfTag::DoubleSpitzer, m)));
    PolySeq closed = alg.scale(-1, alg.mul(X, iterate_right(conj, X, m)));
    report.expect("S(F_n) = -X (R~X)^{n}", alg.equal(got, closed), show_diff(got, closed));
  }
  report.elapsed_ms = timer.ms();
  return report;
}

CheckReport check_dynkin(std::size_t n, std::size_t len) {
  Timer timer;
  CheckReport report("dynkin");
  const std::size_t L = pick_length(len, n);
  report.params()["n"] = n;
  report.params()["len"] = L;
  SeqAlgebra alg(L);
  PolySeq X = alg.generator();

  for (unsigned m = 1; m <= n; ++m) {
    HopfWord E = HopfWord::generator(HopfTag::Spitzer, m);
    HopfWord DE = dynkin(E);
    report.expect("D(E_n) primitive", is_primitive(DE), [&] { return DE.str(); });
    PolySeq got = eval_S(alg, X, DE);
    PolySeq expected = C_word(alg, X, m);
    report.expect("D(E_n) = C^(n)(X)", alg.equal(got, expected), show_diff(got, expected));

    HopfWord DF = dynkin(HopfWord::generator(HopfTag::DoubleSpitzer, m - 1));
    report.expect("D(F_{n-1}) primitive", is_primitive(DF), [&] { return DF.str(); });
    PolySeq gotC = eval_C(alg, X, DF);
    PolySeq expectedC = c_word(alg, X, m);
    report.expect("D(F_{n-1}) = c^(n)(X)", alg.equal(gotC, expectedC),
                  show_diff(gotC, expectedC));

    report.expect("(id * D)(E_n) = n E_n",
                  convolution(identity_map, dynkin, E) == Rational(static_cast<long>(m)) * E);
  }

  for (std::size_t d = 1; d <= n; ++d) {
    for (const auto& w : words_of_degree(d)) {
      HopfWord word = HopfWord::monomial(HopfTag::Spitzer, w);
      HopfWord once = dynkin(word);
      report.expect("D^2 = nD in S", dynkin(once) == Rational(static_cast<long>(d)) * once,
                    [&] { return render_word(HopfTag::Spitzer, w); });
    }
  }

  const std::size_t bracket_max = std::min<std::size_t>(n, 5);
  for (std::size_t d = 1; d <= bracket_max; ++d) {
    std::vector<unsigned> letters(d);
    std::vector<Word> words;
    for (unsigned i = 0; i < d; ++i)
      letters[i] = i + 1;
    words.emplace_back(std::span<const unsigned>(letters));
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      for (std::size_t i = 0; i < d; ++i)
        letters[i] = ((mask >> i) & 1) ? 2 : 1;
      words.emplace_back(std::span<const unsigned>(letters));
    }
    for (const auto& w : words) {
      NcPoly once = dynkin_bracket(NcPoly::monomial(w));
      NcPoly twice = dynkin_bracket(once);
      NcPoly scaled = Rational(static_cast<long>(d)) * once;
      report.expect("D^2 = nD on T(X)", twice == scaled, [&] { return w.str(); });
    }
  }

  const std::size_t iso_max = std::min<std::size_t>(n, 5);
  SeqAlgebra iso_alg(required_length(iso_max));
  PolySeq Xi = iso_alg.generator();
  for (std::size_t d = 1; d <= iso_max; ++d) {
    for (const auto& w : words_of_degree(d)) {
      PolySeq viaC = iso_alg.R(eval_C(iso_alg, Xi, HopfWord::monomial(HopfTag::DoubleSpitzer, w)));
      PolySeq viaS = eval_S(iso_alg, Xi, HopfWord::monomial(HopfTag::Spitzer, w));
      report.expect("R-isomorphism C -> S", iso_alg.equal(viaC, viaS), show_diff(viaC, viaS));
    }
  }

  std::vector<HopfWord> d;
  HopfWord series = HopfWord::unit(HopfTag::Spitzer);
  for (const auto& g : group_like_components(HopfTag::Spitzer, n)) {
    d.push_back(dynkin(g));
    series += g;
  }
  HopfWord back = gamma(HopfTag::Spitzer, d);
  report.expect("gamma o D on the group-like series", back == series, [&] { return back.str(); });

  report.elapsed_ms = timer.ms();
  return report;
}

namespace {

template <UnitalRotaBaxterAlgebra A>
void atkinson_on(CheckReport& report, const A& alg, const ElementOf<A>& a, std::size_t order,
                 const std::string& label) {
  auto s = atkinson(alg, a, order);
  auto one = series_one(alg, order);
  ConjugateAlgebra<A> conj(alg);
  bool coeffs_ok = true;
  for (std::size_t k = 0; k <= order; ++k) {
    coeffs_ok = coeffs_ok && alg.equal(s.x[k], iterate_left(alg, a, k)) &&
                alg.equal(s.y[k], iterate_right(conj, a, k));
  }
  report.expect("x = sum (Ra)^[n], y = sum (R~a)^{n}" + label, coeffs_ok);
  report.expect("x (1 + theta a t) y = 1" + label,
                series_equal(alg, atkinson_product(alg, a, s), one));
  report.expect("x x^-1 = x^-1 x = 1" + label,
                series_equal(alg, series_mul(alg, s.x, s.x_inv), one) &&
                    series_equal(alg, series_mul(alg, s.x_inv, s.x), one));
  report.expect("y y^-1 = y^-1 y = 1" + label,
                series_equal(alg, series_mul(alg, s.y, s.y_inv), one) &&
                    series_equal(alg, series_mul(alg, s.y_inv, s.y), one));
}

} // namespace

CheckReport check_atkinson(std::size_t order, std::size_t trials, std::size_t len) {
  Timer timer;
  CheckReport report("atkinson");
  const std::size_t L = pick_length(len, order);
  report.params()["order"] = order;
  report.params()["len"] = L;
  report.params()["trials"] = trials;
  SeqAlgebra alg(L);
  atkinson_on(report, alg, alg.generator(), order, " [standard, a = X]");

  std::mt19937_64 rng(17);
  RatSeqAlgebra comm(L);
  for (std::size_t t = 0; t < trials; ++t)
    atkinson_on(report, comm, random_ratseq(rng, L), order, " [rational sequences]");
  SeqAlgebra half(std::min<std::size_t>(L, 6), Rational(1, 2));
  atkinson_on(report, half, half.generator(), std::min<std::size_t>(order, 4),
              " [weight 1/2, a = X]");
  report.elapsed_ms = timer.ms();
  return report;
}

namespace {

template <RotaBaxterAlgebra A, class Gen>
void structure_checks(CheckReport& report, const A& alg, Gen&& gen, std::size_t trials,
                      const std::string& label) {
  auto eq = [&](const auto& x, const auto& y) { return alg.equal(x, y); };
  auto z = [&](const auto& x) { return is_zero(alg, x); };
  ConjugateAlgebra<A> conj(alg);
  for (std::size_t t = 0; t < trials; ++t) {
    auto a = gen();
    auto b = gen();
    auto c = gen();
    report.expect("Rota-Baxter relation" + label, z(rb_check(alg, a, b)));
    report.expect("Rota-Baxter relation for R~" + label, z(rb_check(conj, a, b)));
    report.expect("R(a *_R b) = R(a) R(b)" + label,
                  eq(alg.R(double_product(alg, a, b)), alg.mul(alg.R(a), alg.R(b))));
    report.expect("*_R associative" + label,
                  eq(double_product(alg, double_product(alg, a, b), c),
                     double_product(alg, a, double_product(alg, b, c))));

    auto p = [&](const auto& x, const auto& y) { return prelie(alg, x, y); };
    auto pl = alg.sub(alg.sub(p(p(a, b), c), p(a, p(b, c))),
                      alg.sub(p(p(b, a), c), p(b, p(a, c))));
    report.expect("left pre-Lie relation" + label, z(pl));

    auto lt = [&](const auto& x, const auto& y) { return dendriform(alg, x, y).left; };
    auto gt = [&](const auto& x, const auto& y) { return dendriform(alg, x, y).right; };
    bool dd1 = eq(lt(lt(a, b), c), lt(a, alg.add(lt(b, c), gt(b, c))));
    bool dd2 = eq(lt(gt(a, b), c), gt(a, lt(b, c)));
    bool dd3 = eq(gt(alg.add(lt(a, b), gt(a, b)), c), gt(a, gt(b, c)));
    report.expect("dendriform axioms" + label, dd1 && dd2 && dd3);
    report.expect("a < b + a > b = a *_R b" + label,
                  eq(alg.add(lt(a, b), gt(a, b)), double_product(alg, a, b)));
    report.expect("a > b - b < a = a . b" + label, eq(alg.sub(gt(a, b), lt(b, a)), p(a, b)));

    auto br_pre = alg.sub(p(a, b), p(b, a));
    auto br_star = alg.sub(double_product(alg, a, b), double_product(alg, b, a));
    auto br_expanded = alg.add(
        alg.add(commutator(alg, alg.R(a), b), commutator(alg, a, alg.R(b))),
        alg.scale(alg.theta(), commutator(alg, a, b)));
    report.expect("[a,b]_. = [a,b]_*" + label, eq(br_pre, br_star) && eq(br_pre, br_expanded));

    auto Ra = alg.R(a);
    auto Rb = alg.R(b);
    auto inner = alg.add(alg.add(p(Ra, b), p(a, Rb)), alg.scale(alg.theta(), p(a, b)));
    report.expect("R is Rota-Baxter for the pre-Lie product" + label,
                  eq(p(Ra, Rb), alg.R(inner)));
  }
}

} // namespace

CheckReport check_axioms(std::size_t trials, std::size_t len) {
  Timer timer;
  CheckReport report("axioms");
  report.params()["trials"] = trials;
  report.params()["len"] = len;
  std::mt19937_64 rng(19);

  SeqAlgebra one(len);
  structure_checks(report, one, [&] { return random_polyseq(rng, len); }, trials, " [theta=1]");
  SeqAlgebra half(len, Rational(1, 2));
  structure_checks(report, half, [&] { return random_polyseq(rng, len); }, trials,
                   " [theta=1/2]");
  IntegralAlgebra zero(4);
  structure_checks(report, zero, [&] { return random_tpoly(rng, 4); }, trials, " [theta=0]");

  RatSeqAlgebra comm(len);
  for (std::size_t t = 0; t < trials; ++t) {
    RatSeq a = random_ratseq(rng, len);
    RatSeq b = random_ratseq(rng, len);
    report.expect("Rota-Baxter relation [rational sequences]", is_zero(comm, rb_check(comm, a, b)));
    report.expect("a . b = -ab [rational sequences]",
                  comm.equal(prelie(comm, a, b), comm.scale(-1, comm.mul(a, b))));
  }

  ScaledAlgebra<SeqAlgebra> rescaled(half, Rational(2));
  for (std::size_t t = 0; t < trials; ++t) {
    PolySeq a = random_polyseq(rng, len);
    PolySeq b = random_polyseq(rng, len);
    report.expect("theta^-1 R has weight 1", rescaled.theta() == 1 &&
                                                 is_zero(rescaled, rb_check(rescaled, a, b)));
  }
  report.elapsed_ms = timer.ms();
  return report;
}

} // namespace rbx
