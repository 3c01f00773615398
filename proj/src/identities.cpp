#include "rbx/identities.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "rbx/seq_rba.hpp"

namespace rbx {

std::string to_string(Side side) { return side == Side::Left ? "left" : "right"; }

Side parse_side(const std::string& text) {
  if (text == "left")
    return Side::Left;
  if (text == "right")
    return Side::Right;
  throw std::invalid_argument("side must be 'left' or 'right', got '" + text + "'");
}

std::string CutDecomposition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i > 0 && bars[i - 1])
      out += '|';
    out += std::to_string(perm[i]);
  }
  return out + ")";
}

namespace {

CutDecomposition from_bars(const Perm& sigma, std::vector<bool> bars) {
  CutDecomposition c{sigma, std::move(bars), {}};
  if (sigma.empty())
    return c;
  c.segments.emplace_back();
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i > 0 && c.bars[i - 1])
      c.segments.emplace_back();
    c.segments.back().push_back(sigma[i]);
  }
  return c;
}

} // namespace

CutDecomposition cut_left(const Perm& sigma) {
  std::vector<bool> bars(sigma.empty() ? 0 : sigma.size() - 1, false);
  unsigned best = sigma.empty() ? 0 : sigma[0];
  for (std::size_t i = 1; i < sigma.size(); ++i) {
    if (sigma[i] > best) {
      bars[i - 1] = true;
      best = sigma[i];
    }
  }
  return from_bars(sigma, std::move(bars));
}

CutDecomposition cut_right(const Perm& sigma) {
  std::vector<bool> bars(sigma.empty() ? 0 : sigma.size() - 1, false);
  if (sigma.size() > 1) {
    unsigned best = sigma.back();
    for (std::size_t i = sigma.size() - 1; i-- > 0;) {
      if (sigma[i] < best) {
        bars[i] = true;
        best = sigma[i];
      }
    }
  }
  return from_bars(sigma, std::move(bars));
}

CutDecomposition cut(const Perm& sigma, Side side) {
  return side == Side::Left ? cut_left(sigma) : cut_right(sigma);
}

nlohmann::json BsReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["n"] = n;
  j["side"] = to_string(side);
  j["carrier"] = carrier;
  std::size_t perms = 1;
  for (std::size_t k = 2; k <= n; ++k)
    perms *= k;
  j["permutations"] = perms;
  j["cases"] = cases;
  j["lhs_terms"] = lhs_terms;
  j["rhs_terms"] = rhs_terms;
  j["residual_is_zero"] = residual_is_zero;
  if (!counterexample.empty())
    j["counterexample"] = counterexample;
  if (with_timing)
    j["elapsed_ms"] = elapsed_ms;
  return j;
}

namespace {

std::size_t term_count(const PolySeq& s) {
  std::size_t count = 0;
  for (const auto& e : s.entries)
    count += e.size();
  return count;
}

std::size_t term_count(const RatSeq& s) {
  std::size_t count = 0;
  for (const auto& e : s.entries)
    count += e.is_zero() ? 0 : 1;
  return count;
}

// X, rho(X), X*X for n <= 3; above that every argument has degree one
// (X, rho(X), then random linear sequences) to keep the expansion small.
std::vector<PolySeq> distinct_arguments(const SeqAlgebra& alg, std::size_t n,
                                        std::mt19937_64& rng) {
  PolySeq X = alg.generator();
  std::vector<PolySeq> elems{X, rho(X)};
  if (n <= 3) {
    elems.push_back(alg.mul(X, X));
  } else {
    RandomPolyOptions opts;
    opts.max_degree = 1;
    while (elems.size() < n) {
      PolySeq s = random_polyseq(rng, alg.length(), opts);
      for (auto& e : s.entries)
        e = e.component(1);
      elems.push_back(std::move(s));
    }
  }
  elems.resize(n);
  return elems;
}

} // namespace

BsReport verify_bs(std::size_t n, Side side, std::size_t trials, const std::string& carrier,
                   unsigned long seed) {
  if (n < 1)
    throw std::invalid_argument("verify_bs needs n >= 1");
  auto start = std::chrono::steady_clock::now();
  BsReport report;
  report.n = n;
  report.side = side;
  report.carrier = carrier;
  report.residual_is_zero = true;
  std::mt19937_64 rng(seed);

  if (carrier == "standard") {
    SeqAlgebra alg(required_length(n));
    std::vector<std::vector<PolySeq>> tuples{distinct_arguments(alg, n, rng)};
    RandomPolyOptions opts;
    opts.max_degree = 1;
    opts.max_terms = 2;
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<PolySeq> tuple;
      for (std::size_t i = 0; i < n; ++i)
        tuple.push_back(random_polyseq(rng, alg.length(), opts));
      tuples.push_back(std::move(tuple));
    }
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      std::span<const PolySeq> elems(tuples[t]);
      PolySeq lhs = bs_lhs(alg, elems, side);
      PolySeq rhs = bs_rhs_cut(alg, elems, side);
      ++report.cases;
      if (t == 0) {
        report.lhs_terms = term_count(lhs);
        report.rhs_terms = term_count(rhs);
      }
      if (!alg.equal(lhs, rhs) && report.residual_is_zero) {
        report.residual_is_zero = false;
        std::ostringstream os;
        os << "case " << t << ": residual\n" << alg.sub(lhs, rhs).str(4);
        report.counterexample = os.str();
      }
    }
  } else if (carrier == "ratseq") {
    RatSeqAlgebra alg(required_length(n));
    for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t) {
      std::vector<RatSeq> elems;
      for (std::size_t i = 0; i < n; ++i)
        elems.push_back(random_ratseq(rng, alg.length()));
      std::span<const RatSeq> view(elems);
      RatSeq lhs = bs_lhs(alg, view, side);
      RatSeq rhs = bs_rhs_cut(alg, view, side);
      RatSeq classical = bs_classical_partitions(alg, view);
      ++report.cases;
      if (t == 0) {
        report.lhs_terms = term_count(lhs);
        report.rhs_terms = term_count(rhs);
      }
      bool ok = alg.equal(lhs, rhs) && alg.equal(lhs, classical);
      if (!ok && report.residual_is_zero) {
        report.residual_is_zero = false;
        report.counterexample = "case " + std::to_string(t) + ": lhs " + lhs.str() + ", cut " +
                                rhs.str() + ", partitions " + classical.str();
      }
    }
  } else {
    throw std::invalid_argument("unknown carrier '" + carrier + "' (standard|ratseq)");
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace rbx
