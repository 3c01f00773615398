#include "rbx/free_rba.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace rbx {

// ---------------------------------------------------------------------------
// LTerm construction

LTerm LTerm::generator() { return LTerm(Kind::Generator); }
LTerm LTerm::unit() { return LTerm(Kind::Unit); }

LTerm LTerm::apply(LTerm arg) {
  LTerm t(Kind::Apply);
  t.children_.push_back(std::move(arg));
  return t;
}

LTerm LTerm::apply(LTerm arg, unsigned times) {
  for (unsigned i = 0; i < times; ++i)
    arg = apply(std::move(arg));
  return arg;
}

LTerm LTerm::product(std::vector<LTerm> factors) {
  std::vector<LTerm> flat;
  for (auto& f : factors) {
    if (f.kind_ == Kind::Unit)
      continue;
    if (f.kind_ == Kind::Product) {
      for (auto& g : f.children_)
        flat.push_back(std::move(g));
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty())
    return unit();
  if (flat.size() == 1)
    return std::move(flat.front());
  LTerm t(Kind::Product);
  t.children_ = std::move(flat);
  return t;
}

LTerm LTerm::sum(std::vector<std::pair<Rational, LTerm>> terms) {
  LTerm t(Kind::Sum);
  for (auto& [c, child] : terms) {
    if (c.is_zero())
      continue;
    if (child.kind_ == Kind::Sum) {
      for (std::size_t i = 0; i < child.children_.size(); ++i) {
        t.coeffs_.push_back(c * child.coeffs_[i]);
        t.children_.push_back(std::move(child.children_[i]));
      }
    } else {
      t.coeffs_.push_back(c);
      t.children_.push_back(std::move(child));
    }
  }
  if (t.children_.size() == 1 && t.coeffs_[0].is_one())
    return std::move(t.children_[0]);
  return t;
}

std::string LTerm::str() const {
  switch (kind_) {
  case Kind::Generator:
    return "Z";
  case Kind::Unit:
    return "1";
  case Kind::Apply: {
    unsigned depth = 0;
    const LTerm* inner = this;
    while (inner->kind_ == Kind::Apply) {
      ++depth;
      inner = &inner->children_[0];
    }
    std::string head = depth == 1 ? "T" : "T^" + std::to_string(depth);
    return head + "(" + inner->str() + ")";
  }
  case Kind::Product: {
    std::string out;
    for (std::size_t i = 0; i < children_.size();) {
      const LTerm& c = children_[i];
      if (c.kind_ == Kind::Generator) {
        std::size_t run = 0;
        while (i < children_.size() && children_[i].kind_ == Kind::Generator) {
          ++run;
          ++i;
        }
        out += run == 1 ? "Z" : "Z^" + std::to_string(run);
        continue;
      }
      out += c.kind_ == Kind::Sum ? "(" + c.str() + ")" : c.str();
      ++i;
    }
    return out;
  }
  case Kind::Sum: {
    if (children_.empty())
      return "0";
    std::string out;
    for (std::size_t i = 0; i < children_.size(); ++i) {
      const Rational& c = coeffs_[i];
      Rational mag = c.sign() < 0 ? -c : c;
      if (i == 0)
        out += c.sign() < 0 ? "-" : "";
      else
        out += c.sign() < 0 ? " - " : " + ";
      const LTerm& child = children_[i];
      if (child.kind_ == Kind::Unit) {
        out += mag.str();
        continue;
      }
      if (!mag.is_one())
        out += mag.str() + " ";
      out += child.str();
    }
    return out;
  }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr unsigned max_power = 64;

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  LTerm parse_all() {
    skip();
    if (pos_ >= s_.size())
      throw ParseError(pos_, "empty input");
    LTerm t = expr();
    skip();
    if (pos_ < s_.size()) {
      if (s_[pos_] == ')')
        throw ParseError(pos_, "unbalanced ')'");
      throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
    }
    return t;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool is_digit(std::size_t i) const {
    return i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]));
  }

  bool atom_start() {
    skip();
    if (pos_ >= s_.size())
      return false;
    char c = s_[pos_];
    if (c == 'Z' || c == 'T' || c == '(')
      return true;
    // a lone '1' is the unit atom
    return c == '1' && !is_digit(pos_ + 1) && !(pos_ + 1 < s_.size() && s_[pos_ + 1] == '/');
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (is_digit(pos_))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  unsigned optional_power() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '^')
      return 1;
    ++pos_;
    skip();
    std::size_t start = pos_;
    auto d = digits();
    if (d.empty())
      throw ParseError(start, "expected exponent after '^'");
    if (d.size() > 2 || std::stoul(std::string(d)) > max_power)
      throw ParseError(start, "exponent too large");
    return static_cast<unsigned>(std::stoul(std::string(d)));
  }

  LTerm expr() {
    std::vector<std::pair<Rational, LTerm>> terms;
    Rational sign(1);
    skip();
    if (at('+') || at('-')) {
      sign = s_[pos_] == '-' ? Rational(-1) : Rational(1);
      ++pos_;
    }
    for (;;) {
      auto [c, t] = sumterm();
      terms.emplace_back(sign * c, std::move(t));
      if (at('+') || at('-')) {
        sign = s_[pos_] == '-' ? Rational(-1) : Rational(1);
        ++pos_;
        continue;
      }
      break;
    }
    return LTerm::sum(std::move(terms));
  }

  std::pair<Rational, LTerm> sumterm() {
    skip();
    Rational coeff(1);
    bool have_coeff = false;
    if (is_digit(pos_) && !atom_start()) {
      std::size_t start = pos_;
      digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (digits().empty())
          throw ParseError(pos_, "expected denominator");
      }
      try {
        coeff = Rational::parse(s_.substr(start, pos_ - start));
      } catch (const std::exception& e) {
        throw ParseError(start, e.what());
      }
      have_coeff = true;
    }
    if (atom_start())
      return {coeff, product()};
    if (have_coeff)
      return {coeff, LTerm::unit()};
    if (pos_ >= s_.size())
      throw ParseError(pos_, "unexpected end of input");
    if (s_[pos_] == ')')
      throw ParseError(pos_, "unbalanced ')'");
    throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
  }

  LTerm product() {
    std::vector<LTerm> atoms;
    do
      atoms.push_back(atom());
    while (atom_start());
    return LTerm::product(std::move(atoms));
  }

  static LTerm power(const LTerm& base, unsigned k) {
    return LTerm::product(std::vector<LTerm>(k, base));
  }

  LTerm atom() {
    skip();
    char c = s_[pos_];
    if (c == 'Z') {
      ++pos_;
      return power(LTerm::generator(), optional_power());
    }
    if (c == '1') {
      ++pos_;
      return LTerm::unit();
    }
    if (c == 'T') {
      ++pos_;
      unsigned k = optional_power();
      expect('(');
      LTerm inner = expr();
      expect(')');
      return LTerm::apply(std::move(inner), k);
    }
    // '('
    ++pos_;
    LTerm inner = expr();
    expect(')');
    return power(inner, optional_power());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

LTerm parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Monomials and linear combinations

int compare(const Monomial& a, const Monomial& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_op != b[i].is_op)
      return a[i].is_op ? 1 : -1;
    if (a[i].is_op) {
      int r = compare(a[i].arg, b[i].arg);
      if (r != 0)
        return r;
    }
  }
  return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

bool operator==(const Factor& a, const Factor& b) {
  return a.is_op == b.is_op && (!a.is_op || compare(a.arg, b.arg) == 0);
}

std::size_t t_count(const Monomial& m) {
  std::size_t n = 0;
  for (const auto& f : m)
    if (f.is_op)
      n += 1 + t_count(f.arg);
  return n;
}

std::size_t z_degree(const Monomial& m) {
  std::size_t n = 0;
  for (const auto& f : m)
    n += f.is_op ? z_degree(f.arg) : 1;
  return n;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  auto ta = t_count(a), tb = t_count(b);
  if (ta != tb)
    return ta < tb;
  auto da = z_degree(a), db = z_degree(b);
  if (da != db)
    return da < db;
  return compare(a, b) < 0;
}

LinComb LinComb::monomial(Monomial m, Rational c) {
  LinComb l;
  l.add_term(m, c);
  return l;
}

void LinComb::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

LinComb& LinComb::operator+=(const LinComb& o) {
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

LinComb& LinComb::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_)
    coeff *= c;
  return *this;
}

LinComb operator*(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) {
      Monomial w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, cu * cv);
    }
  return out;
}

std::vector<std::pair<Monomial, Rational>> LinComb::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return canonical_less(y.first, x.first); });
  return out;
}

LTerm to_term(const Monomial& m) {
  std::vector<LTerm> factors;
  factors.reserve(m.size());
  for (const auto& f : m)
    factors.push_back(f.is_op ? LTerm::apply(to_term(f.arg)) : LTerm::generator());
  return LTerm::product(std::move(factors));
}

LTerm LinComb::to_term() const {
  std::vector<std::pair<Rational, LTerm>> terms;
  for (auto& [m, c] : sorted_terms())
    terms.emplace_back(c, rbx::to_term(m));
  return LTerm::sum(std::move(terms));
}

LinComb apply_op(const LinComb& l) {
  LinComb out;
  for (const auto& [m, c] : l.terms())
    out.add_term(Monomial{Factor::op(m)}, c);
  return out;
}

LinComb expand(const LTerm& t) {
  switch (t.kind()) {
  case LTerm::Kind::Generator:
    return LinComb::monomial(Monomial{Factor::z()});
  case LTerm::Kind::Unit:
    return LinComb::monomial(Monomial{});
  case LTerm::Kind::Apply:
    return apply_op(expand(t.children()[0]));
  case LTerm::Kind::Product: {
    LinComb acc = expand(t.children()[0]);
    for (std::size_t i = 1; i < t.children().size(); ++i)
      acc = acc * expand(t.children()[i]);
    return acc;
  }
  case LTerm::Kind::Sum: {
    LinComb acc;
    for (std::size_t i = 0; i < t.children().size(); ++i)
      acc += t.coefficients()[i] * expand(t.children()[i]);
    return acc;
  }
  }
  return {};
}

std::size_t max_T(const LinComb& l) {
  std::size_t m = 0;
  for (const auto& [mono, c] : l.terms())
    m = std::max(m, t_count(mono));
  return m;
}

std::size_t max_T(const LTerm& t) { return max_T(expand(t)); }

bool is_elementary(const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_op)
      continue;
    if (i + 1 < m.size() && m[i + 1].is_op)
      return false;
    if (!is_elementary(m[i].arg))
      return false;
  }
  return true;
}

bool is_elementary(const LTerm& t) {
  if (t.kind() == LTerm::Kind::Sum)
    throw std::invalid_argument("is_elementary expects a monomial, got a sum");
  LinComb l = expand(t);
  if (l.size() != 1)
    throw std::invalid_argument("is_elementary expects a monomial");
  return is_elementary(l.terms().begin()->first);
}

// ---------------------------------------------------------------------------
// Normal form

namespace {

class Normalizer {
public:
  explicit Normalizer(Rational theta) : theta_(std::move(theta)) {}

  const LinComb& monomial(const Monomial& m) {
    if (auto it = memo_.find(m); it != memo_.end())
      return it->second;

    // Normalize every T-argument, distributing T over the resulting sums.
    std::vector<std::pair<Monomial, Rational>> partial{{Monomial{}, Rational(1)}};
    for (const auto& f : m) {
      if (!f.is_op) {
        for (auto& [p, c] : partial)
          p.push_back(Factor::z());
        continue;
      }
      const LinComb& arg = monomial(f.arg);
      std::vector<std::pair<Monomial, Rational>> next;
      for (const auto& [p, c] : partial)
        for (const auto& [e, ce] : arg.terms()) {
          Monomial q = p;
          q.push_back(Factor::op(e));
          next.emplace_back(std::move(q), c * ce);
        }
      partial = std::move(next);
    }

    LinComb out;
    for (auto& [p, c] : partial)
      reduce(std::move(p), c, out);
    return memo_.emplace(m, std::move(out)).first->second;
  }

private:
  // Cancels the leftmost adjacent T(c)T(d) pair of a monomial whose
  // T-arguments are already elementary, recursively.
  void reduce(Monomial m, const Rational& coeff, LinComb& out) {
    std::size_t i = 0;
    while (i + 1 < m.size() && !(m[i].is_op && m[i + 1].is_op))
      ++i;
    if (i + 1 >= m.size()) {
      out.add_term(m, coeff);
      return;
    }
    const Monomial& c = m[i].arg;
    const Monomial& d = m[i + 1].arg;

    Monomial left{Factor::op(c)};
    left.insert(left.end(), d.begin(), d.end());
    Monomial right = c;
    right.push_back(Factor::op(d));
    Monomial both = c;
    both.insert(both.end(), d.begin(), d.end());

    const std::pair<Monomial, Rational> args[] = {
        {std::move(left), Rational(1)}, {std::move(right), Rational(1)}, {std::move(both), theta_}};

    Monomial prefix(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(i));
    Monomial suffix(m.begin() + static_cast<std::ptrdiff_t>(i) + 2, m.end());
    for (const auto& [arg, weight] : args) {
      if (weight.is_zero())
        continue;
      const LinComb& normalized = monomial(arg);
      for (const auto& [e, ce] : normalized.terms()) {
        Monomial next = prefix;
        next.push_back(Factor::op(e));
        next.insert(next.end(), suffix.begin(), suffix.end());
        reduce(std::move(next), coeff * weight * ce, out);
      }
    }
  }

  Rational theta_;
  std::map<Monomial, LinComb, MonomialLess> memo_;
};

} // namespace

LinComb normal_form(const LinComb& l, const Rational& theta) {
  Normalizer nf(theta);
  LinComb out;
  for (const auto& [m, c] : l.terms()) {
    LinComb part = nf.monomial(m);
    out += c * part;
  }
  return out;
}

LinComb normal_form(const LTerm& t, const Rational& theta) { return normal_form(expand(t), theta); }

// ---------------------------------------------------------------------------
// Enumeration and random generation

namespace {

class BasisBuilder {
public:
  const std::vector<Monomial>& exact(std::size_t t, std::size_t d) {
    auto key = std::make_pair(t, d);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    std::vector<Monomial> out;
    Monomial cur;
    build(t, d, false, cur, out);
    return memo_.emplace(key, std::move(out)).first->second;
  }

private:
  void build(std::size_t t, std::size_t d, bool last_op, Monomial& cur, std::vector<Monomial>& out) {
    if (t == 0 && d == 0) {
      out.push_back(cur);
      return;
    }
    if (d > 0) {
      cur.push_back(Factor::z());
      build(t, d - 1, false, cur, out);
      cur.pop_back();
    }
    if (t == 0 || last_op)
      return;
    for (std::size_t ti = 0; ti < t; ++ti)
      for (std::size_t di = 1; di <= d; ++di) {
        for (const auto& b : exact(ti, di)) {
          cur.push_back(Factor::op(b));
          build(t - 1 - ti, d - di, true, cur, out);
          cur.pop_back();
        }
      }
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Monomial>> memo_;
};

// Wraps a random nonempty run of factors (possibly inside an existing T)
// into a new T.
void wrap_random(std::mt19937_64& rng, Monomial& m) {
  std::vector<std::size_t> ops;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i].is_op)
      ops.push_back(i);
  if (!ops.empty() && std::bernoulli_distribution(0.4)(rng)) {
    std::size_t k = ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(rng)];
    wrap_random(rng, m[k].arg);
    return;
  }
  std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
  std::size_t i = pick(rng), j = pick(rng);
  if (i > j)
    std::swap(i, j);
  Monomial inner(m.begin() + static_cast<std::ptrdiff_t>(i),
                 m.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  m.erase(m.begin() + static_cast<std::ptrdiff_t>(i), m.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  m.insert(m.begin() + static_cast<std::ptrdiff_t>(i), Factor::op(std::move(inner)));
}

} // namespace

std::vector<Monomial> elementary_basis(std::size_t max_t, std::size_t max_degree) {
  BasisBuilder builder;
  std::vector<Monomial> out;
  for (std::size_t t = 0; t <= max_t; ++t)
    for (std::size_t d = 0; d <= max_degree; ++d) {
      const auto& part = builder.exact(t, d);
      out.insert(out.end(), part.begin(), part.end());
    }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t max_t, std::size_t max_degree) {
  std::size_t d = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_degree))(rng);
  std::size_t t = std::uniform_int_distribution<std::size_t>(0, max_t)(rng);
  Monomial m(d, Factor::z());
  for (std::size_t k = 0; k < t; ++k)
    wrap_random(rng, m);
  return m;
}

LTerm random_lterm(std::mt19937_64& rng, std::size_t max_t, std::size_t max_degree,
                   std::size_t max_terms) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_terms))(rng);
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  std::vector<std::pair<Rational, LTerm>> terms;
  for (std::size_t i = 0; i < n; ++i) {
    long c = num(rng);
    if (c == 0)
      c = 1;
    LTerm body = to_term(random_monomial(rng, max_t, max_degree));
    // occasionally apply T to a small sum to exercise linearity of T
    if (max_t > 0 && std::bernoulli_distribution(0.2)(rng)) {
      LTerm other = to_term(random_monomial(rng, max_t - 1, max_degree));
      std::vector<std::pair<Rational, LTerm>> inner;
      inner.emplace_back(Rational(1), to_term(random_monomial(rng, max_t - 1, max_degree)));
      inner.emplace_back(Rational(-1, 2), std::move(other));
      body = LTerm::apply(LTerm::sum(std::move(inner)));
    }
    terms.emplace_back(Rational(c, den(rng)), std::move(body));
  }
  return LTerm::sum(std::move(terms));
}

} // namespace rbx
