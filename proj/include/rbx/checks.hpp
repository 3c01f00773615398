#ifndef RBX_CHECKS_HPP
#define RBX_CHECKS_HPP

// Named verification runs with structured reports, shared by the C API,
// the command-line tool and the acceptance suite.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rbx {

struct CheckItem {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
};

class CheckReport {
public:
  explicit CheckReport(std::string check) : check_(std::move(check)) {}

  const std::string& check() const { return check_; }
  nlohmann::json& params() { return params_; }
  const std::vector<CheckItem>& items() const { return items_; }
  bool passed() const;
  const std::string& counterexample() const { return counterexample_; }
  double elapsed_ms = 0;

  /// Records one case of the named item; cases with the same name are
  /// folded together. `detail` is only evaluated for the first failure.
  void expect(const std::string& name, bool ok, const std::function<std::string()>& detail = {});

  nlohmann::json to_json(bool with_timing = true) const;
  /// Same data as to_json, one field per line.
  std::string str(bool with_timing = true) const;

private:
  std::string check_;
  nlohmann::json params_ = nlohmann::json::object();
  std::vector<CheckItem> items_;
  std::string counterexample_;
};

/// (RX)^[m] from C^(1..m)(X) through Gamma, the grading identity
/// m (RX)^[m] = sum (RX)^[p] C^(q)(X), X' = X psi, and the commutative
/// exponential formula on random rational sequences; m = 1..n.
/// len = 0 picks the truncation length automatically.
CheckReport check_spitzer(std::size_t n, std::size_t len = 0);
/// (RX)^[m-1] X from c^(1..m)(X) through Gamma with the *_R product, and
/// the abstract round trip in the double Spitzer algebra.
CheckReport check_double_spitzer(std::size_t n, std::size_t len = 0);
/// Classical commutative forms: bs_lhs (both sides), set partitions,
/// cycles and the equal-argument specialization on random rational sequences.
CheckReport check_classical(std::size_t n, std::size_t trials = 5);
/// Antipode axioms, the closed forms of S(E_m) and S(F_m) under evaluation,
/// and the divided-powers property of the antipode images.
CheckReport check_antipode(std::size_t n, std::size_t len = 0);
/// D(E_m) and D(F_{m-1}) under evaluation, primitivity, D^2 = mD in S and
/// for the bracket operator on words, the R-isomorphism, Gamma o D.
CheckReport check_dynkin(std::size_t n, std::size_t len = 0);
/// Atkinson's factorization and closed-form inverses up to t^order.
CheckReport check_atkinson(std::size_t order, std::size_t trials = 5, std::size_t len = 0);
/// Rota-Baxter relation, double product, pre-Lie, dendriform and bracket
/// identities on random tuples at weights 0, 1 and 1/2.
CheckReport check_axioms(std::size_t trials = 20, std::size_t len = 8);

} // namespace rbx

#endif
