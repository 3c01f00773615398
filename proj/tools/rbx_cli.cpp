// rbx: normal forms, evaluation and identity checks in Rota-Baxter algebras.
// Talks to the library exclusively through the C interface.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbx/rbx.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_failed = 2;

struct TermDeleter {
  void operator()(rbx_term* t) const { rbx_term_free(t); }
};
using TermPtr = std::unique_ptr<rbx_term, TermDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  rbx_string_free(s);
  return out;
}

const char* status_name(rbx_status s) {
  switch (s) {
  case RBX_OK: return "ok";
  case RBX_ERR_NULL_ARGUMENT: return "null_argument";
  case RBX_ERR_PARSE: return "parse_error";
  case RBX_ERR_INVALID_ARGUMENT: return "invalid_argument";
  case RBX_ERR_DOMAIN: return "domain_error";
  case RBX_ERR_VERIFY_FAILED: return "verification_failed";
  case RBX_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

// Machine-readable error on stderr; returns the exit code.
int report_error(rbx_status s) {
  nlohmann::json j{{"error", status_name(s)}, {"message", rbx_last_error()}};
  if (rbx_last_error_offset() >= 0)
    j["offset"] = rbx_last_error_offset();
  std::cerr << j.dump() << "\n";
  return exit_error;
}

int print_or_fail(rbx_status s, char* out) {
  if (s != RBX_OK && s != RBX_ERR_VERIFY_FAILED)
    return report_error(s);
  std::cout << take(out);
  return s == RBX_OK ? exit_ok : exit_failed;
}

rbx_format format_of(bool json) { return json ? RBX_FORMAT_JSON : RBX_FORMAT_TEXT; }

int cmd_nf(const std::string& expr, const std::string& theta, bool json) {
  rbx_term* raw = nullptr;
  if (rbx_status s = rbx_term_parse(expr.c_str(), &raw); s != RBX_OK)
    return report_error(s);
  TermPtr term(raw);
  rbx_term* nf_raw = nullptr;
  if (rbx_status s = rbx_term_normal_form(term.get(), theta.c_str(), &nf_raw); s != RBX_OK)
    return report_error(s);
  TermPtr nf(nf_raw);
  char* text = nullptr;
  if (rbx_status s = rbx_term_render(nf.get(), &text); s != RBX_OK)
    return report_error(s);
  std::string rendered = take(text);
  if (json) {
    char* in_text = nullptr;
    if (rbx_status s = rbx_term_render(term.get(), &in_text); s != RBX_OK)
      return report_error(s);
    nlohmann::json j{{"input", take(in_text)}, {"theta", theta}, {"normal_form", rendered}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rendered << "\n";
  }
  return exit_ok;
}

int cmd_eval(const std::string& expr, std::size_t len, bool json) {
  rbx_term* raw = nullptr;
  if (rbx_status s = rbx_term_parse(expr.c_str(), &raw); s != RBX_OK)
    return report_error(s);
  TermPtr term(raw);
  char* out = nullptr;
  rbx_status s = rbx_term_eval(term.get(), len, format_of(json), &out);
  return print_or_fail(s, out);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in free and concrete Rota-Baxter algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rbx_version()));

  bool json = false;
  int code = exit_ok;

  auto* nf = app.add_subcommand("nf", "Rewrite an expression to elementary monomials");
  std::string nf_expr;
  std::string theta = "1";
  nf->add_option("expr", nf_expr, "Expression in Z and T, e.g. \"T(Z)T(Z)\"")->required();
  nf->add_option("--theta", theta, "Weight as p or p/q")->capture_default_str();
  nf->add_flag("--json", json, "JSON output");
  nf->callback([&] { code = cmd_nf(nf_expr, theta, json); });

  auto* ev = app.add_subcommand("eval", "Evaluate an expression in the standard algebra of sequences");
  std::string ev_expr;
  std::size_t ev_len = 0;
  ev->add_option("expr", ev_expr, "Expression in Z and T")->required();
  ev->add_option("--len", ev_len, "Truncation length (default: from the degree)");
  ev->add_flag("--json", json, "JSON output");
  ev->callback([&] { code = cmd_eval(ev_expr, ev_len, json); });

  auto* qs = app.add_subcommand("qsym", "Expand a truncated quasi-symmetric function M_f^l");
  std::string f;
  unsigned trunc = 0;
  qs->add_option("--f", f, "Surjection values, e.g. 1,3,3,2")->required();
  qs->add_option("--trunc", trunc, "Number of variables l")->required();
  qs->add_flag("--json", json, "JSON output");
  qs->callback([&] {
    char* out = nullptr;
    rbx_status s = rbx_qsym(f.c_str(), trunc, format_of(json), &out);
    code = print_or_fail(s, out);
  });

  auto* vf = app.add_subcommand("verify", "Run an identity check and print its report");
  std::string check;
  std::size_t n = 0, order = 0, trials = 0, len = 0;
  std::string side = "left";
  std::string carrier = "standard";
  bool no_timing = false;
  vf->add_option("check", check, "Which identity")
      ->required()
      ->check(CLI::IsMember({"spitzer", "double-spitzer", "bs", "classical", "antipode", "dynkin",
                             "atkinson", "axioms"}));
  auto* n_opt = vf->add_option("--n", n, "Degree / number of arguments");
  auto* order_opt = vf->add_option("--order", order, "Series order (atkinson)");
  auto* trials_opt = vf->add_option("--trials", trials, "Number of random cases");
  auto* len_opt = vf->add_option("--len", len, "Truncation length override");
  vf->add_option("--side", side, "Cut rule for bs")->check(CLI::IsMember({"left", "right"}));
  vf->add_option("--carrier", carrier, "Carrier for bs")
      ->check(CLI::IsMember({"standard", "ratseq"}));
  vf->add_flag("--json", json, "JSON output");
  vf->add_flag("--no-timing", no_timing, "Omit elapsed time (reproducible output)");
  vf->callback([&] {
    nlohmann::json opts = nlohmann::json::object();
    if (*n_opt)
      opts["n"] = n;
    if (*order_opt)
      opts["order"] = order;
    if (*trials_opt)
      opts["trials"] = trials;
    if (*len_opt)
      opts["len"] = len;
    opts["side"] = side;
    opts["carrier"] = carrier;
    char* out = nullptr;
    rbx_status s = rbx_verify(check.c_str(), opts.dump().c_str(), format_of(json),
                              no_timing ? 0 : 1, &out);
    code = print_or_fail(s, out);
  });

  auto* se = app.add_subcommand("series", "Atkinson or Magnus coefficients with a = X");
  std::string kind;
  std::size_t se_order = 0, se_len = 0;
  se->add_option("--kind", kind, "x, y or magnus")
      ->required()
      ->check(CLI::IsMember({"x", "y", "magnus"}));
  se->add_option("--order", se_order, "Highest power of t")->required();
  se->add_option("--len", se_len, "Truncation length (default: order + 2)");
  se->add_flag("--json", json, "JSON output");
  se->callback([&] {
    char* out = nullptr;
    rbx_status s = rbx_series(kind.c_str(), se_order, se_len, format_of(json), &out);
    code = print_or_fail(s, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    nlohmann::json j{{"error", "usage"}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return exit_error;
  }
  return code;
}
