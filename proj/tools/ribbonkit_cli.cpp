#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ribbonkit/dsl.hpp"
#include "ribbonkit/fusion.hpp"
#include "ribbonkit/qrep.hpp"
#include "ribbonkit/ribbon.hpp"
#include "ribbonkit/tldiag.hpp"
#include "ribbonkit/verify.hpp"

using namespace ribbonkit;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string p_text;
  std::string format = "text";
  int r_max = 8;
  std::uint64_t seed = 1;
  int p_lo = 0;
  int p_hi = 0;

  bool as_json() const { return format == "json"; }
};

void parse_range(Common& c) {
  static const std::regex pattern(R"(^(\d+)(?:\.\.(\d+))?$)");
  std::smatch m;
  if (!std::regex_match(c.p_text, m, pattern)) throw UsageError("-p expects INT or A..B, got '" + c.p_text + "'");
  c.p_lo = std::stoi(m[1].str());
  c.p_hi = m[2].matched ? std::stoi(m[2].str()) : c.p_lo;
  if (c.p_lo < 2) throw UsageError("p must be at least 2");
  if (c.p_hi < c.p_lo) throw UsageError("empty p range " + c.p_text);
  if (c.p_hi > 64) throw UsageError("p above 64 is not supported");
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("-p", c.p_text, "INT or A..B")->required();
  sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--rmax", c.r_max, "truncation for Virasoro and singlet rings")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "seed for randomized property checks");
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.as_json()) std::cout << j.dump() << "\n";
  else std::cout << text << "\n";
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) out += (i ? "\n" : "") + lines[i];
  return out;
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^-?\d+(/\d+)?$)");
  if (!std::regex_match(text, pattern)) throw UsageError("expected a rational like -3/8, got '" + text + "'");
  Rational r(text);
  if (r.get_den() == 0) throw UsageError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

FusionRing select_ring(const std::string& name, const ContextPtr& ctx, int r_max) {
  if (name == "uq") return uq_ring(ctx);
  if (name == "wp") return wp_ring(ctx->p());
  if (name == "vir") return vir_ring(ctx->p(), r_max);
  if (name == "singlet") return singlet_ring(ctx->p(), r_max);
  throw UsageError("unknown ring '" + name + "'");
}

int run_fuse(const Common& c, const std::string& expression) {
  auto expr = dsl::parse(expression);
  for (int p = c.p_lo; p <= c.p_hi; ++p) {
    auto result = dsl::evaluate(*expr, p, c.r_max);
    json terms = json::object();
    for (const auto& [idx, coeff] : result.value) terms[result.ring->label(idx).name()] = coeff;
    emit(c, {{"p", p}, {"ring", result.ring->name()}, {"expression", dsl::print(*expr)}, {"result", result.text()},
             {"terms", terms}},
         result.text());
  }
  return kOk;
}

int run_jw(const Common& c, std::optional<int> n_opt) {
  int status = kOk;
  for (int p = c.p_lo; p <= c.p_hi; ++p) {
    auto ctx = FieldContext::create(p);
    const int n = n_opt.value_or(p - 1);
    if (n < 1) throw UsageError("-n must be positive");
    const auto jw = jones_wenzl(ctx, n);
    bool hooks = true;
    for (int i = 1; i < n; ++i) hooks = hooks && compose(jw, hook(ctx, n, i)).is_zero();
    const bool idempotent = compose(jw, jw) == jw;
    const CycNumber closure = markov_close(jw);
    if (!idempotent || !hooks) status = kFailure;
    json terms = json::array();
    for (const auto& [d, coeff] : jw.terms()) terms.push_back({{"diagram", d.to_string()}, {"coefficient", coeff.to_string()}});
    emit(c,
         {{"p", p}, {"n", n}, {"terms", terms}, {"idempotent", idempotent}, {"kills_hooks", hooks},
          {"closure", closure.to_string()}, {"field", ctx->header()}},
         "jw(" + std::to_string(n) + ") at p=" + std::to_string(p) + ", " + ctx->header() + "\n" + jw.to_string() +
             "\nidempotent: " + (idempotent ? "yes" : "no") + ", kills hooks: " + (hooks ? "yes" : "no") +
             "\nclosure: " + closure.to_string());
  }
  return status;
}

int run_braid_check(const Common& c) {
  int status = kOk;
  for (int p = c.p_lo; p <= c.p_hi; ++p) {
    auto ctx = FieldContext::create(p);
    auto solved = solve_hexagon_span(ctx);
    json sols = json::array();
    std::vector<std::string> lines{"p=" + std::to_string(p) + " " + ctx->header() + ", hexagon solutions in span{f, id}:"};
    for (const auto& s : solved.solutions) {
      sols.push_back({{"a", s.a.to_string()}, {"b", s.b.to_string()}});
      lines.push_back("  a = " + s.a.to_string() + ", b = " + s.b.to_string());
    }
    lines.push_back(std::string("  complete: ") + (solved.complete ? "yes" : "no"));
    json checks = json::array();
    for (const std::string name : {"tl-braiding", "uq-braiding"}) {
      verify::Options options{c.r_max, c.seed};
      auto r = verify::run_check(name, p, options);
      if (!r.pass) status = kFailure;
      checks.push_back(r.to_json());
      lines.push_back("  " + name + ": " + (r.pass ? "pass" : "FAIL") + " (" + r.detail + ")");
    }
    emit(c, {{"p", p}, {"solutions", sols}, {"complete", solved.complete}, {"checks", checks}}, join_lines(lines));
  }
  return status;
}

int run_fpdim(const Common& c, const std::optional<std::string>& expression) {
  for (int p = c.p_lo; p <= c.p_hi; ++p) {
    auto ctx = FieldContext::create(p);
    if (expression) {
      auto expr = dsl::parse(*expression);
      auto result = dsl::evaluate(*expr, p, c.r_max);
      const auto d = fpdim_object(*result.ring, result.value);
      emit(c,
           {{"p", p}, {"ring", result.ring->name()}, {"object", result.text()}, {"fpdim", d.value}, {"exact", d.exact},
            {"exact_value", d.exact_value}},
           "FPdim(" + result.text() + ") = " + (d.exact ? std::to_string(d.exact_value) : std::to_string(d.value)));
      continue;
    }
    auto uq = uq_ring(ctx);
    auto wp = wp_ring(p);
    const Rational du = fpdim_category(uq, uq_projective_classes(ctx, uq));
    const Rational dw = fpdim_category(wp, projective_classes_closed_form(wp));
    emit(c, {{"p", p}, {"uq", du.get_str()}, {"wp", dw.get_str()}},
         "p=" + std::to_string(p) + ": FPdim(uq) = " + du.get_str() + ", FPdim(wp) = " + dw.get_str());
  }
  return kOk;
}

TwistTable select_twists(const std::string& ring_name, const ContextPtr& ctx, const FusionRing& ring) {
  if (ring_name == "wp") return wp_twists(ctx, ring);
  if (ring_name == "uq") return uq_twists(ctx, ring, true);
  return weight_twists(ctx, ring);
}

int run_twists(const Common& c, const std::string& ring_name) {
  for (int p = c.p_lo; p <= c.p_hi; ++p) {
    auto ctx = FieldContext::create(p);
    auto ring = select_ring(ring_name, ctx, c.r_max);
    auto table = select_twists(ring_name, ctx, ring);
    std::vector<std::string> lines{"p=" + std::to_string(p) + " " + ctx->header() +
                                   (ring_name == "uq" ? ", inverse twists" : ", twists")};
    for (std::size_t i = 0; i < table.labels.size(); ++i) lines.push_back("  " + table.labels[i].name() + "  " + table.theta[i].to_string());
    json j = table.to_json();
    j["p"] = p;
    emit(c, j, join_lines(lines));
  }
  return kOk;
}

int run_muger(const Common& c, const std::string& ring_name) {
  for (int p = c.p_lo; p <= c.p_hi; ++p) {
    auto ctx = FieldContext::create(p);
    auto ring = select_ring(ring_name, ctx, c.r_max);
    auto table = select_twists(ring_name, ctx, ring);
    json names = json::array();
    std::string text = "{";
    for (auto i : muger_candidates(ring, table)) {
      text += (names.empty() ? "" : ", ") + ring.label(i).name();
      names.push_back(ring.label(i).name());
    }
    emit(c, {{"p", p}, {"ring", ring.name()}, {"candidates", names}}, "p=" + std::to_string(p) + ": " + text + "}");
  }
  return kOk;
}

int run_phase(const Common& c, const std::vector<std::string>& weights, bool single) {
  if (weights.size() != 3) throw UsageError("phase expects three weights h1 h2 h3");
  const Rational h1 = parse_rational(weights[0]), h2 = parse_rational(weights[1]), h3 = parse_rational(weights[2]);
  for (int p = c.p_lo; p <= c.p_hi; ++p) {
    auto ctx = FieldContext::create(p);
    const CycNumber v = single ? voa_braiding_phase(ctx, h1, h2, h3) : voa_monodromy_phase(ctx, h1, h2, h3);
    emit(c, {{"p", p}, {"phase", v.to_string()}, {"single", single}, {"field", ctx->header()}},
         "p=" + std::to_string(p) + ": " + v.to_string());
  }
  return kOk;
}

int run_verify(const Common& c, const std::string& suite) {
  if (!verify::is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
  verify::Options options{c.r_max, c.seed};
  const bool ok = verify::run_suite(suite, c.p_lo, c.p_hi, options, [&](const verify::CheckRecord& r) {
    if (c.as_json()) {
      std::cout << r.to_json().dump() << std::endl;
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << " p=" << r.p << " (" << std::fixed << std::setprecision(3)
                << r.elapsed << "s) " << r.detail << std::endl;
    }
  });
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fusion, braiding and twist computations for quantum SL(2) and logarithmic VOAs"};
  app.require_subcommand(1);
  Common common;
  if (const char* env = std::getenv("RIBBONKIT_RMAX")) {
    try {
      common.r_max = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: RIBBONKIT_RMAX must be an integer\n";
      return kUsage;
    }
  }

  std::string expression;
  auto* fuse = app.add_subcommand("fuse", "evaluate a fusion expression");
  add_common(fuse, common);
  fuse->add_option("expression", expression)->required();

  std::optional<int> jw_n;
  auto* jw = app.add_subcommand("jw", "Jones-Wenzl projector");
  add_common(jw, common);
  jw->add_option("-n", jw_n, "strands (default p-1)");

  auto* braid = app.add_subcommand("braid-check", "TL braiding classification and c(V2,V2)");
  add_common(braid, common);

  std::optional<std::string> fp_expr;
  auto* fpdim = app.add_subcommand("fpdim", "Frobenius-Perron dimensions");
  add_common(fpdim, common);
  fpdim->add_option("expression", fp_expr, "object; omit for the category dimension");

  std::string ring_name = "wp";
  auto* twists = app.add_subcommand("twists", "twist table");
  add_common(twists, common);
  twists->add_option("--ring", ring_name, "wp, uq, vir or singlet")->check(CLI::IsMember({"wp", "uq", "vir", "singlet"}));

  auto* muger = app.add_subcommand("muger", "Muger center candidates");
  add_common(muger, common);
  muger->add_option("--ring", ring_name, "wp, uq, vir or singlet")->check(CLI::IsMember({"wp", "uq", "vir", "singlet"}));

  std::vector<std::string> weights;
  bool single = false;
  auto* phase = app.add_subcommand("phase", "VOA monodromy phase e^{2 pi i (h3 - h1 - h2)}");
  add_common(phase, common);
  phase->add_option("weights", weights, "h1 h2 h3 as rationals")->expected(3);
  phase->add_flag("--single", single, "single braiding e^{pi i (h3 - h1 - h2)}");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run acceptance checks");
  add_common(verify_cmd, common);
  verify_cmd->add_option("--suite", suite, "suite name or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    parse_range(common);
    if (fuse->parsed()) return run_fuse(common, expression);
    if (jw->parsed()) return run_jw(common, jw_n);
    if (braid->parsed()) return run_braid_check(common);
    if (fpdim->parsed()) return run_fpdim(common, fp_expr);
    if (twists->parsed()) return run_twists(common, ring_name);
    if (muger->parsed()) return run_muger(common, ring_name);
    if (phase->parsed()) return run_phase(common, weights, single);
    if (verify_cmd->parsed()) return run_verify(common, suite);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownLabelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NonRepresentablePhaseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TruncationOverflowError& e) {
    std::cerr << "error: " << e.what() << " (raise --rmax)\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
