#include "ribbonkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "ribbonkit/dsl.hpp"
#include "ribbonkit/fusion.hpp"
#include "ribbonkit/qrep.hpp"
#include "ribbonkit/ribbon.hpp"
#include "ribbonkit/tldiag.hpp"

namespace ribbonkit::verify {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later failures are dropped.
class Collector {
 public:
  void require(bool condition, const std::string& message) {
    if (!condition && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = message;
    }
  }
  void require(const CheckResult& r, const std::string& what) { require(r.ok, what + ": " + r.witness); }
  bool failed() const { return !outcome_.pass; }
  Outcome finish(const std::string& summary) {
    if (outcome_.pass) outcome_.detail = summary;
    return outcome_;
  }

 private:
  Outcome outcome_;
};

std::string labels_text(const FusionRing& ring, const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? ", " : "") + ring.label(idx[i]).name();
  return out + "}";
}

Outcome check_fpdim(int p, const Options&) {
  Collector c;
  auto ctx = FieldContext::create(p);
  auto uq = uq_ring(ctx);
  auto wp = wp_ring(p);
  const Rational expected(2 * p * p * p);
  const Rational du = fpdim_category(uq, uq_projective_classes(ctx, uq));
  const Rational dw = fpdim_category(wp, projective_classes_closed_form(wp));
  c.require(du == expected, "uq FPdim " + du.get_str() + " != " + expected.get_str());
  c.require(dw == expected, "wp FPdim " + dw.get_str() + " != " + expected.get_str());
  return c.finish("FPdim(uq) = FPdim(wp) = " + expected.get_str());
}

Outcome check_iso(int p, const Options&) {
  Collector c;
  auto ctx = FieldContext::create(p);
  auto uq = uq_ring(ctx);
  auto wp = wp_ring(p);
  auto r = check_iso_T(uq, wp);
  c.require(r, "T");
  c.require(r.checked == static_cast<std::size_t>(4 * p * p),
            "checked " + std::to_string(r.checked) + " pairs, expected " + std::to_string(4 * p * p));
  return c.finish("T is a ring isomorphism on all " + std::to_string(r.checked) + " basis pairs");
}

Outcome check_tl_braiding(int p, const Options&) {
  Collector c;
  auto ctx = FieldContext::create(p);
  auto solved = solve_hexagon_span(ctx);
  c.require(solved.complete, "span solver did not certify completeness");
  c.require(solved.solutions.size() == 4, std::to_string(solved.solutions.size()) + " hexagon solutions, expected 4");
  for (const auto& s : solved.solutions) {
    c.require((s.a * s.b).is_one(), "solution violates ab = 1");
    const CycNumber a2 = s.a * s.a;
    c.require(a2 == q_of(ctx) || a2 == q_of(ctx).inverse(), "solution violates a^2 in {q, q^-1}");
  }
  auto cands = braiding_candidates(ctx);
  const auto id = TLMorphism::identity(ctx, 2);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    c.require(check_hexagon(cands[i]), "candidate " + std::to_string(i) + " fails the hexagon");
    // +/-(z f + z^-1) is inverse to +/-(z^-1 f + z).
    const auto& partner = cands[(i + 2) % 4];
    c.require(compose(cands[i], partner) == id && compose(partner, cands[i]) == id,
              "candidate " + std::to_string(i) + " is not inverse to its partner");
  }
  return c.finish("4 hexagon solutions with ab = 1, a^2 in {q, q^-1}; paired inverses hold");
}

Outcome check_uq_braiding(int p, const Options&) {
  Collector c;
  auto ctx = FieldContext::create(p);
  auto v = simple_V(ctx, 2);
  auto sd = selfdual_V(ctx);
  const Matrix f = sd.coev * sd.ev;
  const Matrix expected = f * make_root(ctx, 1) + Matrix::identity(ctx, 4) * make_root(ctx, -1);
  c.require(braiding(v, v) == expected, "braiding(V2, V2) != z f + z^-1");
  c.require(intrinsic_dim(sd.coev, sd.ev) == -(q_of(ctx) + q_of(ctx).inverse()), "intrinsic_dim(V2) != -(q + q^-1)");
  return c.finish("c(V2,V2) = q^{1/2} f + q^{-1/2}; dim(V2) = -(q + q^-1)");
}

Outcome check_jw(int p, const Options&) {
  Collector c;
  auto ctx = FieldContext::create(p);
  for (int n = 1; n <= p - 1 && !c.failed(); ++n) {
    const auto jw = jones_wenzl(ctx, n);
    const std::string tag = "jw(" + std::to_string(n) + ")";
    c.require(compose(jw, jw) == jw, tag + " is not idempotent");
    for (int i = 1; i < n; ++i)
      c.require(compose(jw, hook(ctx, n, i)).is_zero() && compose(hook(ctx, n, i), jw).is_zero(),
                tag + " does not kill hook " + std::to_string(i));
    CycNumber expected = qint(ctx, n + 1);
    if (n % 2 != 0) expected = -expected;
    c.require(markov_close(jw) == expected, tag + " closes to " + markov_close(jw).to_string());
  }
  c.require(markov_close(jones_wenzl(ctx, p - 1)).is_zero(), "closure of jw(p-1) is nonzero");
  return c.finish("jw(1.." + std::to_string(p - 1) + ") idempotent, hook-free, closures (-1)^n [n+1]; d(jw(p-1)) = 0");
}

Outcome check_modularity(int p, const Options&) {
  Collector c;
  auto ctx = FieldContext::create(p);
  auto wp = wp_ring(p);
  auto t = wp_twists(ctx, wp);
  const auto candidates = muger_candidates(wp, t);
  c.require(candidates == std::vector<std::size_t>{wp.unit()}, "Muger candidates " + labels_text(wp, candidates));
  const auto x2 = wp.index_of(x_label(2, 1));
  auto m = monodromy(wp, t, x2, wp.index_of(x_label(1, -1)));
  c.require(m.distinct() == std::vector<CycNumber>{CycNumber(ctx, -1)}, "monodromy(X2+, X1-) != {-1}");
  std::string summary = "Muger candidates {X[1,+]}; c^2(X2+, X1-) = {-1}";
  if (p > 2) {
    auto sq = monodromy(wp, t, x2, x2);
    c.require(sq.distinct() == std::vector<CycNumber>{q_power(ctx, -3), q_of(ctx)}, "monodromy(X2+, X2+) != {q^-3, q}");
    summary += "; c^2(X2+, X2+) = {q^-3, q}";
  }
  return c.finish(summary);
}

Outcome check_ribbon(int p, const Options&) {
  Collector c;
  auto ctx = FieldContext::create(p);
  auto uq = uq_ring(ctx);
  auto wp = wp_ring(p);
  auto inv = uq_twists(ctx, uq, true);
  auto tw = wp_twists(ctx, wp);
  c.require(check_twist_matching(map_T(uq, wp), inv, tw), "twist tables");
  c.require(inv.at(v_label(2, 0)) == -make_root(ctx, 3), "theta^-1(V2) = " + inv.at(v_label(2, 0)).to_string());
  c.require(tw.at(x_label(2, 1)) == -make_root(ctx, 3), "theta(X2+) = " + tw.at(x_label(2, 1)).to_string());
  c.require(check_twist_table(wp, tw), "wp table");
  return c.finish("theta^-1 on uq equals theta on wp for all " + std::to_string(2 * p) + " simples; theta(X2+) = -q^{3/2}");
}

Outcome check_phase(int p, const Options&) {
  Collector c;
  auto ctx = FieldContext::create(p);
  const Rational h12 = conformal_weight(p, 1, 2);
  const CycNumber unit_channel = voa_braiding_phase(ctx, h12, h12, Rational(0));
  c.require(unit_channel == -make_root(ctx, -3), "unit channel phase " + unit_channel.to_string());
  c.require(unit_channel * unit_channel == q_power(ctx, -3), "(-q^{-3/2})^2 != q^-3");
  auto wp = wp_ring(p);
  auto t = wp_twists(ctx, wp);
  const auto x2 = wp.index_of(x_label(2, 1));
  c.require(monodromy(wp, t, x2, x2).eigenvalues.front().second == unit_channel * unit_channel,
            "squared phase differs from the unit-channel monodromy");
  std::string summary = "unit channel -q^{-3/2}, squared q^-3 = monodromy";
  if (p > 2) {
    const CycNumber x3 = voa_braiding_phase(ctx, h12, h12, conformal_weight(p, 1, 3));
    c.require(x3 == make_root(ctx, 1), "X3+ channel phase " + x3.to_string());
    c.require(x3 * x3 == monodromy(wp, t, x2, x2).eigenvalues.back().second, "X3+ channel squared differs from monodromy");
    summary += "; X3+ channel q^{1/2}";
  }
  return c.finish(summary);
}

Outcome check_grothendieck(int p, const Options& options) {
  Collector c;
  const int r_max = options.r_max;
  auto ctx = FieldContext::create(p);
  auto uq = uq_ring(ctx);
  c.require(check_grring_iso_K(p, r_max, uq), "K");
  c.require(check_induction_composition(p, r_max), "I' o I = F");
  auto vir = vir_ring(p, r_max);
  auto wp = wp_ring(p);
  Combination image;
  for (const auto& [idx, coeff] : projective_Q(vir, 1, 1)) add_to(image, induction_F(wp, vir.label(idx)), coeff);
  Combination expected{{wp.index_of(x_label(1, 1)), 2}};
  add_to(expected, Combination{{wp.index_of(x_label(p - 1, -1)), 2}});
  c.require(image == expected, "F(Q1) = " + wp.format(image));
  c.require(total_length(image) == 4, "F(Q1) has length " + std::to_string(total_length(image)));
  auto singlet = singlet_ring(p, r_max);
  const auto found = muger_candidates(singlet, weight_twists(ctx, singlet));
  std::vector<std::size_t> odd;
  for (std::size_t i : truncation_core(singlet))
    if (singlet.label(i).s == 1 && (singlet.label(i).r % 2 + 2) % 2 == 1) odd.push_back(i);
  c.require(found == odd, "singlet Muger candidates " + labels_text(singlet, found));
  return c.finish("K iso at r_max " + std::to_string(r_max) + "; I' o I = F; F(Q1) = " + wp.format(image) +
                  "; singlet Muger " + labels_text(singlet, found));
}

TLMorphism random_tl_generator(const ContextPtr& ctx, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, n >= 2 ? 2 : 0);
  std::uniform_int_distribution<int> pos(0, std::max(0, n - 2));
  const int i = pos(rng);
  switch (kind(rng)) {
    case 0:
      return tensor(tensor(TLMorphism::identity(ctx, i), cup(ctx)), TLMorphism::identity(ctx, n - i));
    case 1:
      return tensor(tensor(TLMorphism::identity(ctx, i), cap(ctx)), TLMorphism::identity(ctx, n - i - 2));
    default:
      return hook(ctx, n, i + 1);
  }
}

dsl::ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  if (depth == 0 || pick(3) == 0) {
    if (pick(4) == 0) return dsl::Expr::integer(pick(20));
    dsl::Atom a;
    const Family families[] = {Family::V, Family::X, Family::L, Family::M};
    a.family = families[pick(4)];
    a.first = dsl::Index{pick(3) == 0, pick(9) - 4L};
    if (a.family == Family::V) a.sign = pick(2);
    if (a.family == Family::X) a.sign = pick(2) ? 1 : -1;
    if (a.family == Family::L || a.family == Family::M) a.second = dsl::Index{pick(3) == 0, pick(9) - 4L};
    return dsl::Expr::make_atom(a);
  }
  const dsl::Expr::Kind kinds[] = {dsl::Expr::Kind::Sum, dsl::Expr::Kind::Difference, dsl::Expr::Kind::Product};
  auto kind = kinds[pick(3)];
  auto lhs = random_expr(rng, depth - 1);
  return dsl::Expr::binary(kind, lhs, random_expr(rng, depth - 1));
}

Outcome check_properties(int p, const Options& options) {
  Collector c;
  std::mt19937_64 rng(options.seed * 1000003u + static_cast<std::uint64_t>(p));
  auto ctx = FieldContext::create(p);
  std::ostringstream summary;

  // Rings.
  auto uq = uq_ring(ctx);
  auto wp = wp_ring(p);
  c.require(check_associativity(uq), "uq associativity");
  c.require(check_associativity(wp), "wp associativity");
  auto vir = vir_ring(p, options.r_max);
  auto singlet = singlet_ring(p, options.r_max);
  c.require(check_associativity_sampled(vir, 5000, rng), "vir sampled associativity");
  c.require(check_associativity_sampled(singlet, 5000, rng), "singlet sampled associativity");
  summary << "associativity on " << 2 * 8 * p * p * p << " finite and 10000 truncated triples";

  // Temperley-Lieb.
  const auto id1 = TLMorphism::identity(ctx, 1);
  c.require(compose(tensor(id1, cup(ctx)), tensor(cap(ctx), id1)) == id1, "snake identity");
  for (const auto& cand : braiding_candidates(ctx)) c.require(check_yang_baxter(cand), "Yang-Baxter on a candidate");
  int words = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> len(1, 5);
    TLMorphism word = TLMorphism::identity(ctx, 2);
    Matrix image = Matrix::identity(ctx, 4);
    for (int k = len(rng); k > 0; --k) {
      TLMorphism g = random_tl_generator(ctx, word.top_count(), rng);
      if (g.top_count() > 6) continue;
      word = compose(word, g);
      image = tl_functor(g) * image;
    }
    c.require(tl_functor(word) == image, "functor on random word " + word.to_string());
    ++words;
  }
  summary << "; TL snake, Yang-Baxter, functor on " << words << " random words";

  // Quantum group modules.
  std::vector<WeightModule> modules;
  for (int s = 1; s <= p; ++s) modules.push_back(simple_V(ctx, s));
  for (int r = 0; r <= 2; ++r) modules.push_back(simple_L(ctx, r));
  modules.push_back(chi_module(ctx));
  int relation_checks = 0, balancing_checks = 0;
  for (const auto& m : modules) {
    auto r = check_relations(m);
    c.require(r.ok, "relations: " + r.failure);
    ++relation_checks;
  }
  for (int s = 1; s <= p; ++s)
    for (int t = 1; t <= p && s * t <= 12; ++t) {
      auto m = simple_V(ctx, s), n = simple_V(ctx, t);
      auto mn = tensor(m, n);
      auto r = check_relations(mn);
      c.require(r.ok, "relations on V" + std::to_string(s) + " x V" + std::to_string(t) + ": " + r.failure);
      ++relation_checks;
      c.require(twist(mn) == twist(m).kron(twist(n)) * braiding(n, m) * braiding(m, n),
                "balancing on V" + std::to_string(s) + " x V" + std::to_string(t));
      ++balancing_checks;
    }
  summary << "; relations on " << relation_checks << " modules, balancing on " << balancing_checks << " products";

  // DSL.
  for (int i = 0; i < 1000; ++i) {
    auto e = random_expr(rng, 4);
    const std::string text = dsl::print(*e);
    auto back = dsl::parse(text);
    c.require(dsl::equal(*e, *back) && dsl::print(*back) == text, "round trip of " + text);
  }
  summary << "; DSL round trip on 1000 expressions";
  return c.finish(summary.str());
}

using CheckFn = Outcome (*)(int, const Options&);

struct Entry {
  Check check;
  CheckFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {{"fpdim", "fpdim", "FPdim(uq) = FPdim(wp) = 2p^3"}, check_fpdim},
      {{"iso-T", "iso", "ring isomorphism T, all basis pairs"}, check_iso},
      {{"tl-braiding", "braiding", "TL hexagon solutions and paired inverses"}, check_tl_braiding},
      {{"uq-braiding", "braiding", "c(V2,V2) = q^{1/2} f + q^{-1/2}, dim V2"}, check_uq_braiding},
      {{"jones-wenzl", "jw", "Jones-Wenzl projectors and closures"}, check_jw},
      {{"modularity", "modularity", "Muger center of W_p is trivial"}, check_modularity},
      {{"ribbon-matching", "ribbon", "inverse uq twists equal wp twists"}, check_ribbon},
      {{"voa-phase", "phase", "VOA monodromy phases"}, check_phase},
      {{"grothendieck", "grothendieck", "K, induction, F(Q1), singlet Muger center"}, check_grothendieck},
      {{"properties", "properties", "property suites"}, check_properties},
  };
  return table;
}

}  // namespace

nlohmann::json CheckRecord::to_json() const {
  return nlohmann::json{{"check", check}, {"p", p}, {"status", pass ? "pass" : "fail"}, {"detail", detail},
                        {"elapsed", elapsed}};
}

const std::vector<Check>& checks() {
  static const std::vector<Check> out = [] {
    std::vector<Check> v;
    for (const auto& e : entries()) v.push_back(e.check);
    return v;
  }();
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& e : entries())
    if (std::find(out.begin(), out.end(), e.check.suite) == out.end()) out.push_back(e.check.suite);
  out.push_back("all");
  return out;
}

bool is_suite(const std::string& name) {
  const auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CheckRecord run_check(const std::string& name, int p, const Options& options) {
  CheckRecord record{name, p, false, "", 0.0};
  const auto it = std::find_if(entries().begin(), entries().end(), [&](const Entry& e) { return e.check.name == name; });
  if (it == entries().end()) {
    record.detail = "unknown check";
    return record;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = it->fn(p, options);
    record.pass = o.pass;
    record.detail = o.detail;
  } catch (const Error& e) {
    record.detail = std::string("error: ") + e.what();
  }
  record.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

bool run_suite(const std::string& suite, int p_lo, int p_hi, const Options& options,
               const std::function<void(const CheckRecord&)>& sink) {
  bool all = true;
  for (int p = p_lo; p <= p_hi; ++p)
    for (const auto& e : entries()) {
      if (suite != "all" && e.check.suite != suite) continue;
      const CheckRecord r = run_check(e.check.name, p, options);
      all = all && r.pass;
      sink(r);
    }
  return all;
}

}  // namespace ribbonkit::verify
