#include "ribbonkit/ribbon.hpp"

#include <algorithm>
#include <cstdlib>

#include "ribbonkit/qrep.hpp"

namespace ribbonkit {

namespace {

CycNumber root_of_weight(const ContextPtr& ctx, const Rational& h) {
  Rational e = h * (4 * ctx->p());
  e.canonicalize();
  if (e.get_den() != 1) throw NonRepresentablePhaseError("4p h is not integral for h = " + h.get_str());
  return make_root(ctx, e.get_num().get_si());
}

CycNumber phase_from_exponent(const ContextPtr& ctx, const Rational& x, long scale) {
  Rational e = x * scale;
  e.canonicalize();
  if (e.get_den() != 1)
    throw NonRepresentablePhaseError("phase with exponent " + x.get_str() + " lies outside Q(z_" +
                                     std::to_string(ctx->conductor()) + ")");
  return make_root(ctx, e.get_num().get_si());
}

}  // namespace

const CycNumber& TwistTable::at(const Label& l) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return theta[i];
  throw UnknownLabelError("no twist for " + l.name());
}

nlohmann::json TwistTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < labels.size(); ++i)
    entries.push_back({{"label", labels[i].name()}, {"theta", theta[i].to_string()}});
  return nlohmann::json{{"ring", ring}, {"twists", entries}};
}

TwistTable wp_twists(const ContextPtr& ctx, const FusionRing& wp) {
  const int p = ctx->p();
  TwistTable t{wp.name(), wp.labels(), {}};
  for (const auto& l : wp.labels()) {
    if (l.family != Family::X) throw UnknownLabelError(l.name() + " is not a triplet label");
    CycNumber base = make_root(ctx, static_cast<long>(l.s) * l.s - 1);
    if (l.sign > 0) {
      if ((l.s - 1) % 2 != 0) base = -base;
    } else {
      base = -(make_root(ctx, 3L * p * p) * base);
    }
    t.theta.push_back(std::move(base));
  }
  return t;
}

TwistTable uq_twists(const ContextPtr& ctx, const FusionRing& uq, bool inverse) {
  TwistTable t{uq.name(), uq.labels(), {}};
  for (const auto& l : uq.labels()) {
    if (l.family != Family::V) throw UnknownLabelError(l.name() + " is not a quantum group label");
    const WeightModule m = l.sign ? tensor(chi_module(ctx), simple_V(ctx, l.s)) : simple_V(ctx, l.s);
    const Matrix op = inverse ? twist_inverse(m) : twist(m);
    CycNumber value(ctx);
    if (!op.scalar_value(value)) throw NonScalarError("twist is not scalar on " + l.name());
    t.theta.push_back(std::move(value));
  }
  return t;
}

TwistTable weight_twists(const ContextPtr& ctx, const FusionRing& ring) {
  TwistTable t{ring.name(), ring.labels(), {}};
  for (const auto& l : ring.labels()) t.theta.push_back(root_of_weight(ctx, label_weight(ctx->p(), l)));
  return t;
}

TwistTable trivial_twists(const ContextPtr& ctx, const FusionRing& ring) {
  return TwistTable{ring.name(), ring.labels(), std::vector<CycNumber>(ring.size(), CycNumber(ctx, 1))};
}

CheckResult check_twist_table(const FusionRing& ring, const TwistTable& t) {
  CheckResult result;
  if (t.labels != ring.labels()) return CheckResult{false, "table does not match the ring basis", 0};
  ++result.checked;
  if (!t.theta[ring.unit()].is_one()) return CheckResult{false, "theta(unit) = " + t.theta[ring.unit()].to_string(), 1};
  for (std::size_t i = 0; i < ring.size(); ++i) {
    auto d = ring.dual(i);
    if (!d) continue;
    ++result.checked;
    if (t.theta[i] != t.theta[*d]) {
      result.ok = false;
      result.witness = "theta differs on " + ring.label(i).name() + " and its dual " + ring.label(*d).name();
      return result;
    }
  }
  return result;
}

CheckResult check_twist_matching(const RingMorphism& m, const TwistTable& source, const TwistTable& target) {
  CheckResult result;
  for (std::size_t i = 0; i < m.images.size(); ++i) {
    ++result.checked;
    const Combination& img = m.images[i];
    if (img.size() != 1 || img.begin()->second != 1) {
      result.ok = false;
      result.witness = m.source->label(i).name() + " does not map to a simple";
      return result;
    }
    const Label& src = m.source->label(i);
    const Label& dst = m.target->label(img.begin()->first);
    if (source.at(src) != target.at(dst)) {
      result.ok = false;
      result.witness = src.name() + " -> " + dst.name() + ": " + source.at(src).to_string() +
                       " != " + target.at(dst).to_string();
      return result;
    }
  }
  return result;
}

bool MonodromySpectrum::trivial() const {
  return std::all_of(eigenvalues.begin(), eigenvalues.end(), [](const auto& e) { return e.second.is_one(); });
}

std::vector<CycNumber> MonodromySpectrum::distinct() const {
  std::vector<CycNumber> out;
  for (const auto& [z, v] : eigenvalues)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

nlohmann::json MonodromySpectrum::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [z, v] : eigenvalues) entries.push_back({{"channel", z.name()}, {"eigenvalue", v.to_string()}});
  return nlohmann::json{{"x", x.name()}, {"y", y.name()}, {"spectrum", entries}};
}

MonodromySpectrum monodromy(const FusionRing& ring, const TwistTable& t, std::size_t x, std::size_t y) {
  MonodromySpectrum out{ring.label(x), ring.label(y), {}};
  const CycNumber denom = (t.theta[x] * t.theta[y]).inverse();
  for (const auto& [z, mult] : ring.product(x, y)) {
    const CycNumber value = t.theta[z] * denom;
    for (long k = 0; k < mult; ++k) out.eigenvalues.emplace_back(ring.label(z), value);
  }
  return out;
}

std::vector<std::size_t> truncation_core(const FusionRing& ring) {
  std::vector<std::size_t> out;
  if (ring.finite()) {
    for (std::size_t i = 0; i < ring.size(); ++i) out.push_back(i);
    return out;
  }
  // Distance of a label from the unit along the truncated direction.
  auto depth = [](const Label& l) { return l.family == Family::SL2 ? l.r : std::abs(l.r - 1); };
  int edge = 0;
  for (const auto& l : ring.labels()) edge = std::max(edge, depth(l));
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (depth(ring.label(i)) <= edge / 2 - 1) out.push_back(i);
  return out;
}

std::vector<std::size_t> muger_candidates(const FusionRing& ring, const TwistTable& t) {
  std::vector<std::size_t> out;
  for (std::size_t y : truncation_core(ring)) {
    bool central = true;
    for (std::size_t x = 0; x < ring.size() && central; ++x) {
      if (!ring.has_product(x, y)) continue;
      central = monodromy(ring, t, x, y).trivial();
    }
    if (central) out.push_back(y);
  }
  return out;
}

QuantumOrderReport quantum_order_check(const ContextPtr& ctx) {
  const int p = ctx->p();
  QuantumOrderReport report;
  const CycNumber d2 = loop_value(ctx);
  report.dims.push_back(CycNumber(ctx, 1));
  report.dims.push_back(d2);
  for (int r = 2; r < p; ++r) {
    const std::size_t i = static_cast<std::size_t>(r) - 1;
    report.dims.push_back(d2 * report.dims[i] - report.dims[i - 1]);
  }
  report.dims.resize(static_cast<std::size_t>(p), CycNumber(ctx, 1));
  bool closed_form = true;
  for (int r = 1; r <= p; ++r) {
    CycNumber expected = qint(ctx, r);
    if ((r - 1) % 2 != 0) expected = -expected;
    if (report.dims[static_cast<std::size_t>(r) - 1] != expected) closed_form = false;
  }
  const CycNumber q2 = q_power(ctx, 2);
  CycNumber acc = q2;
  int order = 1;
  while (!acc.is_one()) {
    acc *= q2;
    ++order;
  }
  report.order_q2 = order;
  const bool vanishes = report.dims.back().is_zero();
  report.ok = closed_form && vanishes && order == p;
  if (!closed_form) report.detail = "recursion disagrees with (-1)^{r-1}[r]";
  else if (!vanishes) report.detail = "d(X_p^+) = " + report.dims.back().to_string();
  else if (order != p) report.detail = "ord(q^2) = " + std::to_string(order);
  else report.detail = "d(X_p^+) = 0, ord(q^2) = " + std::to_string(order);
  return report;
}

CycNumber voa_monodromy_phase(const ContextPtr& ctx, const Rational& h1, const Rational& h2, const Rational& h3) {
  return phase_from_exponent(ctx, h3 - h1 - h2, 4L * ctx->p());
}

CycNumber voa_braiding_phase(const ContextPtr& ctx, const Rational& h1, const Rational& h2, const Rational& h3) {
  return phase_from_exponent(ctx, h3 - h1 - h2, 2L * ctx->p());
}

}  // namespace ribbonkit
