#pragma once

// Twist tables, monodromy spectra, Muger-center candidates and VOA phases.

#include <string>
#include <vector>

#include <json.hpp>

#include "ribbonkit/cyclo.hpp"
#include "ribbonkit/fusion.hpp"

namespace ribbonkit {

struct TwistTable {
  std::string ring;
  std::vector<Label> labels;
  std::vector<CycNumber> theta;

  /// Throws UnknownLabelError.
  const CycNumber& at(const Label& l) const;
  nlohmann::json to_json() const;
};

/// theta(X_s^+) = (-1)^{s-1} q^{(s^2-1)/2}, theta(X_s^-) = -e^{3 pi i p/2} q^{(s^2-1)/2}.
TwistTable wp_twists(const ContextPtr& ctx, const FusionRing& wp);
/// Scalar of the operator twist (or its inverse) on each simple V_s, chi V_s.
/// Throws NonScalarError.
TwistTable uq_twists(const ContextPtr& ctx, const FusionRing& uq, bool inverse);
/// theta = e^{2 pi i h} from the conformal weight of each label.
TwistTable weight_twists(const ContextPtr& ctx, const FusionRing& ring);
/// theta = 1 everywhere.
TwistTable trivial_twists(const ContextPtr& ctx, const FusionRing& ring);

/// theta(unit) = 1 and theta(x*) = theta(x).
CheckResult check_twist_table(const FusionRing& ring, const TwistTable& t);
/// Equality of two tables transported along a basis-to-basis morphism.
CheckResult check_twist_matching(const RingMorphism& m, const TwistTable& source, const TwistTable& target);

struct MonodromySpectrum {
  Label x;
  Label y;
  /// theta_Z / (theta_X theta_Y) per composition factor Z, repeated N_{XY}^Z times.
  std::vector<std::pair<Label, CycNumber>> eigenvalues;

  bool trivial() const;
  /// Distinct eigenvalues in order of first appearance.
  std::vector<CycNumber> distinct() const;
  nlohmann::json to_json() const;
};

/// Throws TruncationOverflowError.
MonodromySpectrum monodromy(const FusionRing& ring, const TwistTable& t, std::size_t x, std::size_t y);

/// Labels far enough from the truncation edge for their monodromy to be tested.
std::vector<std::size_t> truncation_core(const FusionRing& ring);
/// Simples whose monodromy against every simple with a known product is trivial.
std::vector<std::size_t> muger_candidates(const FusionRing& ring, const TwistTable& t);

struct QuantumOrderReport {
  bool ok = false;
  std::vector<CycNumber> dims;  // d(X_1^+), ..., d(X_p^+)
  int order_q2 = 0;
  std::string detail;
};

/// d(X_2^+) d(X_r) = d(X_{r-1}) + d(X_{r+1}) with d(X_2^+) = -(q + q^{-1}).
QuantumOrderReport quantum_order_check(const ContextPtr& ctx);

/// e^{2 pi i (h3 - h1 - h2)}; throws NonRepresentablePhaseError unless 4p(h3 - h1 - h2) is integral.
CycNumber voa_monodromy_phase(const ContextPtr& ctx, const Rational& h1, const Rational& h2, const Rational& h3);
/// e^{pi i (h3 - h1 - h2)}; throws NonRepresentablePhaseError unless 2p(h3 - h1 - h2) is integral.
CycNumber voa_braiding_phase(const ContextPtr& ctx, const Rational& h1, const Rational& h2, const Rational& h3);

}  // namespace ribbonkit
