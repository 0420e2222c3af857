#pragma once

// Fusion (Z+) rings, Frobenius-Perron dimensions and Grothendieck-level maps.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ribbonkit/cyclo.hpp"

namespace ribbonkit {

enum class Family {
  V,        // V_s (sign 0) and chi (x) V_s (sign 1) for the small quantum group
  X,        // X_s^+ (sign +1) and X_s^- (sign -1) for the triplet algebra
  L,        // Virasoro L_{r,s}
  M,        // singlet M_{r,s}
  SL2,      // L(r p) (x) V_s for quantum SL(2)
  Generic,  // toy rings, labelled by r
};

struct Label {
  Family family = Family::Generic;
  int r = 0;
  int s = 0;
  int sign = 0;

  auto operator<=>(const Label&) const = default;
  std::string name() const;
};

/// Basis index -> coefficient; zero coefficients are never stored.
using Combination = std::map<std::size_t, long>;

void add_to(Combination& acc, const Combination& x, long scale = 1);
long total_length(const Combination& x);

class FusionRing {
 public:
  FusionRing(std::string name, int p, std::vector<Label> labels, std::size_t unit);

  const std::string& name() const noexcept { return name_; }
  int p() const noexcept { return p_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const Label& label(std::size_t i) const { return labels_.at(i); }
  std::size_t unit() const noexcept { return unit_; }
  std::optional<std::size_t> find(const Label& l) const;
  /// Throws UnknownLabelError.
  std::size_t index_of(const Label& l) const;

  void set_product(std::size_t i, std::size_t j, Combination value);
  bool has_product(std::size_t i, std::size_t j) const;
  /// Throws TruncationOverflowError when the product leaves the truncation.
  const Combination& product(std::size_t i, std::size_t j) const;
  long constant(std::size_t i, std::size_t j, std::size_t k) const;
  Combination multiply(const Combination& a, const Combination& b) const;
  /// True when every product of basis elements is known.
  bool finite() const;

  void set_dual(std::size_t i, std::size_t j);
  /// Dual label if it lies inside the ring; without a stored dual, the first j with N_{i,j}^unit > 0.
  std::optional<std::size_t> dual(std::size_t i) const;

  /// `2*X[1,-] + 2*X[2,+]`, terms in label order.
  std::string format(const Combination& x) const;
  Combination basis(std::size_t i) const { return Combination{{i, 1}}; }

  nlohmann::json to_json() const;

 private:
  std::string name_;
  int p_;
  std::vector<Label> labels_;
  std::map<Label, std::size_t> index_;
  std::size_t unit_;
  std::vector<std::optional<Combination>> products_;
  std::vector<std::optional<std::size_t>> duals_;
};

Label v_label(int s, int chi);
Label x_label(int s, int sign);
Label vir_label(int r, int s);
Label singlet_label(int r, int s);
Label sl2_label(int r, int s);

/// Ring of the small quantum group; every constant comes from decomposing explicit modules.
FusionRing uq_ring(const ContextPtr& ctx);
/// Triplet ring built from the generator rules alone.
FusionRing wp_ring(int p);
/// Z[Z/n] with basis g^0..g^{n-1}.
FusionRing group_ring(int n);

/// Virasoro ring truncated at r <= r_max.
FusionRing vir_ring(int p, int r_max);
/// Singlet ring truncated at |r - 1| <= r_max.
FusionRing singlet_ring(int p, int r_max);
/// Quantum SL(2) classes L(r p) (x) V_s with r < r_max, from characters.
FusionRing sl2_ring(int p, int r_max);

struct CheckResult {
  bool ok = true;
  std::string witness;
  std::size_t checked = 0;
};

CheckResult check_associativity(const FusionRing& ring);
CheckResult check_associativity_sampled(const FusionRing& ring, std::size_t samples, std::mt19937_64& rng);
CheckResult check_unit_and_duality(const FusionRing& ring);

struct RingMorphism {
  const FusionRing* source;
  const FusionRing* target;
  std::vector<Combination> images;
};

/// Unit-preserving and multiplicative on every defined basis pair.
CheckResult check_morphism(const RingMorphism& m);
/// Bijective on bases as well.
CheckResult check_isomorphism(const RingMorphism& m);

/// V_s -> X_s^+, chi V_s -> X_s^-.
RingMorphism map_T(const FusionRing& uq, const FusionRing& wp);
CheckResult check_iso_T(const FusionRing& uq, const FusionRing& wp);

struct FPDim {
  double value = 0.0;
  bool exact = false;
  long exact_value = 0;
  double residual = 0.0;
};

FPDim fpdim_object(const FusionRing& ring, const Combination& x);
/// Sum of FPdim(P_i) FPdim(X_i); every dimension must be certified exact.
Rational fpdim_category(const FusionRing& ring, const std::vector<Combination>& projectives);

/// Projective covers of the small quantum group simples, extracted from V_p (x) V_s.
std::vector<Combination> uq_projective_classes(const ContextPtr& ctx, const FusionRing& uq);
/// [P_s] = 2[s] + 2[chi (p - s)] for s < p and [P_p] = [p], in either finite ring.
std::vector<Combination> projective_classes_closed_form(const FusionRing& ring);

/// h_{n,s} = ((n p - s)^2 - (p - 1)^2) / (4p).
Rational conformal_weight(int p, int n, int s);
/// Conformal weight attached to a Virasoro or singlet label.
Rational label_weight(int p, const Label& l);
std::vector<std::pair<Label, Rational>> vir_labels(int p, int r_max);
std::vector<std::pair<Label, Rational>> singlet_labels(int p, int r_max);

int epsilon(int r);
/// F(L_{r,s}) = r X_s^{eps(r)}.
Combination induction_F(const FusionRing& wp, const Label& vir);
/// I'(M_{r,s}) = X_s^{eps(r)}.
Combination induction_Iprime(const FusionRing& wp, const Label& singlet);
/// I(L_{r,s}) = sum_{k<r} M_{r-2k,s}.
Combination induction_I(const FusionRing& singlet, const Label& vir);
/// K(L(rp) (x) V_s) = L_{r+1,s}.
Label map_K(const Label& sl2);
/// Restriction to the small quantum group: (r+1) chi^r V_s.
Combination restriction(const FusionRing& uq, const Label& sl2);
/// Q_{1,s} = K(P_s) with P_s = 2 V_s + L(p) (x) V_{p-s}; Q_{r,s} = L_{r,1} Q_{1,s}.
Combination projective_Q(const FusionRing& vir, int r, int s);

CheckResult check_grring_iso_K(int p, int r_max, const FusionRing& uq);
CheckResult check_induction_composition(int p, int r_max);
CheckResult check_induction_I_homomorphism(int p, int r_max);

nlohmann::json morphism_to_json(const RingMorphism& m);

}  // namespace ribbonkit
