#pragma once

// Weight modules for quantum SL(2) at q = exp(pi i / p).
//
// Weights are integers in units of alpha/2. K acts on weight a by q^a and the
// pairing is (a, b) = ab/2, so q^{(a,b)} = z^{ab} with z = q^{1/2}.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ribbonkit/matrix.hpp"
#include "ribbonkit/tldiag.hpp"

namespace ribbonkit {

struct WeightModule {
  ContextPtr ctx;
  std::vector<int> weights;
  Matrix E;
  Matrix F;
  Matrix Ep;
  Matrix Fp;
  /// Number of tensor factors of the one-dimensional character chi.
  int chi_shift = 0;

  std::size_t dim() const noexcept { return weights.size(); }
};

WeightModule simple_V(const ContextPtr& ctx, int s);
WeightModule simple_L(const ContextPtr& ctx, int r);
/// The anomalous one-dimensional module: weight p, so K acts by -1.
WeightModule chi_module(const ContextPtr& ctx);

WeightModule tensor(const WeightModule& m, const WeightModule& n);

/// K^power as a diagonal matrix.
Matrix k_matrix(const WeightModule& m, int power = 1);
/// E^{(k)} for 0 <= k <= p, with E^{(p)} the stored operator.
Matrix divided_E(const WeightModule& m, int k);
Matrix divided_F(const WeightModule& m, int k);

struct RelationReport {
  bool ok = true;
  std::string failure;
};
RelationReport check_relations(const WeightModule& m);

/// True when `map` (codomain x domain) intertwines all four generators.
bool is_module_map(const Matrix& map, const WeightModule& domain, const WeightModule& codomain);

/// Braiding M (x) N -> N (x) M.
Matrix braiding(const WeightModule& m, const WeightModule& n);
/// theta^{-1} from the operator formula.
Matrix twist_inverse(const WeightModule& m);
Matrix twist(const WeightModule& m);

struct SelfDuality {
  Matrix coev;  // 4 x 1
  Matrix ev;    // 1 x 4
};
SelfDuality selfdual_V(const ContextPtr& ctx);
CycNumber intrinsic_dim(const Matrix& coev, const Matrix& ev);

/// The functor TL(d) -> modules sending [1] to V_2, cup to coev and cap to ev.
Matrix tl_functor(const TLMorphism& f);
/// d of the image of the Jones-Wenzl idempotent on n strands.
CycNumber jw_intrinsic_dim(const ContextPtr& ctx, int n);

/// Simple SL(2)_q module L(r p) (x) V_s, twisted by chi^chi.
struct FactorLabel {
  int r = 0;
  int s = 1;
  int chi = 0;
  auto operator<=>(const FactorLabel&) const = default;
};

using Character = std::map<int, long>;
using FactorMultiset = std::map<FactorLabel, long>;

Character module_character(const WeightModule& m);
Character product_character(const Character& a, const Character& b);
/// Weights of L(r p) (x) V_s.
Character simple_character(int p, int r, int s);
FactorMultiset decompose_character(int p, const Character& character, int chi_shift);
FactorMultiset decompose_factors(const WeightModule& m);

/// Restriction of a simple to the small quantum group: multiplicity of chi^c V_s.
struct UqFactor {
  int s;
  int chi;
  long multiplicity;
};
UqFactor restrict_to_uq(const FactorLabel& label);

/// Simplicity certificate: one singular vector, at the top, generating everything.
bool is_simple(const WeightModule& m);

nlohmann::json module_to_json(const WeightModule& m);

}  // namespace ribbonkit
