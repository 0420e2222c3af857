#include "ribbonkit/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "ribbonkit/qrep.hpp"

namespace ribbonkit {

namespace {

using IntMatrix = std::vector<std::vector<long>>;

std::tuple<int, int, int, int> sort_key(const Label& l) {
  return {static_cast<int>(l.family), l.r, l.s, l.family == Family::X ? (l.sign > 0 ? 0 : 1) : l.sign};
}

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

IntMatrix int_sub(IntMatrix a, const IntMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
  return a;
}

using PairCombination = std::map<std::pair<int, int>, long>;

void add_pair(PairCombination& acc, int r, int s, long c) {
  if (c == 0 || r <= 0) return;
  auto& slot = acc[{r, s}];
  slot += c;
  if (slot == 0) acc.erase({r, s});
}

// Singlet characters: M_{r,s} has weights (r-1)p + s-1-2j.
Character singlet_character(int p, int r, int s) {
  Character c;
  for (int j = 0; j < s; ++j) ++c[(r - 1) * p + s - 1 - 2 * j];
  return c;
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::string Label::name() const {
  const std::string rs = std::to_string(r) + "," + std::to_string(s);
  switch (family) {
    case Family::V:
      return (sign ? "chi*V[" : "V[") + std::to_string(s) + "]";
    case Family::X:
      return "X[" + std::to_string(s) + (sign > 0 ? ",+]" : ",-]");
    case Family::L:
      return "L[" + rs + "]";
    case Family::M:
      return "M[" + rs + "]";
    case Family::SL2:
      return "SL2[" + rs + "]";
    case Family::Generic:
      break;
  }
  return "g" + std::to_string(r);
}

Label v_label(int s, int chi) { return Label{Family::V, 0, s, chi}; }
Label x_label(int s, int sign) { return Label{Family::X, 0, s, sign}; }
Label vir_label(int r, int s) { return Label{Family::L, r, s, 0}; }
Label singlet_label(int r, int s) { return Label{Family::M, r, s, 0}; }
Label sl2_label(int r, int s) { return Label{Family::SL2, r, s, 0}; }

void add_to(Combination& acc, const Combination& x, long scale) {
  for (const auto& [k, c] : x) {
    auto& slot = acc[k];
    slot += c * scale;
    if (slot == 0) acc.erase(k);
  }
}

long total_length(const Combination& x) {
  long total = 0;
  for (const auto& [k, c] : x) total += c;
  return total;
}

FusionRing::FusionRing(std::string name, int p, std::vector<Label> labels, std::size_t unit)
    : name_(std::move(name)), p_(p), labels_(std::move(labels)), unit_(unit), products_(labels_.size() * labels_.size()) {
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

std::optional<std::size_t> FusionRing::find(const Label& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FusionRing::index_of(const Label& l) const {
  auto idx = find(l);
  if (!idx) throw UnknownLabelError("label " + l.name() + " is not in ring " + name_);
  return *idx;
}

void FusionRing::set_product(std::size_t i, std::size_t j, Combination value) {
  products_[i * size() + j] = std::move(value);
}

bool FusionRing::has_product(std::size_t i, std::size_t j) const { return products_[i * size() + j].has_value(); }

const Combination& FusionRing::product(std::size_t i, std::size_t j) const {
  const auto& slot = products_[i * size() + j];
  if (!slot) throw TruncationOverflowError(labels_[i].name() + " * " + labels_[j].name() + " leaves the truncation of " + name_);
  return *slot;
}

long FusionRing::constant(std::size_t i, std::size_t j, std::size_t k) const {
  const auto& prod = product(i, j);
  auto it = prod.find(k);
  return it == prod.end() ? 0 : it->second;
}

Combination FusionRing::multiply(const Combination& a, const Combination& b) const {
  Combination out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) add_to(out, product(i, j), ci * cj);
  return out;
}

bool FusionRing::finite() const {
  return std::all_of(products_.begin(), products_.end(), [](const auto& x) { return x.has_value(); });
}

void FusionRing::set_dual(std::size_t i, std::size_t j) {
  if (duals_.size() < size()) duals_.resize(size());
  duals_.at(i) = j;
}

std::optional<std::size_t> FusionRing::dual(std::size_t i) const {
  if (i < duals_.size() && duals_[i]) return duals_[i];
  for (std::size_t j = 0; j < size(); ++j)
    if (has_product(i, j) && constant(i, j, unit_) > 0) return j;
  return std::nullopt;
}

std::string FusionRing::format(const Combination& x) const {
  if (x.empty()) return "0";
  std::vector<std::pair<std::size_t, long>> terms(x.begin(), x.end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return sort_key(labels_[a.first]) < sort_key(labels_[b.first]); });
  std::string out;
  for (const auto& [k, c] : terms) {
    long mag = c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag < 0) mag = -mag;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += labels_[k].name();
  }
  return out;
}

nlohmann::json FusionRing::to_json() const {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& l : labels_) labels.push_back(l.name());
  nlohmann::json constants = nlohmann::json::array();
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (!has_product(i, j)) continue;
      for (const auto& [k, c] : product(i, j)) constants.push_back({i, j, k, c});
    }
  return nlohmann::json{{"ring", name_}, {"p", p_}, {"labels", labels}, {"unit", labels_[unit_].name()},
                        {"constants", constants}};
}

FusionRing uq_ring(const ContextPtr& ctx) {
  const int p = ctx->p();
  std::vector<Label> labels;
  for (int chi = 0; chi <= 1; ++chi)
    for (int s = 1; s <= p; ++s) labels.push_back(v_label(s, chi));
  FusionRing ring("uq", p, labels, 0);
  std::vector<WeightModule> modules;
  for (const auto& l : labels) modules.push_back(l.sign ? tensor(chi_module(ctx), simple_V(ctx, l.s)) : simple_V(ctx, l.s));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) {
      Combination c;
      for (const auto& [factor, mult] : decompose_factors(tensor(modules[i], modules[j]))) {
        const UqFactor u = restrict_to_uq(factor);
        add_to(c, Combination{{ring.index_of(v_label(u.s, u.chi)), u.multiplicity * mult}});
      }
      ring.set_product(i, j, std::move(c));
    }
  for (std::size_t i = 0; i < ring.size(); ++i) ring.set_dual(i, i);
  return ring;
}

FusionRing wp_ring(int p) {
  if (p < 2) throw RangeError("p must be at least 2");
  std::vector<Label> labels;
  for (int sign : {1, -1})
    for (int s = 1; s <= p; ++s) labels.push_back(x_label(s, sign));
  const std::size_t n = labels.size();
  FusionRing ring("wp", p, labels, 0);
  auto idx = [&](int s, int sign) { return static_cast<std::size_t>((sign > 0 ? 0 : p) + s - 1); };

  // Column j of A is X_2^+ * basis_j; column j of J is X_1^- * basis_j.
  IntMatrix a(n, std::vector<long>(n, 0)), j(n, std::vector<long>(n, 0));
  for (int sign : {1, -1})
    for (int s = 1; s <= p; ++s) {
      const std::size_t col = idx(s, sign);
      if (s == 1 && p > 1) {
        a[idx(2, sign)][col] += 1;
      }
      if (s > 1 && s < p) {
        a[idx(s - 1, sign)][col] += 1;
        a[idx(s + 1, sign)][col] += 1;
      }
      if (s == p) {
        a[idx(1, -sign)][col] += 2;
        a[idx(p - 1, sign)][col] += 2;
      }
      j[idx(s, -sign)][col] = 1;
    }
  std::vector<IntMatrix> left(n);
  left[idx(1, 1)] = int_identity(n);
  left[idx(2, 1)] = a;
  for (int s = 2; s < p; ++s) left[idx(s + 1, 1)] = int_sub(int_mul(a, left[idx(s, 1)]), left[idx(s - 1, 1)]);
  for (int s = 1; s <= p; ++s) left[idx(s, -1)] = int_mul(j, left[idx(s, 1)]);

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Combination c;
      for (std::size_t k = 0; k < n; ++k) {
        const long v = left[x][k][y];
        if (v < 0)
          throw NegativityError("negative constant for " + labels[x].name() + " * " + labels[y].name());
        if (v != 0) c[k] = v;
      }
      ring.set_product(x, y, std::move(c));
    }
  for (std::size_t i = 0; i < ring.size(); ++i) ring.set_dual(i, i);
  return ring;
}

FusionRing group_ring(int n) {
  std::vector<Label> labels;
  for (int i = 0; i < n; ++i) labels.push_back(Label{Family::Generic, i, 0, 0});
  FusionRing ring("Z/" + std::to_string(n), 0, labels, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      ring.set_product(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                       Combination{{static_cast<std::size_t>((i + j) % n), 1}});
  for (int i = 0; i < n; ++i) ring.set_dual(static_cast<std::size_t>(i), static_cast<std::size_t>((n - i) % n));
  return ring;
}

FusionRing vir_ring(int p, int r_max) {
  if (r_max < 1) throw RangeError("r_max must be positive");
  std::vector<Label> labels;
  for (int r = 1; r <= r_max; ++r)
    for (int s = 1; s <= p; ++s) labels.push_back(vir_label(r, s));
  FusionRing ring("vir", p, labels, 0);
  const int work_limit = 2 * r_max + p + 2;

  auto act_A = [&](const PairCombination& x) {
    PairCombination out;
    for (const auto& [rs, c] : x) {
      add_pair(out, rs.first - 1, rs.second, c);
      add_pair(out, rs.first + 1, rs.second, c);
    }
    return out;
  };
  auto act_B = [&](const PairCombination& x) {
    PairCombination out;
    for (const auto& [rs, c] : x) {
      const auto [r, s] = rs;
      if (s == p) {
        add_pair(out, r, p - 1, 2 * c);
        add_pair(out, r - 1, 1, c);
        add_pair(out, r + 1, 1, c);
      } else if (s == 1) {
        add_pair(out, r, 2, c);
      } else {
        add_pair(out, r, s - 1, c);
        add_pair(out, r, s + 1, c);
      }
    }
    return out;
  };
  // U_{k}(act) applied to x via the Chebyshev recursion.
  auto chebyshev = [&](auto&& act, int k, const PairCombination& x) {
    PairCombination prev, cur = x;
    for (int i = 0; i < k; ++i) {
      PairCombination next = act(cur);
      for (const auto& [rs, c] : prev) add_pair(next, rs.first, rs.second, -c);
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  };

  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const PairCombination start{{{labels[j].r, labels[j].s}, 1}};
      const PairCombination result = chebyshev(act_B, labels[i].s - 1, chebyshev(act_A, labels[i].r - 1, start));
      bool inside = true;
      Combination c;
      for (const auto& [rs, coeff] : result) {
        if (rs.first > work_limit) throw Error("Virasoro working space exceeded");
        if (coeff < 0) throw NegativityError("negative Virasoro constant for " + labels[i].name() + " * " + labels[j].name());
        if (rs.first > r_max) {
          inside = false;
          break;
        }
        c[ring.index_of(vir_label(rs.first, rs.second))] = coeff;
      }
      if (inside) ring.set_product(i, j, std::move(c));
    }
  for (std::size_t i = 0; i < ring.size(); ++i) ring.set_dual(i, i);
  return ring;
}

FusionRing singlet_ring(int p, int r_max) {
  if (r_max < 1) throw RangeError("r_max must be positive");
  std::vector<Label> labels;
  for (int r = 1 - r_max; r <= 1 + r_max; ++r)
    for (int s = 1; s <= p; ++s) labels.push_back(singlet_label(r, s));
  FusionRing ring("singlet", p, labels, static_cast<std::size_t>(r_max) * static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) {
      Character rest = product_character(singlet_character(p, labels[i].r, labels[i].s),
                                         singlet_character(p, labels[j].r, labels[j].s));
      Combination c;
      bool inside = true;
      while (!rest.empty()) {
        const auto [top, mult] = *rest.rbegin();
        if (mult < 0) throw InconsistentCharacterError("singlet character peeling went negative");
        const int r = floor_div(top, p) + 1;
        const int s = top - (r - 1) * p + 1;
        auto idx = ring.find(singlet_label(r, s));
        if (!idx) inside = false;
        else c[*idx] += mult;
        for (const auto& [w, k] : singlet_character(p, r, s)) {
          auto& slot = rest[w];
          slot -= k * mult;
          if (slot == 0) rest.erase(w);
        }
      }
      if (inside) ring.set_product(i, j, std::move(c));
    }
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (auto d = ring.find(singlet_label(2 - labels[i].r, labels[i].s))) ring.set_dual(i, *d);
  return ring;
}

FusionRing sl2_ring(int p, int r_max) {
  if (r_max < 1) throw RangeError("r_max must be positive");
  std::vector<Label> labels;
  for (int r = 0; r < r_max; ++r)
    for (int s = 1; s <= p; ++s) labels.push_back(sl2_label(r, s));
  FusionRing ring("sl2", p, labels, 0);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const Character ch = product_character(simple_character(p, labels[i].r, labels[i].s),
                                             simple_character(p, labels[j].r, labels[j].s));
      Combination c;
      bool inside = true;
      for (const auto& [factor, mult] : decompose_character(p, ch, 0)) {
        auto idx = ring.find(sl2_label(factor.r, factor.s));
        if (!idx) {
          inside = false;
          break;
        }
        c[*idx] += mult;
      }
      if (inside) ring.set_product(i, j, std::move(c));
    }
  for (std::size_t i = 0; i < ring.size(); ++i) ring.set_dual(i, i);
  return ring;
}

CheckResult check_associativity(const FusionRing& ring) {
  CheckResult result;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        try {
          const Combination lhs = ring.multiply(ring.product(i, j), ring.basis(k));
          const Combination rhs = ring.multiply(ring.basis(i), ring.product(j, k));
          ++result.checked;
          if (lhs != rhs) {
            result.ok = false;
            result.witness = "(" + ring.label(i).name() + "*" + ring.label(j).name() + ")*" + ring.label(k).name();
            return result;
          }
        } catch (const TruncationOverflowError&) {
        }
      }
  return result;
}

CheckResult check_associativity_sampled(const FusionRing& ring, std::size_t samples, std::mt19937_64& rng) {
  CheckResult result;
  std::uniform_int_distribution<std::size_t> pick(0, ring.size() - 1);
  std::size_t attempts = 0;
  while (result.checked < samples && attempts < 50 * samples) {
    ++attempts;
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    try {
      const Combination lhs = ring.multiply(ring.product(i, j), ring.basis(k));
      const Combination rhs = ring.multiply(ring.basis(i), ring.product(j, k));
      ++result.checked;
      if (lhs != rhs) {
        result.ok = false;
        result.witness = "(" + ring.label(i).name() + "*" + ring.label(j).name() + ")*" + ring.label(k).name();
        return result;
      }
    } catch (const TruncationOverflowError&) {
    }
  }
  if (result.checked < samples) {
    result.ok = false;
    result.witness = "only " + std::to_string(result.checked) + " in-truncation triples found";
  }
  return result;
}

CheckResult check_unit_and_duality(const FusionRing& ring) {
  CheckResult result;
  const std::size_t u = ring.unit();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    ++result.checked;
    if (ring.product(i, u) != ring.basis(i) || ring.product(u, i) != ring.basis(i)) {
      result.ok = false;
      result.witness = "unit fails on " + ring.label(i).name();
      return result;
    }
    auto d = ring.dual(i);
    if (!d) {
      if (ring.finite()) {
        result.ok = false;
        result.witness = ring.label(i).name() + " has no dual";
        return result;
      }
      continue;
    }
    if (ring.has_product(i, *d) && ring.constant(i, *d, u) < 1) {
      result.ok = false;
      result.witness = "duality fails on " + ring.label(i).name() + " * " + ring.label(*d).name();
      return result;
    }
    auto dd = ring.dual(*d);
    if (dd && *dd != i) {
      result.ok = false;
      result.witness = "duality is not an involution at " + ring.label(i).name();
      return result;
    }
  }
  for (std::size_t i = 0; i < ring.size(); ++i) {
    auto di = ring.dual(i);
    if (!di) continue;
    for (std::size_t j = 0; j < ring.size(); ++j) {
      auto dj = ring.dual(j);
      if (!dj || !ring.has_product(i, j) || !ring.has_product(*dj, *di)) continue;
      Combination mirrored;
      bool complete = true;
      for (const auto& [k, c] : ring.product(*dj, *di)) {
        auto dk = ring.dual(k);
        if (!dk) {
          complete = false;
          break;
        }
        mirrored[*dk] += c;
      }
      if (!complete) continue;
      ++result.checked;
      if (mirrored != ring.product(i, j)) {
        result.ok = false;
        result.witness = "duality is not an anti-automorphism at " + ring.label(i).name() + " * " + ring.label(j).name();
        return result;
      }
    }
  }
  return result;
}

CheckResult check_morphism(const RingMorphism& m) {
  CheckResult result;
  const FusionRing& src = *m.source;
  const FusionRing& dst = *m.target;
  if (m.images[src.unit()] != dst.basis(dst.unit())) {
    result.ok = false;
    result.witness = "unit is not preserved";
    return result;
  }
  auto image_of = [&](const Combination& x) {
    Combination out;
    for (const auto& [k, c] : x) add_to(out, m.images[k], c);
    return out;
  };
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j) {
      if (!src.has_product(i, j)) continue;
      try {
        const Combination lhs = image_of(src.product(i, j));
        const Combination rhs = dst.multiply(m.images[i], m.images[j]);
        ++result.checked;
        if (lhs != rhs) {
          result.ok = false;
          result.witness = src.label(i).name() + " * " + src.label(j).name() + ": image " + dst.format(lhs) +
                           " but product of images " + dst.format(rhs);
          return result;
        }
      } catch (const TruncationOverflowError&) {
      }
    }
  return result;
}

CheckResult check_isomorphism(const RingMorphism& m) {
  std::vector<char> hit(m.target->size(), 0);
  for (std::size_t i = 0; i < m.images.size(); ++i) {
    const auto& img = m.images[i];
    if (img.size() != 1 || img.begin()->second != 1 || hit[img.begin()->first])
      return CheckResult{false, "not a bijection of bases at " + m.source->label(i).name(), 0};
    hit[img.begin()->first] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return CheckResult{false, "map is not surjective", 0};
  return check_morphism(m);
}

RingMorphism map_T(const FusionRing& uq, const FusionRing& wp) {
  RingMorphism m{&uq, &wp, {}};
  for (const auto& l : uq.labels()) m.images.push_back(wp.basis(wp.index_of(x_label(l.s, l.sign ? -1 : 1))));
  return m;
}

CheckResult check_iso_T(const FusionRing& uq, const FusionRing& wp) {
  if (uq.size() != wp.size()) return CheckResult{false, "rings have different ranks", 0};
  return check_isomorphism(map_T(uq, wp));
}

FPDim fpdim_object(const FusionRing& ring, const Combination& x) {
  if (!ring.finite()) throw TruncationOverflowError("FPdim needs a finite ring");
  const std::size_t n = ring.size();
  // m[j][k]: coefficient of k in x * basis_j; its Perron vector is the dimension function.
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, c] : x)
      for (const auto& [k, v] : ring.product(i, j)) m[j][k] += c * v;

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double lambda = 0.0;
  for (int iter = 0; iter < 20000; ++iter) {
    std::vector<double> w(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      w[j] = v[j];
      for (std::size_t k = 0; k < n; ++k) w[j] += static_cast<double>(m[j][k]) * v[k];
    }
    double norm = 0.0;
    for (double e : w) norm += e * e;
    norm = std::sqrt(norm);
    if (norm == 0.0) break;
    double change = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      w[j] /= norm;
      change = std::max(change, std::abs(w[j] - v[j]));
    }
    v = std::move(w);
    lambda = norm - 1.0;
    if (change < 1e-14) break;
  }
  auto residual_of = [&](double lam) {
    double res = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double acc = -lam * v[j];
      for (std::size_t k = 0; k < n; ++k) acc += static_cast<double>(m[j][k]) * v[k];
      res = std::max(res, std::abs(acc));
    }
    return res;
  };

  FPDim out;
  out.value = lambda;
  const long candidate = std::lround(lambda);
  if (std::abs(lambda - static_cast<double>(candidate)) < 1e-6 && candidate >= 0) {
    // Exact kernel of m - candidate*I, then a positive vector guided by v.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a[j][k] = m[j][k] - (j == k ? candidate : 0);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
      std::size_t piv = row;
      while (piv < n && a[piv][col] == 0) ++piv;
      if (piv == n) continue;
      std::swap(a[piv], a[row]);
      const Rational inv = 1 / a[row][col];
      for (auto& e : a[row]) e *= inv;
      for (std::size_t r2 = 0; r2 < n; ++r2) {
        if (r2 == row || a[r2][col] == 0) continue;
        const Rational f = a[r2][col];
        for (std::size_t c2 = 0; c2 < n; ++c2) a[r2][c2] -= f * a[row][c2];
      }
      pivots.push_back(col);
      ++row;
    }
    std::vector<Rational> sol(n);
    std::vector<char> is_pivot(n, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) {
        sol[c] = Rational(std::lround(v[c] * 1e9), 1000000000L);
        sol[c].canonicalize();
      }
    for (std::size_t r2 = 0; r2 < pivots.size(); ++r2) {
      Rational acc = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) acc -= a[r2][c] * sol[c];
      sol[pivots[r2]] = acc;
    }
    bool positive = pivots.size() < n;
    for (const auto& e : sol) positive = positive && e > 0;
    bool eigen = positive;
    for (std::size_t j = 0; j < n && eigen; ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += m[j][k] * sol[k];
      eigen = acc == candidate * sol[j];
    }
    if (eigen) {
      out.exact = true;
      out.exact_value = candidate;
      out.value = static_cast<double>(candidate);
      out.residual = 0.0;
      return out;
    }
  }
  out.residual = residual_of(lambda);
  if (out.residual >= 1e-10) throw ConvergenceError("power iteration did not converge for FPdim");
  return out;
}

Rational fpdim_category(const FusionRing& ring, const std::vector<Combination>& projectives) {
  if (projectives.size() != ring.size()) throw RangeError("one projective class per simple is required");
  Rational total = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const FPDim dp = fpdim_object(ring, projectives[i]);
    const FPDim dx = fpdim_object(ring, ring.basis(i));
    if (!dp.exact || !dx.exact) throw ConvergenceError("FPdim of " + ring.label(i).name() + " has no exact certificate");
    total += Rational(dp.exact_value) * Rational(dx.exact_value);
  }
  return total;
}

std::vector<Combination> uq_projective_classes(const ContextPtr& ctx, const FusionRing& uq) {
  const int p = ctx->p();
  auto class_of = [&](const WeightModule& m) {
    Combination c;
    for (const auto& [factor, mult] : decompose_factors(m)) {
      const UqFactor u = restrict_to_uq(factor);
      add_to(c, Combination{{uq.index_of(v_label(u.s, u.chi)), u.multiplicity * mult}});
    }
    return c;
  };
  std::vector<Combination> out(uq.size());
  for (int chi = 0; chi <= 1; ++chi) {
    WeightModule base = simple_V(ctx, p);
    if (chi) base = tensor(chi_module(ctx), base);
    for (int s = 1; s <= p; ++s) {
      Combination c = class_of(tensor(base, simple_V(ctx, s)));
      if (s >= 3) add_to(c, class_of(tensor(base, simple_V(ctx, s - 2))), -1);
      for (const auto& [k, v] : c)
        if (v < 0) throw NegativityError("projective class extraction went negative");
      out[uq.index_of(v_label(p - s + 1, chi))] = std::move(c);
    }
  }
  return out;
}

std::vector<Combination> projective_classes_closed_form(const FusionRing& ring) {
  const int p = ring.p();
  std::vector<Combination> out(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Label& l = ring.label(i);
    if (l.family != Family::V && l.family != Family::X) throw UnknownLabelError("closed-form projectives need a uq or wp ring");
    auto twin = [&](int s, bool flip) {
      if (l.family == Family::V) return ring.index_of(v_label(s, flip ? 1 - l.sign : l.sign));
      return ring.index_of(x_label(s, flip ? -l.sign : l.sign));
    };
    if (l.s == p) {
      out[i] = ring.basis(i);
    } else {
      out[i][i] = 2;
      out[i][twin(p - l.s, true)] = 2;
    }
  }
  return out;
}

Rational conformal_weight(int p, int n, int s) {
  const long a = static_cast<long>(n) * p - s;
  Rational h(a * a - static_cast<long>(p - 1) * (p - 1), 4L * p);
  h.canonicalize();
  return h;
}

Rational label_weight(int p, const Label& l) {
  switch (l.family) {
    case Family::L:
      return conformal_weight(p, l.r, l.s);
    case Family::M:
      return conformal_weight(p, l.r >= 1 ? l.r : 2 - l.r, l.s);
    case Family::X:
      return conformal_weight(p, l.sign > 0 ? 1 : 2, l.s);
    default:
      throw UnknownLabelError("no conformal weight for " + l.name());
  }
}

std::vector<std::pair<Label, Rational>> vir_labels(int p, int r_max) {
  if (r_max < 1) throw RangeError("r_max must be positive");
  std::vector<std::pair<Label, Rational>> out;
  for (int r = 1; r <= r_max; ++r)
    for (int s = 1; s <= p; ++s) out.emplace_back(vir_label(r, s), conformal_weight(p, r, s));
  return out;
}

std::vector<std::pair<Label, Rational>> singlet_labels(int p, int r_max) {
  if (r_max < 1) throw RangeError("r_max must be positive");
  std::vector<std::pair<Label, Rational>> out;
  for (int r = 1 - r_max; r <= 1 + r_max; ++r)
    for (int s = 1; s <= p; ++s) out.emplace_back(singlet_label(r, s), label_weight(p, singlet_label(r, s)));
  return out;
}

int epsilon(int r) { return ((r + 1) % 2 == 0) ? 1 : -1; }

Combination induction_F(const FusionRing& wp, const Label& vir) {
  if (vir.family != Family::L) throw UnknownLabelError(vir.name() + " is not a Virasoro label");
  return Combination{{wp.index_of(x_label(vir.s, epsilon(vir.r))), vir.r}};
}

Combination induction_Iprime(const FusionRing& wp, const Label& singlet) {
  if (singlet.family != Family::M) throw UnknownLabelError(singlet.name() + " is not a singlet label");
  return Combination{{wp.index_of(x_label(singlet.s, epsilon(singlet.r))), 1}};
}

Combination induction_I(const FusionRing& singlet, const Label& vir) {
  if (vir.family != Family::L) throw UnknownLabelError(vir.name() + " is not a Virasoro label");
  Combination out;
  for (int k = 0; k < vir.r; ++k) {
    auto idx = singlet.find(singlet_label(vir.r - 2 * k, vir.s));
    if (!idx) throw TruncationOverflowError("I(" + vir.name() + ") leaves the singlet truncation");
    out[*idx] += 1;
  }
  return out;
}

Label map_K(const Label& sl2) {
  if (sl2.family != Family::SL2) throw UnknownLabelError(sl2.name() + " is not a quantum SL(2) label");
  return vir_label(sl2.r + 1, sl2.s);
}

Combination restriction(const FusionRing& uq, const Label& sl2) {
  if (sl2.family != Family::SL2) throw UnknownLabelError(sl2.name() + " is not a quantum SL(2) label");
  return Combination{{uq.index_of(v_label(sl2.s, sl2.r % 2)), sl2.r + 1}};
}

Combination projective_Q(const FusionRing& vir, int r, int s) {
  const int p = vir.p();
  if (s < 1 || s > p || r < 1) throw RangeError("projective label out of range");
  Combination q1;
  if (s == p) {
    q1[vir.index_of(map_K(sl2_label(0, p)))] = 1;
  } else {
    q1[vir.index_of(map_K(sl2_label(0, s)))] = 2;
    q1[vir.index_of(map_K(sl2_label(1, p - s)))] = 1;
  }
  if (r == 1) return q1;
  return vir.multiply(vir.basis(vir.index_of(vir_label(r, 1))), q1);
}

CheckResult check_grring_iso_K(int p, int r_max, const FusionRing& uq) {
  const FusionRing sl2 = sl2_ring(p, r_max);
  const FusionRing vir = vir_ring(p, r_max);
  const FusionRing wp = wp_ring(p);
  RingMorphism k{&sl2, &vir, {}};
  for (const auto& l : sl2.labels()) k.images.push_back(vir.basis(vir.index_of(map_K(l))));
  CheckResult iso = check_isomorphism(k);
  if (!iso.ok) return iso;
  const RingMorphism t = map_T(uq, wp);
  for (const auto& l : sl2.labels()) {
    const Combination lhs = induction_F(wp, map_K(l));
    Combination rhs;
    for (const auto& [idx, c] : restriction(uq, l)) add_to(rhs, t.images[idx], c);
    ++iso.checked;
    if (lhs != rhs) return CheckResult{false, "F(K(" + l.name() + ")) != T(res(" + l.name() + "))", iso.checked};
  }
  return iso;
}

CheckResult check_induction_composition(int p, int r_max) {
  const FusionRing wp = wp_ring(p);
  const FusionRing singlet = singlet_ring(p, r_max);
  CheckResult result;
  for (const auto& [l, h] : vir_labels(p, r_max)) {
    Combination composed;
    for (const auto& [idx, c] : induction_I(singlet, l)) add_to(composed, induction_Iprime(wp, singlet.label(idx)), c);
    ++result.checked;
    if (composed != induction_F(wp, l)) return CheckResult{false, "I'(I(" + l.name() + ")) != F(" + l.name() + ")", result.checked};
  }
  return result;
}

CheckResult check_induction_I_homomorphism(int p, int r_max) {
  const FusionRing vir = vir_ring(p, r_max);
  const FusionRing singlet = singlet_ring(p, r_max);
  RingMorphism m{&vir, &singlet, {}};
  for (const auto& l : vir.labels()) m.images.push_back(induction_I(singlet, l));
  return check_morphism(m);
}

nlohmann::json morphism_to_json(const RingMorphism& m) {
  nlohmann::json assignment = nlohmann::json::object();
  for (std::size_t i = 0; i < m.images.size(); ++i)
    assignment[m.source->label(i).name()] = m.target->format(m.images[i]);
  return nlohmann::json{{"source", m.source->name()}, {"target", m.target->name()}, {"assignment", assignment}};
}

}  // namespace ribbonkit
