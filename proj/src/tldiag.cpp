#include "ribbonkit/tldiag.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace ribbonkit {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t components() {
    std::size_t count = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (find(i) == i) ++count;
    return count;
  }

 private:
  std::vector<std::size_t> parent_;
};

void enumerate_matchings(std::vector<int>& partner, int lo, int hi, std::vector<std::vector<int>>& out,
                         std::vector<std::pair<int, int>>& pending) {
  if (lo > hi) {
    if (pending.empty()) {
      out.push_back(partner);
      return;
    }
    auto [nlo, nhi] = pending.back();
    pending.pop_back();
    enumerate_matchings(partner, nlo, nhi, out, pending);
    pending.emplace_back(nlo, nhi);
    return;
  }
  for (int j = lo + 1; j <= hi; j += 2) {
    partner[static_cast<std::size_t>(lo)] = j;
    partner[static_cast<std::size_t>(j)] = lo;
    pending.emplace_back(j + 1, hi);
    enumerate_matchings(partner, lo + 1, j - 1, out, pending);
    pending.pop_back();
  }
}

}  // namespace

TLDiagram::TLDiagram(int bottom, int top, std::vector<int> partner)
    : bottom_(bottom), top_(top), partner_(std::move(partner)) {
  const int n = bottom_ + top_;
  if (bottom_ < 0 || top_ < 0 || n % 2 != 0 || static_cast<int>(partner_.size()) != n)
    throw BoundaryMismatchError("diagram boundary counts must have even sum");
  for (int i = 0; i < n; ++i) {
    const int j = partner_[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n || j == i || partner_[static_cast<std::size_t>(j)] != i)
      throw BoundaryMismatchError("diagram pairing is not a perfect matching");
  }
  for (int i = 0; i < n; ++i) {
    const int j = partner_[static_cast<std::size_t>(i)];
    if (j < i) continue;
    for (int k = i + 1; k < j; ++k) {
      const int l = partner_[static_cast<std::size_t>(k)];
      if (l < i || l > j) throw BoundaryMismatchError("diagram pairing is not planar");
    }
  }
}

TLDiagram TLDiagram::identity(int n) {
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int x = 0; x < n; ++x) {
    const int t = 2 * n - 1 - x;
    partner[static_cast<std::size_t>(x)] = t;
    partner[static_cast<std::size_t>(t)] = x;
  }
  return TLDiagram(n, n, std::move(partner));
}

std::string TLDiagram::to_string() const {
  std::ostringstream out;
  out << "TL(" << bottom_ << "->" << top_ << "){";
  for (int i = 0; i < bottom_ + top_; ++i) {
    const int j = partner_[static_cast<std::size_t>(i)];
    if (i < j) out << '(' << i << ',' << j << ')';
  }
  out << '}';
  return out.str();
}

std::pair<TLDiagram, int> stack(const TLDiagram& lower, const TLDiagram& upper) {
  const int n = lower.bottom_count();
  const int m = lower.top_count();
  const int k = upper.top_count();
  if (upper.bottom_count() != m) throw BoundaryMismatchError("composed diagrams have different middle boundaries");
  const int offset = n + m;
  const int total = offset + m + k;

  auto partner_of = [&](int node) { return node < offset ? lower.partner(node) : offset + upper.partner(node - offset); };
  auto is_middle = [&](int node) { return node < offset ? node >= n : node - offset < m; };
  auto across = [&](int node) {
    return node < offset ? offset + lower.top_position(node) : lower.top_point(node - offset);
  };
  auto outer_index = [&](int node) {
    if (node < n) return node;
    const int x = upper.top_position(node - offset);
    return n + (k - 1 - x);
  };

  std::vector<char> visited(static_cast<std::size_t>(total), 0);
  std::vector<int> partner(static_cast<std::size_t>(n + k), -1);
  auto walk = [&](int start) {
    int cur = start;
    visited[static_cast<std::size_t>(cur)] = 1;
    for (;;) {
      cur = partner_of(cur);
      visited[static_cast<std::size_t>(cur)] = 1;
      if (!is_middle(cur)) return cur;
      cur = across(cur);
      visited[static_cast<std::size_t>(cur)] = 1;
    }
  };
  std::vector<int> outer;
  for (int i = 0; i < n; ++i) outer.push_back(i);
  for (int i = 0; i < k; ++i) outer.push_back(offset + m + i);
  for (int node : outer) {
    if (visited[static_cast<std::size_t>(node)]) continue;
    const int end = walk(node);
    partner[static_cast<std::size_t>(outer_index(node))] = outer_index(end);
    partner[static_cast<std::size_t>(outer_index(end))] = outer_index(node);
  }
  int loops = 0;
  for (int node = 0; node < total; ++node) {
    if (visited[static_cast<std::size_t>(node)] || !is_middle(node)) continue;
    ++loops;
    int cur = node;
    do {
      visited[static_cast<std::size_t>(cur)] = 1;
      const int next = partner_of(cur);
      visited[static_cast<std::size_t>(next)] = 1;
      cur = across(next);
    } while (cur != node);
  }
  return {TLDiagram(n, k, std::move(partner)), loops};
}

TLDiagram juxtapose(const TLDiagram& left, const TLDiagram& right) {
  const int n1 = left.bottom_count(), m1 = left.top_count();
  const int n2 = right.bottom_count(), m2 = right.top_count();
  const int bottom = n1 + n2, top = m1 + m2;
  auto res_top = [&](int x) { return bottom + top - 1 - x; };
  auto map_left = [&](int pt) { return pt < n1 ? pt : res_top(left.top_position(pt)); };
  auto map_right = [&](int pt) { return pt < n2 ? n1 + pt : res_top(m1 + right.top_position(pt)); };
  std::vector<int> partner(static_cast<std::size_t>(bottom + top));
  for (int pt = 0; pt < n1 + m1; ++pt) partner[static_cast<std::size_t>(map_left(pt))] = map_left(left.partner(pt));
  for (int pt = 0; pt < n2 + m2; ++pt)
    partner[static_cast<std::size_t>(map_right(pt))] = map_right(right.partner(pt));
  return TLDiagram(bottom, top, std::move(partner));
}

std::vector<TLDiagram> enumerate_diagrams(int bottom, int top) {
  const int n = bottom + top;
  if (n % 2 != 0) return {};
  std::vector<std::vector<int>> matchings;
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  std::vector<std::pair<int, int>> pending;
  enumerate_matchings(partner, 0, n - 1, matchings, pending);
  std::vector<TLDiagram> out;
  out.reserve(matchings.size());
  for (auto& m : matchings) out.emplace_back(bottom, top, std::move(m));
  std::sort(out.begin(), out.end());
  return out;
}

TLMorphism::TLMorphism(ContextPtr ctx, int bottom, int top) : ctx_(std::move(ctx)), bottom_(bottom), top_(top) {}

TLMorphism TLMorphism::from_diagram(ContextPtr ctx, const TLDiagram& d, const CycNumber& coeff) {
  TLMorphism m(std::move(ctx), d.bottom_count(), d.top_count());
  m.add_term(d, coeff);
  return m;
}

TLMorphism TLMorphism::identity(ContextPtr ctx, int n) {
  CycNumber one(ctx, 1L);
  return from_diagram(std::move(ctx), TLDiagram::identity(n), one);
}

CycNumber TLMorphism::coefficient(const TLDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? CycNumber(ctx_) : it->second;
}

void TLMorphism::add_term(const TLDiagram& d, const CycNumber& coeff) {
  if (d.bottom_count() != bottom_ || d.top_count() != top_) throw BoundaryMismatchError("diagram does not fit morphism");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

TLMorphism& TLMorphism::operator+=(const TLMorphism& other) {
  if (other.bottom_ != bottom_ || other.top_ != top_) throw BoundaryMismatchError("adding morphisms of different type");
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

TLMorphism& TLMorphism::operator-=(const TLMorphism& other) {
  if (other.bottom_ != bottom_ || other.top_ != top_) throw BoundaryMismatchError("subtracting morphisms of different type");
  for (const auto& [d, c] : other.terms_) add_term(d, -c);
  return *this;
}

TLMorphism& TLMorphism::operator*=(const CycNumber& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const TLMorphism& a, const TLMorphism& b) {
  if (a.bottom_ != b.bottom_ || a.top_ != b.top_) return false;
  return a.terms_ == b.terms_;
}

std::string TLMorphism::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") * " + d.to_string();
  }
  return out;
}

TLMorphism compose(const TLMorphism& f, const TLMorphism& g) {
  if (f.top_count() != g.bottom_count()) throw BoundaryMismatchError("composed morphisms have different middle boundaries");
  const auto& ctx = f.context();
  if (ctx != g.context()) throw ContextMismatchError();
  TLMorphism out(ctx, f.bottom_count(), g.top_count());
  const CycNumber d = loop_value(ctx);
  std::vector<CycNumber> d_powers{CycNumber(ctx, 1L)};
  for (const auto& [df, cf] : f.terms()) {
    for (const auto& [dg, cg] : g.terms()) {
      auto [diagram, loops] = stack(df, dg);
      while (static_cast<int>(d_powers.size()) <= loops) d_powers.push_back(d_powers.back() * d);
      out.add_term(diagram, cf * cg * d_powers[static_cast<std::size_t>(loops)]);
    }
  }
  return out;
}

TLMorphism tensor(const TLMorphism& f, const TLMorphism& g) {
  const auto& ctx = f.context();
  if (ctx != g.context()) throw ContextMismatchError();
  TLMorphism out(ctx, f.bottom_count() + g.bottom_count(), f.top_count() + g.top_count());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) out.add_term(juxtapose(df, dg), cf * cg);
  return out;
}

TLMorphism cup(const ContextPtr& ctx) { return TLMorphism::from_diagram(ctx, TLDiagram(0, 2, {1, 0}), CycNumber(ctx, 1L)); }

TLMorphism cap(const ContextPtr& ctx) { return TLMorphism::from_diagram(ctx, TLDiagram(2, 0, {1, 0}), CycNumber(ctx, 1L)); }

TLMorphism tl_f(const ContextPtr& ctx) { return compose(cap(ctx), cup(ctx)); }

TLMorphism hook(const ContextPtr& ctx, int n, int i) {
  if (i < 1 || i > n - 1) throw RangeError("hook index out of range");
  return tensor(tensor(TLMorphism::identity(ctx, i - 1), tl_f(ctx)), TLMorphism::identity(ctx, n - i - 1));
}

TLMorphism jones_wenzl(const ContextPtr& ctx, int n) {
  if (n < 0) throw RangeError("Jones-Wenzl projector needs a nonnegative strand count");
  for (int k = 1; k <= n; ++k) {
    if (qint(ctx, k).is_zero())
      throw QuantumOrderError("quantum integer [" + std::to_string(k) + "] vanishes at p = " + std::to_string(ctx->p()));
  }
  TLMorphism jw = TLMorphism::identity(ctx, std::min(n, 1));
  const TLMorphism id1 = TLMorphism::identity(ctx, 1);
  for (int k = 2; k <= n; ++k) {
    const TLMorphism lifted = tensor(jw, id1);
    const CycNumber ratio = qint(ctx, k - 1) / qint(ctx, k);
    jw = lifted + ratio * compose(compose(lifted, hook(ctx, k, k - 1)), lifted);
  }
  return jw;
}

CycNumber markov_close(const TLMorphism& f) {
  if (f.bottom_count() != f.top_count()) throw BoundaryMismatchError("markov closure needs an endomorphism");
  const auto& ctx = f.context();
  const CycNumber d = loop_value(ctx);
  const int n = f.bottom_count();
  CycNumber total(ctx);
  for (const auto& [diagram, coeff] : f.terms()) {
    UnionFind uf(static_cast<std::size_t>(2 * n));
    for (int pt = 0; pt < 2 * n; ++pt) uf.unite(static_cast<std::size_t>(pt), static_cast<std::size_t>(diagram.partner(pt)));
    for (int i = 0; i < n; ++i) uf.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(diagram.top_point(i)));
    total += coeff * d.pow(static_cast<long>(uf.components()));
  }
  return total;
}

TLMorphism nested_cups(const ContextPtr& ctx, int n) {
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) partner[static_cast<std::size_t>(i)] = 2 * n - 1 - i;
  return TLMorphism::from_diagram(ctx, TLDiagram(0, 2 * n, partner), CycNumber(ctx, 1L));
}

TLMorphism nested_caps(const ContextPtr& ctx, int n) {
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) partner[static_cast<std::size_t>(i)] = 2 * n - 1 - i;
  return TLMorphism::from_diagram(ctx, TLDiagram(2 * n, 0, partner), CycNumber(ctx, 1L));
}

std::vector<TLMorphism> braiding_candidates(const ContextPtr& ctx) {
  const TLMorphism f = tl_f(ctx);
  const TLMorphism id = TLMorphism::identity(ctx, 2);
  const CycNumber z = make_root(ctx, 1);
  const CycNumber zi = make_root(ctx, -1);
  const TLMorphism plus = z * f + zi * id;
  const TLMorphism minus = zi * f + z * id;
  const CycNumber neg(ctx, -1L);
  return {plus, neg * plus, minus, neg * minus};
}

bool check_hexagon(const TLMorphism& c) {
  if (c.bottom_count() != 2 || c.top_count() != 2) throw BoundaryMismatchError("braiding candidate must be an endomorphism of [2]");
  const auto& ctx = c.context();
  const TLMorphism id1 = TLMorphism::identity(ctx, 1);
  const TLMorphism lhs = compose(compose(tensor(cup(ctx), id1), tensor(id1, c)), tensor(c, id1));
  return lhs == tensor(id1, cup(ctx));
}

bool check_yang_baxter(const TLMorphism& c) {
  if (c.bottom_count() != 2 || c.top_count() != 2) throw BoundaryMismatchError("braiding candidate must be an endomorphism of [2]");
  const TLMorphism id1 = TLMorphism::identity(c.context(), 1);
  const TLMorphism c1 = tensor(c, id1);
  const TLMorphism c2 = tensor(id1, c);
  return compose(compose(c1, c2), c1) == compose(compose(c2, c1), c2);
}

SpanSolveResult solve_hexagon_span(const ContextPtr& ctx) {
  const TLMorphism id1 = TLMorphism::identity(ctx, 1);
  const TLMorphism id2 = TLMorphism::identity(ctx, 2);
  const TLMorphism f = tl_f(ctx);
  const TLMorphism start = tensor(cup(ctx), id1);
  const TLDiagram left_cup = start.terms().begin()->first;
  const TLDiagram right_cup = tensor(id1, cup(ctx)).terms().begin()->first;

  auto term = [&](const TLMorphism& x, const TLMorphism& y) {
    return compose(compose(start, tensor(id1, y)), tensor(x, id1));
  };
  const TLMorphism t_ff = term(f, f), t_fi = term(f, id2), t_if = term(id2, f), t_ii = term(id2, id2);
  auto alpha = [&](const TLMorphism& t) { return t.coefficient(left_cup); };
  auto beta = [&](const TLMorphism& t) { return t.coefficient(right_cup); };

  SpanSolveResult result;
  const CycNumber beta_mix = beta(t_fi) + beta(t_if);
  if (!beta(t_ff).is_zero() || !beta(t_ii).is_zero() || beta_mix.is_zero()) return result;
  const CycNumber alpha_ff = alpha(t_ff), alpha_mix = alpha(t_fi) + alpha(t_if), alpha_ii = alpha(t_ii);
  if (alpha_ff.is_zero()) return result;

  // ab = w is forced; u = a^2 solves alpha_ff u^2 + alpha_mix w u + alpha_ii w^2 = 0.
  const CycNumber w = beta_mix.inverse();
  const int n = ctx->conductor();
  std::vector<CycNumber> roots_u;
  for (int k = 0; k < n; ++k) {
    const CycNumber u = make_root(ctx, k);
    if ((alpha_ff * u * u + alpha_mix * w * u + alpha_ii * w * w).is_zero()) roots_u.push_back(u);
  }
  bool complete = roots_u.size() == 2;
  for (const auto& u : roots_u) {
    int found = 0;
    for (int k = 0; k < n; ++k) {
      const CycNumber a = make_root(ctx, k);
      if (a * a != u) continue;
      result.solutions.push_back({a, w / a});
      ++found;
    }
    complete = complete && found == 2;
  }
  result.complete = complete;
  return result;
}

}  // namespace ribbonkit
