#pragma once

// Temperley-Lieb category TL(d) at d = -(q + q^{-1}).
//
// Boundary points of an n -> m diagram sit on one circle: bottom points are
// 0..n-1 left to right, top points are n..n+m-1 right to left. A diagram is a
// non-crossing perfect matching of these points, stored as a partner table.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ribbonkit/cyclo.hpp"

namespace ribbonkit {

class TLDiagram {
 public:
  /// Validates that `partner` is a planar perfect matching on n + m points.
  TLDiagram(int bottom, int top, std::vector<int> partner);

  static TLDiagram identity(int n);

  int bottom_count() const noexcept { return bottom_; }
  int top_count() const noexcept { return top_; }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& partners() const noexcept { return partner_; }

  /// Circular index of the top point at left-to-right position x.
  int top_point(int x) const noexcept { return bottom_ + top_ - 1 - x; }
  bool is_top(int point) const noexcept { return point >= bottom_; }
  /// Left-to-right position of a top point.
  int top_position(int point) const noexcept { return bottom_ + top_ - 1 - point; }

  /// Sorted pair list, e.g. `TL(2->2){(0,3)(1,2)}`.
  std::string to_string() const;

  auto operator<=>(const TLDiagram&) const = default;
  bool operator==(const TLDiagram&) const = default;

 private:
  int bottom_;
  int top_;
  std::vector<int> partner_;
};

/// Stacks `lower` (n -> m) under `upper` (m -> k); returns the diagram and the loop count.
std::pair<TLDiagram, int> stack(const TLDiagram& lower, const TLDiagram& upper);
TLDiagram juxtapose(const TLDiagram& left, const TLDiagram& right);

/// Every planar matching n -> m (a Catalan number of them).
std::vector<TLDiagram> enumerate_diagrams(int bottom, int top);

class TLMorphism {
 public:
  TLMorphism(ContextPtr ctx, int bottom, int top);

  static TLMorphism from_diagram(ContextPtr ctx, const TLDiagram& d, const CycNumber& coeff);
  static TLMorphism identity(ContextPtr ctx, int n);

  const ContextPtr& context() const noexcept { return ctx_; }
  int bottom_count() const noexcept { return bottom_; }
  int top_count() const noexcept { return top_; }
  const std::map<TLDiagram, CycNumber>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of a diagram (zero when absent).
  CycNumber coefficient(const TLDiagram& d) const;
  void add_term(const TLDiagram& d, const CycNumber& coeff);

  TLMorphism& operator+=(const TLMorphism& other);
  TLMorphism& operator-=(const TLMorphism& other);
  TLMorphism& operator*=(const CycNumber& scalar);
  friend TLMorphism operator+(TLMorphism a, const TLMorphism& b) { return a += b; }
  friend TLMorphism operator-(TLMorphism a, const TLMorphism& b) { return a -= b; }
  friend TLMorphism operator*(const CycNumber& s, TLMorphism a) { return a *= s; }

  friend bool operator==(const TLMorphism& a, const TLMorphism& b);
  friend bool operator!=(const TLMorphism& a, const TLMorphism& b) { return !(a == b); }

  /// Sum of `coeff * diagram` terms.
  std::string to_string() const;

 private:
  ContextPtr ctx_;
  int bottom_;
  int top_;
  std::map<TLDiagram, CycNumber> terms_;
};

/// `f` first, then `g`; closed loops become factors of d.
TLMorphism compose(const TLMorphism& f, const TLMorphism& g);
TLMorphism tensor(const TLMorphism& f, const TLMorphism& g);
TLMorphism cup(const ContextPtr& ctx);
TLMorphism cap(const ContextPtr& ctx);

/// f = coev o ev on two strands.
TLMorphism tl_f(const ContextPtr& ctx);
/// Hook E_i on n strands, 1 <= i <= n-1.
TLMorphism hook(const ContextPtr& ctx, int n, int i);

TLMorphism jones_wenzl(const ContextPtr& ctx, int n);
CycNumber markov_close(const TLMorphism& f);

/// Nested cups 0 -> 2n and nested caps 2n -> 0.
TLMorphism nested_cups(const ContextPtr& ctx, int n);
TLMorphism nested_caps(const ContextPtr& ctx, int n);

/// +(z f + z^-1), -(z f + z^-1), +(z^-1 f + z), -(z^-1 f + z), z = q^{1/2}.
std::vector<TLMorphism> braiding_candidates(const ContextPtr& ctx);
bool check_hexagon(const TLMorphism& c);
bool check_yang_baxter(const TLMorphism& c);

struct SpanSolution {
  CycNumber a;
  CycNumber b;
};

/// All (a, b) with a f + b id satisfying the hexagon equation, solved exactly.
/// `complete` is true when the solver proved it found every root.
struct SpanSolveResult {
  std::vector<SpanSolution> solutions;
  bool complete = false;
};
SpanSolveResult solve_hexagon_span(const ContextPtr& ctx);

}  // namespace ribbonkit
