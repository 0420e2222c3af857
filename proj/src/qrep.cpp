#include "ribbonkit/qrep.hpp"

#include <algorithm>
#include <cstdlib>

namespace ribbonkit {

namespace {

Matrix zero_matrix(const ContextPtr& ctx, std::size_t n) { return Matrix(ctx, n, n); }

WeightModule empty_module(const ContextPtr& ctx, std::vector<int> weights) {
  const std::size_t n = weights.size();
  return WeightModule{ctx, std::move(weights), zero_matrix(ctx, n), zero_matrix(ctx, n), zero_matrix(ctx, n),
                      zero_matrix(ctx, n)};
}

CycNumber sign(const ContextPtr& ctx, long exponent) { return CycNumber(ctx, exponent % 2 == 0 ? 1L : -1L); }

RelationReport fail(std::string what) { return RelationReport{false, std::move(what)}; }

bool shifts_by(const Matrix& op, const std::vector<int>& weights, int shift) {
  for (std::size_t i = 0; i < op.rows(); ++i)
    for (std::size_t j = 0; j < op.cols(); ++j)
      if (!op(i, j).is_zero() && weights[i] != weights[j] + shift) return false;
  return true;
}

// Diagonal operator acting on weight a by qbinom(a + c, t).
Matrix k_binomial(const WeightModule& m, int c, int t) {
  std::vector<CycNumber> d;
  d.reserve(m.dim());
  for (int a : m.weights) d.push_back(qbinom(m.ctx, a + c, t));
  return Matrix::diagonal(m.ctx, d);
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

WeightModule simple_V(const ContextPtr& ctx, int s) {
  const int p = ctx->p();
  if (s < 1 || s > p) throw RangeError("simple_V needs 1 <= s <= p");
  std::vector<int> weights;
  for (int j = 0; j < s; ++j) weights.push_back(s - 1 - 2 * j);
  WeightModule m = empty_module(ctx, std::move(weights));
  for (int j = 0; j + 1 < s; ++j) {
    m.F(static_cast<std::size_t>(j + 1), static_cast<std::size_t>(j)) = qint(ctx, j + 1);
    m.E(static_cast<std::size_t>(j), static_cast<std::size_t>(j + 1)) = qint(ctx, s - j - 1);
  }
  return m;
}

WeightModule simple_L(const ContextPtr& ctx, int r) {
  if (r < 0) throw RangeError("simple_L needs r >= 0");
  const int p = ctx->p();
  std::vector<int> weights;
  for (int j = 0; j <= r; ++j) weights.push_back((r - 2 * j) * p);
  WeightModule m = empty_module(ctx, std::move(weights));
  const CycNumber fp_sign = sign(ctx, static_cast<long>(r + 1) * p);
  for (int j = 0; j < r; ++j) {
    m.Fp(static_cast<std::size_t>(j + 1), static_cast<std::size_t>(j)) = fp_sign * CycNumber(ctx, static_cast<long>(j + 1));
    m.Ep(static_cast<std::size_t>(j), static_cast<std::size_t>(j + 1)) = CycNumber(ctx, static_cast<long>(r - j));
  }
  return m;
}

WeightModule chi_module(const ContextPtr& ctx) {
  WeightModule m = empty_module(ctx, {ctx->p()});
  m.chi_shift = 1;
  return m;
}

Matrix k_matrix(const WeightModule& m, int power) {
  std::vector<CycNumber> d;
  d.reserve(m.dim());
  for (int a : m.weights) d.push_back(make_root(m.ctx, 2L * a * power));
  return Matrix::diagonal(m.ctx, d);
}

Matrix divided_E(const WeightModule& m, int k) {
  const int p = m.ctx->p();
  if (k == 0) return Matrix::identity(m.ctx, m.dim());
  if (k == p) return m.Ep;
  if (k < 0 || k > p) throw RangeError("divided power index out of range");
  return m.E.pow(static_cast<unsigned>(k)) * qfact(m.ctx, k).inverse();
}

Matrix divided_F(const WeightModule& m, int k) {
  const int p = m.ctx->p();
  if (k == 0) return Matrix::identity(m.ctx, m.dim());
  if (k == p) return m.Fp;
  if (k < 0 || k > p) throw RangeError("divided power index out of range");
  return m.F.pow(static_cast<unsigned>(k)) * qfact(m.ctx, k).inverse();
}

WeightModule tensor(const WeightModule& m, const WeightModule& n) {
  if (m.ctx != n.ctx) throw ContextMismatchError();
  const auto& ctx = m.ctx;
  const int p = ctx->p();
  std::vector<int> weights;
  weights.reserve(m.dim() * n.dim());
  for (int a : m.weights)
    for (int b : n.weights) weights.push_back(a + b);
  const Matrix im = Matrix::identity(ctx, m.dim());
  const Matrix in = Matrix::identity(ctx, n.dim());
  const Matrix km = k_matrix(m);
  WeightModule out{ctx,
                   std::move(weights),
                   m.E.kron(in) + km.kron(n.E),
                   m.F.kron(k_matrix(n, -1)) + im.kron(n.F),
                   Matrix(ctx, m.dim() * n.dim(), m.dim() * n.dim()),
                   Matrix(ctx, m.dim() * n.dim(), m.dim() * n.dim()),
                   m.chi_shift + n.chi_shift};
  for (int t = 0; t <= p; ++t) {
    const CycNumber e_coeff = q_power(ctx, static_cast<long>(t) * (p - t));
    out.Ep += (divided_E(m, p - t) * k_matrix(m, t)).kron(divided_E(n, t)) * e_coeff;
    const CycNumber f_coeff = q_power(ctx, -static_cast<long>(t) * (p - t));
    out.Fp += divided_F(m, t).kron(k_matrix(n, -t) * divided_F(n, p - t)) * f_coeff;
  }
  return out;
}

RelationReport check_relations(const WeightModule& m) {
  const auto& ctx = m.ctx;
  const int p = ctx->p();
  const std::size_t n = m.dim();
  if (!shifts_by(m.E, m.weights, 2)) return fail("E does not raise weights by 2");
  if (!shifts_by(m.F, m.weights, -2)) return fail("F does not lower weights by 2");
  if (!shifts_by(m.Ep, m.weights, 2 * p)) return fail("E^(p) does not raise weights by 2p");
  if (!shifts_by(m.Fp, m.weights, -2 * p)) return fail("F^(p) does not lower weights by 2p");
  const CycNumber q = q_of(ctx);
  if (commutator(m.E, m.F) * (q - q.inverse()) != k_matrix(m, 1) - k_matrix(m, -1)) return fail("[E,F] relation");
  if (!m.E.pow(static_cast<unsigned>(p)).is_zero()) return fail("E^p is not zero");
  if (!m.F.pow(static_cast<unsigned>(p)).is_zero()) return fail("F^p is not zero");
  if (m.chi_shift != 0) return {};
  if (!commutator(m.E, m.Ep).is_zero()) return fail("[E,E^(p)] is not zero");
  if (!commutator(m.F, m.Fp).is_zero()) return fail("[F,F^(p)] is not zero");
  Matrix rhs(ctx, n, n);
  for (int t = 1; t <= p; ++t) rhs += divided_F(m, p - t) * k_binomial(m, 2 * t - 2 * p, t) * divided_E(m, p - t);
  if (commutator(m.Ep, m.Fp) != rhs) return fail("[E^(p),F^(p)] relation");
  if (commutator(m.Ep, m.F) != divided_E(m, p - 1) * k_binomial(m, p - 1, 1)) return fail("[E^(p),F] relation");
  if (commutator(m.E, m.Fp) != divided_F(m, p - 1) * k_binomial(m, 1 - p, 1)) return fail("[E,F^(p)] relation");
  return {};
}

bool is_module_map(const Matrix& map, const WeightModule& domain, const WeightModule& codomain) {
  if (map.rows() != codomain.dim() || map.cols() != domain.dim()) return false;
  return map * domain.E == codomain.E * map && map * domain.F == codomain.F * map &&
         map * domain.Ep == codomain.Ep * map && map * domain.Fp == codomain.Fp * map;
}

Matrix braiding(const WeightModule& m, const WeightModule& n) {
  if (m.ctx != n.ctx) throw ContextMismatchError();
  const auto& ctx = m.ctx;
  const int p = ctx->p();
  const std::size_t dm = m.dim(), dn = n.dim();
  std::vector<CycNumber> omega;
  omega.reserve(dm * dn);
  for (int a : m.weights)
    for (int b : n.weights) omega.push_back(make_root(ctx, -static_cast<long>(a) * b));
  const CycNumber q = q_of(ctx);
  const CycNumber step = q.inverse() - q;
  Matrix sum(ctx, dm * dn, dm * dn);
  Matrix e_pow = Matrix::identity(ctx, dm);
  Matrix f_pow = Matrix::identity(ctx, dn);
  CycNumber step_pow(ctx, 1L);
  for (int k = 0; k < p; ++k) {
    if (e_pow.is_zero() || f_pow.is_zero()) break;
    const CycNumber coeff = q_power(ctx, -static_cast<long>(k) * (k - 1) / 2) * step_pow / qfact(ctx, k);
    sum += e_pow.kron(f_pow) * coeff;
    e_pow = e_pow * m.E;
    f_pow = f_pow * n.F;
    step_pow *= step;
  }
  Matrix swap(ctx, dm * dn, dm * dn);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dn; ++j) swap(j * dm + i, i * dn + j) = CycNumber(ctx, 1L);
  return swap * sum * Matrix::diagonal(ctx, omega);
}

Matrix twist_inverse(const WeightModule& m) {
  const auto& ctx = m.ctx;
  const int p = ctx->p();
  const std::size_t n = m.dim();
  const CycNumber q = q_of(ctx);
  const CycNumber base = q * q - CycNumber(ctx, 1L);
  Matrix out(ctx, n, n);
  Matrix e_pow = Matrix::identity(ctx, n);
  Matrix f_pow = Matrix::identity(ctx, n);
  for (int k = 0; k < p; ++k) {
    const Matrix fe = f_pow * e_pow;
    if (fe.is_zero()) break;
    const CycNumber scale = base.pow(k) / qfact(ctx, k);
    for (std::size_t j = 0; j < n; ++j) {
      const long a = m.weights[j];
      const CycNumber col = sign(ctx, std::labs(a)) * make_root(ctx, a * a + static_cast<long>(k) * (k + 1) + 2L * (k + 1) * a) * scale;
      for (std::size_t i = 0; i < n; ++i)
        if (!fe(i, j).is_zero()) out(i, j) += fe(i, j) * col;
    }
    e_pow = e_pow * m.E;
    f_pow = f_pow * m.F;
  }
  return out;
}

Matrix twist(const WeightModule& m) { return twist_inverse(m).inverse(); }

SelfDuality selfdual_V(const ContextPtr& ctx) {
  const CycNumber z = make_root(ctx, 1);
  const CycNumber zi = make_root(ctx, -1);
  SelfDuality out{Matrix(ctx, 4, 1), Matrix(ctx, 1, 4)};
  // Basis v_1 = index 0 (weight +1), v_-1 = index 1; v_a (x) v_b sits at 2a + b.
  out.coev(1, 0) = zi;
  out.coev(2, 0) = -z;
  out.ev(0, 1) = -zi;
  out.ev(0, 2) = z;
  return out;
}

CycNumber intrinsic_dim(const Matrix& coev, const Matrix& ev) {
  const Matrix scalar = ev * coev;
  if (scalar.rows() != 1 || scalar.cols() != 1) throw BoundaryMismatchError("intrinsic dimension needs coev: 1 -> X and ev: X -> 1");
  return scalar(0, 0);
}

Matrix tl_functor(const TLMorphism& f) {
  const auto& ctx = f.context();
  const int n = f.bottom_count(), m = f.top_count();
  const std::size_t rows = std::size_t{1} << m, cols = std::size_t{1} << n;
  Matrix out(ctx, rows, cols);
  const SelfDuality sd = selfdual_V(ctx);
  auto ev_value = [&](int x, int y) -> const CycNumber& { return sd.ev(0, static_cast<std::size_t>(2 * x + y)); };
  auto coev_value = [&](int x, int y) -> const CycNumber& { return sd.coev(static_cast<std::size_t>(2 * x + y), 0); };
  for (const auto& [diagram, coeff] : f.terms()) {
    for (std::size_t col = 0; col < cols; ++col) {
      for (std::size_t row = 0; row < rows; ++row) {
        // Bit of the leftmost tensor factor is the most significant one.
        auto bottom_bit = [&](int i) { return static_cast<int>((col >> (n - 1 - i)) & 1U); };
        auto top_bit = [&](int x) { return static_cast<int>((row >> (m - 1 - x)) & 1U); };
        CycNumber value = coeff;
        for (int pt = 0; pt < n + m && !value.is_zero(); ++pt) {
          const int other = diagram.partner(pt);
          if (other < pt) continue;
          const bool top_a = diagram.is_top(pt), top_b = diagram.is_top(other);
          if (!top_a && !top_b) {
            value *= ev_value(bottom_bit(pt), bottom_bit(other));
          } else if (top_a && top_b) {
            const int x = diagram.top_position(pt), y = diagram.top_position(other);
            value *= coev_value(top_bit(std::min(x, y)), top_bit(std::max(x, y)));
          } else if (bottom_bit(pt) != top_bit(diagram.top_position(other))) {
            value = CycNumber(ctx);
          }
        }
        if (!value.is_zero()) out(row, col) += value;
      }
    }
  }
  return out;
}

CycNumber jw_intrinsic_dim(const ContextPtr& ctx, int n) {
  const Matrix coev = tl_functor(nested_cups(ctx, n));
  const Matrix ev = tl_functor(nested_caps(ctx, n));
  const Matrix projector = Matrix::identity(ctx, std::size_t{1} << n).kron(tl_functor(jones_wenzl(ctx, n)));
  return intrinsic_dim(projector * coev, ev);
}

Character module_character(const WeightModule& m) {
  Character c;
  for (int a : m.weights) ++c[a];
  return c;
}

Character product_character(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) out[wa + wb] += ma * mb;
  return out;
}

Character simple_character(int p, int r, int s) {
  Character c;
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j < s; ++j) ++c[(r - 2 * i) * p + s - 1 - 2 * j];
  return c;
}

FactorMultiset decompose_character(int p, const Character& character, int chi_shift) {
  Character rest;
  for (const auto& [w, mult] : character)
    if (mult != 0) rest[w - chi_shift * p] += mult;
  FactorMultiset out;
  const int chi = ((chi_shift % 2) + 2) % 2;
  while (!rest.empty()) {
    const auto [top, mult] = *rest.rbegin();
    if (mult < 0 || top < 0) throw InconsistentCharacterError("character is not a nonnegative sum of simple characters");
    const FactorLabel label{top / p, top % p + 1, chi};
    out[label] += mult;
    for (const auto& [w, k] : simple_character(p, label.r, label.s)) {
      auto it = rest.find(w);
      if (it == rest.end()) it = rest.emplace(w, 0).first;
      it->second -= k * mult;
      if (it->second == 0) rest.erase(it);
    }
  }
  return out;
}

FactorMultiset decompose_factors(const WeightModule& m) {
  return decompose_character(m.ctx->p(), module_character(m), m.chi_shift);
}

UqFactor restrict_to_uq(const FactorLabel& label) { return UqFactor{label.s, (label.r + label.chi) % 2, label.r + 1}; }

bool is_simple(const WeightModule& m) {
  const auto& ctx = m.ctx;
  const std::size_t n = m.dim();
  if (n == 0) return false;
  const int top = *std::max_element(m.weights.begin(), m.weights.end());
  if (std::count(m.weights.begin(), m.weights.end(), top) != 1) return false;
  Matrix raising(ctx, 2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      raising(i, j) = m.E(i, j);
      raising(n + i, j) = m.Ep(i, j);
    }
  if (n - raising.rank() != 1) return false;

  const std::size_t top_index = static_cast<std::size_t>(std::find(m.weights.begin(), m.weights.end(), top) - m.weights.begin());
  std::vector<Matrix> span;
  Matrix start(ctx, n, 1);
  start(top_index, 0) = CycNumber(ctx, 1L);
  std::vector<Matrix> frontier{start};
  auto rank_of = [&](const std::vector<Matrix>& vecs) {
    Matrix stackm(ctx, n, vecs.size());
    for (std::size_t c = 0; c < vecs.size(); ++c)
      for (std::size_t i = 0; i < n; ++i) stackm(i, c) = vecs[c](i, 0);
    return stackm.rank();
  };
  while (!frontier.empty() && span.size() < n) {
    std::vector<Matrix> next;
    for (const auto& v : frontier) {
      span.push_back(v);
      if (rank_of(span) < span.size()) {
        span.pop_back();
        continue;
      }
      next.push_back(m.F * v);
      next.push_back(m.Fp * v);
    }
    frontier = std::move(next);
  }
  return span.size() == n;
}

nlohmann::json module_to_json(const WeightModule& m) {
  auto matrix_json = [](const Matrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).to_string());
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return nlohmann::json{{"field", m.ctx->header()}, {"dimension", m.dim()}, {"weights", m.weights},
                        {"chi_shift", m.chi_shift}, {"E", matrix_json(m.E)},  {"F", matrix_json(m.F)},
                        {"Ep", matrix_json(m.Ep)},   {"Fp", matrix_json(m.Fp)}};
}

}  // namespace ribbonkit
