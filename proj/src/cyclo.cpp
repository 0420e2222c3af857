#include "ribbonkit/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace ribbonkit {

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim(IntPoly& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

void trim(RatPoly& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Error("cyclotomic construction: inexact division");
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const Integer c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw Error("cyclotomic construction: inexact division");
  return quot;
}

std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {RatPoly{}, num};
  RatPoly quot(num.size() - dd, 0);
  const Rational lead = den.back();
  for (std::size_t i = num.size(); i-- > dd;) {
    if (num[i] == 0) continue;
    const Rational c = num[i] / lead;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  trim(num);
  trim(quot);
  return {quot, num};
}

RatPoly subtract(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

RatPoly multiply(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

long floor_mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    while (m % f == 0) m /= f;
    result -= result / f;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw RangeError("cyclotomic polynomial index must be positive");
  IntPoly xn(static_cast<std::size_t>(n) + 1, 0);
  xn[0] = -1;
  xn[static_cast<std::size_t>(n)] = 1;
  IntPoly divisor{1};
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) divisor = multiply(divisor, cyclotomic_polynomial(d));
  }
  return divide_exact(xn, divisor);
}

ContextPtr FieldContext::create(int p) {
  if (p < 2) throw RangeError("parameter p must be at least 2");
  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->p_ = p;
  ctx->conductor_ = 4 * p;
  ctx->phi_ = cyclotomic_polynomial(ctx->conductor_);
  ctx->degree_ = static_cast<int>(ctx->phi_.size()) - 1;
  if (ctx->degree_ != euler_phi(ctx->conductor_)) throw Error("cyclotomic polynomial has wrong degree");

  const int deg = ctx->degree_;
  const int count = std::max(ctx->conductor_, 2 * deg - 1);
  ctx->residues_.reserve(static_cast<std::size_t>(count));
  IntPoly current(static_cast<std::size_t>(deg), 0);
  current[0] = 1;
  for (int k = 0; k < count; ++k) {
    ctx->residues_.push_back(current);
    // Multiply by z and fold z^deg = -(phi_0 + ... + phi_{deg-1} z^{deg-1}).
    Integer carry = current[static_cast<std::size_t>(deg - 1)];
    for (int i = deg - 1; i > 0; --i) current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)];
    current[0] = 0;
    if (carry != 0) {
      for (int i = 0; i < deg; ++i) current[static_cast<std::size_t>(i)] -= carry * ctx->phi_[static_cast<std::size_t>(i)];
    }
  }
  return ctx;
}

std::string FieldContext::header() const { return "cyclotomic(N=" + std::to_string(conductor_) + ")"; }

CycNumber::CycNumber(ContextPtr ctx) : ctx_(std::move(ctx)) {}

CycNumber::CycNumber(ContextPtr ctx, const Rational& value) : CycNumber(std::move(ctx)) {
  if (value == 0) return;
  num_.assign(static_cast<std::size_t>(ctx_->degree()), 0);
  num_[0] = value.get_num();
  den_ = value.get_den();
}

CycNumber::CycNumber(ContextPtr ctx, long value) : CycNumber(std::move(ctx)) {
  if (value == 0) return;
  num_.assign(static_cast<std::size_t>(ctx_->degree()), 0);
  num_[0] = value;
}

CycNumber::CycNumber(ContextPtr ctx, std::vector<Integer> numerators, Integer denominator)
    : ctx_(std::move(ctx)), num_(std::move(numerators)), den_(std::move(denominator)) {
  normalize();
}

CycNumber CycNumber::from_coefficients(ContextPtr ctx, const std::vector<Rational>& coefficients) {
  Integer common = 1;
  for (const auto& c : coefficients) common = lcm(common, Integer(c.get_den()));
  const int deg = ctx->degree();
  const int n = ctx->conductor();
  std::vector<Integer> acc(static_cast<std::size_t>(deg), 0);
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] == 0) continue;
    const Integer scaled = coefficients[k].get_num() * (common / coefficients[k].get_den());
    const auto& residue = ctx->power_residue(static_cast<int>(k % static_cast<std::size_t>(n)));
    for (int i = 0; i < deg; ++i) acc[static_cast<std::size_t>(i)] += scaled * residue[static_cast<std::size_t>(i)];
  }
  return CycNumber(std::move(ctx), std::move(acc), common);
}

void CycNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  bool all_zero = true;
  for (const auto& c : num_) {
    if (c == 0) continue;
    all_zero = false;
    g = gcd(g, c);
    if (g == 1) break;
  }
  if (all_zero) {
    num_.clear();
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycNumber::require_same_context(const CycNumber& other) const {
  if (ctx_ != other.ctx_) throw ContextMismatchError();
}

Rational CycNumber::coefficient(int i) const {
  if (num_.empty()) return Rational(0);
  Rational r(num_[static_cast<std::size_t>(i)], den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CycNumber::coefficients() const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(ctx_->degree()));
  for (int i = 0; i < ctx_->degree(); ++i) out.push_back(coefficient(i));
  return out;
}

bool CycNumber::is_zero() const noexcept {
  return num_.empty();
}

bool CycNumber::is_one() const {
  if (num_.empty() || den_ != 1 || num_[0] != 1) return false;
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

int CycNumber::root_exponent() const {
  if (num_.empty() || den_ != 1) return -1;
  for (int k = 0; k < ctx_->conductor(); ++k) {
    if (num_ == ctx_->power_residue(k)) return k;
  }
  return -1;
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& other) {
  require_same_context(other);
  if (other.num_.empty()) return *this;
  if (num_.empty()) {
    num_ = other.num_;
    den_ = other.den_;
    return *this;
  }
  if (den_ == other.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += other.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * other.den_ + other.num_[i] * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& other) { return *this += -other; }

CycNumber& CycNumber::operator*=(const CycNumber& other) {
  require_same_context(other);
  if (num_.empty() || other.num_.empty()) {
    num_.clear();
    den_ = 1;
    return *this;
  }
  const int deg = ctx_->degree();
  std::vector<Integer> wide(static_cast<std::size_t>(2 * deg - 1), 0);
  bool any = false;
  for (int i = 0; i < deg; ++i) {
    const Integer& a = num_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; j < deg; ++j) {
      const Integer& b = other.num_[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      mpz_addmul(wide[static_cast<std::size_t>(i + j)].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      any = true;
    }
  }
  if (!any) {
    num_.clear();
    den_ = 1;
    return *this;
  }
  for (int i = 0; i < deg; ++i) num_[static_cast<std::size_t>(i)] = std::move(wide[static_cast<std::size_t>(i)]);
  for (int k = deg; k < 2 * deg - 1; ++k) {
    const Integer& c = wide[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const auto& residue = ctx_->power_residue(k);
    for (int i = 0; i < deg; ++i) {
      if (residue[static_cast<std::size_t>(i)] != 0)
        mpz_addmul(num_[static_cast<std::size_t>(i)].get_mpz_t(), c.get_mpz_t(),
                   residue[static_cast<std::size_t>(i)].get_mpz_t());
    }
  }
  den_ *= other.den_;
  normalize();
  return *this;
}

CycNumber& CycNumber::operator/=(const CycNumber& other) { return *this *= other.inverse(); }

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  RatPoly r0;
  for (const auto& c : ctx_->minimal_polynomial()) r0.emplace_back(c);
  RatPoly r1 = coefficients();
  trim(r1);
  RatPoly s0{};
  RatPoly s1{Rational(1)};
  while (r1.size() > 1) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    RatPoly next = subtract(s0, multiply(quot, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r1 is a nonzero constant.
  const Rational c = r1.at(0);
  for (auto& coeff : s1) coeff /= c;
  return from_coefficients(ctx_, s1);
}

CycNumber CycNumber::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycNumber result(ctx_, 1L);
  CycNumber base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.ctx_ != b.ctx_) throw ContextMismatchError();
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::complex<double> CycNumber::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  const double n = ctx_->conductor();
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
    acc += num_[i].get_d() * std::polar(1.0, angle);
  }
  return acc / den_.get_d();
}

std::string CycNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = static_cast<int>(num_.size()) - 1; k >= 0; --k) {
    Rational c = coefficient(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << '*';
    out << 'z';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

CycNumber make_root(const ContextPtr& ctx, long k) {
  const auto& residue = ctx->power_residue(static_cast<int>(floor_mod(k, ctx->conductor())));
  std::vector<Rational> coeffs(residue.begin(), residue.end());
  return CycNumber::from_coefficients(ctx, coeffs);
}

CycNumber q_of(const ContextPtr& ctx) { return make_root(ctx, 2); }

CycNumber q_power(const ContextPtr& ctx, long k) { return make_root(ctx, 2 * k); }

CycNumber qint(const ContextPtr& ctx, long n) {
  if (n == 0) return CycNumber(ctx);
  if (n < 0) return -qint(ctx, -n);
  CycNumber acc(ctx);
  for (long j = 0; j < n; ++j) acc += q_power(ctx, n - 1 - 2 * j);
  return acc;
}

CycNumber qfact(const ContextPtr& ctx, long n) {
  if (n < 0) throw RangeError("quantum factorial of a negative integer");
  CycNumber acc(ctx, 1L);
  for (long k = 2; k <= n; ++k) acc *= qint(ctx, k);
  return acc;
}

CycNumber qbinom(const ContextPtr& ctx, long n, long k) {
  if (k < 0) return CycNumber(ctx);
  if (n < 0) {
    CycNumber value = qbinom(ctx, k - n - 1, k);
    return (k % 2 == 0) ? value : -value;
  }
  if (k > n) return CycNumber(ctx);
  // Pascal rule [n,k] = q^k [n-1,k] + q^{-(n-k)} [n-1,k-1], row by row.
  std::vector<CycNumber> row{CycNumber(ctx, 1L)};
  for (long m = 1; m <= n; ++m) {
    std::vector<CycNumber> next;
    next.reserve(static_cast<std::size_t>(std::min(m, k) + 1));
    for (long j = 0; j <= std::min(m, k); ++j) {
      CycNumber value(ctx);
      if (j < static_cast<long>(row.size()) && j <= m - 1) value += q_power(ctx, j) * row[static_cast<std::size_t>(j)];
      if (j >= 1) value += q_power(ctx, -(m - j)) * row[static_cast<std::size_t>(j - 1)];
      next.push_back(std::move(value));
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

CycNumber loop_value(const ContextPtr& ctx) { return -(q_power(ctx, 1) + q_power(ctx, -1)); }

std::complex<double> embed_complex(const CycNumber& a) { return a.to_complex(); }

namespace {

class CycParser {
 public:
  CycParser(const ContextPtr& ctx, const std::string& text) : ctx_(ctx), text_(text) {}

  CycNumber parse() {
    std::vector<Rational> coeffs;
    skip();
    if (pos_ >= text_.size()) fail("empty expression");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    for (;;) {
      auto [c, k] = term();
      if (negative) c = -c;
      if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
      coeffs[k] += c;
      skip();
      if (pos_ >= text_.size()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      ++pos_;
    }
    return CycNumber::from_coefficients(ctx_, coeffs);
  }

 private:
  std::pair<Rational, std::size_t> term() {
    skip();
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      skip();
      if (peek() != '*') return {coeff, 0};
      ++pos_;
      skip();
    }
    if (peek() != 'z') fail("expected 'z'");
    ++pos_;
    std::size_t power = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      power = static_cast<std::size_t>(integer().get_ui());
    }
    return {coeff, power};
  }

  Rational rational() {
    Integer n = integer();
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      Integer d = integer();
      if (d == 0) fail("zero denominator");
      Rational r(n, d);
      r.canonicalize();
      return r;
    }
    return Rational(n);
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  const ContextPtr& ctx_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

CycNumber parse_cyc(const ContextPtr& ctx, const std::string& text) { return CycParser(ctx, text).parse(); }

}  // namespace ribbonkit
