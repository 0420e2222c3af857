#pragma once

// Exact arithmetic in the cyclotomic field Q(z), z = exp(2*pi*i/N), N = 4p.
//
// Elements are stored in the power basis 1, z, ..., z^{phi(N)-1} modulo the
// cyclotomic polynomial Phi_N, as integer numerators over one positive common
// denominator. The representation is always fully reduced, so structural
// equality is field equality.

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ribbonkit/errors.hpp"

namespace ribbonkit {

using Integer = mpz_class;
using Rational = mpq_class;

class FieldContext;
using ContextPtr = std::shared_ptr<const FieldContext>;

class FieldContext {
 public:
  /// Builds the context for q = exp(pi*i/p); requires p >= 2.
  static ContextPtr create(int p);

  int p() const noexcept { return p_; }
  int conductor() const noexcept { return conductor_; }
  int degree() const noexcept { return degree_; }

  /// Coefficients of Phi_N, lowest degree first; length degree()+1.
  const std::vector<Integer>& minimal_polynomial() const noexcept { return phi_; }

  /// `cyclotomic(N=12)` style header used in serialized output.
  std::string header() const;

  /// Reduced coefficients of z^k for 0 <= k < 2*degree-1.
  const std::vector<Integer>& power_residue(int k) const { return residues_[static_cast<std::size_t>(k)]; }

 private:
  FieldContext() = default;

  int p_ = 0;
  int conductor_ = 0;
  int degree_ = 0;
  std::vector<Integer> phi_;
  std::vector<std::vector<Integer>> residues_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(int n);

int euler_phi(int n);

class CycNumber {
 public:
  /// Zero of the given field.
  explicit CycNumber(ContextPtr ctx);
  CycNumber(ContextPtr ctx, const Rational& value);
  CycNumber(ContextPtr ctx, long value);

  /// Element with the given power-basis coefficients (reduced on construction;
  /// any length is accepted and folded modulo Phi_N).
  static CycNumber from_coefficients(ContextPtr ctx, const std::vector<Rational>& coefficients);

  const ContextPtr& context() const noexcept { return ctx_; }

  Rational coefficient(int i) const;
  std::vector<Rational> coefficients() const;
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept;
  bool is_one() const;
  /// Some n with z^n equal to this element, or -1 when it is not a power of z.
  int root_exponent() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& other);
  CycNumber& operator-=(const CycNumber& other);
  CycNumber& operator*=(const CycNumber& other);
  CycNumber& operator/=(const CycNumber& other);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }

  CycNumber inverse() const;
  CycNumber pow(long exponent) const;

  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  /// Numerical image under z -> exp(2*pi*i/N). Reporting only.
  std::complex<double> to_complex() const;

  /// Polynomial in `z`, highest power first, e.g. `1/2*z^3 - z`.
  std::string to_string() const;

 private:
  CycNumber(ContextPtr ctx, std::vector<Integer> numerators, Integer denominator);
  void normalize();
  void require_same_context(const CycNumber& other) const;

  ContextPtr ctx_;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

/// z^k; k is reduced modulo N.
CycNumber make_root(const ContextPtr& ctx, long k);
/// q = z^2.
CycNumber q_of(const ContextPtr& ctx);
/// q^k = z^{2k}.
CycNumber q_power(const ContextPtr& ctx, long k);

/// Quantum integer [n] = (q^n - q^{-n}) / (q - q^{-1}).
CycNumber qint(const ContextPtr& ctx, long n);
/// [n]! = [1][2]...[n]; [0]! = 1.
CycNumber qfact(const ContextPtr& ctx, long n);
/// Symmetric Gaussian binomial [n choose k] evaluated at q; n may be negative.
/// Computed as a Laurent polynomial first, so it is well defined at roots of unity.
CycNumber qbinom(const ContextPtr& ctx, long n, long k);

/// The Temperley-Lieb loop value d = -(q + q^{-1}).
CycNumber loop_value(const ContextPtr& ctx);

/// Parses the `to_string` format back into a field element.
CycNumber parse_cyc(const ContextPtr& ctx, const std::string& text);

std::complex<double> embed_complex(const CycNumber& a);

}  // namespace ribbonkit
