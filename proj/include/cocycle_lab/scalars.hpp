#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cocycle_lab {

using Rational = mpq_class;

/// Raised when a decision is outside what the exact backend can settle.
class UndecidableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coefficients of the N-th cyclotomic polynomial, ascending powers.
const std::vector<long long>& cyclotomic_polynomial(int n);

/// Euler totient, i.e. the degree of Q(zeta_n).
int totient(int n);

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// The value is stored as a rational vector in the power basis
/// 1, zeta, ..., zeta^(deg-1), reduced modulo the N-th cyclotomic polynomial,
/// so the representation within one conductor is canonical. Binary operations
/// on mixed conductors first lift both operands to the lcm of the conductors.
class CycScalar {
 public:
  CycScalar();  // zero in Q
  CycScalar(long v);  // NOLINT(google-explicit-constructor)
  CycScalar(int v) : CycScalar(static_cast<long>(v)) {}  // NOLINT
  CycScalar(const Rational& r);  // NOLINT

  /// Builds from power-basis coefficients (any length; reduced on entry).
  CycScalar(int conductor, std::vector<Rational> coeffs);

  static CycScalar root_of_unity(int conductor, long long k);
  static CycScalar i() { return root_of_unity(4, 1); }

  int conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Same value expressed in Q(zeta_target); target must be a multiple of the conductor.
  CycScalar lifted(int target) const;

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> as_rational() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

  friend bool operator==(const CycScalar& a, const CycScalar& b);

  /// Multiplicative inverse; throws std::domain_error on zero.
  CycScalar inverse() const;
  CycScalar pow(long long k) const;

  /// Galois automorphism zeta -> zeta^k (k coprime to the conductor).
  CycScalar galois(long long k) const;

  std::string to_string() const;

 private:
  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& x);

CycScalar root_of_unity(int conductor, long long k);

/// Returns k in [0, n) with x == zeta_n^k, or nothing when x is not an n-th root of unity.
std::optional<int> as_root_exponent(const CycScalar& x, int n);

/// Is x a square of some n-th root of unity? x must itself lie in mu_n.
bool is_square_in_mu(const CycScalar& x, int n);

/// Is the rational r a square in Q(zeta_conductor)?
bool is_rational_square_in_field(const Rational& r, int conductor);

enum class SquareClass { trivial, nontrivial, undecided };

/// Square class of x in the multiplicative group of Q(zeta_conductor); decided
/// for roots of unity of the field and for rationals, undecided otherwise.
SquareClass square_class(const CycScalar& x, int conductor);

/// Size of the group of roots of unity in Q(zeta_n): n for even n, 2n for odd n.
int roots_of_unity_order(int n);

/// Does Q(zeta_field) contain every value of conductor `value_conductor`?
bool field_contains(int field, int value_conductor);

}  // namespace cocycle_lab
