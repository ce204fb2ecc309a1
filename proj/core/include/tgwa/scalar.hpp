#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tgwa/error.hpp"

namespace tgwa {

/// Which coefficient field is in force: the rationals Q, or the field Q(q)
/// of rational functions in one indeterminate q.
enum class FieldKind { rationals, rational_functions };

/// Univariate polynomial in q with exact rational coefficients.
/// Coefficients are stored ascending by exponent with no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;  // zero
  explicit UniPoly(const mpq_class& constant);
  static UniPoly monomial(const mpq_class& coeff, int exponent);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monic() const;
  mpq_class coeff(int exponent) const;
  const mpq_class& leading_coeff() const;
  /// Smallest exponent with nonzero coefficient; 0 for the zero polynomial.
  int low_exponent() const;
  bool is_monomial() const;

  mpq_class eval(const mpq_class& point) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
  UniPoly operator-() const;

  UniPoly scaled(const mpq_class& factor) const;
  /// Multiplied by q^k; k < 0 requires low_exponent() >= -k.
  UniPoly shifted(int k) const;

  /// Euclidean division; requires divisor != 0.
  static void divmod(const UniPoly& num, const UniPoly& div, UniPoly& quot,
                     UniPoly& rem);
  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b);

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

 private:
  std::vector<mpq_class> coeffs_;
  void trim();
};

/// Exact scalar of the coefficient field: an arbitrary-precision rational, or
/// a rational function in q over the rationals.  Stored as a normalized
/// fraction num/den of polynomials in q: den is monic, num and den are
/// coprime, and constants always take the rational form (den = 1, num
/// constant), so equality is structural.
class Scalar {
 public:
  Scalar() = default;  // zero
  Scalar(long value) : num_(UniPoly(mpq_class(value))), den_(UniPoly(1_mpq)) {}
  explicit Scalar(const mpq_class& value)
      : num_(UniPoly(value)), den_(UniPoly(1_mpq)) {}

  /// The indeterminate q.
  static Scalar q();
  /// q^k for any integer k.
  static Scalar q_power(long k);
  static Scalar from_fraction(UniPoly num, UniPoly den);  // normalizes

  FieldKind kind() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// True when the leading numerator coefficient is negative (for rationals,
  /// the value is negative); -(*this) then prints without a leading sign.
  bool negative_lead() const { return num_.leading_coeff() < 0; }
  bool is_rational() const { return kind() == FieldKind::rationals; }
  /// The value as a rational number; requires is_rational().
  mpq_class rational_value() const;

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  Scalar inverse() const;  // ScalarError on zero
  /// Substitute q := value; ScalarError if the denominator vanishes there.
  Scalar specialized(const mpq_class& value) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);  // ScalarError on zero divisor
  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  // Zero is num_ = 0, den_ = 1 (default-constructed UniPoly is 0; the default
  // Scalar constructor fixes den_ below).
  UniPoly num_;
  UniPoly den_ = UniPoly(1_mpq);
  void normalize();
};

Scalar pow(const Scalar& base, long exponent);  // negative allowed on nonzero

/// The quantum integer [n]_q = q^{-n+1} + q^{-n+3} + ... + q^{n-1}, n >= 0.
Scalar quantum_integer(int n, const Scalar& q);

/// q-binomial coefficient [m k]_q by the recursion
/// [m k]_q = q^{-k} [m-1 k]_q + q^{m-k} [m-1 k-1]_q, [0 0]_q = 1.
/// Zero for k < 0 or k > m.  Valid for any nonzero q.
Scalar qbinomial(int m, int k, const Scalar& q);

/// All coefficients [m k]_q, k = 0..m, read off the product expansion
/// (x + q^{-m+1})(x + q^{-m+3}) ... (x + q^{m-1}).
std::vector<Scalar> qbinomial_product_row(int m, const Scalar& q);

/// [m]_q! / ([m-k]_q! [k]_q!).  Only valid when no [j]_q, 1 <= j <= m,
/// vanishes; otherwise throws RootOfUnityError.
Scalar qbinomial_factorial(int m, int k, const Scalar& q);

}  // namespace tgwa
