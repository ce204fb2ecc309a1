#pragma once

#include <string>
#include <vector>

#include "tgwa/tgwc.hpp"

namespace tgwa {

/// Univariate polynomial in x over the coefficient field; used for the
/// minimal polynomials p_ij.
class ScalarPoly {
 public:
  ScalarPoly() = default;  // zero
  static ScalarPoly from_coeffs(std::vector<Scalar> ascending);
  static ScalarPoly monomial(const Scalar& coeff, int exponent);
  static ScalarPoly from_roots(const std::vector<Scalar>& roots);  // prod (x - r)

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(int exponent) const;
  Scalar constant_term() const { return coeff(0); }
  const Scalar& leading_coeff() const;
  bool is_monic() const;

  ScalarPoly& operator+=(const ScalarPoly& rhs);
  ScalarPoly& operator*=(const ScalarPoly& rhs);
  friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
  friend ScalarPoly operator*(ScalarPoly a, const ScalarPoly& b) { return a *= b; }

  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const ScalarPoly& a, const ScalarPoly& b) {
    return !(a == b);
  }

  std::string to_string() const;  // in the variable x

 private:
  std::vector<Scalar> coeffs_;  // ascending, no trailing zeros
  void trim();
};

/// Exact rank of a list of polynomials as vectors over the coefficient field.
int rank_of(const std::vector<Polynomial>& vectors);

/// If the last entry lies in the span of the previous ones, returns the
/// combination coefficients c with last = sum c_k * vectors[k].
std::optional<std::vector<Scalar>> linear_dependence(
    const std::vector<Polynomial>& vectors);

/// Echelonized basis of V_ij together with the iterates sigma_i^k(t_j)
/// consumed while closing the span.
struct SpanBasis {
  std::vector<Polynomial> basis;
  std::vector<Polynomial> iterates;
  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Iterates t_j, sigma_i(t_j), ... until the new iterate lies in the span of
/// the previous ones.  Forward closure suffices: the minimal monic relation
/// has nonzero constant term, so the sigma_i^{-1} iterates stay in the same
/// span.  Throws CapExceededError past the cap (which does not claim
/// non-finiteness).
SpanBasis vij_closure(const TgwcDatum& d, int i, int j, int cap = 32);

/// The monic polynomial of minimal degree with p(sigma_i)(t_j) = 0.
ScalarPoly minimal_polynomial(const TgwcDatum& d, int i, int j, int cap = 32);

/// Matrix of minimal polynomials.  Off-diagonal entries satisfy the
/// polynomial Cartan matrix conditions (degree >= 1, degree-one symmetry,
/// nonzero constant terms); a violation for a valid domain datum indicates
/// an implementation fault and raises InconsistencyError.
struct PolyCartanMatrix {
  std::vector<std::vector<ScalarPoly>> p;  // n x n
  int n() const { return static_cast<int>(p.size()); }
  const ScalarPoly& at(int i, int j) const { return p.at(i - 1).at(j - 1); }
};

PolyCartanMatrix poly_cartan_matrix(const TgwcDatum& d, int cap = 32);

/// Generalized Cartan matrix: 2's on the diagonal, nonpositive integers off
/// it, with a symmetric vanishing pattern.
struct Gcm {
  std::vector<std::vector<int>> entries;
  int n() const { return static_cast<int>(entries.size()); }
  int at(int i, int j) const { return entries.at(i - 1).at(j - 1); }
  bool symmetric() const;
};

/// Validates the GCM conditions; throws GcmError on violation.
Gcm make_gcm(std::vector<std::vector<int>> entries);

/// C(P): c_ii = 2, c_ij = 1 - deg p_ij.
Gcm cartan_of(const PolyCartanMatrix& P);

/// Generalized Serre element for an ordered pair (i, j): the X form
/// sum_k lambda^(k) mu_ij^{-k} X_i^{m-k} X_j X_i^k with lambda^(0) = 1, and
/// the Y form, its star image.
struct SerreElement {
  int i, j;
  int m;                        // deg p_ij
  std::vector<Scalar> lambda;   // lambda[k], k = 0..m; lambda[0] = 1
  GradedElement x_form, y_form;
};

SerreElement serre_element(const TgwcDatum& d, const ScalarPoly& p_ij, int i,
                           int j);
std::vector<SerreElement> serre_elements(const TgwcDatum& d,
                                         const PolyCartanMatrix& P);

/// Dual-route verification: the criterion of the coefficient identity and
/// the pairing membership test must agree (InconsistencyError otherwise);
/// returns the common verdict, also requiring the Y form to be a member.
bool verify_serre(const TgwcDatum& d, const SerreElement& e);

/// True iff {X_i^{m-k} X_j X_i^k}_{k=0..m} is linearly independent, decided
/// as rank{sigma_i^l(t_j)}_{l=0..m} = m + 1.
bool independence_bound(const TgwcDatum& d, int i, int j, int m);

}  // namespace tgwa
