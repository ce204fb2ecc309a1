#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgwa/tgwc.hpp"

namespace tgwa {

/// Number of pairs (p, p') with p < p', w[p] = X_2 and w[p'] = X_1.
/// Input must use only X letters with indices in {1, 2}.
int inversion_length(const Word& w);

/// The pair of quadratic ideal elements
///   s_1 = X_2 X_1^2 - xi_1 X_1 X_2 X_1 - xi_2 X_1^2 X_2,
///   s_2 = X_2^2 X_1 - eta_1 X_2 X_1 X_2 - eta_2 X_1 X_2^2.
struct SerrePair {
  Scalar xi1, xi2, eta1, eta2;
  GradedElement s1, s2;
};

/// Builds the pair from explicit scalars.
SerrePair make_serre_pair(const TgwcDatum& d, const Scalar& xi1,
                          const Scalar& xi2, const Scalar& eta1,
                          const Scalar& eta2);

/// Derives the pair from the degree-two minimal polynomials p_12, p_21 by
/// scaling the generalized Serre elements to the leading coefficients above.
/// Throws UnsupportedShapeError when a minimal polynomial is not quadratic.
SerrePair derive_serre_pair(const TgwcDatum& d, int cap = 32);

/// Coefficients beta_i on the basis X_1^{g1-i} (X_2 X_1)^i X_2^{g2-i},
/// i = 0..min(g1, g2).
struct NormalForm {
  int g1 = 0, g2 = 0;
  std::vector<Polynomial> beta;
  GradedElement to_element() const;
  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.g1 == b.g1 && a.g2 == b.g2 && a.beta == b.beta;
  }
};

Word normal_form_word(int g1, int g2, int i);

/// One logged rewrite: the replaced term differs from its replacement by
/// coeff * left * s_rule * right (rule 1 or 2), an element of the ideal
/// generated by the pair.
struct ReductionStep {
  Polynomial coeff;
  Word left;
  int rule;
  Word right;
};

GradedElement reduction_step_delta(const TgwcDatum& d, const SerrePair& sp,
                                   const ReductionStep& step);

/// Exhaustively applies X_2 X_1^2 -> xi_1 X_1 X_2 X_1 + xi_2 X_1^2 X_2 and
/// X_2^2 X_1 -> eta_1 X_2 X_1 X_2 + eta_2 X_1 X_2^2.  Every rewrite strictly
/// decreases the inversion length of the word it replaces, and the result
/// equals the input modulo the two-sided ideal generated by the pair.
NormalForm reduce_rank2(const SerrePair& sp, const GradedElement& a,
                        ReduceStrategy strategy = ReduceStrategy::leftmost,
                        std::vector<ReductionStep>* log = nullptr);

/// The scalar lambda with sigma_1 sigma_2 (t_1) = lambda t_1, when one exists.
std::optional<Scalar> check_p1a(const TgwcDatum& d);

/// Linear-case check: t_1 is non-constant affine-linear (so R t_1 is prime)
/// and t_1, sigma_1(t_1) are non-associate, decided by comparing linear
/// parts and constants.  Throws UnsupportedShapeError above degree one.
bool check_p1b(const TgwcDatum& d);

/// xi's and eta's nonzero and both pair elements in the ideal.
bool check_p2(const TgwcDatum& d, const SerrePair& sp);

struct PresentationRelation {
  std::string family;  // "a", "b", "c", or "serre"
  std::string text;
  bool verified;
};

struct PresentationReport {
  bool ok = false;
  std::string failure;  // which property failed, when not ok
  std::optional<Scalar> p1a_scalar;
  std::optional<SerrePair> pair;
  std::vector<std::string> ring_generators;
  std::vector<PresentationRelation> relations;
};

/// Emits the finite presentation of the rank-two algebra: the instantiated
/// defining relations plus s_1, s_2, s_1^*, s_2^*, each re-verified.  The
/// preconditions are the three property checks; on failure the report names
/// the first failing property and claims no presentation.
PresentationReport presentation(const TgwcDatum& d, int cap = 32);

}  // namespace tgwa
