#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tgwa/polynomial.hpp"

namespace tgwa {

/// Z^n degree vector.
using Degree = std::vector<int>;

enum class LetterKind { x, y };

/// One generator letter X_i or Y_i, index 1-based.
struct Letter {
  LetterKind kind;
  int index;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A monic monomial: a (possibly empty) sequence of letters.
using Word = std::vector<Letter>;

/// Deterministic word order: by length, then letterwise (X before Y, then by
/// index).
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

Degree word_degree(const Word& w, int n);
std::string word_to_string(const Word& w);
Word star_word(const Word& w);  // reverse and swap X <-> Y

inline Letter x_letter(int i) { return Letter{LetterKind::x, i}; }
inline Letter y_letter(int i) { return Letter{LetterKind::y, i}; }

/// Validated input of the whole construction: rank n, the polynomial ring,
/// the commuting automorphisms with inverses, the elements t_i, and the
/// parameter matrix mu.
///
/// mu is stored with both ordered off-diagonal entries.  The paper's
/// symmetric case is the one carrying the anti-involution; asymmetric mu is
/// accepted (it still defines a TGWC) but the star-dependent operations
/// refuse it.
class TgwcDatum {
 public:
  TgwcDatum(RingCtxPtr ring, std::vector<RingMap> sigma,
            std::vector<Polynomial> t,
            std::map<std::pair<int, int>, Scalar> mu);

  int rank() const { return n_; }
  const RingCtxPtr& ring() const { return ring_; }
  const RingMap& sigma(int i) const;      // 1-based
  const Polynomial& t(int i) const;       // 1-based
  const Scalar& mu(int i, int j) const;   // i != j, 1-based
  const std::map<std::pair<int, int>, Scalar>& mu_entries() const {
    return mu_;
  }
  bool mu_symmetric() const;

  /// The composed automorphism sigma_1^{g_1} ... sigma_n^{g_n}, memoized per
  /// degree (thread-safe).
  const RingMap& action(const Degree& g) const;

  friend bool operator==(const TgwcDatum& a, const TgwcDatum& b);

 private:
  int n_;
  RingCtxPtr ring_;
  std::vector<RingMap> sigma_;
  std::vector<Polynomial> t_;
  std::map<std::pair<int, int>, Scalar> mu_;
  // The memo depends only on the immutable sigma list, so copies share it.
  struct ActionCache {
    std::mutex mutex;
    std::map<Degree, RingMap> entries;
  };
  std::shared_ptr<ActionCache> action_cache_ =
      std::make_shared<ActionCache>();
};

struct ValidationCheck {
  std::string name;
  bool pass;
  std::string detail;  // offending pair / difference polynomial on failure
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool mu_symmetric = true;  // informational, not a pass/fail check
  bool all_pass() const;
};

/// Checks, in order: every t_i nonzero, every mu entry nonzero, every sigma_i
/// inverse verified, pairwise commutation, and the consistency relation
/// t_i t_j = mu_ij mu_ji sigma_j^{-1}(t_i) sigma_i^{-1}(t_j) for all i < j.
ValidationReport validate_tgwc(const TgwcDatum& d);

/// The Z^n action (sigma_1^{g_1} ... sigma_n^{g_n})(r).
Polynomial group_action(const TgwcDatum& d, const Degree& g,
                        const Polynomial& r);

/// Finite sum of (left polynomial coefficient, word) terms; the raw elements
/// of the construction before any quotient.
class GradedElement {
 public:
  using TermMap = std::map<Word, Polynomial, WordLess>;

  GradedElement() = default;  // zero
  static GradedElement term(Polynomial coeff, Word w);
  static GradedElement ring_element(Polynomial r);
  static GradedElement monic(const TgwcDatum& d, Word w);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  void add_term(const Polynomial& coeff, const Word& w);

  /// All words share one degree; the zero element is homogeneous of any
  /// degree.  Returns that degree when homogeneous.
  std::optional<Degree> homogeneous_degree(int n) const;
  bool is_homogeneous(int n) const;
  /// Splits into homogeneous components, keyed by degree.
  std::map<Degree, GradedElement> components(int n) const;

  GradedElement& operator+=(const GradedElement& rhs);
  GradedElement& operator-=(const GradedElement& rhs);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) {
    return a += b;
  }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) {
    return a -= b;
  }
  GradedElement operator-() const;

  friend bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GradedElement& a, const GradedElement& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Left multiplication by a ring element (no twisting involved).
GradedElement left_multiply(const Polynomial& r, const GradedElement& a);
GradedElement scalar_multiply(const Scalar& c, const GradedElement& a);

/// Product in the construction: on terms,
/// (r u)(s v) = (r * (deg u)(s)) (u v).  No letter-level rewriting happens.
GradedElement multiply(const TgwcDatum& d, const GradedElement& a,
                       const GradedElement& b);

/// The anti-involution: reverses words, swaps X <-> Y, and twists the
/// coefficient by -deg(w).  Requires symmetric mu.
GradedElement star(const TgwcDatum& d, const GradedElement& a);

/// Which rewrite to apply first when several are available.  Both strategies
/// compute the same element of the construction; on degree-zero input the
/// resulting polynomial is identical.
enum class ReduceStrategy { leftmost, rightmost };

/// The unique element of R equal to the degree-zero element a.  Matched-pair
/// elimination: adjacent Y_iX_i / X_iY_i pairs contract to t_i / sigma_i(t_i)
/// (the produced ring element commutes left past the prefix via the group
/// action), and X/Y letters of distinct index swap with a mu scalar until
/// every pair has met.  Throws DegreeError on nonzero-degree input.
Polynomial project_to_base(const TgwcDatum& d, const GradedElement& a,
                           ReduceStrategy strategy = ReduceStrategy::leftmost);

/// Rewrites a homogeneous element, by defining relations only, onto words of
/// the form (Y block)(X block) carrying, per index, only X's (g_i > 0) or
/// only Y's (g_i < 0).  The output is a strategy-dependent representative;
/// only its class in the construction is canonical.
GradedElement reduce_to_spanning(
    const TgwcDatum& d, const GradedElement& a,
    ReduceStrategy strategy = ReduceStrategy::leftmost);

/// Shapovalov form F(a, b) = projection of star(a) * b, computed termwise on
/// equal-degree homogeneous components (components of disjoint degree pair to
/// zero).
Polynomial shapovalov(const TgwcDatum& d, const GradedElement& a,
                      const GradedElement& b);

/// All words (Y permutation)(X permutation) whose Y multiset is
/// {i : -g_i copies, g_i < 0} and X multiset is {i : g_i copies, g_i > 0},
/// in lexicographic enumeration order.
std::vector<Word> spanning_monomials(int n, const Degree& g);

struct MembershipResult {
  bool member;
  /// First spanning monomial whose pairing with the element is nonzero.
  std::optional<Word> witness;
  std::optional<Polynomial> witness_pairing;
};

/// Decides membership in the maximal graded ideal by the finite pairing
/// test: a is in the ideal iff F(w, a) = 0 for every spanning monomial w of
/// its degree.  Requires homogeneous input and symmetric mu.
MembershipResult ideal_membership(const TgwcDatum& d, const GradedElement& a);
bool is_in_ideal(const TgwcDatum& d, const GradedElement& a);

/// Equality in the quotient algebra: the difference lies in the ideal,
/// checked homogeneous-componentwise.
bool equal_in_tgwa(const TgwcDatum& d, const GradedElement& a,
                   const GradedElement& b);

/// Criterion (iii): sum_k s_k sigma_i^{m-k}(t_j) = 0 with
/// s_k = mu_ij^k sigma_j^{-1}(r_k).  coefficients has size m+1, m >= 1.
bool prop33_check(const TgwcDatum& d, int i, int j,
                  const std::vector<Polynomial>& coefficients);

/// The element sum_k r_k X_i^{m-k} X_j X_i^k of degree m e_i + e_j.
GradedElement prop33_element(const TgwcDatum& d, int i, int j,
                             const std::vector<Polynomial>& coefficients);

}  // namespace tgwa
