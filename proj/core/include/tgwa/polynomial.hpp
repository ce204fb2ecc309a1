#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgwa/scalar.hpp"

namespace tgwa {

class RingCtx;
using RingCtxPtr = std::shared_ptr<const RingCtx>;

/// Ring context: the ordered generator list of a polynomial ring over the
/// coefficient field, plus which field case is in force.  The generator
/// order is fixed at creation and defines the monomial order.
class RingCtx {
 public:
  static RingCtxPtr make(std::vector<std::string> generator_names,
                         FieldKind field);

  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::string& generator_name(int g) const { return names_.at(g); }
  const std::vector<std::string>& generator_names() const { return names_; }
  std::optional<int> generator_index(std::string_view name) const;
  FieldKind field() const { return field_; }

  friend bool operator==(const RingCtx& a, const RingCtx& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  RingCtx(std::vector<std::string> names, FieldKind field)
      : names_(std::move(names)), field_(field) {}
  std::vector<std::string> names_;
  FieldKind field_;
};

bool same_ctx(const RingCtxPtr& a, const RingCtxPtr& b);

/// Exponent vector, one nonnegative entry per ring generator.
using Monomial = std::vector<int>;

/// Graded-lexicographic order (total degree first, then lexicographic with
/// the first generator strongest).  Used for deterministic iteration and
/// printing only, never for semantics.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the coefficient field.  No zero
/// coefficients are stored; equality is structural.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GradedLexLess>;

  explicit Polynomial(RingCtxPtr ctx) : ctx_(std::move(ctx)) {}
  static Polynomial constant(RingCtxPtr ctx, const Scalar& value);
  static Polynomial generator(RingCtxPtr ctx, int g);
  static Polynomial monomial(RingCtxPtr ctx, Monomial expo, const Scalar& coeff);

  const RingCtxPtr& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the unit monomial.
  Scalar constant_coeff() const;
  Scalar coeff(const Monomial& mono) const;
  int total_degree() const;  // -1 for the zero polynomial
  int term_count() const { return static_cast<int>(terms_.size()); }
  /// Largest term in graded-lex order; requires a nonzero polynomial.
  const std::pair<const Monomial, Scalar>& leading_term() const;

  void add_term(const Monomial& mono, const Scalar& coeff);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& factor);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  RingCtxPtr ctx_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& base, int exponent);  // exponent >= 0

/// K-algebra endomorphism of the polynomial ring, given by generator images
/// together with the images of a declared inverse.  The inverse is verified,
/// never computed.
class RingMap {
 public:
  RingMap(RingCtxPtr ctx, std::vector<Polynomial> forward_images,
          std::vector<Polynomial> inverse_images);
  static RingMap identity(RingCtxPtr ctx);

  const RingCtxPtr& ctx() const { return ctx_; }
  const Polynomial& forward_image(int g) const { return forward_.at(g); }
  const Polynomial& inverse_image(int g) const { return inverse_.at(g); }
  const std::vector<Polynomial>& forward_images() const { return forward_; }
  const std::vector<Polynomial>& inverse_images() const { return inverse_; }

  /// Image of p under the substitution homomorphism.
  Polynomial apply(const Polynomial& p) const;
  /// Image of p under the declared inverse.
  Polynomial apply_inverse(const Polynomial& p) const;

  friend bool operator==(const RingMap& a, const RingMap& b);
  friend bool operator!=(const RingMap& a, const RingMap& b) { return !(a == b); }

 private:
  RingCtxPtr ctx_;
  std::vector<Polynomial> forward_;
  std::vector<Polynomial> inverse_;
};

/// Composition a after b (forward images of the result are a applied to b's
/// forward images; inverses compose in reverse order).
RingMap compose(const RingMap& a, const RingMap& b);

/// True iff both compositions with the declared inverse fix every generator.
bool verify_inverse(const RingMap& m);

/// True iff all maps pairwise commute on every generator.
bool verify_commuting(const std::vector<RingMap>& maps);

/// Substitution by explicit images (shared helper for apply/apply_inverse).
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

}  // namespace tgwa
