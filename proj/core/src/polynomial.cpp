#include "tgwa/polynomial.hpp"

#include <algorithm>
#include <set>

namespace tgwa {

RingCtxPtr RingCtx::make(std::vector<std::string> generator_names,
                         FieldKind field) {
  std::set<std::string> seen;
  for (const auto& n : generator_names) {
    if (n.empty()) throw ParameterError("empty generator name");
    if (!seen.insert(n).second)
      throw ParameterError("duplicate generator name: " + n);
  }
  return RingCtxPtr(new RingCtx(std::move(generator_names), field));
}

std::optional<int> RingCtx::generator_index(std::string_view name) const {
  for (size_t g = 0; g < names_.size(); ++g)
    if (names_[g] == name) return static_cast<int>(g);
  return std::nullopt;
}

bool same_ctx(const RingCtxPtr& a, const RingCtxPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  // Same total degree: lexicographic, first generator strongest.
  for (size_t g = 0; g < a.size(); ++g)
    if (a[g] != b[g]) return a[g] < b[g];
  return false;
}

Polynomial Polynomial::constant(RingCtxPtr ctx, const Scalar& value) {
  Polynomial p(ctx);
  p.add_term(Monomial(ctx->generator_count(), 0), value);
  return p;
}

Polynomial Polynomial::generator(RingCtxPtr ctx, int g) {
  if (g < 0 || g >= ctx->generator_count())
    throw IndexError("generator index out of range");
  Monomial mono(ctx->generator_count(), 0);
  mono[g] = 1;
  Polynomial p(ctx);
  p.add_term(mono, Scalar(1));
  return p;
}

Polynomial Polynomial::monomial(RingCtxPtr ctx, Monomial expo,
                                const Scalar& coeff) {
  if (static_cast<int>(expo.size()) != ctx->generator_count())
    throw ContextError("exponent vector does not match generator count");
  for (int e : expo)
    if (e < 0) throw ParameterError("negative exponent in monomial");
  Polynomial p(ctx);
  p.add_term(expo, coeff);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree() == 0;
}

Scalar Polynomial::constant_coeff() const {
  return coeff(Monomial(ctx_->generator_count(), 0));
}

Scalar Polynomial::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  // Leading term under graded-lex has maximal total degree.
  const Monomial& m = terms_.rbegin()->first;
  int d = 0;
  for (int e : m) d += e;
  return d;
}

const std::pair<const Monomial, Scalar>& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return *terms_.rbegin();
}

void Polynomial::add_term(const Monomial& mono, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (static_cast<int>(mono.size()) != ctx_->generator_count())
    throw ContextError("exponent vector does not match generator count");
  if (ctx_->field() == FieldKind::rationals && !coeff.is_rational())
    throw ContextError("rational-function scalar in a plain rational field");
  auto [it, fresh] = terms_.emplace(mono, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (!same_ctx(ctx_, rhs.ctx_)) throw ContextError("ring context mismatch");
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (!same_ctx(ctx_, rhs.ctx_)) throw ContextError("ring context mismatch");
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (!same_ctx(ctx_, rhs.ctx_)) throw ContextError("ring context mismatch");
  Polynomial out(ctx_);
  Monomial mono(ctx_->generator_count());
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      for (size_t g = 0; g < mono.size(); ++g) mono[g] = ma[g] + mb[g];
      out.add_term(mono, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= factor;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ctx_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ctx(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

Polynomial pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw ParameterError("negative polynomial power");
  Polynomial acc = Polynomial::constant(base.ctx(), Scalar(1));
  for (int i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // Descending graded-lex order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    std::string mono_str;
    for (size_t g = 0; g < mono.size(); ++g) {
      if (mono[g] == 0) continue;
      if (!mono_str.empty()) mono_str += "*";
      mono_str += ctx_->generator_name(static_cast<int>(g));
      if (mono[g] > 1) mono_str += "^" + std::to_string(mono[g]);
    }
    // Pull a leading minus out of the coefficient.
    Scalar cc = c;
    bool negative = false;
    if (cc.negative_lead()) {
      negative = true;
      cc = -cc;
    }
    if (first) {
      if (negative) s += "-";
      first = false;
    } else {
      s += negative ? " - " : " + ";
    }
    std::string coeff_str = cc.to_string();
    bool needs_parens = !cc.is_rational();
    if (mono_str.empty()) {
      s += needs_parens ? "(" + coeff_str + ")" : coeff_str;
    } else if (cc.is_one()) {
      s += mono_str;
    } else {
      s += (needs_parens ? "(" + coeff_str + ")" : coeff_str) + "*" + mono_str;
    }
  }
  return s;
}

// ---------------------------------------------------------------- RingMap

RingMap::RingMap(RingCtxPtr ctx, std::vector<Polynomial> forward_images,
                 std::vector<Polynomial> inverse_images)
    : ctx_(std::move(ctx)),
      forward_(std::move(forward_images)),
      inverse_(std::move(inverse_images)) {
  const int n = ctx_->generator_count();
  if (static_cast<int>(forward_.size()) != n ||
      static_cast<int>(inverse_.size()) != n)
    throw ContextError("ring map image count does not match generator count");
  for (const auto& p : forward_)
    if (!same_ctx(p.ctx(), ctx_)) throw ContextError("ring context mismatch");
  for (const auto& p : inverse_)
    if (!same_ctx(p.ctx(), ctx_)) throw ContextError("ring context mismatch");
}

RingMap RingMap::identity(RingCtxPtr ctx) {
  std::vector<Polynomial> images;
  for (int g = 0; g < ctx->generator_count(); ++g)
    images.push_back(Polynomial::generator(ctx, g));
  return RingMap(ctx, images, images);
}

Polynomial substitute(const Polynomial& p,
                      const std::vector<Polynomial>& images) {
  const RingCtxPtr& ctx = p.ctx();
  // Image powers are shared across the terms.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](size_t g, int e) -> const Polynomial& {
    auto& cache = powers[g];
    if (cache.empty()) cache.push_back(Polynomial::constant(ctx, Scalar(1)));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * images[g]);
    return cache[e];
  };
  Polynomial out(ctx);
  for (const auto& [mono, c] : p.terms()) {
    Polynomial term = Polynomial::constant(ctx, c);
    for (size_t g = 0; g < mono.size(); ++g)
      if (mono[g] > 0) term *= power_of(g, mono[g]);
    out += term;
  }
  return out;
}

Polynomial RingMap::apply(const Polynomial& p) const {
  if (!same_ctx(p.ctx(), ctx_)) throw ContextError("ring context mismatch");
  return substitute(p, forward_);
}

Polynomial RingMap::apply_inverse(const Polynomial& p) const {
  if (!same_ctx(p.ctx(), ctx_)) throw ContextError("ring context mismatch");
  return substitute(p, inverse_);
}

bool operator==(const RingMap& a, const RingMap& b) {
  return same_ctx(a.ctx_, b.ctx_) && a.forward_ == b.forward_ &&
         a.inverse_ == b.inverse_;
}

RingMap compose(const RingMap& a, const RingMap& b) {
  if (!same_ctx(a.ctx(), b.ctx())) throw ContextError("ring context mismatch");
  std::vector<Polynomial> forward, inverse;
  const int n = a.ctx()->generator_count();
  for (int g = 0; g < n; ++g) {
    forward.push_back(a.apply(b.forward_image(g)));
    inverse.push_back(b.apply_inverse(a.inverse_image(g)));
  }
  return RingMap(a.ctx(), std::move(forward), std::move(inverse));
}

bool verify_inverse(const RingMap& m) {
  const int n = m.ctx()->generator_count();
  for (int g = 0; g < n; ++g) {
    Polynomial gen = Polynomial::generator(m.ctx(), g);
    if (m.apply(m.inverse_image(g)) != gen) return false;
    if (m.apply_inverse(m.forward_image(g)) != gen) return false;
  }
  return true;
}

bool verify_commuting(const std::vector<RingMap>& maps) {
  for (size_t i = 0; i < maps.size(); ++i) {
    for (size_t j = i + 1; j < maps.size(); ++j) {
      if (!same_ctx(maps[i].ctx(), maps[j].ctx()))
        throw ContextError("ring context mismatch");
      const int n = maps[i].ctx()->generator_count();
      for (int g = 0; g < n; ++g) {
        Polynomial gen = Polynomial::generator(maps[i].ctx(), g);
        if (maps[i].apply(maps[j].apply(gen)) !=
            maps[j].apply(maps[i].apply(gen)))
          return false;
      }
    }
  }
  return true;
}

}  // namespace tgwa
