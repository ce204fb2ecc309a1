#include "tgwa/rank2.hpp"

#include <algorithm>
#include <deque>

#include "tgwa/locfin.hpp"

namespace tgwa {

int inversion_length(const Word& w) {
  int count2 = 0;  // X_2's seen so far
  int length = 0;
  for (const Letter& l : w) {
    if (l.kind != LetterKind::x || (l.index != 1 && l.index != 2))
      throw ParameterError(
          "inversion length is defined for X words over indices 1, 2");
    if (l.index == 2)
      ++count2;
    else
      length += count2;
  }
  return length;
}

namespace {

Word make_word(std::initializer_list<Letter> letters) { return Word(letters); }

GradedElement pair_element(const TgwcDatum& d, int hi, const Scalar& c1,
                           const Scalar& c2) {
  // X_hi X_lo^2 - c1 X_lo X_hi X_lo - c2 X_lo^2 X_hi, lo = the other index.
  const int lo = (hi == 2) ? 1 : 2;
  Polynomial one = Polynomial::constant(d.ring(), Scalar(1));
  GradedElement e;
  e.add_term(one, make_word({x_letter(hi), x_letter(lo), x_letter(lo)}));
  e.add_term(one * (-c1), make_word({x_letter(lo), x_letter(hi), x_letter(lo)}));
  e.add_term(one * (-c2), make_word({x_letter(lo), x_letter(lo), x_letter(hi)}));
  return e;
}

}  // namespace

SerrePair make_serre_pair(const TgwcDatum& d, const Scalar& xi1,
                          const Scalar& xi2, const Scalar& eta1,
                          const Scalar& eta2) {
  if (d.rank() != 2) throw ParameterError("the Serre pair requires rank 2");
  SerrePair sp{xi1, xi2, eta1, eta2, {}, {}};
  sp.s1 = pair_element(d, 2, xi1, xi2);
  sp.s2 = pair_element(d, 1, eta1, eta2);
  return sp;
}

SerrePair derive_serre_pair(const TgwcDatum& d, int cap) {
  if (d.rank() != 2) throw ParameterError("the Serre pair requires rank 2");
  ScalarPoly p12 = minimal_polynomial(d, 1, 2, cap);
  ScalarPoly p21 = minimal_polynomial(d, 2, 1, cap);
  if (p12.degree() != 2 || p21.degree() != 2)
    throw UnsupportedShapeError(
        "the pair shape needs quadratic minimal polynomials; got degrees " +
        std::to_string(p12.degree()) + " and " + std::to_string(p21.degree()));
  // X_1^2 X_2 + lambda^(1) mu^{-1} X_1 X_2 X_1 + lambda^(2) mu^{-2} X_2 X_1^2
  // lies in the ideal; dividing by the X_2 X_1^2 coefficient puts it in the
  // s_1 shape.
  const Scalar mu12 = d.mu(1, 2);
  const Scalar mu21 = d.mu(2, 1);
  Scalar xi1 = -(p12.coeff(1) * mu12) / p12.coeff(0);
  Scalar xi2 = -(mu12 * mu12) / p12.coeff(0);
  Scalar eta1 = -(p21.coeff(1) * mu21) / p21.coeff(0);
  Scalar eta2 = -(mu21 * mu21) / p21.coeff(0);
  return make_serre_pair(d, xi1, xi2, eta1, eta2);
}

// ------------------------------------------------------------- reduction

Word normal_form_word(int g1, int g2, int i) {
  Word w;
  for (int k = 0; k < g1 - i; ++k) w.push_back(x_letter(1));
  for (int k = 0; k < i; ++k) {
    w.push_back(x_letter(2));
    w.push_back(x_letter(1));
  }
  for (int k = 0; k < g2 - i; ++k) w.push_back(x_letter(2));
  return w;
}

GradedElement NormalForm::to_element() const {
  GradedElement e;
  for (size_t i = 0; i < beta.size(); ++i)
    e.add_term(beta[i], normal_form_word(g1, g2, static_cast<int>(i)));
  return e;
}

GradedElement reduction_step_delta(const TgwcDatum& d, const SerrePair& sp,
                                   const ReductionStep& step) {
  const GradedElement& s = (step.rule == 1) ? sp.s1 : sp.s2;
  GradedElement mid = multiply(d, GradedElement::monic(d, step.left),
                               multiply(d, s, GradedElement::monic(d, step.right)));
  return left_multiply(step.coeff, mid);
}

namespace {

// Rule 1: X_2 X_1 X_1, rule 2: X_2 X_2 X_1.
int rule_at(const Word& w, size_t p) {
  if (w[p].index == 2 && w[p + 1].index == 1 && w[p + 2].index == 1) return 1;
  if (w[p].index == 2 && w[p + 1].index == 2 && w[p + 2].index == 1) return 2;
  return 0;
}

std::optional<std::pair<size_t, int>> find_redex(const Word& w,
                                                 ReduceStrategy strategy) {
  if (w.size() < 3) return std::nullopt;
  if (strategy == ReduceStrategy::leftmost) {
    for (size_t p = 0; p + 2 < w.size(); ++p)
      if (int r = rule_at(w, p)) return std::make_pair(p, r);
  } else {
    for (size_t p = w.size() - 2; p-- > 0;)
      if (int r = rule_at(w, p)) return std::make_pair(p, r);
  }
  return std::nullopt;
}

// Parses an irreducible word as X_1^a (X_2 X_1)^b X_2^c; returns b.
int normal_index(const Word& w) {
  size_t pos = 0;
  while (pos < w.size() && w[pos].index == 1) ++pos;
  int b = 0;
  while (pos + 1 < w.size() && w[pos].index == 2 && w[pos + 1].index == 1) {
    ++b;
    pos += 2;
  }
  while (pos < w.size() && w[pos].index == 2) ++pos;
  if (pos != w.size())
    throw InconsistencyError("irreducible word is not of normal shape");
  return b;
}

}  // namespace

NormalForm reduce_rank2(const SerrePair& sp, const GradedElement& a,
                        ReduceStrategy strategy,
                        std::vector<ReductionStep>* log) {
  int g1 = -1, g2 = -1;
  for (const auto& [w, c] : a.terms()) {
    int c1 = 0, c2 = 0;
    for (const Letter& l : w) {
      if (l.kind != LetterKind::x || (l.index != 1 && l.index != 2))
        throw ParameterError("reduction expects X words over indices 1, 2");
      (l.index == 1 ? c1 : c2)++;
    }
    if (g1 < 0) {
      g1 = c1;
      g2 = c2;
    } else if (g1 != c1 || g2 != c2) {
      throw DegreeError("reduction expects homogeneous input");
    }
  }
  if (g1 < 0) g1 = g2 = 0;  // zero element

  NormalForm nf;
  nf.g1 = g1;
  nf.g2 = g2;
  if (a.is_zero()) return nf;
  const RingCtxPtr& ctx = a.terms().begin()->second.ctx();
  nf.beta.assign(std::min(g1, g2) + 1, Polynomial(ctx));

  std::deque<std::pair<Polynomial, Word>> work;
  for (const auto& [w, c] : a.terms()) work.emplace_back(c, w);
  while (!work.empty()) {
    auto [coeff, w] = std::move(work.front());
    work.pop_front();
    auto redex = find_redex(w, strategy);
    if (!redex) {
      nf.beta[normal_index(w)] += coeff;
      continue;
    }
    auto [p, rule] = *redex;
    if (log)
      log->push_back(
          ReductionStep{coeff, Word(w.begin(), w.begin() + static_cast<long>(p)),
                        rule, Word(w.begin() + static_cast<long>(p) + 3, w.end())});
    const Scalar& c1 = (rule == 1) ? sp.xi1 : sp.eta1;
    const Scalar& c2 = (rule == 1) ? sp.xi2 : sp.eta2;
    // X_2 X_1 X_1 -> (X_1 X_2 X_1, X_1 X_1 X_2);
    // X_2 X_2 X_1 -> (X_2 X_1 X_2, X_1 X_2 X_2).
    Word w1 = w, w2 = w;
    if (rule == 1) {
      w1[p].index = 1; w1[p + 1].index = 2; w1[p + 2].index = 1;
      w2[p].index = 1; w2[p + 1].index = 1; w2[p + 2].index = 2;
    } else {
      w1[p].index = 2; w1[p + 1].index = 1; w1[p + 2].index = 2;
      w2[p].index = 1; w2[p + 1].index = 2; w2[p + 2].index = 2;
    }
    work.emplace_back(coeff * c1, std::move(w1));
    work.emplace_back(coeff * c2, std::move(w2));
  }
  return nf;
}

// ------------------------------------------------------------- properties

std::optional<Scalar> check_p1a(const TgwcDatum& d) {
  if (d.rank() != 2) throw ParameterError("the property checks require rank 2");
  const Polynomial& t1 = d.t(1);
  Polynomial image = d.sigma(1).apply(d.sigma(2).apply(t1));
  if (t1.is_zero() || image.is_zero()) return std::nullopt;
  const auto& [mono, lead] = t1.leading_term();
  const auto& [mono_im, lead_im] = image.leading_term();
  if (mono != mono_im) return std::nullopt;
  Scalar lambda = lead_im / lead;
  if (lambda.is_zero()) return std::nullopt;
  if (image - t1 * lambda != Polynomial(t1.ctx())) return std::nullopt;
  return lambda;
}

namespace {

// Linear part of an affine-linear polynomial as a dense coefficient row.
std::vector<Scalar> linear_part(const Polynomial& p) {
  const int g = p.ctx()->generator_count();
  std::vector<Scalar> row(g, Scalar(0));
  for (const auto& [mono, c] : p.terms()) {
    int total = 0, where = -1;
    for (int k = 0; k < g; ++k) {
      total += mono[k];
      if (mono[k] == 1) where = k;
    }
    if (total == 1) row[where] = c;
  }
  return row;
}

}  // namespace

bool check_p1b(const TgwcDatum& d) {
  if (d.rank() != 2) throw ParameterError("the property checks require rank 2");
  const Polynomial& t1 = d.t(1);
  Polynomial image = d.sigma(1).apply(t1);
  if (t1.total_degree() > 1 || image.total_degree() > 1)
    throw UnsupportedShapeError(
        "the linear-case check supports affine-linear t_1 and sigma_1(t_1) "
        "only");
  if (t1.total_degree() != 1) return false;  // constant t_1: R t_1 not prime
  if (image.is_zero()) return false;
  if (image.total_degree() == 0) return true;  // nonzero constant: coprime
  // Both affine-linear and nonconstant.  Non-associate iff the linear parts
  // are non-proportional, or proportional with differing constants.
  std::vector<Scalar> lt = linear_part(t1);
  std::vector<Scalar> li = linear_part(image);
  // Proportionality factor c with li = c * lt, if any.
  std::optional<Scalar> factor;
  for (size_t k = 0; k < lt.size(); ++k) {
    if (lt[k].is_zero() && li[k].is_zero()) continue;
    if (lt[k].is_zero()) return true;  // non-proportional
    Scalar c = li[k] / lt[k];
    if (!factor)
      factor = c;
    else if (*factor != c)
      return true;  // non-proportional
  }
  // Proportional: associates exactly when image == factor * t1.
  return image != t1 * (*factor);
}

bool check_p2(const TgwcDatum& d, const SerrePair& sp) {
  if (d.rank() != 2) throw ParameterError("the property checks require rank 2");
  if (sp.xi1.is_zero() || sp.xi2.is_zero() || sp.eta1.is_zero() ||
      sp.eta2.is_zero())
    return false;
  return is_in_ideal(d, sp.s1) && is_in_ideal(d, sp.s2);
}

// ------------------------------------------------------------ presentation

namespace {

std::string relation_eq(const std::string& lhs, const std::string& rhs) {
  return lhs + " = " + rhs;
}

}  // namespace

PresentationReport presentation(const TgwcDatum& d, int cap) {
  if (d.rank() != 2) throw ParameterError("presentation requires rank 2");
  PresentationReport report;
  report.ring_generators = d.ring()->generator_names();

  report.p1a_scalar = check_p1a(d);
  if (!report.p1a_scalar) {
    report.failure = "P1a: sigma_1 sigma_2 (t_1) is not a scalar multiple of t_1";
    return report;
  }
  if (!check_p1b(d)) {
    report.failure = "P1b: R t_1 prime and t_1, sigma_1(t_1) coprime fails";
    return report;
  }
  SerrePair sp;
  try {
    sp = derive_serre_pair(d, cap);
  } catch (const UnsupportedShapeError& e) {
    report.failure = std::string("P2: ") + e.what();
    return report;
  }
  if (!check_p2(d, sp)) {
    report.failure = "P2: pair elements with nonzero coefficients not in the ideal";
    return report;
  }
  report.pair = sp;
  report.ok = true;

  Polynomial one = Polynomial::constant(d.ring(), Scalar(1));
  auto letter_elem = [&](LetterKind k, int i) {
    return GradedElement::monic(d, Word{Letter{k, i}});
  };

  // (a) X_i r = sigma_i(r) X_i and Y_i r = sigma_i^{-1}(r) Y_i per generator.
  for (int i = 1; i <= 2; ++i) {
    for (int g = 0; g < d.ring()->generator_count(); ++g) {
      Polynomial r = Polynomial::generator(d.ring(), g);
      const std::string rs = d.ring()->generator_name(g);
      GradedElement x = letter_elem(LetterKind::x, i);
      GradedElement y = letter_elem(LetterKind::y, i);
      Polynomial fwd = d.sigma(i).apply(r);
      Polynomial inv = d.sigma(i).apply_inverse(r);
      bool okx = multiply(d, x, GradedElement::ring_element(r)) ==
                 left_multiply(fwd, x);
      report.relations.push_back(
          {"a",
           relation_eq("X(" + std::to_string(i) + ")*" + rs,
                       "(" + fwd.to_string() + ")*X(" + std::to_string(i) + ")"),
           okx});
      bool oky = multiply(d, y, GradedElement::ring_element(r)) ==
                 left_multiply(inv, y);
      report.relations.push_back(
          {"a",
           relation_eq("Y(" + std::to_string(i) + ")*" + rs,
                       "(" + inv.to_string() + ")*Y(" + std::to_string(i) + ")"),
           oky});
    }
  }
  // (b) Y_i X_i = t_i and X_i Y_i = sigma_i(t_i).
  for (int i = 1; i <= 2; ++i) {
    GradedElement x = letter_elem(LetterKind::x, i);
    GradedElement y = letter_elem(LetterKind::y, i);
    Polynomial ti = d.t(i);
    Polynomial si = d.sigma(i).apply(ti);
    bool okyx = project_to_base(d, multiply(d, y, x)) == ti;
    report.relations.push_back(
        {"b",
         relation_eq("Y(" + std::to_string(i) + ")*X(" + std::to_string(i) + ")",
                     ti.to_string()),
         okyx});
    bool okxy = project_to_base(d, multiply(d, x, y)) == si;
    report.relations.push_back(
        {"b",
         relation_eq("X(" + std::to_string(i) + ")*Y(" + std::to_string(i) + ")",
                     si.to_string()),
         okxy});
  }
  // (c) X_i Y_j = mu_ij Y_j X_i for i != j.
  for (int i = 1; i <= 2; ++i) {
    const int j = 3 - i;
    GradedElement lhs = multiply(d, letter_elem(LetterKind::x, i),
                                 letter_elem(LetterKind::y, j));
    GradedElement rhs = scalar_multiply(
        d.mu(i, j), multiply(d, letter_elem(LetterKind::y, j),
                             letter_elem(LetterKind::x, i)));
    bool okc = reduce_to_spanning(d, lhs) == reduce_to_spanning(d, rhs);
    std::string mu_str = d.mu(i, j).is_one()
                             ? ""
                             : "(" + d.mu(i, j).to_string() + ")*";
    report.relations.push_back(
        {"c",
         relation_eq("X(" + std::to_string(i) + ")*Y(" + std::to_string(j) + ")",
                     mu_str + "Y(" + std::to_string(j) + ")*X(" +
                         std::to_string(i) + ")"),
         okc});
  }
  // Serre generators s_1, s_2, s_1^*, s_2^*.
  const GradedElement s1s = star(d, sp.s1);
  const GradedElement s2s = star(d, sp.s2);
  report.relations.push_back(
      {"serre", sp.s1.to_string() + " = 0", is_in_ideal(d, sp.s1)});
  report.relations.push_back(
      {"serre", sp.s2.to_string() + " = 0", is_in_ideal(d, sp.s2)});
  report.relations.push_back(
      {"serre", s1s.to_string() + " = 0", is_in_ideal(d, s1s)});
  report.relations.push_back(
      {"serre", s2s.to_string() + " = 0", is_in_ideal(d, s2s)});
  return report;
}

}  // namespace tgwa
