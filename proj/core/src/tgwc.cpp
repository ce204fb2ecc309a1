#include "tgwa/tgwc.hpp"

#include <algorithm>

namespace tgwa {

bool WordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t p = 0; p < a.size(); ++p) {
    if (a[p].kind != b[p].kind) return a[p].kind == LetterKind::x;
    if (a[p].index != b[p].index) return a[p].index < b[p].index;
  }
  return false;
}

Degree word_degree(const Word& w, int n) {
  Degree g(n, 0);
  for (const Letter& l : w) {
    if (l.index < 1 || l.index > n) throw IndexError("letter index out of range");
    g[l.index - 1] += (l.kind == LetterKind::x) ? 1 : -1;
  }
  return g;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  size_t p = 0;
  while (p < w.size()) {
    size_t run = p;
    while (run < w.size() && w[run] == w[p]) ++run;
    if (!s.empty()) s += "*";
    s += (w[p].kind == LetterKind::x ? "X(" : "Y(") +
         std::to_string(w[p].index) + ")";
    if (run - p > 1) s += "^" + std::to_string(run - p);
    p = run;
  }
  return s;
}

Word star_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Letter{
        it->kind == LetterKind::x ? LetterKind::y : LetterKind::x, it->index});
  return out;
}

// --------------------------------------------------------------- TgwcDatum

TgwcDatum::TgwcDatum(RingCtxPtr ring, std::vector<RingMap> sigma,
                     std::vector<Polynomial> t,
                     std::map<std::pair<int, int>, Scalar> mu)
    : n_(static_cast<int>(sigma.size())),
      ring_(std::move(ring)),
      sigma_(std::move(sigma)),
      t_(std::move(t)),
      mu_(std::move(mu)) {
  if (n_ < 1) throw ParameterError("rank must be positive");
  if (static_cast<int>(t_.size()) != n_)
    throw ParameterError("t list does not match rank");
  for (const auto& m : sigma_)
    if (!same_ctx(m.ctx(), ring_)) throw ContextError("ring context mismatch");
  for (const auto& p : t_)
    if (!same_ctx(p.ctx(), ring_)) throw ContextError("ring context mismatch");
  // Exactly the off-diagonal ordered pairs; missing mirror entries are
  // filled symmetrically.
  for (const auto& [key, value] : mu_) {
    auto [i, j] = key;
    if (i < 1 || i > n_ || j < 1 || j > n_ || i == j)
      throw IndexError("mu index out of range");
    (void)value;
  }
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (i == j) continue;
      if (mu_.count({i, j})) continue;
      auto mirror = mu_.find({j, i});
      if (mirror == mu_.end())
        throw ParameterError("missing mu entry for pair (" +
                             std::to_string(i) + ", " + std::to_string(j) +
                             ")");
      mu_.emplace(std::make_pair(i, j), mirror->second);
    }
  }
}

const RingMap& TgwcDatum::sigma(int i) const {
  if (i < 1 || i > n_) throw IndexError("sigma index out of range");
  return sigma_[i - 1];
}

const Polynomial& TgwcDatum::t(int i) const {
  if (i < 1 || i > n_) throw IndexError("t index out of range");
  return t_[i - 1];
}

const Scalar& TgwcDatum::mu(int i, int j) const {
  if (i == j) throw IndexError("mu is undefined on the diagonal");
  auto it = mu_.find({i, j});
  if (it == mu_.end()) throw IndexError("mu index out of range");
  return it->second;
}

bool TgwcDatum::mu_symmetric() const {
  for (const auto& [key, value] : mu_) {
    auto [i, j] = key;
    if (i < j && value != mu(j, i)) return false;
  }
  return true;
}

bool operator==(const TgwcDatum& a, const TgwcDatum& b) {
  return a.n_ == b.n_ && same_ctx(a.ring_, b.ring_) && a.sigma_ == b.sigma_ &&
         a.t_ == b.t_ && a.mu_ == b.mu_;
}

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.pass; });
}

ValidationReport validate_tgwc(const TgwcDatum& d) {
  ValidationReport report;
  const int n = d.rank();
  for (int i = 1; i <= n; ++i) {
    bool ok = !d.t(i).is_zero();
    report.checks.push_back(
        {"t_" + std::to_string(i) + " nonzero", ok, ok ? "" : "t is zero"});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      bool ok = !d.mu(i, j).is_zero();
      report.checks.push_back({"mu_" + std::to_string(i) + std::to_string(j) +
                                   " nonzero",
                               ok, ok ? "" : "mu entry is zero"});
    }
  }
  for (int i = 1; i <= n; ++i) {
    bool ok = verify_inverse(d.sigma(i));
    report.checks.push_back({"sigma_" + std::to_string(i) + " inverse", ok,
                             ok ? "" : "declared inverse fails"});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bool ok = verify_commuting({d.sigma(i), d.sigma(j)});
      report.checks.push_back({"sigma_" + std::to_string(i) + " sigma_" +
                                   std::to_string(j) + " commute",
                               ok, ok ? "" : "automorphisms do not commute"});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // t_i t_j = mu_ij mu_ji sigma_j^{-1}(t_i) sigma_i^{-1}(t_j)
      Polynomial lhs = d.t(i) * d.t(j);
      Polynomial rhs = d.sigma(j).apply_inverse(d.t(i)) *
                       d.sigma(i).apply_inverse(d.t(j)) *
                       (d.mu(i, j) * d.mu(j, i));
      Polynomial diff = lhs - rhs;
      bool ok = diff.is_zero();
      report.checks.push_back(
          {"consistency (" + std::to_string(i) + ", " + std::to_string(j) + ")",
           ok, ok ? "" : "difference " + diff.to_string()});
    }
  }
  report.mu_symmetric = d.mu_symmetric();
  return report;
}

const RingMap& TgwcDatum::action(const Degree& g) const {
  if (static_cast<int>(g.size()) != n_)
    throw DegreeError("degree vector does not match rank");
  std::lock_guard<std::mutex> lock(action_cache_->mutex);
  auto it = action_cache_->entries.find(g);
  if (it != action_cache_->entries.end()) return it->second;
  std::vector<Polynomial> forward, inverse;
  for (int gi = 0; gi < ring_->generator_count(); ++gi) {
    Polynomial f = Polynomial::generator(ring_, gi);
    Polynomial b = f;
    for (int i = 1; i <= n_; ++i) {
      const int e = g[i - 1];
      for (int k = 0; k < e; ++k) {
        f = sigma(i).apply(f);
        b = sigma(i).apply_inverse(b);
      }
      for (int k = 0; k > e; --k) {
        f = sigma(i).apply_inverse(f);
        b = sigma(i).apply(b);
      }
    }
    forward.push_back(std::move(f));
    inverse.push_back(std::move(b));
  }
  return action_cache_->entries
      .emplace(g, RingMap(ring_, std::move(forward), std::move(inverse)))
      .first->second;
}

Polynomial group_action(const TgwcDatum& d, const Degree& g,
                        const Polynomial& r) {
  return d.action(g).apply(r);
}

// ----------------------------------------------------------- GradedElement

GradedElement GradedElement::term(Polynomial coeff, Word w) {
  GradedElement e;
  e.add_term(coeff, w);
  return e;
}

GradedElement GradedElement::ring_element(Polynomial r) {
  return term(std::move(r), Word{});
}

GradedElement GradedElement::monic(const TgwcDatum& d, Word w) {
  word_degree(w, d.rank());  // index validation
  return term(Polynomial::constant(d.ring(), Scalar(1)), std::move(w));
}

void GradedElement::add_term(const Polynomial& coeff, const Word& w) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<Degree> GradedElement::homogeneous_degree(int n) const {
  std::optional<Degree> deg;
  for (const auto& [w, c] : terms_) {
    Degree g = word_degree(w, n);
    if (!deg) {
      deg = std::move(g);
    } else if (*deg != g) {
      return std::nullopt;
    }
  }
  if (!deg) deg = Degree(n, 0);  // zero element
  return deg;
}

bool GradedElement::is_homogeneous(int n) const {
  return homogeneous_degree(n).has_value();
}

std::map<Degree, GradedElement> GradedElement::components(int n) const {
  std::map<Degree, GradedElement> out;
  for (const auto& [w, c] : terms_) out[word_degree(w, n)].add_term(c, w);
  return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(c, w);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(-c, w);
  return *this;
}

GradedElement GradedElement::operator-() const {
  GradedElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

std::string GradedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    // Single-term coefficients hoist their sign; multi-term ones get parens.
    Polynomial cc = c;
    bool negated = false;
    if (c.term_count() == 1 && c.terms().begin()->second.negative_lead()) {
      negated = true;
      cc = -cc;
    }
    std::string cs = cc.to_string();
    if (cc.term_count() > 1) cs = "(" + cs + ")";
    std::string piece;
    if (w.empty())
      piece = cs;
    else if (cs == "1")
      piece = word_to_string(w);
    else
      piece = cs + "*" + word_to_string(w);
    if (first) {
      s += negated ? "-" : "";
      first = false;
    } else {
      s += negated ? " - " : " + ";
    }
    s += piece;
  }
  return s;
}

GradedElement left_multiply(const Polynomial& r, const GradedElement& a) {
  GradedElement out;
  for (const auto& [w, c] : a.terms()) out.add_term(r * c, w);
  return out;
}

GradedElement scalar_multiply(const Scalar& s, const GradedElement& a) {
  GradedElement out;
  for (const auto& [w, c] : a.terms()) out.add_term(c * s, w);
  return out;
}

GradedElement multiply(const TgwcDatum& d, const GradedElement& a,
                       const GradedElement& b) {
  GradedElement out;
  for (const auto& [u, r] : a.terms()) {
    const Degree gu = word_degree(u, d.rank());
    for (const auto& [v, s] : b.terms()) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      out.add_term(r * group_action(d, gu, s), uv);
    }
  }
  return out;
}

GradedElement star(const TgwcDatum& d, const GradedElement& a) {
  if (!d.mu_symmetric())
    throw ParameterError(
        "the anti-involution requires a symmetric mu matrix");
  GradedElement out;
  for (const auto& [w, c] : a.terms()) {
    Degree g = word_degree(w, d.rank());
    for (int& e : g) e = -e;
    out.add_term(group_action(d, g, c), star_word(w));
  }
  return out;
}

Polynomial shapovalov(const TgwcDatum& d, const GradedElement& a,
                      const GradedElement& b) {
  auto ca = a.components(d.rank());
  auto cb = b.components(d.rank());
  Polynomial out(d.ring());
  for (const auto& [g, part_a] : ca) {
    auto it = cb.find(g);
    if (it == cb.end()) continue;
    out += project_to_base(d, multiply(d, star(d, part_a), it->second));
  }
  return out;
}

std::vector<Word> spanning_monomials(int n, const Degree& g) {
  if (static_cast<int>(g.size()) != n)
    throw DegreeError("degree vector does not match rank");
  std::vector<int> ys, xs;
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < -g[i - 1]; ++k) ys.push_back(i);
    for (int k = 0; k < g[i - 1]; ++k) xs.push_back(i);
  }
  std::vector<Word> out;
  std::vector<int> yperm = ys;
  do {
    std::vector<int> xperm = xs;
    do {
      Word w;
      w.reserve(yperm.size() + xperm.size());
      for (int i : yperm) w.push_back(y_letter(i));
      for (int i : xperm) w.push_back(x_letter(i));
      out.push_back(std::move(w));
    } while (std::next_permutation(xperm.begin(), xperm.end()));
  } while (std::next_permutation(yperm.begin(), yperm.end()));
  return out;
}

MembershipResult ideal_membership(const TgwcDatum& d, const GradedElement& a) {
  auto deg = a.homogeneous_degree(d.rank());
  if (!deg) throw DegreeError("ideal membership requires homogeneous input");
  for (const Word& w : spanning_monomials(d.rank(), *deg)) {
    Polynomial pairing = shapovalov(d, GradedElement::monic(d, w), a);
    if (!pairing.is_zero())
      return MembershipResult{false, w, std::move(pairing)};
  }
  return MembershipResult{true, std::nullopt, std::nullopt};
}

bool is_in_ideal(const TgwcDatum& d, const GradedElement& a) {
  return ideal_membership(d, a).member;
}

bool equal_in_tgwa(const TgwcDatum& d, const GradedElement& a,
                   const GradedElement& b) {
  GradedElement diff = a - b;
  for (const auto& [g, part] : diff.components(d.rank()))
    if (!is_in_ideal(d, part)) return false;
  return true;
}

bool prop33_check(const TgwcDatum& d, int i, int j,
                  const std::vector<Polynomial>& coefficients) {
  if (i == j) throw IndexError("prop33 requires i != j");
  if (i < 1 || i > d.rank() || j < 1 || j > d.rank())
    throw IndexError("prop33 index out of range");
  const int m = static_cast<int>(coefficients.size()) - 1;
  if (m < 1) throw ParameterError("prop33 requires m >= 1");
  Polynomial sum(d.ring());
  Degree ei(d.rank(), 0);
  for (int k = 0; k <= m; ++k) {
    // s_k = mu_ij^k sigma_j^{-1}(r_k), paired with sigma_i^{m-k}(t_j).
    Polynomial s_k =
        d.sigma(j).apply_inverse(coefficients[k]) * pow(d.mu(i, j), k);
    ei[i - 1] = m - k;
    sum += s_k * group_action(d, ei, d.t(j));
  }
  return sum.is_zero();
}

GradedElement prop33_element(const TgwcDatum& d, int i, int j,
                             const std::vector<Polynomial>& coefficients) {
  if (i == j) throw IndexError("prop33 requires i != j");
  if (i < 1 || i > d.rank() || j < 1 || j > d.rank())
    throw IndexError("prop33 index out of range");
  const int m = static_cast<int>(coefficients.size()) - 1;
  GradedElement out;
  for (int k = 0; k <= m; ++k) {
    Word w;
    for (int p = 0; p < m - k; ++p) w.push_back(x_letter(i));
    w.push_back(x_letter(j));
    for (int p = 0; p < k; ++p) w.push_back(x_letter(i));
    out.add_term(coefficients[k], w);
  }
  return out;
}

}  // namespace tgwa
