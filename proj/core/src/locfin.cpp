#include "tgwa/locfin.hpp"

#include <algorithm>
#include <set>

namespace tgwa {

// -------------------------------------------------------------- ScalarPoly

void ScalarPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ScalarPoly ScalarPoly::from_coeffs(std::vector<Scalar> ascending) {
  ScalarPoly p;
  p.coeffs_ = std::move(ascending);
  p.trim();
  return p;
}

ScalarPoly ScalarPoly::monomial(const Scalar& coeff, int exponent) {
  ScalarPoly p;
  if (!coeff.is_zero()) {
    p.coeffs_.assign(exponent + 1, Scalar(0));
    p.coeffs_[exponent] = coeff;
  }
  return p;
}

ScalarPoly ScalarPoly::from_roots(const std::vector<Scalar>& roots) {
  ScalarPoly acc = monomial(Scalar(1), 0);
  for (const Scalar& r : roots) {
    ScalarPoly factor = monomial(Scalar(1), 1);
    factor += monomial(-r, 0);
    acc *= factor;
  }
  return acc;
}

Scalar ScalarPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size()))
    return Scalar(0);
  return coeffs_[exponent];
}

const Scalar& ScalarPoly::leading_coeff() const {
  static const Scalar zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

bool ScalarPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back().is_one();
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

ScalarPoly& ScalarPoly::operator*=(const ScalarPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + rhs.coeffs_.size() - 1, Scalar(0));
  for (size_t a = 0; a < coeffs_.size(); ++a)
    for (size_t b = 0; b < rhs.coeffs_.size(); ++b)
      out[a + b] += coeffs_[a] * rhs.coeffs_[b];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string ScalarPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Scalar c = coeff(k);
    if (c.is_zero()) continue;
    bool negative = false;
    if (c.negative_lead()) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) s += "-";
      first = false;
    } else {
      s += negative ? " - " : " + ";
    }
    std::string cs = c.to_string();
    bool parens = !c.is_rational();
    std::string xs;
    if (k > 0) {
      xs = "x";
      if (k > 1) xs += "^" + std::to_string(k);
    }
    if (xs.empty())
      s += parens ? "(" + cs + ")" : cs;
    else if (c.is_one())
      s += xs;
    else
      s += (parens ? "(" + cs + ")" : cs) + "*" + xs;
  }
  return s;
}

// --------------------------------------------------- exact linear algebra

namespace {

// Dense vectorization of polynomials over their joint monomial support.
struct DenseVectors {
  std::vector<Monomial> support;
  std::vector<std::vector<Scalar>> rows;
};

DenseVectors vectorize(const std::vector<Polynomial>& vectors) {
  std::set<Monomial, GradedLexLess> support_set;
  for (const auto& p : vectors)
    for (const auto& [mono, c] : p.terms()) support_set.insert(mono);
  DenseVectors out;
  out.support.assign(support_set.begin(), support_set.end());
  for (const auto& p : vectors) {
    std::vector<Scalar> row(out.support.size(), Scalar(0));
    for (size_t c = 0; c < out.support.size(); ++c)
      row[c] = p.coeff(out.support[c]);
    out.rows.push_back(std::move(row));
  }
  return out;
}

struct EchelonState {
  std::vector<std::vector<Scalar>> rows;      // pivot-normalized
  std::vector<size_t> pivots;
  std::vector<std::vector<Scalar>> history;   // combination over inserted vectors

  // Inserts vector v whose history is the k-th unit vector.  Returns the
  // reduced history when v is dependent, nothing when independent.
  std::optional<std::vector<Scalar>> insert(std::vector<Scalar> v,
                                            std::vector<Scalar> h) {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Scalar& lead = v[pivots[r]];
      if (lead.is_zero()) continue;
      Scalar factor = lead;  // rows are pivot-normalized
      for (size_t c = 0; c < v.size(); ++c) v[c] -= factor * rows[r][c];
      for (size_t c = 0; c < h.size() && c < history[r].size(); ++c)
        h[c] -= factor * history[r][c];
    }
    size_t pivot = v.size();
    for (size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) {
        pivot = c;
        break;
      }
    if (pivot == v.size()) return h;  // dependent
    Scalar inv = v[pivot].inverse();
    for (auto& c : v) c *= inv;
    for (auto& c : h) c *= inv;
    rows.push_back(std::move(v));
    history.push_back(std::move(h));
    pivots.push_back(pivot);
    return std::nullopt;
  }
};

}  // namespace

int rank_of(const std::vector<Polynomial>& vectors) {
  DenseVectors dense = vectorize(vectors);
  EchelonState ech;
  int rank = 0;
  for (size_t k = 0; k < dense.rows.size(); ++k) {
    std::vector<Scalar> h(k + 1, Scalar(0));
    h[k] = Scalar(1);
    if (!ech.insert(std::move(dense.rows[k]), std::move(h))) ++rank;
  }
  return rank;
}

std::optional<std::vector<Scalar>> linear_dependence(
    const std::vector<Polynomial>& vectors) {
  if (vectors.empty()) return std::nullopt;
  DenseVectors dense = vectorize(vectors);
  EchelonState ech;
  for (size_t k = 0; k + 1 < dense.rows.size(); ++k) {
    std::vector<Scalar> h(k + 1, Scalar(0));
    h[k] = Scalar(1);
    ech.insert(std::move(dense.rows[k]), std::move(h));
  }
  const size_t last = dense.rows.size() - 1;
  std::vector<Scalar> h(last + 1, Scalar(0));
  h[last] = Scalar(1);
  auto reduced = ech.insert(std::move(dense.rows[last]), std::move(h));
  if (!reduced) return std::nullopt;
  // 0 = sum_k reduced[k] * vectors[k] with reduced[last] = 1, so
  // last = -sum_{k<last} reduced[k] * vectors[k].
  std::vector<Scalar> combo(last, Scalar(0));
  for (size_t k = 0; k < last; ++k) combo[k] = -(*reduced)[k];
  return combo;
}

// ----------------------------------------------------------- span closure

namespace {

void check_pair_indices(const TgwcDatum& d, int i, int j) {
  if (i < 1 || i > d.rank() || j < 1 || j > d.rank())
    throw IndexError("pair index out of range");
}

}  // namespace

SpanBasis vij_closure(const TgwcDatum& d, int i, int j, int cap) {
  check_pair_indices(d, i, j);
  if (cap < 1) throw ParameterError("cap must be positive");
  SpanBasis out;
  out.iterates.push_back(d.t(j));
  for (;;) {
    if (linear_dependence(out.iterates)) {
      break;
    }
    if (static_cast<int>(out.iterates.size()) > cap)
      throw CapExceededError("V_" + std::to_string(i) + std::to_string(j) +
                             " not locally finite up to cap " +
                             std::to_string(cap));
    out.iterates.push_back(d.sigma(i).apply(out.iterates.back()));
  }
  // Echelonize the independent prefix for the basis.
  DenseVectors dense = vectorize(out.iterates);
  EchelonState ech;
  for (size_t k = 0; k + 1 < dense.rows.size(); ++k) {
    std::vector<Scalar> h(k + 1, Scalar(0));
    h[k] = Scalar(1);
    ech.insert(std::move(dense.rows[k]), std::move(h));
  }
  for (const auto& row : ech.rows) {
    Polynomial p(d.ring());
    for (size_t c = 0; c < row.size(); ++c)
      if (!row[c].is_zero()) p.add_term(dense.support[c], row[c]);
    out.basis.push_back(std::move(p));
  }
  return out;
}

ScalarPoly minimal_polynomial(const TgwcDatum& d, int i, int j, int cap) {
  SpanBasis span = vij_closure(d, i, j, cap);
  auto combo = linear_dependence(span.iterates);
  if (!combo)
    throw InconsistencyError("span closed without a linear dependence");
  const int m = static_cast<int>(combo->size());
  std::vector<Scalar> coeffs(m + 1, Scalar(0));
  coeffs[m] = Scalar(1);
  for (int k = 0; k < m; ++k) coeffs[k] = -(*combo)[k];
  ScalarPoly p = ScalarPoly::from_coeffs(std::move(coeffs));
  if (p.constant_term().is_zero())
    throw InconsistencyError(
        "minimal polynomial of an automorphism has zero constant term");
  return p;
}

// --------------------------------------------------------- Cartan matrices

PolyCartanMatrix poly_cartan_matrix(const TgwcDatum& d, int cap) {
  const int n = d.rank();
  PolyCartanMatrix P;
  P.p.assign(n, std::vector<ScalarPoly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      P.p[i - 1][j - 1] = minimal_polynomial(d, i, j, cap);
  // Theorem check on the off-diagonal entries.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (P.at(i, j).degree() < 1)
        throw InconsistencyError("off-diagonal minimal polynomial of degree 0");
      if ((P.at(i, j).degree() == 1) != (P.at(j, i).degree() == 1))
        throw InconsistencyError("degree-one symmetry fails");
      if (P.at(i, j).constant_term().is_zero())
        throw InconsistencyError("vanishing constant term");
    }
  }
  return P;
}

bool Gcm::symmetric() const {
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Gcm make_gcm(std::vector<std::vector<int>> entries) {
  Gcm g{std::move(entries)};
  const int n = g.n();
  for (const auto& row : g.entries)
    if (static_cast<int>(row.size()) != n) throw GcmError("matrix not square");
  for (int i = 1; i <= n; ++i) {
    if (g.at(i, i) != 2) throw GcmError("diagonal entry differs from 2");
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (g.at(i, j) > 0) throw GcmError("positive off-diagonal entry");
      if ((g.at(i, j) == 0) != (g.at(j, i) == 0))
        throw GcmError("asymmetric vanishing pattern");
    }
  }
  return g;
}

Gcm cartan_of(const PolyCartanMatrix& P) {
  const int n = P.n();
  std::vector<std::vector<int>> entries(n, std::vector<int>(n, 2));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) entries[i - 1][j - 1] = 1 - P.at(i, j).degree();
  return make_gcm(std::move(entries));
}

// ----------------------------------------------------------- Serre elements

SerreElement serre_element(const TgwcDatum& d, const ScalarPoly& p_ij, int i,
                           int j) {
  if (i == j) throw IndexError("Serre element requires i != j");
  check_pair_indices(d, i, j);
  if (!p_ij.is_monic()) throw ParameterError("p_ij must be monic");
  const int m = p_ij.degree();
  SerreElement e;
  e.i = i;
  e.j = j;
  e.m = m;
  const Scalar mu_inv = d.mu(i, j).inverse();
  std::vector<Polynomial> coefficients;
  for (int k = 0; k <= m; ++k) {
    Scalar lambda_k = p_ij.coeff(m - k);
    e.lambda.push_back(lambda_k);
    coefficients.push_back(
        Polynomial::constant(d.ring(), lambda_k * pow(mu_inv, k)));
  }
  e.x_form = prop33_element(d, i, j, coefficients);
  // Y form per its own formula: sum_k lambda^(k) mu^{-k} Y_i^k Y_j Y_i^{m-k};
  // for symmetric mu this coincides with the star image of the X form.
  for (int k = 0; k <= m; ++k) {
    Word w;
    for (int p = 0; p < k; ++p) w.push_back(y_letter(i));
    w.push_back(y_letter(j));
    for (int p = 0; p < m - k; ++p) w.push_back(y_letter(i));
    e.y_form.add_term(coefficients[k], w);
  }
  return e;
}

std::vector<SerreElement> serre_elements(const TgwcDatum& d,
                                         const PolyCartanMatrix& P) {
  std::vector<SerreElement> out;
  for (int i = 1; i <= d.rank(); ++i)
    for (int j = 1; j <= d.rank(); ++j)
      if (i != j) out.push_back(serre_element(d, P.at(i, j), i, j));
  return out;
}

bool verify_serre(const TgwcDatum& d, const SerreElement& e) {
  std::vector<Polynomial> coefficients;
  const Scalar mu_inv = d.mu(e.i, e.j).inverse();
  for (int k = 0; k <= e.m; ++k)
    coefficients.push_back(
        Polynomial::constant(d.ring(), e.lambda[k] * pow(mu_inv, k)));
  const bool by_criterion = prop33_check(d, e.i, e.j, coefficients);
  const bool by_pairing = is_in_ideal(d, e.x_form);
  const bool y_by_pairing = is_in_ideal(d, e.y_form);
  if (by_criterion != by_pairing || by_pairing != y_by_pairing)
    throw InconsistencyError(
        "criterion and pairing membership disagree on a Serre element");
  return by_pairing;
}

bool independence_bound(const TgwcDatum& d, int i, int j, int m) {
  if (i == j) throw IndexError("independence bound requires i != j");
  check_pair_indices(d, i, j);
  if (m < 0) throw ParameterError("m must be nonnegative");
  std::vector<Polynomial> iterates;
  iterates.push_back(d.t(j));
  for (int l = 1; l <= m; ++l)
    iterates.push_back(d.sigma(i).apply(iterates.back()));
  return rank_of(iterates) == m + 1;
}

}  // namespace tgwa
