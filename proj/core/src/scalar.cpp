#include "tgwa/scalar.hpp"

#include <sstream>
#include <utility>

namespace tgwa {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(const mpq_class& constant) {
  if (constant != 0) {
    coeffs_.push_back(constant);
    // mpq_class(a, b) does not canonicalize on its own.
    coeffs_.back().canonicalize();
  }
}

UniPoly UniPoly::monomial(const mpq_class& coeff, int exponent) {
  UniPoly p;
  if (coeff != 0) {
    p.coeffs_.assign(exponent + 1, 0_mpq);
    p.coeffs_[exponent] = coeff;
    p.coeffs_[exponent].canonicalize();
  }
  return p;
}

bool UniPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_[0] == 1;
}

bool UniPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == 1;
}

mpq_class UniPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0_mpq;
  return coeffs_[exponent];
}

const mpq_class& UniPoly::leading_coeff() const {
  static const mpq_class zero = 0_mpq;
  return coeffs_.empty() ? zero : coeffs_.back();
}

int UniPoly::low_exponent() const {
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<int>(k);
  return 0;
}

bool UniPoly::is_monomial() const {
  if (coeffs_.empty()) return false;
  for (size_t k = 0; k + 1 < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

mpq_class UniPoly::eval(const mpq_class& point) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * point + *it;
  return acc;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0_mpq);
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0_mpq);
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpq_class> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0_mpq);
  for (size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (size_t b = 0; b < rhs.coeffs_.size(); ++b)
      out[a + b] += coeffs_[a] * rhs.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly UniPoly::scaled(const mpq_class& factor) const {
  if (factor == 0) return UniPoly();
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  UniPoly out;
  if (k > 0) {
    out.coeffs_.assign(k, 0_mpq);
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  } else {
    if (low_exponent() < -k)
      throw ScalarError("shift below the constant term");
    out.coeffs_.assign(coeffs_.begin() - k, coeffs_.end());
  }
  return out;
}

void UniPoly::divmod(const UniPoly& num, const UniPoly& div, UniPoly& quot,
                     UniPoly& rem) {
  if (div.is_zero()) throw ScalarError("polynomial division by zero");
  quot = UniPoly();
  rem = num;
  const int dd = div.degree();
  const mpq_class& lead = div.coeffs_.back();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    mpq_class factor = rem.coeffs_.back() / lead;
    quot += UniPoly::monomial(factor, shift);
    rem -= div * UniPoly::monomial(factor, shift);
  }
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(1 / a.coeffs_.back());
  return a;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::q() {
  Scalar s;
  s.num_ = UniPoly::monomial(1_mpq, 1);
  return s;
}

Scalar Scalar::q_power(long k) {
  Scalar s;
  if (k >= 0) {
    s.num_ = UniPoly::monomial(1_mpq, static_cast<int>(k));
  } else {
    s.num_ = UniPoly(1_mpq);
    s.den_ = UniPoly::monomial(1_mpq, static_cast<int>(-k));
  }
  return s;
}

Scalar Scalar::from_fraction(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw ScalarError("zero denominator");
  Scalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly(1_mpq);
    return;
  }
  if (den_.is_one()) return;
  if (den_.is_monomial()) {
    // den = c q^j: the only common factor is a power of q.
    const int shift = std::min(den_.degree(), num_.low_exponent());
    const mpq_class lead = den_.leading_coeff();
    num_ = num_.shifted(-shift).scaled(1 / lead);
    den_ = UniPoly::monomial(1_mpq, den_.degree() - shift);
    return;
  }
  UniPoly g = UniPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    UniPoly q, r;
    UniPoly::divmod(num_, g, q, r);
    num_ = q;
    UniPoly::divmod(den_, g, q, r);
    den_ = q;
  }
  // Monic denominator.
  if (!den_.is_monic()) {
    mpq_class lead = den_.leading_coeff();
    den_ = den_.scaled(1 / lead);
    num_ = num_.scaled(1 / lead);
  }
}

FieldKind Scalar::kind() const {
  return (num_.degree() <= 0 && den_.is_one()) ? FieldKind::rationals
                                               : FieldKind::rational_functions;
}

bool Scalar::is_one() const { return num_.is_one() && den_.is_one(); }

mpq_class Scalar::rational_value() const {
  if (!is_rational()) throw ScalarError("scalar is not a plain rational");
  return num_.coeff(0);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("inverse of zero");
  return from_fraction(den_, num_);
}

Scalar Scalar::specialized(const mpq_class& value) const {
  mpq_class d = den_.eval(value);
  if (d == 0)
    throw ScalarError("denominator vanishes at the specialization point");
  return Scalar(mpq_class(num_.eval(value) / d));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw ScalarError("division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}

Scalar pow(const Scalar& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Scalar acc(1);
  Scalar b = base;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

namespace {

std::string format_rational(const mpq_class& v) { return v.get_str(); }

// One Laurent term c*q^e, sign excluded (c > 0 expected by the caller).
std::string laurent_term(const mpq_class& c, int e) {
  std::string s;
  if (e == 0) return format_rational(c);
  if (c != 1) s = format_rational(c) + "*";
  s += "q";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string poly_in_q(const UniPoly& p) {
  // Descending powers, used for non-Laurent fractions.
  std::string s;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    mpq_class c = p.coeff(k);
    if (c == 0) continue;
    if (first) {
      s += (c < 0 ? "-" : "");
      first = false;
    } else {
      s += (c < 0 ? " - " : " + ");
    }
    s += laurent_term(abs(c), k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  if (is_rational()) return format_rational(num_.coeff(0));
  if (den_.is_monomial()) {
    // Laurent polynomial in q: print with (possibly negative) powers,
    // descending by exponent.
    const int shift = den_.degree();
    std::string s;
    bool first = true;
    for (int k = num_.degree(); k >= 0; --k) {
      mpq_class c = num_.coeff(k);
      if (c == 0) continue;
      if (first) {
        s += (c < 0 ? "-" : "");
        first = false;
      } else {
        s += (c < 0 ? " - " : " + ");
      }
      s += laurent_term(abs(c), k - shift);
    }
    return s;
  }
  return "(" + poly_in_q(num_) + ")/(" + poly_in_q(den_) + ")";
}

// ------------------------------------------------------------- q-binomials

Scalar quantum_integer(int n, const Scalar& q) {
  if (n < 0) throw ScalarError("quantum integer of negative n");
  if (q.is_zero()) throw ScalarError("quantum integer at q = 0");
  Scalar sum(0);
  for (int l = 0; l < n; ++l) sum += pow(q, -n + 1 + 2 * l);
  return sum;
}

Scalar qbinomial(int m, int k, const Scalar& q) {
  if (m < 0) throw ScalarError("qbinomial with negative m");
  if (q.is_zero()) throw ScalarError("qbinomial at q = 0");
  if (k < 0 || k > m) return Scalar(0);
  // Row-by-row recursion.
  std::vector<Scalar> row{Scalar(1)};
  for (int mm = 1; mm <= m; ++mm) {
    std::vector<Scalar> next(mm + 1, Scalar(0));
    for (int kk = 0; kk <= mm; ++kk) {
      Scalar v(0);
      if (kk <= mm - 1) v += pow(q, -kk) * row[kk];
      if (kk >= 1) v += pow(q, mm - kk) * row[kk - 1];
      next[kk] = v;
    }
    row = std::move(next);
  }
  return row[k];
}

std::vector<Scalar> qbinomial_product_row(int m, const Scalar& q) {
  if (m < 0) throw ScalarError("qbinomial with negative m");
  if (q.is_zero()) throw ScalarError("qbinomial at q = 0");
  // Expand (x + q^{-m+1})(x + q^{-m+3})...(x + q^{m-1}); coeffs[k] is the
  // coefficient of x^k.
  std::vector<Scalar> coeffs{Scalar(1)};
  for (int l = 0; l < m; ++l) {
    const Scalar root = pow(q, -m + 1 + 2 * l);
    std::vector<Scalar> next(coeffs.size() + 1, Scalar(0));
    for (size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];       // x * coeffs
      next[k] += root * coeffs[k];    // constant * coeffs
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

Scalar qbinomial_factorial(int m, int k, const Scalar& q) {
  if (m < 0) throw ScalarError("qbinomial with negative m");
  if (q.is_zero()) throw ScalarError("qbinomial at q = 0");
  if (k < 0 || k > m) return Scalar(0);
  std::vector<Scalar> qint(m + 1, Scalar(0));
  for (int j = 1; j <= m; ++j) {
    qint[j] = quantum_integer(j, q);
    if (qint[j].is_zero())
      throw RootOfUnityError("[" + std::to_string(j) +
                             "]_q vanishes; the factorial formula requires q "
                             "not a root of unity");
  }
  Scalar result(1);
  // [m]_q! / ([m-k]_q! [k]_q!) = prod_{j=m-k+1..m} [j]_q / prod_{j=1..k} [j]_q
  for (int j = m - k + 1; j <= m; ++j) result *= qint[j];
  for (int j = 1; j <= k; ++j) result /= qint[j];
  return result;
}

}  // namespace tgwa
