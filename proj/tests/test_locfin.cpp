#include <doctest.h>

#include <random>

#include "tgwa/constructions.hpp"
#include "tgwa/locfin.hpp"
#include "tgwa/parse.hpp"
#include "test_util.hpp"

using namespace tgwa;
using namespace tgwa::testutil;

namespace {

TgwcDatum a2() { return build_type_a2_example(); }

ScalarPoly SP(std::vector<long> ascending) {
  std::vector<Scalar> coeffs;
  for (long c : ascending) coeffs.emplace_back(c);
  return ScalarPoly::from_coeffs(std::move(coeffs));
}

// A datum whose automorphism has unbounded degree growth, so no span ever
// closes: x -> y, y -> x + y^2 (invertible, Henon style).
TgwcDatum henon() {
  auto ctx = RingCtx::make({"x", "y"}, FieldKind::rationals);
  Polynomial x = Polynomial::generator(ctx, 0);
  Polynomial y = Polynomial::generator(ctx, 1);
  RingMap h(ctx, {y, x + y * y}, {parse_polynomial(ctx, "y - x^2"), x});
  return TgwcDatum(ctx, {h}, {x}, {});
}

}  // namespace

TEST_CASE("scalar polynomials") {
  ScalarPoly p = ScalarPoly::from_roots({Scalar(1), Scalar(1)});
  CHECK(p == SP({1, -2, 1}));
  CHECK(p.is_monic());
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "x^2 - 2*x + 1");
  CHECK(ScalarPoly::from_roots({}).to_string() == "1");
}

TEST_CASE("rank and dependence over the joint support") {
  auto ctx = RingCtx::make({"H"}, FieldKind::rationals);
  auto P = [&](const std::string& s) { return parse_polynomial(ctx, s); };
  CHECK(rank_of({P("H"), P("H + 1"), P("H + 2")}) == 2);
  auto combo = linear_dependence({P("H"), P("H + 1"), P("H + 2")});
  REQUIRE(combo.has_value());
  // H + 2 = -1 * H + 2 * (H + 1)
  CHECK((*combo)[0] == Scalar(-1));
  CHECK((*combo)[1] == Scalar(2));
  CHECK_FALSE(linear_dependence({P("H"), P("H^2")}).has_value());
}

TEST_CASE("span closure on the worked example") {
  TgwcDatum d = a2();
  SpanBasis v21 = vij_closure(d, 2, 1);
  CHECK(v21.dimension() == 2);
  CHECK(v21.iterates.size() == 3);  // t_1, sigma_2(t_1), sigma_2^2(t_1)
  SpanBasis v11 = vij_closure(d, 1, 1);
  CHECK(v11.dimension() == 2);
}

TEST_CASE("span closure of a scaling is one dimensional") {
  auto ctx = RingCtx::make({"H"}, FieldKind::rationals);
  Polynomial h = Polynomial::generator(ctx, 0);
  RingMap dbl(ctx, {h * Scalar(2)}, {h * Scalar(mpq_class(1, 2))});
  TgwcDatum d(ctx, {dbl}, {h}, {});
  CHECK(vij_closure(d, 1, 1).dimension() == 1);
  CHECK(minimal_polynomial(d, 1, 1) == SP({-2, 1}));  // x - 2
}

TEST_CASE("span closure respects the cap") {
  TgwcDatum d = henon();
  CHECK_THROWS_AS(vij_closure(d, 1, 1, 8), CapExceededError);
  CHECK_THROWS_AS(minimal_polynomial(d, 1, 1, 8), CapExceededError);
}

TEST_CASE("minimal polynomials of the worked example") {
  TgwcDatum d = a2();
  const ScalarPoly expected = SP({1, -2, 1});  // (x - 1)^2
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(minimal_polynomial(d, i, j) == expected);
}

TEST_CASE("minimal polynomial is minimal and annihilates") {
  TgwcDatum d = a2();
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      ScalarPoly p = minimal_polynomial(d, i, j);
      const int m = p.degree();
      // The first m iterates are independent...
      std::vector<Polynomial> iterates{d.t(j)};
      for (int l = 1; l < m; ++l)
        iterates.push_back(d.sigma(i).apply(iterates.back()));
      CHECK(rank_of(iterates) == m);
      // ...and p(sigma_i) kills t_j exactly.
      Polynomial sum(d.ring());
      Polynomial iter = d.t(j);
      for (int k = 0; k <= m; ++k) {
        sum += iter * p.coeff(k);
        iter = d.sigma(i).apply(iter);
      }
      CHECK(sum.is_zero());
      CHECK_FALSE(p.constant_term().is_zero());
    }
  }
}

TEST_CASE("polynomial Cartan matrix of the worked example") {
  TgwcDatum d = a2();
  PolyCartanMatrix P = poly_cartan_matrix(d);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(P.at(i, j) == SP({1, -2, 1}));
  Gcm C = cartan_of(P);
  CHECK(C.at(1, 1) == 2);
  CHECK(C.at(1, 2) == -1);
  CHECK(C.at(2, 1) == -1);
  CHECK(C.at(2, 2) == 2);
}

TEST_CASE("gcm validation") {
  CHECK_THROWS_AS(make_gcm({{1}}), GcmError);
  CHECK_THROWS_AS(make_gcm({{2, 1}, {-1, 2}}), GcmError);
  CHECK_THROWS_AS(make_gcm({{2, 0}, {-1, 2}}), GcmError);
  Gcm ok = make_gcm({{2, -2}, {-1, 2}});
  CHECK_FALSE(ok.symmetric());
}

TEST_CASE("serre elements of the worked example") {
  TgwcDatum d = a2();
  PolyCartanMatrix P = poly_cartan_matrix(d);
  std::vector<SerreElement> elements = serre_elements(d, P);
  REQUIRE(elements.size() == 2);
  const SerreElement& e12 = elements[0];
  CHECK(e12.i == 1);
  CHECK(e12.j == 2);
  CHECK(e12.m == 2);
  CHECK(e12.x_form ==
        parse_element(d, "X(1)^2*X(2) - 2*X(1)*X(2)*X(1) + X(2)*X(1)^2"));
  CHECK(e12.y_form ==
        parse_element(d, "Y(2)*Y(1)^2 - 2*Y(1)*Y(2)*Y(1) + Y(1)^2*Y(2)"));
  CHECK(e12.y_form == star(d, e12.x_form));
  CHECK(verify_serre(d, e12));
  CHECK(verify_serre(d, elements[1]));
}

TEST_CASE("degree-one serre element") {
  // sigma_1(t_2) = 3 t_2 gives p_12 = x - 3 and the m = 1 element
  // X_1 X_2 - (3/mu_12) X_2 X_1.
  auto ctx = RingCtx::make({"a", "b"}, FieldKind::rationals);
  Polynomial pa = Polynomial::generator(ctx, 0);
  Polynomial pb = Polynomial::generator(ctx, 1);
  RingMap s1(ctx, {pa * Scalar(2), pb * Scalar(3)},
             {pa * Scalar(mpq_class(1, 2)), pb * Scalar(mpq_class(1, 3))});
  RingMap s2(ctx, {pa * Scalar(6), pb * Scalar(2)},
             {pa * Scalar(mpq_class(1, 6)), pb * Scalar(mpq_class(1, 2))});
  // Consistency ab = mu_12 mu_21 (a/6)(b/3) needs mu_12 mu_21 = 18.
  std::map<std::pair<int, int>, Scalar> mu;
  mu[{1, 2}] = Scalar(3);
  mu[{2, 1}] = Scalar(6);
  TgwcDatum d(ctx, {s1, s2}, {pa, pb}, std::move(mu));
  REQUIRE(validate_tgwc(d).all_pass());
  ScalarPoly p12 = minimal_polynomial(d, 1, 2);
  CHECK(p12 == ScalarPoly::from_roots({Scalar(3)}));
  SerreElement e = serre_element(d, p12, 1, 2);
  CHECK(e.x_form == parse_element(d, "X(1)*X(2) - X(2)*X(1)"));
  CHECK(e.y_form == parse_element(d, "Y(2)*Y(1) - Y(1)*Y(2)"));
}

TEST_CASE("perturbed serre element is rejected by both routes") {
  TgwcDatum d = a2();
  SerreElement e = serre_element(d, SP({1, -3, 1}), 1, 2);  // -2 -> -3
  CHECK_FALSE(verify_serre(d, e));
}

TEST_CASE("route agreement on random coefficient perturbations") {
  TgwcDatum d = a2();
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int iter = 0; iter < 100; ++iter) {
    ScalarPoly p =
        ScalarPoly::from_coeffs({Scalar(c(rng)), Scalar(c(rng)), Scalar(1)});
    if (p.constant_term().is_zero()) continue;
    SerreElement e = serre_element(d, p, 1, 2);
    // verify_serre raises InconsistencyError if the routes ever disagree.
    verify_serre(d, e);
  }
}

TEST_CASE("independence bound") {
  TgwcDatum d = a2();
  CHECK(independence_bound(d, 1, 2, 0));
  CHECK(independence_bound(d, 1, 2, 1));
  CHECK_FALSE(independence_bound(d, 1, 2, 2));  // the Serre relation
}
