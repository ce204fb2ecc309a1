#include <doctest.h>

#include "tgwa/constructions.hpp"
#include "tgwa/parse.hpp"

using namespace tgwa;

namespace {

const char* kA2Spec = R"(# TGWA of type A2
field Q
vars H
sigma 1: H -> H + 1
sigma_inv 1: H -> H - 1
sigma 2: H -> H - 1
sigma_inv 2: H -> H + 1
t 1: H
t 2: H + 1
mu 1 2: 1
)";

}  // namespace

TEST_CASE("scalar literals") {
  CHECK(parse_scalar("3/2", FieldKind::rationals) == Scalar(mpq_class(3, 2)));
  CHECK(parse_scalar("-7", FieldKind::rationals) == Scalar(-7));
  CHECK(parse_scalar("2^10", FieldKind::rationals) == Scalar(1024));
  CHECK(parse_scalar("q^-2 + 1", FieldKind::rational_functions) ==
        Scalar::q_power(-2) + Scalar(1));
  CHECK(parse_scalar("(1 + q)*(1 - q)", FieldKind::rational_functions) ==
        Scalar(1) - Scalar::q() * Scalar::q());
  CHECK_THROWS_AS(parse_scalar("q", FieldKind::rationals), ParseError);
  CHECK_THROWS_AS(parse_scalar("1 +", FieldKind::rationals), ParseError);
  CHECK_THROWS_AS(parse_scalar("X(1)", FieldKind::rationals), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0", FieldKind::rationals), ParseError);
}

TEST_CASE("polynomial expressions") {
  auto ctx = RingCtx::make({"H"}, FieldKind::rationals);
  CHECK(parse_polynomial(ctx, "(H+1)^2 - H^2 - 2*H") ==
        Polynomial::constant(ctx, Scalar(1)));
  CHECK_THROWS_AS(parse_polynomial(ctx, "G + 1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(ctx, "H^-1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(ctx, "1/H"), ParseError);
}

TEST_CASE("element expressions") {
  TgwcDatum d = build_type_a2_example();
  GradedElement serre =
      parse_element(d, "X(1)^2*X(2) - 2*X(1)*X(2)*X(1) + X(2)*X(1)^2");
  CHECK(serre.term_count() == 3);
  CHECK(parse_element(d, "(H+1)*X(1)") ==
        GradedElement::term(parse_polynomial(d.ring(), "H+1"),
                            {x_letter(1)}));
  // Evaluation happens inside the construction: X(1)*H twists.
  CHECK(parse_element(d, "X(1)*H") == parse_element(d, "(H+1)*X(1)"));
  CHECK(parse_element(d, "Y(1)*X(1)") ==
        GradedElement::monic(d, {y_letter(1), x_letter(1)}));
  CHECK_THROWS_AS(parse_element(d, "X(3)"), ParseError);
  CHECK_THROWS_AS(parse_element(d, "X(1)^-1"), ParseError);
  CHECK_THROWS_AS(parse_element(d, "1/X(1)"), ParseError);
  CHECK(parse_element(d, "X(1)^0") == parse_element(d, "1"));
}

TEST_CASE("datum files parse to the worked example") {
  TgwcDatum d = parse_tgwc_spec(kA2Spec);
  CHECK(d == build_type_a2_example());
  CHECK(validate_tgwc(d).all_pass());
}

TEST_CASE("datum file diagnostics") {
  CHECK_THROWS_WITH_AS(parse_tgwc_spec(""),
                       "missing field declaration", ParseError);
  CHECK_THROWS_WITH_AS(parse_tgwc_spec("vars H\n"),
                       "missing field declaration (line 1, column 1)",
                       ParseError);
  // Conflicting duplicate mu entries are rejected; consistent ones pass.
  std::string base(kA2Spec);
  CHECK_THROWS_WITH_AS(parse_tgwc_spec(base + "mu 2 1: 2\n"),
                       "mu pair declared twice with conflicting values "
                       "(line 11, column 1)",
                       ParseError);
  CHECK(parse_tgwc_spec(base + "mu 2 1: 1\n") == build_type_a2_example());

  CHECK_THROWS_AS(parse_tgwc_spec("field Q\nvars X\n"), ParseError);
  CHECK_THROWS_AS(parse_tgwc_spec("field Q\nt 1: 1\n"), ParseError);  // no sigma
  CHECK_THROWS_AS(parse_tgwc_spec("field Q\nbogus 1\n"), ParseError);
  // Missing sigma_inv.
  CHECK_THROWS_AS(
      parse_tgwc_spec("field Q\nvars H\nsigma 1: H -> H + 1\nt 1: H\n"),
      ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_tgwc_spec("field Q\nvars H\nsigma 1: H -> H +\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
  }
}

TEST_CASE("round-trip through print") {
  TgwcDatum a2 = build_type_a2_example();
  CHECK(parse_tgwc_spec(print_tgwc_spec(a2)) == a2);

  TqmuParams params;
  params.cartan = make_gcm({{2, -1}, {-1, 2}});
  TgwcDatum tq = build_tqmu(params);
  CHECK(parse_tgwc_spec(print_tgwc_spec(tq)) == tq);

  // The rank-one vacuous construction round-trips too (no vars line).
  TqmuParams rank1;
  rank1.cartan = make_gcm({{2}});
  TgwcDatum one = build_tqmu(rank1);
  CHECK(parse_tgwc_spec(print_tgwc_spec(one)) == one);
}

TEST_CASE("asymmetric mu is not serializable") {
  QWeylParams params;
  params.qbar = {Scalar(2), Scalar(3)};
  params.lambda.assign(2, std::vector<Scalar>(2, Scalar(1)));
  QWeylBuild build = build_quantized_weyl(params);
  CHECK_THROWS_AS(print_tgwc_spec(build.datum), ParameterError);
}
