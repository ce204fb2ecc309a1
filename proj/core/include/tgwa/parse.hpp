#pragma once

#include <string>

#include "tgwa/tgwc.hpp"

namespace tgwa {

/// Scalar literal grammar: integers, p/q rationals, the symbol q (in the
/// rational-function field), operators + - * / ^ with integer (possibly
/// negative) exponents, parentheses.
Scalar parse_scalar(const std::string& text, FieldKind field);

/// Polynomial expression grammar: ring generators, scalar literals,
/// + - * / ^, parentheses.
Polynomial parse_polynomial(const RingCtxPtr& ctx, const std::string& text);

/// Element expression grammar: polynomial expressions plus the letters X(i)
/// and Y(i) with integer powers.  Expressions are evaluated inside the
/// construction, so letters and coefficients may appear in any order.
GradedElement parse_element(const TgwcDatum& d, const std::string& text);

/// Line-oriented datum file:
///   # comment
///   field Q            (or: field Q(q))
///   vars H G
///   sigma 1: H -> H + 1, G -> 2*G
///   sigma_inv 1: H -> H - 1, G -> (1/2)*G
///   t 1: H
///   mu 1 2: 1
/// Unlisted generators in a sigma block are fixed; sigma indices must cover
/// 1..n contiguously with both directions declared; mu is given once per
/// unordered pair and defaults to 1.
TgwcDatum parse_tgwc_spec(const std::string& text);

/// Serialization accepted back by parse_tgwc_spec; requires symmetric mu.
std::string print_tgwc_spec(const TgwcDatum& d);

}  // namespace tgwa
