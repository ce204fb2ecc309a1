#pragma once

#include <string>
#include <vector>

#include "tgwa/locfin.hpp"
#include "tgwa/tgwc.hpp"

namespace tgwa {

/// The rank-two datum over K[H] with sigma_1: H -> H+1, sigma_2: H -> H-1,
/// t_1 = H, t_2 = H+1, mu = 1.
TgwcDatum build_type_a2_example();

/// Parameters of the quantized Weyl algebra datum: q_i not in {0, 1} and a
/// matrix lambda with nonzero entries satisfying lambda_ji = lambda_ij^{-1}
/// for i < j.  The anti-involution additionally needs lambda_ji =
/// q_i lambda_ij; the builder accepts either and reports which case holds.
struct QWeylParams {
  std::vector<Scalar> qbar;
  std::vector<std::vector<Scalar>> lambda;  // n x n, diagonal ignored
};

struct QWeylBuild {
  TgwcDatum datum;
  /// lambda_ji = q_i lambda_ij for all i < j; equivalently mu is symmetric
  /// and the star-dependent operations are available.
  bool involution_condition;
};

QWeylBuild build_quantized_weyl(const QWeylParams& params);

/// Parameters of T_{q,mu}(C): a symmetric generalized Cartan matrix, a
/// nonzero scalar q (the generic indeterminate by default), and a symmetric
/// matrix of nonzero scalars mu (all 1 by default).
struct TqmuParams {
  Gcm cartan;
  Scalar q = Scalar::q();
  std::vector<std::vector<Scalar>> mu;  // empty means all 1
};

/// Ring generator name for the pair (i, j), i < j, and level k; negative k
/// is spelled with a leading m so the name stays a plain identifier
/// (H_1_2_m1 for k = -1).
std::string tqmu_generator_name(int i, int j, int k);

TgwcDatum build_tqmu(const TqmuParams& params);

struct Theorem53PairReport {
  int i = 0, j = 0;
  ScalarPoly p_computed;
  ScalarPoly p_product;             // prod_l (x - mu q^{a_ij + 2l})
  bool product_matches = false;     // p_computed == p_product
  bool qbinomial_matches = false;   // coefficients are (-1)^k mu^k [1-a_ij k]_q
  bool serre_verified = false;      // dual-route membership of both forms
  bool serre_coeffs_mu_free = false;  // X-form coefficients are (-1)^k [m k]_q
  std::vector<bool> independence;   // m = 0..deg p; expected true except last
  bool independence_matches = false;
  bool pass() const;
};

struct Theorem53Report {
  bool locally_finite = false;
  std::vector<Theorem53PairReport> pairs;
  bool all_pass() const;
};

Theorem53Report verify_theorem_5_3(const TqmuParams& params, int cap = 32);

}  // namespace tgwa
